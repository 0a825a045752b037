use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::polyring::SparsePoly;
use crate::qsym::{FCache, QsymExpansion, XAlphabet};
use crate::wreath::{cycle_structure, statistics, CvCycleType, Enumeration};
use crate::{Error, Poly, Result};

/// Key `(j, alpha, beta)` of the sets `W_{n,j,alpha,beta}`.
pub type WKey = (usize, Vec<usize>, Vec<usize>);

/// Multiplicities of each DEX set (as a bitmask).
pub type DexCounts = HashMap<u64, u64>;

fn mask(set: &[usize]) -> u64 {
    set.iter().fold(0, |acc, &i| acc | (1u64 << i))
}

fn unmask(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

/// One pass over `C_N wr S_n`, bucketing DEX sets by `(exc, fix, col)` and by
/// `(cv-cycle type, exc)`.
#[derive(Clone, Debug, Default)]
pub struct OracleTable {
    pub n: usize,
    pub colors: u32,
    pub by_w: BTreeMap<WKey, DexCounts>,
    pub by_cv: BTreeMap<(CvCycleType, usize), DexCounts>,
}

fn merge_into<K: Ord>(a: &mut BTreeMap<K, DexCounts>, b: BTreeMap<K, DexCounts>) {
    for (k, counts) in b {
        let entry = a.entry(k).or_default();
        for (m, c) in counts {
            *entry.entry(m).or_default() += c;
        }
    }
}

impl OracleTable {
    pub fn build(n: usize, colors: u32) -> Result<Self> {
        let en = Enumeration::new(n, colors)?;
        let (by_w, by_cv) = en.par_fold(
            || (BTreeMap::new(), BTreeMap::new()),
            |(mut w, mut cv): (
                BTreeMap<WKey, DexCounts>,
                BTreeMap<(CvCycleType, usize), DexCounts>,
            ),
             pi| {
                let s = statistics(&pi);
                let m = mask(&s.dex_set);
                *w.entry((s.exc, s.fix.clone(), s.col.clone()))
                    .or_default()
                    .entry(m)
                    .or_default() += 1;
                let cs = cycle_structure(&pi);
                *cv.entry((cs.cv_type, s.exc))
                    .or_default()
                    .entry(m)
                    .or_default() += 1;
                (w, cv)
            },
            |(mut w1, mut c1), (w2, c2)| {
                merge_into(&mut w1, w2);
                merge_into(&mut c1, c2);
                (w1, c1)
            },
        );
        Ok(OracleTable {
            n,
            colors,
            by_w,
            by_cv,
        })
    }

    fn expand(&self, counts: Option<&DexCounts>, fc: &mut FCache) -> Result<Poly> {
        let mut out = SparsePoly::zero(fc.alphabet().table());
        if let Some(counts) = counts {
            let mut keys: Vec<_> = counts.iter().collect();
            keys.sort();
            for (&m, &c) in keys {
                let f = fc.get(&unmask(m), self.n)?;
                out = &out + &f.scale(&BigInt::from(c));
            }
        }
        Ok(out)
    }

    /// `Q_{n,j,alpha,beta}` as a sum of fundamental quasisymmetric functions.
    pub fn q(&self, j: usize, alpha: &[usize], beta: &[usize], fc: &mut FCache) -> Result<Poly> {
        self.expand(self.by_w.get(&(j, alpha.to_vec(), beta.to_vec())), fc)
    }

    pub fn q_cv(&self, cv: &CvCycleType, j: usize, fc: &mut FCache) -> Result<Poly> {
        self.expand(self.by_cv.get(&(cv.clone(), j)), fc)
    }

    /// Number of elements in each `W_{n,j,alpha,beta}`.
    pub fn w_sizes(&self) -> BTreeMap<WKey, u64> {
        self.by_w
            .iter()
            .map(|(k, c)| (k.clone(), c.values().sum()))
            .collect()
    }
}

fn check_params(n: usize, colors: u32, alpha: &[usize], beta: &[usize]) -> Result<()> {
    if alpha.len() != colors as usize || beta.len() + 1 != colors as usize {
        return Err(Error::InvalidInput(format!(
            "alpha needs {colors} entries and beta {} entries",
            colors - 1
        )));
    }
    if alpha.iter().sum::<usize>() > n || beta.iter().sum::<usize>() > n {
        return Err(Error::InvalidInput("fix or color counts exceed n".into()));
    }
    Ok(())
}

/// Sum of `F_{DEX(pi),n}` over `W_{n,j,alpha,beta}`, by enumeration.
pub fn q_bruteforce(
    n: usize,
    j: usize,
    alpha: &[usize],
    beta: &[usize],
    alphabet: &XAlphabet,
) -> Result<QsymExpansion> {
    let colors = alpha.len() as u32;
    check_params(n, colors, alpha, beta)?;
    let table = OracleTable::build(n, colors)?;
    let mut fc = FCache::new(alphabet.clone());
    let poly = table.q(j, alpha, beta, &mut fc)?;
    Ok(QsymExpansion {
        poly,
        degree: n,
        var_count: alphabet.size(),
    })
}

/// Sum of `F_{DEX(pi),n}` over elements of cv-cycle type `cv` with `j` excedances.
pub fn q_cv_bruteforce(
    cv: &CvCycleType,
    j: usize,
    colors: u32,
    alphabet: &XAlphabet,
) -> Result<QsymExpansion> {
    if cv
        .pairs
        .iter()
        .any(|p| p.colors.len() + 1 != colors as usize)
    {
        return Err(Error::InvalidInput(
            "color vector length must be N-1".into(),
        ));
    }
    let n = cv.size();
    let table = OracleTable::build(n, colors)?;
    let mut fc = FCache::new(alphabet.clone());
    let poly = table.q_cv(cv, j, &mut fc)?;
    Ok(QsymExpansion {
        poly,
        degree: n,
        var_count: alphabet.size(),
    })
}
