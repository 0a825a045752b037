use std::collections::HashMap;

use num_bigint::BigInt;

use crate::polyring::SparsePoly;
use crate::qsym::{FCache, QsymExpansion, XAlphabet};
use crate::{Error, Poly, Result};

/// Memo for the fixed-point-free family `Q_{n,j,0,beta}`, keyed on `(n, j, beta)`.
#[derive(Debug)]
pub struct QTable {
    colors: u32,
    fc: FCache,
    memo: HashMap<(usize, usize, Vec<usize>), Poly>,
}

impl QTable {
    pub fn new(colors: u32, alphabet: XAlphabet) -> Self {
        QTable {
            colors,
            fc: FCache::new(alphabet),
            memo: HashMap::new(),
        }
    }

    pub fn colors(&self) -> u32 {
        self.colors
    }

    pub fn alphabet(&self) -> &XAlphabet {
        self.fc.alphabet()
    }

    pub fn h(&mut self, n: usize) -> Poly {
        self.fc.h(n)
    }

    pub fn e(&mut self, n: usize) -> Poly {
        self.fc.e(n)
    }

    fn zero(&self) -> Poly {
        SparsePoly::zero(self.fc.alphabet().table())
    }

    /// `Q_{n,j,0,beta}`; any negative index or `|beta| > n` gives 0.
    pub fn get(&mut self, n: usize, j: i64, beta: &[usize]) -> Poly {
        let total: usize = beta.iter().sum();
        if j < 0 || total > n {
            return self.zero();
        }
        let key = (n, j as usize, beta.to_vec());
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let mut out = self.zero();
        let ni = n as i64;
        // plain h-convolution term
        for i in 0..n.saturating_sub(1) {
            let h = self.h(n - i);
            for k in (j - ni + i as i64 + 1).max(0)..j {
                let q = self.get(i, k, beta);
                out = &out + &(&q * &h);
            }
        }
        // one color removed
        for m in 0..beta.len() {
            if beta[m] == 0 {
                continue;
            }
            let mut reduced = beta.to_vec();
            reduced[m] -= 1;
            for i in 0..n {
                let h = self.h(n - i);
                for k in (j - ni + i as i64 + 1).max(0)..=j {
                    let q = self.get(i, k, &reduced);
                    out = &out + &(&q * &h);
                }
            }
        }
        if j == 0 && total == n {
            let mut prod = SparsePoly::from_i64(
                self.fc.alphabet().table(),
                if n.is_multiple_of(2) { 1 } else { -1 },
            );
            for &b in beta {
                prod = &prod * &self.e(b);
            }
            out = &out + &prod;
        }
        self.memo.insert(key, out.clone());
        out
    }
}

fn check_beta(table: &QTable, beta: &[usize]) -> Result<()> {
    if beta.len() + 1 != table.colors() as usize {
        return Err(Error::InvalidInput(format!(
            "beta needs {} entries",
            table.colors() - 1
        )));
    }
    Ok(())
}

/// `Q_{n,j,0,beta}` from the three-term recurrence.
pub fn q_recurrence(
    n: usize,
    j: usize,
    beta: &[usize],
    table: &mut QTable,
) -> Result<QsymExpansion> {
    check_beta(table, beta)?;
    let poly = table.get(n, j as i64, beta);
    Ok(QsymExpansion {
        poly,
        degree: n,
        var_count: table.alphabet().size(),
    })
}

/// `Q_{n,j,alpha,beta} = Q_{n-|alpha|, j, 0, beta - (alpha_1..)} * prod_k h_{alpha_k}`.
pub fn q_padded(
    n: usize,
    j: usize,
    alpha: &[usize],
    beta: &[usize],
    table: &mut QTable,
) -> Result<QsymExpansion> {
    check_beta(table, beta)?;
    if alpha.len() != table.colors() as usize {
        return Err(Error::InvalidInput(format!(
            "alpha needs {} entries",
            table.colors()
        )));
    }
    let fixed: usize = alpha.iter().sum();
    if fixed > n {
        return Err(Error::InvalidInput("more fixed points than letters".into()));
    }
    let mut rest = Vec::with_capacity(beta.len());
    for (m, &b) in beta.iter().enumerate() {
        rest.push(b.checked_sub(alpha[m + 1]).ok_or_else(|| {
            Error::InvalidInput(format!(
                "beta_{} = {b} is smaller than alpha_{} = {}",
                m + 1,
                m + 1,
                alpha[m + 1]
            ))
        })?);
    }
    let mut poly = table.get(n - fixed, j as i64, &rest);
    for &a in alpha {
        poly = &poly * &table.h(a);
    }
    Ok(QsymExpansion {
        poly,
        degree: n,
        var_count: table.alphabet().size(),
    })
}

/// `D_{n,beta} = (-1)^n prod e_{beta_m} + sum_m [beta_m > 0] D_{n-1, beta - e_m} h_1`, for `|beta| = n`.
pub fn d_recurrence(n: usize, beta: &[usize], alphabet: &XAlphabet) -> Result<QsymExpansion> {
    if beta.iter().sum::<usize>() != n {
        return Err(Error::InvalidInput(format!("|beta| must equal n = {n}")));
    }
    let mut fc = FCache::new(alphabet.clone());
    let mut memo = HashMap::new();
    let poly = d_rec(beta, &mut fc, &mut memo);
    Ok(QsymExpansion {
        poly,
        degree: n,
        var_count: alphabet.size(),
    })
}

fn d_rec(beta: &[usize], fc: &mut FCache, memo: &mut HashMap<Vec<usize>, Poly>) -> Poly {
    if let Some(p) = memo.get(beta) {
        return p.clone();
    }
    let n: usize = beta.iter().sum();
    let table = fc.alphabet().table().clone();
    let mut out = SparsePoly::constant(
        &table,
        BigInt::from(if n.is_multiple_of(2) { 1 } else { -1 }),
    );
    for &b in beta {
        out = &out * &fc.e(b);
    }
    for m in 0..beta.len() {
        if beta[m] > 0 {
            let mut reduced = beta.to_vec();
            reduced[m] -= 1;
            let d = d_rec(&reduced, fc, memo);
            out = &out + &(&d * &fc.h(1));
        }
    }
    memo.insert(beta.to_vec(), out.clone());
    out
}
