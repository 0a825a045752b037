use std::collections::BTreeMap;

use crate::{Error, Result};

use super::letter::BLetter;
use super::lyndon::{cmp_factor_order, lyndon_factorize};
use super::necklace::{alphabet, Necklace, Ornament};

/// Check the linear banner rules.
pub fn validate_banner(word: &[BLetter]) -> Result<()> {
    for (k, l) in word.iter().enumerate() {
        match word.get(k + 1) {
            Some(next) => {
                if l.barred && next.value > l.value {
                    return Err(Error::RuleViolation {
                        rule: 1,
                        detail: format!("barred {l} followed by larger {next}"),
                    });
                }
                if l.is_plain() && next.value < l.value {
                    return Err(Error::RuleViolation {
                        rule: 2,
                        detail: format!("unbarred 0-colored {l} followed by smaller {next}"),
                    });
                }
            }
            None if l.barred => {
                return Err(Error::RuleViolation {
                    rule: 3,
                    detail: "last letter is barred".into(),
                });
            }
            None => {}
        }
    }
    Ok(())
}

pub fn banner_to_ornament(word: &[BLetter]) -> Result<Ornament> {
    validate_banner(word)?;
    let parts = lyndon_factorize(word)
        .iter()
        .map(|f| Necklace::new(f))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ornament::new(parts))
}

pub fn ornament_to_banner(ornament: &Ornament) -> Result<Vec<BLetter>> {
    let mut rotations: Vec<Vec<BLetter>> = ornament
        .expanded()
        .iter()
        .map(|n| n.lyndon_rotation())
        .collect();
    rotations.sort_by(|a, b| cmp_factor_order(a, b));
    let word: Vec<BLetter> = rotations.concat();
    validate_banner(&word)
        .map_err(|e| Error::UnreachableCase(format!("assembled banner is invalid: {e}")))?;
    Ok(word)
}

/// Number of barred letters and counts of each positive color.
pub fn banner_profile(word: &[BLetter], colors: u32) -> (usize, Vec<usize>) {
    let mut beta = vec![0; colors.saturating_sub(1) as usize];
    let mut bars = 0;
    for l in word {
        if l.barred {
            bars += 1;
        }
        if l.color > 0 {
            beta[l.color as usize - 1] += 1;
        }
    }
    (bars, beta)
}

/// All banners of length `n` over letters with values at most `max_value`.
pub fn enumerate_banners(n: usize, colors: u32, max_value: u32) -> Vec<Vec<BLetter>> {
    let letters = alphabet(colors, max_value);
    let mut out = Vec::new();
    fn rec(letters: &[BLetter], n: usize, cur: &mut Vec<BLetter>, out: &mut Vec<Vec<BLetter>>) {
        if cur.len() == n {
            if cur.last().is_none_or(|l| !l.barred) {
                out.push(cur.clone());
            }
            return;
        }
        for &l in letters {
            if let Some(prev) = cur.last() {
                if (prev.barred && l.value > prev.value)
                    || (prev.is_plain() && l.value < prev.value)
                {
                    continue;
                }
            }
            cur.push(l);
            rec(letters, n, cur, out);
            cur.pop();
        }
    }
    rec(&letters, n, &mut Vec::new(), &mut out);
    out
}

pub fn has_no_unit_factor(word: &[BLetter]) -> bool {
    lyndon_factorize(word).iter().all(|f| f.len() >= 2)
}

/// Banners without size-one Lyndon factors, grouped by (length, bars, color vector).
pub type K0Index = BTreeMap<(usize, usize, Vec<usize>), Vec<Vec<BLetter>>>;

pub fn k0_index(max_len: usize, colors: u32, max_value: u32) -> K0Index {
    let mut idx = K0Index::new();
    for n in 0..=max_len {
        for b in enumerate_banners(n, colors, max_value) {
            if has_no_unit_factor(&b) {
                let (bars, beta) = banner_profile(&b, colors);
                idx.entry((n, bars, beta)).or_default().push(b);
            }
        }
    }
    idx
}

pub fn k0_enumerate(
    n: usize,
    bars: usize,
    beta: &[usize],
    colors: u32,
    max_value: u32,
) -> Vec<Vec<BLetter>> {
    enumerate_banners(n, colors, max_value)
        .into_iter()
        .filter(|b| has_no_unit_factor(b) && banner_profile(b, colors) == (bars, beta.to_vec()))
        .collect()
}

/// A weakly increasing positive sequence marked by a bar count and a color.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedSequence {
    pub values: Vec<u32>,
    pub bars: usize,
    pub color: u32,
}

impl MarkedSequence {
    pub fn new(values: Vec<u32>, bars: usize, color: u32) -> Result<Self> {
        let len = values.len();
        if values.contains(&0) || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput(
                "marked sequence must be weakly increasing and positive".into(),
            ));
        }
        let ok = if color == 0 {
            bars >= 1 && bars < len
        } else {
            bars < len
        };
        if !ok {
            return Err(Error::InvalidInput(format!(
                "bar count {bars} out of range for length {len} and color {color}"
            )));
        }
        Ok(MarkedSequence {
            values,
            bars,
            color,
        })
    }
}

/// Weakly increasing sequences of length `len` in `1..=max_value`.
pub fn increasing_sequences(len: usize, max_value: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(len: usize, lo: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            rec(len, v, max, cur, out);
            cur.pop();
        }
    }
    rec(len, 1, max_value, &mut Vec::new(), &mut out);
    out
}
