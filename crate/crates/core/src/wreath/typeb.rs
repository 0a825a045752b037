use serde::Serialize;

use crate::{Error, Result};

use super::{statistics, ColoredPermutation};

/// Flag statistics of a signed permutation (N = 2, color 1 read as a minus sign).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeBStats {
    pub des_z: usize,
    pub maj_z: usize,
    pub des_b: usize,
    pub fdes: usize,
    /// `2 maj + neg` with maj taken in the natural order on the integers.
    pub fmaj_natural: usize,
    /// `2 maj + neg` with maj taken in the order `-1 < -2 < ... < -n < 1 < ... < n`.
    pub fmaj_alt: usize,
    pub exc: usize,
    pub fexc: usize,
    pub neg: usize,
    pub fix_plus: usize,
}

fn require_signed(pi: &ColoredPermutation) -> Result<()> {
    if pi.colors() != 2 {
        return Err(Error::InvalidInput(format!(
            "type B statistics need N = 2, got N = {}",
            pi.colors()
        )));
    }
    Ok(())
}

pub fn signed_values(pi: &ColoredPermutation) -> Vec<i64> {
    pi.letters()
        .iter()
        .map(|l| {
            if l.color == 1 {
                -(l.value as i64)
            } else {
                l.value as i64
            }
        })
        .collect()
}

pub fn type_b_stats(pi: &ColoredPermutation) -> Result<TypeBStats> {
    require_signed(pi)?;
    let w = signed_values(pi);
    let des_set: Vec<usize> = (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect();
    let des_z = des_set.len();
    let maj_z: usize = des_set.iter().sum();
    let neg = w.iter().filter(|&&v| v < 0).count();
    let first_neg = w.first().is_some_and(|&v| v < 0) as usize;
    let s = statistics(pi);
    let fix_plus = w
        .iter()
        .enumerate()
        .filter(|(k, &v)| v == *k as i64 + 1)
        .count();
    Ok(TypeBStats {
        des_z,
        maj_z,
        des_b: des_z + first_neg,
        fdes: 2 * des_z + first_neg,
        fmaj_natural: 2 * maj_z + neg,
        fmaj_alt: 2 * s.maj + neg,
        exc: s.exc,
        fexc: 2 * s.exc + neg,
        neg,
        fix_plus,
    })
}

/// Reverse every maximal run of negative letters in place.
pub fn reverse_negative_blocks(pi: &ColoredPermutation) -> Result<ColoredPermutation> {
    require_signed(pi)?;
    let mut letters = pi.letters().to_vec();
    let mut i = 0;
    while i < letters.len() {
        if letters[i].color == 1 {
            let start = i;
            while i < letters.len() && letters[i].color == 1 {
                i += 1;
            }
            letters[start..i].reverse();
        } else {
            i += 1;
        }
    }
    ColoredPermutation::new(letters, 2)
}
