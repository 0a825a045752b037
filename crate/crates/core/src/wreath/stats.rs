use serde::Serialize;

use super::{ColoredLetter, ColoredPermutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub des_set: Vec<usize>,
    pub des: usize,
    pub des_star: usize,
    pub maj: usize,
    pub exc_set: Vec<usize>,
    pub exc: usize,
    /// `fix[k]` counts positions with `pi_i = i^k`.
    pub fix: Vec<usize>,
    /// `col[m-1]` counts letters of color `m`, for `m = 1..N-1`.
    pub col: Vec<usize>,
    pub dex_set: Vec<usize>,
}

impl StatRecord {
    pub fn fix_total(&self) -> usize {
        self.fix.iter().sum()
    }

    pub fn col_total(&self) -> usize {
        self.col.iter().sum()
    }
}

fn descent_positions<K: Ord>(keys: &[K]) -> Vec<usize> {
    (1..keys.len()).filter(|&i| keys[i - 1] > keys[i]).collect()
}

/// Whether position `i` (1-based) holds an excedance: a 0-colored letter of value above `i`.
pub fn is_excedance(letter: ColoredLetter, i: usize) -> bool {
    letter.color == 0 && letter.value as usize > i
}

/// Descents in the alphabet where excedance letters are replaced by tilde copies
/// lying below every colored letter.
pub fn dex_set(pi: &ColoredPermutation) -> Vec<usize> {
    let keys: Vec<(u8, i64, u32)> = pi
        .letters()
        .iter()
        .enumerate()
        .map(|(k, l)| {
            if is_excedance(*l, k + 1) {
                (0, 0, l.value)
            } else {
                let (c, v) = l.order_key();
                (1, c, v)
            }
        })
        .collect();
    descent_positions(&keys)
}

pub fn statistics(pi: &ColoredPermutation) -> StatRecord {
    let n_colors = pi.colors() as usize;
    let keys: Vec<(i64, u32)> = pi.letters().iter().map(|l| l.order_key()).collect();
    let des_set = descent_positions(&keys);
    let des = des_set.len();
    let first_colored = pi.letters().first().is_some_and(|l| l.color > 0);
    let exc_set: Vec<usize> = pi
        .letters()
        .iter()
        .enumerate()
        .filter(|(k, l)| is_excedance(**l, k + 1))
        .map(|(k, _)| k + 1)
        .collect();
    let mut fix = vec![0; n_colors];
    let mut col = vec![0; n_colors.saturating_sub(1)];
    for (k, l) in pi.letters().iter().enumerate() {
        if l.value as usize == k + 1 {
            fix[l.color as usize] += 1;
        }
        if l.color > 0 {
            col[l.color as usize - 1] += 1;
        }
    }
    StatRecord {
        maj: des_set.iter().sum(),
        des,
        des_star: des + first_colored as usize,
        exc: exc_set.len(),
        des_set,
        exc_set,
        fix,
        col,
        dex_set: dex_set(pi),
    }
}
