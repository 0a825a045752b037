use std::cmp::Ordering;

use crate::wreath::{
    cycle_structure, dex_set, is_excedance, ColoredLetter, ColoredPermutation, CvCycleType,
    Enumeration,
};
use crate::{Error, Result};

use super::letter::{cmp_necklace, BLetter};
use super::necklace::{Necklace, Ornament};

/// A colored permutation with a weakly decreasing positive sequence that strictly
/// decreases across every position of its DEX set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompatiblePair {
    pub perm: ColoredPermutation,
    pub seq: Vec<u32>,
}

impl CompatiblePair {
    pub fn new(perm: ColoredPermutation, seq: Vec<u32>) -> Result<Self> {
        if perm.len() != seq.len() {
            return Err(Error::InvalidInput(
                "sequence length differs from permutation length".into(),
            ));
        }
        if seq.contains(&0) {
            return Err(Error::InvalidInput(
                "sequence entries must be positive".into(),
            ));
        }
        if seq.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(
                "sequence must be weakly decreasing".into(),
            ));
        }
        for i in dex_set(&perm) {
            if seq[i - 1] == seq[i] {
                return Err(Error::InvalidInput(format!(
                    "sequence must strictly decrease at DEX position {i}"
                )));
            }
        }
        Ok(CompatiblePair { perm, seq })
    }
}

/// Weakly decreasing sequences in `1..=max` of length `n` that strictly decrease after
/// each position in `strict` (1-based).
pub fn decreasing_sequences(n: usize, max: u32, strict: &[usize]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(n: usize, strict: &[usize], cur: &mut Vec<u32>, hi: u32, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in (1..=hi).rev() {
            cur.push(v);
            let next_hi = if strict.contains(&cur.len()) {
                v - 1
            } else {
                v
            };
            rec(n, strict, cur, next_hi, out);
            cur.pop();
        }
    }
    rec(n, strict, &mut Vec::new(), max, &mut out);
    out
}

/// Compatible pairs whose permutation has the given colored cycle type and excedance
/// count, with sequence entries at most `max`.
pub fn com_enumerate(
    cv: &CvCycleType,
    exc: usize,
    colors: u32,
    max: u32,
) -> Result<Vec<CompatiblePair>> {
    let n = cv.size();
    let en = Enumeration::new(n, colors)?;
    let mut out = Vec::new();
    for perm in en.iter() {
        let exc_here = perm
            .letters()
            .iter()
            .enumerate()
            .filter(|(k, l)| is_excedance(**l, k + 1))
            .count();
        if exc_here != exc || &cycle_structure(&perm).cv_type != cv {
            continue;
        }
        for seq in decreasing_sequences(n, max, &dex_set(&perm)) {
            out.push(CompatiblePair {
                perm: perm.clone(),
                seq,
            });
        }
    }
    Ok(out)
}

/// Send a compatible pair to its ornament: each cycle of the underlying permutation
/// becomes the necklace of its positions' letters.
pub fn bijection_f(pair: &CompatiblePair) -> Result<Ornament> {
    let perm = &pair.perm;
    let n = perm.len();
    let letter_at = |i: usize| -> BLetter {
        let l = perm.at(i);
        let v = pair.seq[i - 1];
        if is_excedance(l, i) {
            BLetter::bar(v)
        } else {
            BLetter::colored(v, l.color)
        }
    };
    let mut seen = vec![false; n + 1];
    let mut necklaces = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut word = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            word.push(letter_at(i));
            i = perm.at(i).value as usize;
        }
        let nk = Necklace::new(&word).map_err(|e| {
            Error::UnreachableCase(format!("cycle from {start} gave invalid necklace: {e}"))
        })?;
        necklaces.push(nk);
    }
    Ok(Ornament::new(necklaces))
}

/// How copies of one repeated necklace are ranked against each other.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieOrder {
    /// Later copies rank larger.
    #[default]
    Forward,
    /// Earlier copies rank larger.
    Reverse,
}

/// Inverse of [`bijection_f`]. Positions are ranked by reading each necklace clockwise
/// from that position; the largest reading gets index 1.
pub fn bijection_g(ornament: &Ornament, tie: TieOrder, colors: u32) -> Result<CompatiblePair> {
    let copies = ornament.expanded();
    let mut positions: Vec<(usize, usize)> = Vec::new();
    for (c, nk) in copies.iter().enumerate() {
        for off in 0..nk.len() {
            positions.push((c, off));
        }
    }
    let read = |(c, off): (usize, usize), k: usize| -> BLetter {
        let w = copies[c].word();
        w[(off + k) % w.len()]
    };
    let cmp = |a: &(usize, usize), b: &(usize, usize)| -> Ordering {
        let span = copies[a.0].len() + copies[b.0].len();
        for k in 0..span {
            let o = cmp_necklace(&read(*a, k), &read(*b, k));
            if o != Ordering::Equal {
                return o;
            }
        }
        // equal infinite readings only happen between copies of one necklace
        match tie {
            TieOrder::Forward => a.0.cmp(&b.0),
            TieOrder::Reverse => b.0.cmp(&a.0),
        }
    };
    positions.sort_by(|a, b| cmp(b, a));
    let n = positions.len();
    let mut rank = vec![Vec::new(); copies.len()];
    for (c, nk) in copies.iter().enumerate() {
        rank[c] = vec![0; nk.len()];
    }
    for (r, &(c, off)) in positions.iter().enumerate() {
        rank[c][off] = r + 1;
    }
    let mut letters = vec![ColoredLetter::new(0, 0); n];
    let mut seq = vec![0; n];
    for (r, &(c, off)) in positions.iter().enumerate() {
        let w = copies[c].word();
        let next = rank[c][(off + 1) % w.len()];
        letters[r] = ColoredLetter::new(next as u32, w[off].color);
        seq[r] = w[off].value;
    }
    let perm = ColoredPermutation::new(letters, colors)?;
    CompatiblePair::new(perm, seq)
        .map_err(|e| Error::UnreachableCase(format!("g produced an incompatible pair: {e}")))
}
