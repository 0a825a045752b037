use std::cmp::Ordering;

use crate::{Error, Result};

use super::letter::{cmp_banner, BLetter};

/// Lexicographic order on words under the reverse of the banner order, a proper prefix
/// being smaller.
fn cmp_reversed(a: &[BLetter], b: &[BLetter]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = cmp_banner(y, x);
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

/// Order in which Lyndon words are concatenated into a banner: weakly increasing under
/// the banner order, where a proper prefix counts as larger.
pub fn cmp_factor_order(a: &[BLetter], b: &[BLetter]) -> Ordering {
    cmp_reversed(b, a)
}

/// Unique factorization into Lyndon words (strictly largest among their rotations under
/// the banner order), listed so that they weakly increase.
pub fn lyndon_factorize(word: &[BLetter]) -> Vec<Vec<BLetter>> {
    // Duval's algorithm on the reversed alphabet
    let le = |x: &BLetter, y: &BLetter| cmp_banner(x, y) != Ordering::Less;
    let n = word.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && le(&word[k], &word[j]) {
            if cmp_banner(&word[k], &word[j]) == Ordering::Greater {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(word[i..i + j - k].to_vec());
            i += j - k;
        }
    }
    out
}

/// One block `a^p u` of the increasing factorization, every letter of `u` below `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub head: BLetter,
    pub reps: usize,
    pub tail: Vec<BLetter>,
}

impl Block {
    pub fn word(&self) -> Vec<BLetter> {
        let mut w = vec![self.head; self.reps];
        w.extend_from_slice(&self.tail);
        w
    }
}

/// Split each Lyndon factor before every later run of its first letter.
pub fn increasing_factorization(word: &[BLetter]) -> Result<Vec<Block>> {
    let mut blocks = Vec::new();
    for factor in lyndon_factorize(word) {
        if factor.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "Lyndon factor {} has size 1",
                factor[0]
            )));
        }
        let a = factor[0];
        let mut k = 0;
        while k < factor.len() {
            let start = k;
            while k < factor.len() && factor[k] == a {
                k += 1;
            }
            let reps = k - start;
            let tail_start = k;
            while k < factor.len() && factor[k] != a {
                k += 1;
            }
            let tail = factor[tail_start..k].to_vec();
            if tail.is_empty() || tail.iter().any(|l| cmp_banner(l, &a) != Ordering::Less) {
                return Err(Error::UnreachableCase(format!(
                    "bad block in factor starting {a}"
                )));
            }
            blocks.push(Block {
                head: a,
                reps,
                tail,
            });
        }
    }
    Ok(blocks)
}
