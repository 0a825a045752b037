use std::collections::BTreeMap;
use std::fmt;

use crate::wreath::{CvCycleType, CvPair};
use crate::{Error, Result};

use super::letter::{format_word, parse_word, BLetter};

/// A primitive circular word obeying the necklace rules, stored as its least rotation
/// under the (value, color, barred) tuple order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    word: Vec<BLetter>,
}

fn rotate(word: &[BLetter], k: usize) -> Vec<BLetter> {
    let mut w = word[k..].to_vec();
    w.extend_from_slice(&word[..k]);
    w
}

pub(crate) fn is_primitive(word: &[BLetter]) -> bool {
    let n = word.len();
    (1..n)
        .filter(|d| n.is_multiple_of(*d))
        .all(|d| (0..n).any(|i| word[i] != word[(i + d) % n]))
}

impl Necklace {
    pub fn new(word: &[BLetter]) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidInput("empty necklace".into()));
        }
        let n = word.len();
        if n == 1 && word[0].barred {
            return Err(Error::RuleViolation {
                rule: 3,
                detail: "a single letter may not be barred".into(),
            });
        }
        for i in 0..n {
            let (cur, next) = (word[i], word[(i + 1) % n]);
            if cur.barred && next.value > cur.value {
                return Err(Error::RuleViolation {
                    rule: 1,
                    detail: format!("barred {cur} followed by larger {next}"),
                });
            }
            if cur.is_plain() && next.value < cur.value {
                return Err(Error::RuleViolation {
                    rule: 2,
                    detail: format!("unbarred 0-colored {cur} followed by smaller {next}"),
                });
            }
        }
        if !is_primitive(word) {
            return Err(Error::NotPrimitive);
        }
        let best = (0..n).map(|k| rotate(word, k)).min().unwrap();
        Ok(Necklace { word: best })
    }

    pub fn word(&self) -> &[BLetter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn bars(&self) -> usize {
        self.word.iter().filter(|l| l.barred).count()
    }

    pub fn cv_pair(&self, colors: u32) -> CvPair {
        let mut cs = vec![0; colors.saturating_sub(1) as usize];
        for l in &self.word {
            if l.color > 0 {
                cs[l.color as usize - 1] += 1;
            }
        }
        CvPair {
            length: self.word.len(),
            colors: cs,
        }
    }

    /// The rotation that is strictly largest under the banner order.
    pub fn lyndon_rotation(&self) -> Vec<BLetter> {
        let n = self.word.len();
        (0..n)
            .map(|k| rotate(&self.word, k))
            .max_by(|a, b| {
                let ka: Vec<_> = a.iter().map(|l| l.banner_key()).collect();
                let kb: Vec<_> = b.iter().map(|l| l.banner_key()).collect();
                ka.cmp(&kb)
            })
            .unwrap()
    }

    pub fn parse(text: &str) -> Result<Self> {
        Necklace::new(&parse_word(text)?)
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_word(&self.word))
    }
}

/// Multiset of necklaces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ornament {
    necklaces: BTreeMap<Necklace, usize>,
}

impl Ornament {
    pub fn new<I: IntoIterator<Item = Necklace>>(items: I) -> Self {
        let mut necklaces = BTreeMap::new();
        for n in items {
            *necklaces.entry(n).or_insert(0) += 1;
        }
        Ornament { necklaces }
    }

    /// Necklaces with multiplicity, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Necklace, usize)> {
        self.necklaces.iter().map(|(n, &c)| (n, c))
    }

    /// Each necklace repeated by its multiplicity.
    pub fn expanded(&self) -> Vec<&Necklace> {
        self.necklaces
            .iter()
            .flat_map(|(n, &c)| std::iter::repeat_n(n, c))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.iter().map(|(n, c)| n.len() * c).sum()
    }

    pub fn bars(&self) -> usize {
        self.iter().map(|(n, c)| n.bars() * c).sum()
    }

    pub fn cv_type(&self, colors: u32) -> CvCycleType {
        CvCycleType::new(self.expanded().iter().map(|n| n.cv_pair(colors)).collect())
    }

    /// Sorted list of absolute values; the monomial weight.
    pub fn weight(&self) -> Vec<u32> {
        let mut w: Vec<u32> = self
            .expanded()
            .iter()
            .flat_map(|n| n.word().iter().map(|l| l.value))
            .collect();
        w.sort_unstable();
        w
    }

    pub fn parse(text: &str) -> Result<Self> {
        let items = text
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(Necklace::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Ornament::new(items))
    }
}

impl fmt::Display for Ornament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.expanded().iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// Every letter with value at most `max_value` and color below `colors`.
pub fn alphabet(colors: u32, max_value: u32) -> Vec<BLetter> {
    let mut out = Vec::new();
    for v in 1..=max_value {
        for c in 0..colors {
            out.push(BLetter::colored(v, c));
        }
        out.push(BLetter::bar(v));
    }
    out
}

/// All necklaces of the given length over the bounded alphabet.
pub fn necklaces_of_length(len: usize, colors: u32, max_value: u32) -> Vec<Necklace> {
    let letters = alphabet(colors, max_value);
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(len);
    fn rec(letters: &[BLetter], len: usize, word: &mut Vec<BLetter>, out: &mut Vec<Necklace>) {
        if word.len() == len {
            if let Ok(n) = Necklace::new(word) {
                if n.word() == word.as_slice() {
                    out.push(n);
                }
            }
            return;
        }
        for &l in letters {
            // keep only words that can still be least rotations: nothing below the first letter
            if !word.is_empty() && l < word[0] {
                continue;
            }
            word.push(l);
            rec(letters, len, word, out);
            word.pop();
        }
    }
    if len > 0 {
        rec(&letters, len, &mut word, &mut out);
    }
    out.sort();
    out
}

/// All ornaments of total size `n` over the bounded alphabet.
pub fn ornaments_of_size(n: usize, colors: u32, max_value: u32) -> Vec<Ornament> {
    let mut pool: Vec<Necklace> = Vec::new();
    for len in 1..=n {
        pool.extend(necklaces_of_length(len, colors, max_value));
    }
    let mut out = Vec::new();
    fn rec(
        pool: &[Necklace],
        start: usize,
        left: usize,
        cur: &mut Vec<Necklace>,
        out: &mut Vec<Ornament>,
    ) {
        if left == 0 {
            out.push(Ornament::new(cur.iter().cloned()));
            return;
        }
        for i in start..pool.len() {
            if pool[i].len() <= left {
                cur.push(pool[i].clone());
                rec(pool, i, left - pool[i].len(), cur, out);
                cur.pop();
            }
        }
    }
    rec(&pool, 0, n, &mut Vec::new(), &mut out);
    out
}
