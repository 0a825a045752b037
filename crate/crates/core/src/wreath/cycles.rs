use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

use super::{ColoredLetter, ColoredPermutation};

/// One cycle's length together with its color counts for colors `1..N-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CvPair {
    pub length: usize,
    pub colors: Vec<usize>,
}

/// Multiset of [`CvPair`], kept sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CvCycleType {
    pub pairs: Vec<CvPair>,
}

impl CvCycleType {
    pub fn new(mut pairs: Vec<CvPair>) -> Self {
        pairs.sort_by(|a, b| b.cmp(a));
        CvCycleType { pairs }
    }

    pub fn size(&self) -> usize {
        self.pairs.iter().map(|p| p.length).sum()
    }

    /// Total color vector.
    pub fn color_vector(&self, colors: u32) -> Vec<usize> {
        let mut v = vec![0; colors.saturating_sub(1) as usize];
        for p in &self.pairs {
            for (a, b) in v.iter_mut().zip(&p.colors) {
                *a += b;
            }
        }
        v
    }

    /// Parse `"len:c1,c2;len:..."`; for N = 1 the color part may be omitted.
    pub fn parse(text: &str, colors: u32) -> Result<Self> {
        let width = colors.saturating_sub(1) as usize;
        let mut pairs = Vec::new();
        for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (len, vec) = part.split_once(':').unwrap_or((part, ""));
            let length: usize = len
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad cycle length in {part:?}")))?;
            let cs: Vec<usize> = vec
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::Parse(format!("bad color count in {part:?}")))
                })
                .collect::<Result<_>>()?;
            let cs = if cs.is_empty() { vec![0; width] } else { cs };
            if cs.len() != width {
                return Err(Error::Parse(format!(
                    "color vector in {part:?} must have {width} entries"
                )));
            }
            if length == 0 || cs.iter().sum::<usize>() > length {
                return Err(Error::InvalidInput(format!("invalid cycle {part:?}")));
            }
            pairs.push(CvPair { length, colors: cs });
        }
        Ok(CvCycleType::new(pairs))
    }
}

impl fmt::Display for CvCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|p| {
                format!(
                    "{}:{}",
                    p.length,
                    p.colors
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleStructure {
    /// Each cycle starts at its smallest element; element `j` carries the color of the
    /// letter whose value is `j`.
    pub cycles: Vec<Vec<ColoredLetter>>,
    pub cv_type: CvCycleType,
    /// Pairs (length, sum of m * beta_m mod N), sorted decreasing.
    pub cycle_type: Vec<(usize, u32)>,
}

pub fn cycle_structure(pi: &ColoredPermutation) -> CycleStructure {
    let n = pi.len();
    let n_colors = pi.colors();
    // color_of_value[j] = color of the letter with absolute value j
    let mut color_of_value = vec![0u32; n + 1];
    for l in pi.letters() {
        color_of_value[l.value as usize] = l.color;
    }
    let mut seen = vec![false; n + 1];
    let mut cycles = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(ColoredLetter::new(i as u32, color_of_value[i]));
            i = pi.at(i).value as usize;
        }
        cycles.push(cycle);
    }
    let mut pairs = Vec::new();
    let mut cycle_type = Vec::new();
    for c in &cycles {
        let mut colors = vec![0usize; n_colors.saturating_sub(1) as usize];
        let mut weighted = 0u64;
        for l in c {
            if l.color > 0 {
                colors[l.color as usize - 1] += 1;
                weighted += l.color as u64;
            }
        }
        pairs.push(CvPair {
            length: c.len(),
            colors,
        });
        cycle_type.push((c.len(), (weighted % n_colors as u64) as u32));
    }
    cycle_type.sort_by(|a, b| b.cmp(a));
    CycleStructure {
        cycles,
        cv_type: CvCycleType::new(pairs),
        cycle_type,
    }
}
