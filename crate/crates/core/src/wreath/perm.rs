use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// A letter `value^color` of the colored alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColoredLetter {
    pub value: u32,
    pub color: u32,
}

impl ColoredLetter {
    pub fn new(value: u32, color: u32) -> Self {
        ColoredLetter { value, color }
    }

    /// Sort key for the colored order: highest color block first, 0-colored block last,
    /// ascending by value inside a block.
    pub fn order_key(&self) -> (i64, u32) {
        (-(self.color as i64), self.value)
    }
}

impl fmt::Display for ColoredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.value, self.color)
    }
}

/// An element of `C_N wr S_n`, stored as its window notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPermutation {
    colors: u32,
    letters: Vec<ColoredLetter>,
}

impl ColoredPermutation {
    pub fn new(letters: Vec<ColoredLetter>, colors: u32) -> Result<Self> {
        if colors == 0 {
            return Err(Error::InvalidInput("N must be at least 1".into()));
        }
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for l in &letters {
            if l.color >= colors {
                return Err(Error::InvalidInput(format!(
                    "color {} of letter {l} is not below N={colors}",
                    l.color
                )));
            }
            let v = l.value as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "values do not form a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(ColoredPermutation { colors, letters })
    }

    pub(crate) fn new_unchecked(letters: Vec<ColoredLetter>, colors: u32) -> Self {
        ColoredPermutation { colors, letters }
    }

    pub fn identity(n: usize, colors: u32) -> Self {
        let letters = (1..=n as u32).map(|v| ColoredLetter::new(v, 0)).collect();
        ColoredPermutation { colors, letters }
    }

    /// Parse comma-separated `v^c` tokens. For N = 2 plain signed integers are also
    /// accepted, a minus sign meaning color 1.
    pub fn parse(text: &str, colors: u32) -> Result<Self> {
        let text = text.trim().trim_start_matches('[').trim_end_matches(']');
        if text.trim().is_empty() {
            return Self::new(Vec::new(), colors);
        }
        let mut letters = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let letter = if let Some((v, c)) = tok.split_once('^') {
                let value = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad value in token {tok:?}")))?;
                let color = c
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad color in token {tok:?}")))?;
                ColoredLetter::new(value, color)
            } else if colors == 2 {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("malformed token {tok:?}")))?;
                if v == 0 {
                    return Err(Error::Parse("0 is not a letter".into()));
                }
                ColoredLetter::new(v.unsigned_abs() as u32, (v < 0) as u32)
            } else {
                return Err(Error::Parse(format!(
                    "malformed token {tok:?}, expected <value>^<color>"
                )));
            };
            letters.push(letter);
        }
        Self::new(letters, colors)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn colors(&self) -> u32 {
        self.colors
    }

    pub fn letters(&self) -> &[ColoredLetter] {
        &self.letters
    }

    /// 1-based access.
    pub fn at(&self, i: usize) -> ColoredLetter {
        self.letters[i - 1]
    }

    /// The underlying permutation `|pi|`, 1-based values.
    pub fn values(&self) -> Vec<u32> {
        self.letters.iter().map(|l| l.value).collect()
    }

    /// Render color-1 letters as negative integers (N = 2 only).
    pub fn to_signed_string(&self) -> Result<String> {
        if self.colors != 2 {
            return Err(Error::InvalidInput("signed rendering needs N = 2".into()));
        }
        Ok(self
            .letters
            .iter()
            .map(|l| {
                if l.color == 1 {
                    format!("-{}", l.value)
                } else {
                    l.value.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(","))
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
