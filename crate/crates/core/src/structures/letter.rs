use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// A letter of the barred colored alphabet. Only 0-colored letters may be barred.
///
/// The derived order (value, color, barred) is the tuple order used for canonical
/// necklace representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BLetter {
    pub value: u32,
    pub color: u32,
    pub barred: bool,
}

impl BLetter {
    pub fn new(value: u32, color: u32, barred: bool) -> Result<Self> {
        if value == 0 {
            return Err(Error::InvalidInput("letter values start at 1".into()));
        }
        if barred && color != 0 {
            return Err(Error::InvalidInput(format!(
                "only 0-colored letters may be barred, got {value}^{color}!"
            )));
        }
        Ok(BLetter {
            value,
            color,
            barred,
        })
    }

    pub fn plain(value: u32) -> Self {
        BLetter {
            value,
            color: 0,
            barred: false,
        }
    }

    pub fn bar(value: u32) -> Self {
        BLetter {
            value,
            color: 0,
            barred: true,
        }
    }

    pub fn colored(value: u32, color: u32) -> Self {
        BLetter {
            value,
            color,
            barred: false,
        }
    }

    /// 0-colored and unbarred.
    pub fn is_plain(&self) -> bool {
        self.color == 0 && !self.barred
    }

    pub fn is_colored(&self) -> bool {
        self.color > 0
    }

    /// Key for the necklace alphabet order: `1^0 < 1^1 < ... < 1^{N-1} < bar 1 < 2^0 < ...`.
    pub fn necklace_key(&self) -> (u32, bool, u32) {
        (self.value, self.barred, self.color)
    }

    /// Key for the banner order: every positively colored letter (by value, then color)
    /// lies below every 0-colored one, and `v < bar v < v+1` among the latter.
    pub fn banner_key(&self) -> (bool, u32, u32, bool) {
        if self.color > 0 {
            (false, self.value, self.color, false)
        } else {
            (true, self.value, 0, self.barred)
        }
    }

    pub fn parse(tok: &str) -> Result<Self> {
        let tok = tok.trim();
        let (body, barred) = match tok.strip_suffix('!') {
            Some(b) => (b, true),
            None => (tok, false),
        };
        let (v, c) = body.split_once('^').unwrap_or((body, "0"));
        let value = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
        let color = c
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
        BLetter::new(value, color, barred)
    }
}

pub fn cmp_banner(a: &BLetter, b: &BLetter) -> Ordering {
    a.banner_key().cmp(&b.banner_key())
}

pub fn cmp_necklace(a: &BLetter, b: &BLetter) -> Ordering {
    a.necklace_key().cmp(&b.necklace_key())
}

impl fmt::Display for BLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}^{}{}",
            self.value,
            self.color,
            if self.barred { "!" } else { "" }
        )
    }
}

pub fn format_word(word: &[BLetter]) -> String {
    word.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_word(text: &str) -> Result<Vec<BLetter>> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(BLetter::parse).collect()
}

/// Check every letter's color against `N`.
pub fn check_colors(word: &[BLetter], colors: u32) -> Result<()> {
    match word.iter().find(|l| l.color >= colors) {
        Some(l) => Err(Error::InvalidInput(format!(
            "letter {l} has color not below N={colors}"
        ))),
        None => Ok(()),
    }
}
