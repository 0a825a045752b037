use std::cmp::Ordering;
use std::collections::BTreeMap;

use smallvec::SmallVec;

use super::VarTable;

/// Exponent vector indexed by variable, with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[u16; 12]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(index: usize, exp: u32) -> Self {
        let mut m = Monomial(SmallVec::from_elem(0, index + 1));
        m.0[index] = narrow(exp);
        m.trim();
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Monomial(exps.iter().map(|&e| narrow(e)).collect());
        m.trim();
        m
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0) as u32
    }

    /// Dense exponents up to the last nonzero one.
    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|&e| e as u32)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (o, &e) in out.iter_mut().zip(short.0.iter()) {
            *o = o.checked_add(e).expect("exponent overflow");
        }
        Monomial(out)
    }

    /// Product, or `None` when some exponent exceeds its cap.
    pub fn mul_capped(&self, other: &Monomial, caps: &TruncationCaps) -> Option<Monomial> {
        let m = self.mul(other);
        if caps.admits(&m) {
            Some(m)
        } else {
            None
        }
    }

    /// Exponent of `index` removed.
    pub fn without(&self, index: usize) -> Monomial {
        let mut m = self.clone();
        if index < m.0.len() {
            m.0[index] = 0;
            m.trim();
        }
        m
    }

    pub fn with_exponent(&self, index: usize, exp: u32) -> Monomial {
        let mut m = self.clone();
        if m.0.len() <= index {
            m.0.resize(index + 1, 0);
        }
        m.0[index] = narrow(exp);
        m.trim();
        m
    }

    pub fn swapped(&self, i: usize, j: usize) -> Monomial {
        let (ei, ej) = (self.exponent(i), self.exponent(j));
        self.with_exponent(i, ej).with_exponent(j, ei)
    }

    pub fn to_string(&self, table: &VarTable) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(table.name(i).to_string()),
                _ => parts.push(format!("{}^{}", table.name(i), e)),
            }
        }
        parts.join("*")
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }
}

fn narrow(e: u32) -> u16 {
    u16::try_from(e).expect("exponent too large")
}

/// Graded lexicographic: total degree first, then exponent vectors by variable index.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Per-variable degree caps; a monomial is dropped if it exceeds any of them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TruncationCaps {
    caps: BTreeMap<usize, u32>,
}

impl TruncationCaps {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn set(&mut self, index: usize, cap: u32) {
        self.caps.insert(index, cap);
    }

    pub fn with(mut self, index: usize, cap: u32) -> Self {
        self.set(index, cap);
        self
    }

    /// Cap a variable by name; unknown names are an error.
    pub fn with_named(self, table: &VarTable, name: &str, cap: u32) -> crate::Result<Self> {
        let i = table.require(name)?;
        Ok(self.with(i, cap))
    }

    pub fn get(&self, index: usize) -> Option<u32> {
        self.caps.get(&index).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.caps.iter().map(|(&i, &c)| (i, c))
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        self.caps.iter().all(|(&i, &c)| m.exponent(i) <= c)
    }
}
