use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::{Error, Result};

use super::{Coefficient, Monomial, TruncationCaps};

/// Ordered list of variable names; a variable's index is its position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidInput(format!("duplicate variable name {n}")));
            }
        }
        Ok(Arc::new(VarTable { names }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Sparse multivariate polynomial with exact coefficients.
#[derive(Clone, Debug)]
pub struct SparsePoly<C> {
    table: Arc<VarTable>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> PartialEq for SparsePoly<C> {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl<C: Coefficient> SparsePoly<C> {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        SparsePoly {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Self::constant(table, C::one())
    }

    pub fn constant(table: &Arc<VarTable>, c: C) -> Self {
        Self::term(table, Monomial::one(), c)
    }

    pub fn from_i64(table: &Arc<VarTable>, c: i64) -> Self {
        Self::constant(table, C::from_i64(c))
    }

    pub fn term(table: &Arc<VarTable>, m: Monomial, c: C) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `name` to the first power.
    pub fn var(table: &Arc<VarTable>, name: &str) -> Result<Self> {
        let i = table.require(name)?;
        Ok(Self::term(table, Monomial::var(i, 1), C::one()))
    }

    pub fn var_pow(table: &Arc<VarTable>, index: usize, exp: u32) -> Self {
        Self::term(table, Monomial::var(index, exp), C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(
        table: &Arc<VarTable>,
        terms: I,
    ) -> Self {
        let mut p = Self::zero(table);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    /// Terms in canonical (graded lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&Monomial::one()).is_one()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::MismatchedTables)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v.mul_ref(c)))
            .collect();
        SparsePoly {
            table: self.table.clone(),
            terms,
        }
    }

    /// Multiply every term by a fixed monomial.
    pub fn shift(&self, m: &Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.mul(m), v.clone()))
            .collect();
        SparsePoly {
            table: self.table.clone(),
            terms,
        }
    }

    pub fn truncate(&self, caps: &TruncationCaps) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| caps.admits(m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        SparsePoly {
            table: self.table.clone(),
            terms,
        }
    }

    pub fn try_mul_truncated(&self, other: &Self, caps: &TruncationCaps) -> Result<Self> {
        self.check_table(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.table));
        }
        let mut acc: HashMap<Monomial, C> =
            HashMap::with_capacity(self.terms.len().max(other.terms.len()));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let Some(m) = ma.mul_capped(mb, caps) else {
                    continue;
                };
                let c = ca.mul_ref(cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += &c,
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(SparsePoly {
            table: self.table.clone(),
            terms,
        })
    }

    pub fn pow_truncated(&self, e: u32, caps: &TruncationCaps) -> Self {
        let mut out = Self::one(&self.table).truncate(caps);
        for _ in 0..e {
            out = out.try_mul_truncated(self, caps).expect("same table");
        }
        out
    }

    /// Largest exponent of a variable across all terms.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(index))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Indices of variables that occur with positive exponent.
    pub fn occurring_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.table.len()];
        for m in self.terms.keys() {
            for (i, e) in m.exponents().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| i)
            .collect()
    }

    /// Replace a variable by a polynomial, truncating under `caps`.
    pub fn substitute(&self, index: usize, value: &Self, caps: &TruncationCaps) -> Result<Self> {
        self.check_table(value)?;
        let mut powers: Vec<Self> = vec![Self::one(&self.table)];
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            let e = m.exponent(index) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().try_mul_truncated(value, caps)?;
                powers.push(next);
            }
            let rest = m.without(index);
            for (pm, pc) in &powers[e].terms {
                if let Some(mm) = rest.mul_capped(pm, caps) {
                    out.add_term(mm, &pc.mul_ref(c));
                }
            }
        }
        Ok(out)
    }

    /// Set a variable to 1.
    pub fn evaluate_one(&self, index: usize) -> Self {
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            out.add_term(m.without(index), c);
        }
        out
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.swapped(i, j), c.clone()))
            .collect();
        SparsePoly {
            table: self.table.clone(),
            terms,
        }
    }

    /// Re-express over another table, matching variables by name.
    pub fn reindex(&self, target: &Arc<VarTable>) -> Result<Self> {
        if same_table(&self.table, target) {
            return Ok(SparsePoly {
                table: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let map: Vec<usize> = self
            .table
            .names()
            .iter()
            .map(|n| target.require(n))
            .collect::<Result<_>>()?;
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, e) in m.exponents().enumerate() {
                exps[map[i]] += e;
            }
            out.add_term(Monomial::from_exponents(&exps), c);
        }
        Ok(out)
    }

    /// Coefficient extraction: all terms whose exponent of `index` equals `e`, with that variable removed.
    pub fn coefficient_of(&self, index: usize, e: u32) -> Self {
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            if m.exponent(index) == e {
                out.add_term(m.without(index), c);
            }
        }
        out
    }

    /// Split by total degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Self> {
        let mut parts: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.degree())
                .or_insert_with(|| Self::zero(&self.table))
                .terms
                .insert(m.clone(), c.clone());
        }
        parts
    }

    /// Lowest monomial (canonical order) where two polynomials differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, C, C)> {
        let diff = self.try_sub(other).ok()?;
        let (m, _) = diff.terms.iter().next()?;
        Some((m.clone(), self.coeff(m), other.coeff(m)))
    }
}

impl<C: Coefficient> fmt::Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.to_string(&self.table))?;
            } else {
                write!(f, "{abs}*{}", m.to_string(&self.table))?;
            }
        }
        Ok(())
    }
}

/// Exact product; both operands must share a table.
pub fn mul_truncated<C: Coefficient>(
    a: &SparsePoly<C>,
    b: &SparsePoly<C>,
    caps: &TruncationCaps,
) -> Result<SparsePoly<C>> {
    a.try_mul_truncated(b, caps)
}

impl<C: Coefficient> Add for &SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn add(self, rhs: Self) -> SparsePoly<C> {
        self.try_add(rhs).expect("mismatched variable tables")
    }
}

impl<C: Coefficient> Sub for &SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn sub(self, rhs: Self) -> SparsePoly<C> {
        self.try_sub(rhs).expect("mismatched variable tables")
    }
}

impl<C: Coefficient> Mul for &SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn mul(self, rhs: Self) -> SparsePoly<C> {
        self.try_mul_truncated(rhs, &TruncationCaps::none())
            .expect("mismatched variable tables")
    }
}

impl<C: Coefficient> Neg for &SparsePoly<C> {
    type Output = SparsePoly<C>;
    fn neg(self) -> SparsePoly<C> {
        self.scale(&-C::one())
    }
}
