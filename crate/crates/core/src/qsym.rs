//! Fundamental quasisymmetric functions, complete and elementary symmetric
//! functions, and principal specializations.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::polyring::{
    invert_unit_series, pochhammer, Monomial, SparsePoly, TruncationCaps, VarTable,
};
use crate::{Error, Poly, Result};

/// The variables `x1..xM` inside some table.
#[derive(Clone, Debug)]
pub struct XAlphabet {
    table: Arc<VarTable>,
    vars: Vec<usize>,
}

pub fn x_name(i: usize) -> String {
    format!("x{i}")
}

impl XAlphabet {
    /// A table holding just `x1..xM`.
    pub fn standalone(m: usize) -> Self {
        let names: Vec<String> = (1..=m).map(x_name).collect();
        let table = VarTable::new(&names).expect("distinct names");
        XAlphabet {
            vars: (0..m).collect(),
            table,
        }
    }

    /// Locate `x1..xM` in an existing table.
    pub fn within(table: &Arc<VarTable>, m: usize) -> Result<Self> {
        let vars = (1..=m)
            .map(|i| table.require(&x_name(i)))
            .collect::<Result<_>>()?;
        Ok(XAlphabet {
            table: table.clone(),
            vars,
        })
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn size(&self) -> usize {
        self.vars.len()
    }

    pub fn var(&self, i: usize) -> usize {
        self.vars[i - 1]
    }

    /// Caps every x-variable at `cap`.
    pub fn cap_all(&self, caps: TruncationCaps, cap: u32) -> TruncationCaps {
        self.vars.iter().fold(caps, |c, &v| c.with(v, cap))
    }
}

/// A homogeneous polynomial in the x-variables of an alphabet.
#[derive(Clone, Debug, PartialEq)]
pub struct QsymExpansion {
    pub poly: Poly,
    pub degree: usize,
    pub var_count: usize,
}

fn check_subset(t: &[usize], n: usize) -> Result<()> {
    if t.iter().any(|&i| i == 0 || i >= n) {
        return Err(Error::InvalidInput(format!(
            "{t:?} is not a subset of [{}]",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Number of weakly decreasing sequences per exponent vector, by recursion on positions.
fn f_terms(
    strict: &[bool],
    n: usize,
    m: usize,
    exps: &mut Vec<u32>,
    pos: usize,
    prev: usize,
    out: &mut HashMap<Vec<u32>, u64>,
) {
    if pos == n {
        *out.entry(exps.clone()).or_default() += 1;
        return;
    }
    // strict[pos-1] says i_pos > i_{pos+1}, 1-based
    let hi = if pos == 0 {
        m
    } else if strict[pos - 1] {
        prev - 1
    } else {
        prev
    };
    for v in 1..=hi {
        exps[v - 1] += 1;
        f_terms(strict, n, m, exps, pos + 1, v, out);
        exps[v - 1] -= 1;
    }
}

/// `F_{T,n}` expanded in the alphabet's `M` variables.
pub fn fundamental_f(t: &[usize], n: usize, alphabet: &XAlphabet) -> Result<QsymExpansion> {
    check_subset(t, n)?;
    let m = alphabet.size();
    let mut strict = vec![false; n.saturating_sub(1)];
    for &i in t {
        strict[i - 1] = true;
    }
    let mut counts = HashMap::new();
    f_terms(&strict, n, m, &mut vec![0; m], 0, m + 1, &mut counts);
    let width = alphabet.table().len();
    let mut poly = SparsePoly::zero(alphabet.table());
    for (e, c) in counts {
        let mut dense = vec![0u32; width];
        for (k, x) in e.into_iter().enumerate() {
            dense[alphabet.var(k + 1)] = x;
        }
        poly.add_term(Monomial::from_exponents(&dense), &BigInt::from(c));
    }
    Ok(QsymExpansion {
        poly,
        degree: n,
        var_count: m,
    })
}

/// Memo of `F_{T,n}` keyed by `(n, T as bitmask)`.
#[derive(Debug)]
pub struct FCache {
    alphabet: XAlphabet,
    memo: HashMap<(usize, u64), Poly>,
}

impl FCache {
    pub fn new(alphabet: XAlphabet) -> Self {
        FCache {
            alphabet,
            memo: HashMap::new(),
        }
    }

    pub fn alphabet(&self) -> &XAlphabet {
        &self.alphabet
    }

    pub fn get(&mut self, t: &[usize], n: usize) -> Result<&Poly> {
        let mask = t.iter().fold(0u64, |acc, &i| acc | (1 << i));
        if !self.memo.contains_key(&(n, mask)) {
            let f = fundamental_f(t, n, &self.alphabet)?.poly;
            self.memo.insert((n, mask), f);
        }
        Ok(&self.memo[&(n, mask)])
    }

    pub fn h(&mut self, n: usize) -> Poly {
        self.get(&[], n).expect("empty set").clone()
    }

    pub fn e(&mut self, n: usize) -> Poly {
        let t: Vec<usize> = (1..n).collect();
        self.get(&t, n).expect("full set").clone()
    }
}

pub fn complete_homogeneous(n: usize, alphabet: &XAlphabet) -> Poly {
    fundamental_f(&[], n, alphabet).expect("empty set").poly
}

pub fn elementary(n: usize, alphabet: &XAlphabet) -> Poly {
    let t: Vec<usize> = (1..n).collect();
    fundamental_f(&t, n, alphabet).expect("full set").poly
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeKind {
    /// `H(z) = sum h_i z^i`
    H,
    /// `E(z) = sum e_i z^i`
    E,
}

/// `sum_i c_i(x) arg^i` truncated by `caps`, with `c_i = h_i` or `e_i`.
pub fn he_series(
    kind: HeKind,
    arg: &Poly,
    alphabet: &XAlphabet,
    caps: &TruncationCaps,
) -> Result<Poly> {
    if !arg.constant_term().is_zero() {
        return Err(Error::NonZeroConstantTerm);
    }
    for i in arg.occurring_vars() {
        if caps.get(i).is_none() {
            return Err(Error::UncappedVariable(arg.table().name(i).to_string()));
        }
    }
    let table = arg.table();
    let mut out = SparsePoly::one(table).truncate(caps);
    let mut power = SparsePoly::one(table);
    let mut i = 0;
    loop {
        i += 1;
        power = power.try_mul_truncated(arg, caps)?;
        if power.is_zero() {
            break;
        }
        let c = match kind {
            HeKind::H => complete_homogeneous(i, alphabet),
            HeKind::E => elementary(i, alphabet),
        };
        if c.is_zero() {
            continue;
        }
        out = out.try_add(&c.reindex(table)?.try_mul_truncated(&power, caps)?)?;
    }
    Ok(out)
}

/// Invariance under every adjacent transposition of the x-variables.
/// Only conclusive when `M >= degree`; a warning is logged otherwise.
pub fn is_symmetric(p: &QsymExpansion, alphabet: &XAlphabet) -> bool {
    if alphabet.size() < p.degree {
        log::warn!(
            "symmetry test with M = {} < degree {} is not conclusive",
            alphabet.size(),
            p.degree
        );
    }
    (1..alphabet.size()).all(|i| p.poly.swap_vars(alphabet.var(i), alphabet.var(i + 1)) == p.poly)
}

/// `q^{sum T} / (q;q)_n` as a series truncated at the q-cap.
pub fn stable_specialize_f(
    t: &[usize],
    n: usize,
    table: &Arc<VarTable>,
    q: usize,
    caps: &TruncationCaps,
) -> Result<Poly> {
    check_subset(t, n)?;
    let qv = SparsePoly::var_pow(table, q, 1);
    let den = pochhammer(&qv, &qv, n as i64)?;
    let inv = invert_unit_series(&den, caps)?;
    let shift: u32 = t.iter().map(|&i| i as u32).sum();
    Ok(inv.shift(&Monomial::var(q, shift)).truncate(caps))
}

/// Direct sum of `q^{sum (i_j - 1)}` over `l >= i_1 >= ... >= i_n >= 1` with strict drops at `T`.
pub fn order_l_specialize_f(
    t: &[usize],
    n: usize,
    l: usize,
    table: &Arc<VarTable>,
    q: usize,
) -> Result<Poly> {
    check_subset(t, n)?;
    let mut strict = vec![false; n.saturating_sub(1)];
    for &i in t {
        strict[i - 1] = true;
    }
    let mut counts = HashMap::new();
    let mut exps = vec![0u32; l];
    if l > 0 || n == 0 {
        f_terms(&strict, n, l, &mut exps, 0, l + 1, &mut counts);
    }
    let mut out = SparsePoly::zero(table);
    for (e, c) in counts {
        let deg: u32 = e.iter().enumerate().map(|(k, &x)| k as u32 * x).sum();
        out.add_term(Monomial::var(q, deg), &BigInt::from(c));
    }
    Ok(out)
}

/// Apply `x_i -> q^{i-1}` for `i <= limit` and `x_i -> 0` beyond; `limit = None` keeps all
/// `M` variables (stable specialization restricted to the alphabet).
pub fn specialize_x(
    p: &Poly,
    alphabet: &XAlphabet,
    q: usize,
    limit: Option<usize>,
    caps: &TruncationCaps,
) -> Result<Poly> {
    let table = p.table();
    let mut out = SparsePoly::zero(table);
    'terms: for (m, c) in p.terms() {
        let mut rest = m.clone();
        let mut qdeg = m.exponent(q);
        for i in 1..=alphabet.size() {
            let v = alphabet.var(i);
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            if limit.is_some_and(|l| i > l) {
                continue 'terms;
            }
            qdeg += (i as u32 - 1) * e;
            rest = rest.without(v);
        }
        let mono = rest.with_exponent(q, qdeg);
        if caps.admits(&mono) {
            out.add_term(mono, c);
        }
    }
    Ok(out)
}
