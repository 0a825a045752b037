use crate::{Error, Result};

use super::{q_factorial, Coefficient, Monomial, SparsePoly, TruncationCaps};

fn require_capped<C: Coefficient>(a: &SparsePoly<C>, caps: &TruncationCaps) -> Result<()> {
    for i in a.occurring_vars() {
        if caps.get(i).is_none() {
            return Err(Error::UncappedVariable(a.table().name(i).to_string()));
        }
    }
    Ok(())
}

/// Inverse of a series whose constant term is a unit, under `caps`.
///
/// Works degree by degree: with `a = c + a_1 + a_2 + ...` split by total degree,
/// `b_d = -c^{-1} * sum_{e>=1} a_e b_{d-e}`.
pub fn invert_unit_series<C: Coefficient>(
    a: &SparsePoly<C>,
    caps: &TruncationCaps,
) -> Result<SparsePoly<C>> {
    let c0 = a.constant_term();
    let u = c0.unit_inverse().ok_or(Error::NotInvertible)?;
    require_capped(a, caps)?;
    let table = a.table();
    let max_degree: u32 = a
        .occurring_vars()
        .iter()
        .map(|&i| caps.get(i).unwrap())
        .sum();

    let parts = a.homogeneous_parts();
    let tail: Vec<(u32, SparsePoly<C>)> = parts.into_iter().filter(|(d, _)| *d > 0).collect();
    let neg_u = -u.clone();

    let mut b: Vec<SparsePoly<C>> = vec![SparsePoly::constant(table, u).truncate(caps)];
    for d in 1..=max_degree {
        let mut acc = SparsePoly::zero(table);
        for (e, part) in &tail {
            if *e > d {
                break;
            }
            let prev = &b[(d - e) as usize];
            if prev.is_zero() {
                continue;
            }
            acc = acc.try_add(&part.try_mul_truncated(prev, caps)?)?;
        }
        b.push(acc.scale(&neg_u));
    }
    let mut out = SparsePoly::zero(table);
    for part in &b {
        out = out.try_add(part)?;
    }
    Ok(out)
}

/// A quotient of polynomials whose denominator has unit constant term.
#[derive(Clone, Debug)]
pub struct QRational<C> {
    pub num: SparsePoly<C>,
    pub den: SparsePoly<C>,
}

impl<C: Coefficient> QRational<C> {
    pub fn expand(&self, caps: &TruncationCaps) -> Result<SparsePoly<C>> {
        let inv = invert_unit_series(&self.den, caps)?;
        self.num.try_mul_truncated(&inv, caps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QExpKind {
    /// `sum z^i / [i]_q!`
    Exp,
    /// `sum z^i q^{i choose 2} / [i]_q!`
    BigExp,
}

/// Exact coefficient of `arg^i` in the chosen q-exponential.
pub fn qexp_coefficient<C: Coefficient>(
    kind: QExpKind,
    i: u32,
    table: &std::sync::Arc<super::VarTable>,
    q: usize,
) -> QRational<C> {
    let num = match kind {
        QExpKind::Exp => SparsePoly::one(table),
        QExpKind::BigExp => SparsePoly::var_pow(table, q, i * i.saturating_sub(1) / 2),
    };
    QRational {
        num,
        den: q_factorial(table, q, i as i64).expect("nonnegative"),
    }
}

/// Truncated q-exponential series in `arg`. The argument must vanish at zero
/// and every variable in it (and `q`) must be capped.
pub fn qexp_series<C: Coefficient>(
    kind: QExpKind,
    arg: &SparsePoly<C>,
    q: usize,
    caps: &TruncationCaps,
) -> Result<SparsePoly<C>> {
    if !arg.constant_term().is_zero() {
        return Err(Error::NonZeroConstantTerm);
    }
    require_capped(arg, caps)?;
    if caps.get(q).is_none() {
        return Err(Error::UncappedVariable(arg.table().name(q).to_string()));
    }
    let table = arg.table();
    let mut out = SparsePoly::one(table).truncate(caps);
    let mut power = SparsePoly::one(table);
    let mut inv_fact = SparsePoly::one(table);
    let mut i = 0u32;
    loop {
        i += 1;
        power = power.try_mul_truncated(arg, caps)?;
        if power.is_zero() {
            break;
        }
        let qi = super::q_int(table, q, i as i64)?;
        inv_fact = inv_fact.try_mul_truncated(&invert_unit_series(&qi, caps)?, caps)?;
        let mut term = power.try_mul_truncated(&inv_fact, caps)?;
        if kind == QExpKind::BigExp {
            term = term
                .shift(&Monomial::var(q, i * (i - 1) / 2))
                .truncate(caps);
        }
        out = out.try_add(&term)?;
    }
    Ok(out)
}
