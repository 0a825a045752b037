use std::sync::Arc;

use crate::{Error, Result};

use super::{Coefficient, Monomial, SparsePoly, VarTable};

fn nonneg(n: i64) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::NegativeArgument(n))
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int<C: Coefficient>(table: &Arc<VarTable>, q: usize, n: i64) -> Result<SparsePoly<C>> {
    let n = nonneg(n)?;
    Ok(SparsePoly::from_terms(
        table,
        (0..n).map(|i| (Monomial::var(q, i), C::one())),
    ))
}

pub fn q_factorial<C: Coefficient>(
    table: &Arc<VarTable>,
    q: usize,
    n: i64,
) -> Result<SparsePoly<C>> {
    let n = nonneg(n)?;
    let mut out = SparsePoly::one(table);
    for i in 2..=n {
        out = &out * &q_int(table, q, i as i64)?;
    }
    Ok(out)
}

/// Gaussian binomial via the q-Pascal rule `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binomial<C: Coefficient>(
    table: &Arc<VarTable>,
    q: usize,
    n: i64,
    k: i64,
) -> Result<SparsePoly<C>> {
    let n = nonneg(n)?;
    let k = nonneg(k)?;
    if k > n {
        return Ok(SparsePoly::zero(table));
    }
    let mut row: Vec<SparsePoly<C>> = vec![SparsePoly::one(table)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let left = if j > 0 {
                row[j as usize - 1].clone()
            } else {
                SparsePoly::zero(table)
            };
            let right = if j < m {
                row[j as usize].shift(&Monomial::var(q, j))
            } else {
                SparsePoly::zero(table)
            };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

/// q-multinomial `[n; k_1, ..., k_r]_q`; the parts must sum to `n`.
pub fn q_multinomial<C: Coefficient>(
    table: &Arc<VarTable>,
    q: usize,
    n: i64,
    parts: &[i64],
) -> Result<SparsePoly<C>> {
    nonneg(n)?;
    for &p in parts {
        nonneg(p)?;
    }
    if parts.iter().sum::<i64>() != n {
        return Err(Error::InvalidInput(format!(
            "multinomial parts {parts:?} do not sum to {n}"
        )));
    }
    let mut out = SparsePoly::one(table);
    let mut running = 0;
    for &p in parts {
        running += p;
        out = &out * &q_binomial(table, q, running, p)?;
    }
    Ok(out)
}

/// `(a; base)_n = (1-a)(1-a base)...(1-a base^{n-1})`.
pub fn pochhammer<C: Coefficient>(
    a: &SparsePoly<C>,
    base: &SparsePoly<C>,
    n: i64,
) -> Result<SparsePoly<C>> {
    let n = nonneg(n)?;
    let table = a.table();
    let one = SparsePoly::one(table);
    let mut out = one.clone();
    let mut factor = a.clone();
    for _ in 0..n {
        out = out.try_mul_truncated(&one.try_sub(&factor)?, &Default::default())?;
        factor = factor.try_mul_truncated(base, &Default::default())?;
    }
    Ok(out)
}

/// Selector for [`q_analog`].
#[derive(Clone, Debug)]
pub enum QAnalog<C> {
    Int(i64),
    Factorial(i64),
    Binomial(i64, i64),
    Multinomial(i64, Vec<i64>),
    /// `(a;q)_n`
    Pochhammer(SparsePoly<C>, i64),
}

pub fn q_analog<C: Coefficient>(
    kind: &QAnalog<C>,
    table: &Arc<VarTable>,
    q: usize,
) -> Result<SparsePoly<C>> {
    match kind {
        QAnalog::Int(n) => q_int(table, q, *n),
        QAnalog::Factorial(n) => q_factorial(table, q, *n),
        QAnalog::Binomial(n, k) => q_binomial(table, q, *n, *k),
        QAnalog::Multinomial(n, parts) => q_multinomial(table, q, *n, parts),
        QAnalog::Pochhammer(a, n) => pochhammer(a, &SparsePoly::var_pow(table, q, 1), *n),
    }
}
