use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

use super::{Monomial, SparsePoly, TruncationCaps, VarTable};

/// Name of the root-of-unity symbol added to a table by [`cyclotomic_embed`].
pub const OMEGA: &str = "w";

/// Dense coefficients (constant first) of the n-th cyclotomic polynomial,
/// obtained by dividing `x^n - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_coefficients(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = div_exact(&poly, &cyclotomic_coefficients(d));
        }
    }
    poly
}

fn div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    assert!(den[dn].is_one(), "monic divisor");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "division not exact");
    quot
}

/// Integer polynomial with an extra symbol `w` read as a primitive N-th root of unity.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclotomicPoly {
    base: SparsePoly<BigInt>,
    omega: usize,
    order: u32,
}

impl CyclotomicPoly {
    fn reduced(base: SparsePoly<BigInt>, omega: usize, order: u32) -> Self {
        let phi = cyclotomic_coefficients(order);
        let deg = phi.len() - 1;
        let mut groups: BTreeMap<Monomial, Vec<BigInt>> = BTreeMap::new();
        for (m, c) in base.terms() {
            let e = (m.exponent(omega) % order) as usize;
            let v = groups
                .entry(m.without(omega))
                .or_insert_with(|| vec![BigInt::zero(); order as usize]);
            v[e] += c;
        }
        let table = base.table().clone();
        let mut out = SparsePoly::zero(&table);
        for (rest, mut v) in groups {
            for k in (deg..v.len()).rev() {
                let c = std::mem::take(&mut v[k]);
                if c.is_zero() {
                    continue;
                }
                for (i, p) in phi.iter().enumerate().take(deg) {
                    v[k - deg + i] -= &c * p;
                }
            }
            for (e, c) in v.into_iter().enumerate() {
                out.add_term(rest.with_exponent(omega, e as u32), &c);
            }
        }
        CyclotomicPoly {
            base: out,
            omega,
            order,
        }
    }

    pub fn base(&self) -> &SparsePoly<BigInt> {
        &self.base
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn omega_index(&self) -> usize {
        self.omega
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.base.is_one()
    }

    pub fn mul(&self, other: &Self, caps: &TruncationCaps) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::InvalidInput("cyclotomic orders differ".into()));
        }
        let prod = self.base.try_mul_truncated(&other.base, caps)?;
        Ok(Self::reduced(prod, self.omega, self.order))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::reduced(
            self.base.try_add(&other.base)?,
            self.omega,
            self.order,
        ))
    }
}

impl fmt::Display for CyclotomicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)
    }
}

/// Substitute `var -> w^k` for each listed variable and reduce modulo `Phi_N(w)`.
/// The symbol `w` is appended to the table if it is not already present.
pub fn cyclotomic_embed(
    a: &SparsePoly<BigInt>,
    order: u32,
    substitutions: &[(&str, u32)],
) -> Result<CyclotomicPoly> {
    if order < 2 {
        return Err(Error::InvalidInput(
            "cyclotomic order must be at least 2".into(),
        ));
    }
    let (table, a) = match a.table().index(OMEGA) {
        Some(_) => (a.table().clone(), a.clone()),
        None => {
            let mut names = a.table().names().to_vec();
            names.push(OMEGA.to_string());
            let t = VarTable::new(&names)?;
            let lifted = a.reindex(&t)?;
            (t, lifted)
        }
    };
    let omega = table.index(OMEGA).unwrap();
    let subs: Vec<(usize, u32)> = substitutions
        .iter()
        .map(|(name, k)| Ok((table.require(name)?, *k)))
        .collect::<Result<_>>()?;
    let mut out = SparsePoly::zero(&table);
    for (m, c) in a.terms() {
        let mut mm = m.clone();
        let mut w = m.exponent(omega);
        for &(i, k) in &subs {
            w += k * m.exponent(i);
            mm = mm.without(i);
        }
        out.add_term(mm.with_exponent(omega, w % order), c);
    }
    Ok(CyclotomicPoly::reduced(out, omega, order))
}
