use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::polyring::{Monomial, SparsePoly};
use crate::vars::Vars;
use crate::wreath::{
    reverse_negative_blocks, statistics, type_b_stats, ColoredPermutation, Enumeration,
};
use crate::{Poly, Result};

fn collect(
    en: &Enumeration,
    table: &Vars,
    key: impl Fn(&ColoredPermutation) -> Result<Monomial> + Sync + Send,
) -> Result<Poly> {
    let counts: Result<HashMap<Monomial, u64>> = en.par_fold(
        || Ok(HashMap::new()),
        |acc, pi| {
            let mut acc = acc?;
            *acc.entry(key(&pi)?).or_insert(0) += 1;
            Ok(acc)
        },
        |a, b| {
            let (mut a, b) = (a?, b?);
            for (m, c) in b {
                *a.entry(m).or_insert(0) += c;
            }
            Ok(a)
        },
    );
    Ok(SparsePoly::from_terms(
        &table.table,
        counts?.into_iter().map(|(m, c)| (m, BigInt::from(c))),
    ))
}

/// `sum q^maj t^exc r^fix s^col` over `C_N wr S_n`, times `p^{des*}` when asked.
pub fn joint_distribution(n: usize, vars: &Vars, include_p: bool) -> Result<Poly> {
    let en = Enumeration::new(n, vars.colors)?;
    collect(&en, vars, |pi| {
        let s = statistics(pi);
        let mut e = vec![0u32; vars.table.len()];
        e[vars.q] = s.maj as u32;
        e[vars.t] = s.exc as u32;
        if include_p {
            e[vars.p] = s.des_star as u32;
        }
        for (k, &f) in s.fix.iter().enumerate() {
            e[vars.r[k]] = f as u32;
        }
        for (m, &c) in s.col.iter().enumerate() {
            e[vars.s[m]] = c as u32;
        }
        Ok(Monomial::from_exponents(&e))
    })
}

/// Which flag major index enters the signed-permutation identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FmajVariant {
    /// `2 maj + neg`, maj in the natural order on the integers.
    Natural,
    /// `2 maj + neg`, maj in the order `-1 < -2 < ... < -n < 1 < ... < n`.
    Alt,
    /// The alternative index read off the image under negative-block reversal.
    Transported,
}

impl FmajVariant {
    pub const ALL: [FmajVariant; 3] = [
        FmajVariant::Natural,
        FmajVariant::Alt,
        FmajVariant::Transported,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FmajVariant::Natural => "natural",
            FmajVariant::Alt => "alt",
            FmajVariant::Transported => "transported",
        }
    }

    pub fn value(self, pi: &ColoredPermutation) -> Result<usize> {
        Ok(match self {
            FmajVariant::Natural => type_b_stats(pi)?.fmaj_natural,
            FmajVariant::Alt => type_b_stats(pi)?.fmaj_alt,
            FmajVariant::Transported => type_b_stats(&reverse_negative_blocks(pi)?)?.fmaj_alt,
        })
    }
}

/// `sum q^fmaj t^fexc p^{des_B} r^{fix+} s^neg` over signed permutations, in the N = 2
/// layout with `r = r0` and `s = s1`.
pub fn type_b_distribution(n: usize, vars: &Vars, variant: FmajVariant) -> Result<Poly> {
    let en = Enumeration::new(n, 2)?;
    collect(&en, vars, |pi| {
        let b = type_b_stats(pi)?;
        let mut e = vec![0u32; vars.table.len()];
        e[vars.q] = variant.value(pi)? as u32;
        e[vars.t] = b.fexc as u32;
        e[vars.p] = b.des_b as u32;
        e[vars.r[0]] = b.fix_plus as u32;
        e[vars.s[0]] = b.neg as u32;
        Ok(Monomial::from_exponents(&e))
    })
}
