use num_bigint::BigInt;
use serde_json::json;

use crate::polyring::{cyclotomic_embed, invert_unit_series, Monomial, SparsePoly, TruncationCaps};
use crate::qsym::{he_series, is_symmetric, FCache, HeKind, QsymExpansion};
use crate::report::{Checker, VerificationReport};
use crate::vars::Vars;
use crate::{Poly, Result};

use super::{OracleTable, QTable};

/// Where the left-hand side coefficients come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LhsSource {
    Oracle,
    Recurrence,
}

/// All vectors of the given length with entry sum at most `max`.
pub fn vectors_with_sum_at_most(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; len];
    fn rec(cur: &mut Vec<usize>, pos: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(cur, pos + 1, left - v, out);
        }
        cur[pos] = 0;
    }
    rec(&mut cur, 0, max, &mut out);
    out
}

/// `sum Q_{n,j,alpha,beta} z^n t^j r^alpha s^beta` for `n <= z_cap`, `j <= t_cap`.
pub fn master_lhs(
    vars: &Vars,
    z_cap: u32,
    t_cap: u32,
    source: LhsSource,
    fixed_points: bool,
) -> Result<Poly> {
    let mut out = SparsePoly::zero(&vars.table);
    let colors = vars.colors;
    match source {
        LhsSource::Oracle => {
            let mut fc = FCache::new(vars.x.clone());
            for n in 0..=z_cap as usize {
                let oracle = OracleTable::build(n, colors)?;
                for (j, alpha, beta) in oracle.by_w.keys() {
                    if *j as u32 > t_cap || (!fixed_points && alpha.iter().any(|&a| a > 0)) {
                        continue;
                    }
                    let q = oracle.q(*j, alpha, beta, &mut fc)?;
                    out = &out + &q.shift(&lhs_monomial(vars, n, *j, alpha, beta));
                }
            }
        }
        LhsSource::Recurrence => {
            let mut table = QTable::new(colors, vars.x.clone());
            for n in 0..=z_cap as usize {
                let alphas = if fixed_points {
                    vectors_with_sum_at_most(colors as usize, n)
                } else {
                    vec![vec![0; colors as usize]]
                };
                for alpha in alphas {
                    let fixed: usize = alpha.iter().sum();
                    for rest in vectors_with_sum_at_most(colors as usize - 1, n - fixed) {
                        let beta: Vec<usize> =
                            rest.iter().zip(&alpha[1..]).map(|(a, b)| a + b).collect();
                        for j in 0..=(t_cap as usize).min(n) {
                            let q = super::q_padded(n, j, &alpha, &beta, &mut table)?.poly;
                            out = &out + &q.shift(&lhs_monomial(vars, n, j, &alpha, &beta));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn lhs_monomial(vars: &Vars, n: usize, j: usize, alpha: &[usize], beta: &[usize]) -> Monomial {
    vars.rs_monomial(alpha, beta)
        .mul(&Monomial::var(vars.z, n as u32))
        .mul(&Monomial::var(vars.t, j as u32))
}

/// Right-hand side of the master identity (or its fixed-point-free version), expanded under `caps`.
pub fn master_rhs(vars: &Vars, caps: &TruncationCaps, fixed_points: bool) -> Result<Poly> {
    let z = vars.var(vars.z);
    let t = vars.var(vars.t);
    let one = vars.one();
    let h = |arg: &Poly| he_series(HeKind::H, arg, &vars.x, caps);
    let e = |arg: &Poly| he_series(HeKind::E, arg, &vars.x, caps);
    let mul = |a: &Poly, b: &Poly| a.try_mul_truncated(b, caps);

    let mut num = &one - &t;
    for &s in &vars.s {
        let sz = &vars.var(s) * &z;
        num = mul(&num, &e(&-&sz)?)?;
    }
    let s_sum = vars.s_sum();
    let den = &mul(&(&one + &s_sum), &h(&(&t * &z))?)? - &mul(&(&t + &s_sum), &h(&z)?)?;
    let mut rhs = mul(&num, &invert_unit_series(&den.truncate(caps), caps)?)?;
    if fixed_points {
        rhs = mul(&rhs, &h(&(&vars.var(vars.r[0]) * &z))?)?;
        for (m, &s) in vars.s.iter().enumerate() {
            let arg = &(&vars.var(vars.r[m + 1]) * &vars.var(s)) * &z;
            rhs = mul(&rhs, &h(&arg)?)?;
        }
    }
    Ok(rhs)
}

fn gf_check(
    identity: &str,
    colors: u32,
    m: usize,
    z_cap: u32,
    t_cap: u32,
    source: LhsSource,
    fixed_points: bool,
) -> Result<VerificationReport> {
    let params = json!({"N": colors, "M": m, "z_cap": z_cap, "t_cap": t_cap,
        "lhs": if source == LhsSource::Oracle { "oracle" } else { "recurrence" }});
    let mut ck = Checker::new(identity, params);
    let vars = Vars::new(colors, m);
    let caps = vars.series_caps(z_cap, t_cap);
    let lhs = master_lhs(&vars, z_cap, t_cap, source, fixed_points)?.truncate(&caps);
    let rhs = master_rhs(&vars, &caps, fixed_points)?;
    ck.compare("", &lhs, &rhs);
    Ok(ck.finish())
}

/// Coefficientwise check of the master generating function in `N` colors.
pub fn check_master_identity(
    colors: u32,
    m: usize,
    z_cap: u32,
    t_cap: u32,
    source: LhsSource,
) -> Result<VerificationReport> {
    gf_check("thm1-1", colors, m, z_cap, t_cap, source, true)
}

/// The fixed-point-free form of the master identity.
pub fn check_fixed_point_free_identity(
    colors: u32,
    m: usize,
    z_cap: u32,
    t_cap: u32,
    source: LhsSource,
) -> Result<VerificationReport> {
    gf_check("cor3-5", colors, m, z_cap, t_cap, source, false)
}

/// With `r = 1` and `s_m = w^m` the left-hand side collapses to 1.
pub fn check_root_of_unity_collapse(
    colors: u32,
    m: usize,
    n_max: u32,
) -> Result<VerificationReport> {
    let mut ck = Checker::new("cor1-3", json!({"N": colors, "M": m, "n_max": n_max}));
    let vars = Vars::new(colors, m);
    let lhs = master_lhs(&vars, n_max, n_max, LhsSource::Oracle, true)?;
    let mut subs: Vec<(String, u32)> = (0..colors).map(|k| (format!("r{k}"), 0)).collect();
    subs.extend((1..colors).map(|k| (format!("s{k}"), k)));
    let subs: Vec<(&str, u32)> = subs.iter().map(|(s, k)| (s.as_str(), *k)).collect();
    let collapsed = cyclotomic_embed(&lhs, colors, &subs)?;
    let one = SparsePoly::one(collapsed.base().table());
    ck.compare("", collapsed.base(), &one);
    Ok(ck.finish())
}

/// Recurrence and fixed-point padding against enumeration, for every `(n, j, alpha, beta)`.
pub fn check_recurrence_against_oracle(
    colors: u32,
    m: usize,
    n_max: usize,
) -> Result<VerificationReport> {
    let mut ck = Checker::new("cor3-6", json!({"N": colors, "M": m, "n_max": n_max}));
    let vars = Vars::new(colors, m);
    let mut table = QTable::new(colors, vars.x.clone());
    let mut fc = FCache::new(vars.x.clone());
    for n in 0..=n_max {
        let oracle = OracleTable::build(n, colors)?;
        for alpha in vectors_with_sum_at_most(colors as usize, n) {
            for beta in vectors_with_sum_at_most(colors as usize - 1, n) {
                if beta.iter().zip(&alpha[1..]).any(|(b, a)| b < a) {
                    continue;
                }
                for j in 0..n.max(1) {
                    let want = oracle.q(j, &alpha, &beta, &mut fc)?;
                    let label = format!("Q[n={n},j={j},alpha={alpha:?},beta={beta:?}]");
                    if alpha.iter().all(|&a| a == 0) {
                        let got = super::q_recurrence(n, j, &beta, &mut table)?.poly;
                        if !ck.compare(&format!("{label} recurrence"), &want, &got) {
                            return Ok(ck.finish());
                        }
                    }
                    let got = super::q_padded(n, j, &alpha, &beta, &mut table)?.poly;
                    if !ck.compare(&format!("{label} padded"), &want, &got) {
                        return Ok(ck.finish());
                    }
                }
            }
        }
    }
    Ok(ck.finish())
}

/// Every brute-force `Q_{n,j,alpha,beta}` and cv-type refinement is symmetric.
pub fn check_symmetry(colors: u32, m: usize, n_max: usize) -> Result<VerificationReport> {
    let mut ck = Checker::new("cor1-2", json!({"N": colors, "M": m, "n_max": n_max}));
    let vars = Vars::new(colors, m);
    let mut fc = FCache::new(vars.x.clone());
    for n in 0..=n_max {
        let oracle = OracleTable::build(n, colors)?;
        for (j, alpha, beta) in oracle.by_w.keys() {
            let poly = oracle.q(*j, alpha, beta, &mut fc)?;
            let qe = QsymExpansion {
                poly,
                degree: n,
                var_count: m,
            };
            if !is_symmetric(&qe, &vars.x) {
                ck.fail(
                    format!("Q[n={n},j={j},alpha={alpha:?},beta={beta:?}]"),
                    "not symmetric",
                    "symmetric",
                );
                return Ok(ck.finish());
            }
        }
        for (cv, j) in oracle.by_cv.keys() {
            let poly = oracle.q_cv(cv, *j, &mut fc)?;
            let qe = QsymExpansion {
                poly,
                degree: n,
                var_count: m,
            };
            if !is_symmetric(&qe, &vars.x) {
                ck.fail(format!("Q[cv={cv},j={j}]"), "not symmetric", "symmetric");
                return Ok(ck.finish());
            }
        }
    }
    Ok(ck.finish())
}

pub(crate) fn sign(n: usize) -> BigInt {
    BigInt::from(if n.is_multiple_of(2) { 1 } else { -1 })
}

/// The single-color case written out directly: `(1-t) H(rz) / (H(tz) - t H(z))` against
/// enumeration.
pub fn check_single_color_form(m: usize, z_cap: u32, t_cap: u32) -> Result<VerificationReport> {
    let mut ck = Checker::new(
        "single-color",
        json!({"M": m, "z_cap": z_cap, "t_cap": t_cap}),
    );
    let vars = Vars::new(1, m);
    let caps = vars.series_caps(z_cap, t_cap);
    let (z, t, r) = (vars.var(vars.z), vars.var(vars.t), vars.var(vars.r[0]));
    let one = vars.one();
    let h = |arg: &Poly| he_series(HeKind::H, arg, &vars.x, &caps);
    let num = (&one - &t).try_mul_truncated(&h(&(&r * &z))?, &caps)?;
    let den = &h(&(&t * &z))? - &(&t * &h(&z)?);
    let rhs = num.try_mul_truncated(&invert_unit_series(&den.truncate(&caps), &caps)?, &caps)?;
    let lhs = master_lhs(&vars, z_cap, t_cap, LhsSource::Oracle, true)?.truncate(&caps);
    ck.compare("", &lhs, &rhs);
    Ok(ck.finish())
}
