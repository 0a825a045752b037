use num_bigint::BigInt;
use serde_json::json;

use crate::eulerian::{compositions, qn_polynomial, vectors_with_sum, QnMethod};
use crate::polyring::{pochhammer, q_binomial, q_multinomial, Monomial, TruncationCaps};
use crate::qsym::specialize_x;
use crate::report::{Checker, VerificationReport};
use crate::vars::Vars;
use crate::{Poly, Result};

use super::distribution::joint_distribution;

/// `[k]_x = 1 + x + ... + x^{k-1}` for an arbitrary polynomial `x`.
fn bracket(x: &Poly, k: usize, vars: &Vars) -> Poly {
    let mut out = Poly::zero(&vars.table);
    let mut power = vars.one();
    for _ in 0..k {
        out = &out + &power;
        power = &power * x;
    }
    out
}

/// `tq [k-1]_{tq} + [k]_{tq} (s_1 + ... + s_{N-1})`
fn block_factor(k: usize, vars: &Vars) -> Poly {
    let tq = &vars.var(vars.t) * &vars.var(vars.q);
    &(&tq * &bracket(&tq, k - 1, vars)) + &(&bracket(&tq, k, vars) * &vars.s_sum())
}

/// `sum_{|mu|+|nu|=k} (-1)^{|nu|} [n; prefix, mu, nu]_q r^mu prod_m q^{C(nu_m,2)} s_m^{nu_m+mu_m}`
fn signed_part(n: usize, k: usize, prefix: &[usize], vars: &Vars) -> Result<Poly> {
    let colors = vars.colors as usize;
    let mut out = Poly::zero(&vars.table);
    for joint in vectors_with_sum(2 * colors - 1, k) {
        let (mu, nu) = joint.split_at(colors);
        let parts: Vec<i64> = prefix.iter().chain(&joint).map(|&v| v as i64).collect();
        let coeff: Poly = q_multinomial(&vars.table, vars.q, n as i64, &parts)?;
        let s_exp: Vec<usize> = nu.iter().zip(&mu[1..]).map(|(a, b)| a + b).collect();
        let q_exp: usize = nu.iter().map(|&v| v * v.saturating_sub(1) / 2).sum();
        let mono = vars
            .rs_monomial(mu, &s_exp)
            .mul(&Monomial::var(vars.q, q_exp as u32));
        let sign = if nu.iter().sum::<usize>() % 2 == 0 {
            1
        } else {
            -1
        };
        out = &out + &coeff.shift(&mono).scale(&BigInt::from(sign));
    }
    Ok(out)
}

/// `sum q^maj t^exc r^fix s^col` from the specialized recurrence or closed formula.
pub fn distribution_from_formula(n: usize, method: QnMethod, vars: &Vars) -> Result<Poly> {
    match method {
        QnMethod::Recurrence => {
            let mut a = vec![vars.one()];
            for m in 1..=n {
                let mut next = signed_part(m, m, &[], vars)?;
                for (k, ak) in a.iter().enumerate() {
                    let binom: Poly = q_binomial(&vars.table, vars.q, m as i64, k as i64)?;
                    next = &next + &(&(&binom * ak) * &block_factor(m - k, vars));
                }
                a.push(next);
            }
            Ok(a.swap_remove(n))
        }
        QnMethod::Closed => {
            if n == 0 {
                return Ok(vars.one());
            }
            let mut out = Poly::zero(&vars.table);
            for comp in compositions(n) {
                let (last, init) = comp.split_last().unwrap();
                let mut prefix = vars.one();
                for &k in init {
                    prefix = &prefix * &block_factor(k, vars);
                }
                out = &out + &(&signed_part(n, *last, init, vars)? * &prefix);
                let parts: Vec<i64> = comp.iter().map(|&v| v as i64).collect();
                let all: Poly = q_multinomial(&vars.table, vars.q, n as i64, &parts)?;
                out = &out + &(&(&all * &prefix) * &block_factor(*last, vars));
            }
            Ok(out)
        }
    }
}

/// Recurrence against closed form for the quasisymmetric `Q_n`, and both specialized
/// formulas against enumeration.
pub fn check_specialized_formulas(colors: u32, n_max: usize) -> Result<VerificationReport> {
    let mut ck = Checker::new("cor5-3", json!({"N": colors, "n_max": n_max}));
    for n in 0..=n_max {
        let vars = Vars::new(colors, n);
        let rec = qn_polynomial(n, QnMethod::Recurrence, &vars);
        if !ck.compare(
            &format!("Q_{n} recurrence vs closed"),
            &rec,
            &qn_polynomial(n, QnMethod::Closed, &vars),
        ) {
            break;
        }
        let brute = joint_distribution(n, &vars, false)?;
        let a_rec = distribution_from_formula(n, QnMethod::Recurrence, &vars)?;
        let a_closed = distribution_from_formula(n, QnMethod::Closed, &vars)?;
        if !ck.compare(&format!("A_{n} recurrence"), &a_rec, &brute)
            || !ck.compare(&format!("A_{n} closed"), &a_closed, &brute)
        {
            break;
        }
    }
    Ok(ck.finish())
}

/// `(q;q)_n` times the stable specialization of `Q_n`, with `t -> tq`, gives the joint
/// distribution. The x alphabet has `q_cap + 1` letters so that the truncation is exact.
pub fn check_specialization_pipeline(
    colors: u32,
    n_max: usize,
    q_cap: u32,
) -> Result<VerificationReport> {
    let mut ck = Checker::new(
        "qn-specialization",
        json!({"N": colors, "n_max": n_max, "q": q_cap}),
    );
    let vars = Vars::new(colors, q_cap as usize + 1);
    let caps = TruncationCaps::none().with(vars.q, q_cap);
    let q = vars.var(vars.q);
    for n in 0..=n_max {
        let qn = qn_polynomial(n, QnMethod::Recurrence, &vars);
        let spec = specialize_x(&qn, &vars.x, vars.q, None, &caps)?;
        let shifted = spec.substitute(vars.t, &(&vars.var(vars.t) * &q), &caps)?;
        let lhs = shifted.try_mul_truncated(&pochhammer(&q, &q, n as i64)?, &caps)?;
        let want = joint_distribution(n, &vars, false)?.truncate(&caps);
        if !ck.compare(&format!("n={n}"), &lhs, &want) {
            break;
        }
    }
    Ok(ck.finish())
}
