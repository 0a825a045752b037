use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::json;

use crate::polyring::{
    cyclotomic_embed, invert_unit_series, pochhammer, q_factorial, q_int, qexp_series, Monomial,
    QExpKind, SparsePoly, TruncationCaps, VarTable,
};
use crate::report::{Checker, VerificationReport};
use crate::vars::Vars;
use crate::wreath::{statistics, Enumeration};
use crate::{Poly, RatPoly, Result};

use super::distribution::{joint_distribution, type_b_distribution, FmajVariant};

/// Caps on the series variables of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesCaps {
    pub z: u32,
    pub t: u32,
    pub q: u32,
    pub p: u32,
}

impl SeriesCaps {
    fn json(&self) -> serde_json::Value {
        json!({"z": self.z, "t": self.t, "q": self.q, "p": self.p})
    }

    /// Caps on `z, t, q, p`, with the r and s variables bounded by the z cap.
    fn on(&self, vars: &Vars) -> TruncationCaps {
        let mut caps = vars
            .series_caps(self.z, self.t)
            .with(vars.q, self.q)
            .with(vars.p, self.p);
        for &v in vars.r.iter().chain(&vars.s) {
            caps.set(v, self.z);
        }
        caps
    }
}

fn mul(a: &Poly, b: &Poly, caps: &TruncationCaps) -> Result<Poly> {
    a.try_mul_truncated(b, caps)
}

fn inv(a: &Poly, caps: &TruncationCaps) -> Result<Poly> {
    invert_unit_series(&a.truncate(caps), caps)
}

fn poch(a: &Poly, base: &Poly, n: usize) -> Result<Poly> {
    pochhammer(a, base, n as i64)
}

fn z_power(vars: &Vars, n: usize) -> Monomial {
    Monomial::var(vars.z, n as u32)
}

/// Exponential generating function of the Eulerian polynomials, in rational arithmetic.
pub fn check_euler(z_cap: u32, t_cap: u32) -> Result<VerificationReport> {
    let mut ck = Checker::new("euler", json!({"z": z_cap, "t": t_cap}));
    let table = VarTable::new(&["z", "t"])?;
    let caps = TruncationCaps::none().with(0, z_cap).with(1, t_cap);
    let one = RatPoly::one(&table);
    let t: RatPoly = SparsePoly::var_pow(&table, 1, 1);
    let z: RatPoly = SparsePoly::var_pow(&table, 0, 1);
    let mut lhs = RatPoly::zero(&table);
    let mut fact = BigInt::one();
    for n in 0..=z_cap as usize {
        if n > 0 {
            fact *= n;
        }
        let scale = BigRational::new(BigInt::one(), fact.clone());
        for (k, c) in eulerian_polynomial(n)?.into_iter().enumerate() {
            let m = Monomial::from_exponents(&[n as u32, k as u32]);
            lhs.add_term(m, &(BigRational::from_integer(c.into()) * &scale));
        }
    }
    // e^{(t-1)z} as an ordinary exponential
    let arg = &(&t - &one) * &z;
    let mut exp = RatPoly::one(&table);
    let mut power = RatPoly::one(&table);
    let mut fact = BigInt::one();
    for i in 1..=z_cap {
        fact *= i;
        power = power.try_mul_truncated(&arg, &caps)?;
        exp = exp.try_add(&power.scale(&BigRational::new(BigInt::one(), fact.clone())))?;
    }
    let den = &exp - &t;
    let rhs =
        (&one - &t).try_mul_truncated(&invert_unit_series(&den.truncate(&caps), &caps)?, &caps)?;
    ck.compare("", &lhs.truncate(&caps), &rhs);
    Ok(ck.finish())
}

/// Coefficients of `sum t^exc` over `S_n`.
pub fn eulerian_polynomial(n: usize) -> Result<Vec<u64>> {
    let mut out = vec![0u64; n.max(1)];
    for pi in Enumeration::new(n, 1)?.iter() {
        out[statistics(&pi).exc] += 1;
    }
    Ok(out)
}

/// Stable principal specialization of the master identity: exponential form with
/// `1/[n]_q!` weights.
pub fn check_exponential_specialization(colors: u32, c: SeriesCaps) -> Result<VerificationReport> {
    let mut ck = Checker::new("thm1-4", json!({"N": colors, "caps": c.json()}));
    let vars = Vars::new(colors, 0);
    let caps = c.on(&vars);
    let (z, t, q) = (vars.var(vars.z), vars.var(vars.t), vars.var(vars.q));
    let one = vars.one();
    let mut lhs = Poly::zero(&vars.table);
    for n in 0..=c.z as usize {
        let a = joint_distribution(n, &vars, false)?;
        let w = inv(&q_factorial(&vars.table, vars.q, n as i64)?, &caps)?;
        lhs = lhs.try_add(&mul(&a, &w, &caps)?.shift(&z_power(&vars, n)))?;
    }
    let exp = |arg: &Poly| qexp_series(QExpKind::Exp, arg, vars.q, &caps);
    let big_exp = |arg: &Poly| qexp_series(QExpKind::BigExp, arg, vars.q, &caps);
    let tq = &t * &q;
    let mut num = mul(&exp(&(&vars.var(vars.r[0]) * &z))?, &(&one - &tq), &caps)?;
    for (m, &s) in vars.s.iter().enumerate() {
        let sz = &vars.var(s) * &z;
        num = mul(&num, &big_exp(&-&sz)?, &caps)?;
        num = mul(&num, &exp(&(&vars.var(vars.r[m + 1]) * &sz))?, &caps)?;
    }
    let s_sum = vars.s_sum();
    let den = &mul(&(&one + &s_sum), &exp(&(&tq * &z))?, &caps)?
        - &mul(&(&tq + &s_sum), &exp(&z)?, &caps)?;
    let rhs = mul(&num, &inv(&den, &caps)?, &caps)?;
    ck.compare("", &lhs.truncate(&caps), &rhs);
    Ok(ck.finish())
}

/// Order-l principal specialization: the `p`-series form with `1/(p;q)_{n+1}` weights.
/// The right-hand sum over `l` stops at the p cap since its l-th term carries `p^l`.
pub fn check_p_series_specialization(colors: u32, c: SeriesCaps) -> Result<VerificationReport> {
    let mut ck = Checker::new("thm1-5", json!({"N": colors, "caps": c.json()}));
    let vars = Vars::new(colors, 0);
    let caps = c.on(&vars);
    let (z, t, q, p) = (
        vars.var(vars.z),
        vars.var(vars.t),
        vars.var(vars.q),
        vars.var(vars.p),
    );
    let one = vars.one();
    let mut lhs = Poly::zero(&vars.table);
    for n in 0..=c.z as usize {
        let a = joint_distribution(n, &vars, true)?;
        let w = inv(&poch(&p, &q, n + 1)?, &caps)?;
        lhs = lhs.try_add(&mul(&a, &w, &caps)?.shift(&z_power(&vars, n)))?;
    }
    let tq = &t * &q;
    let tqz = &tq * &z;
    let s_sum = vars.s_sum();
    let mut rhs = Poly::zero(&vars.table);
    for l in 0..=c.p as usize {
        let zl = poch(&z, &q, l)?.truncate(&caps);
        let tqzl = poch(&tqz, &q, l)?.truncate(&caps);
        let mut num = mul(&mul(&(&one - &tq), &zl, &caps)?, &tqzl, &caps)?;
        let mut den = poch(&(&vars.var(vars.r[0]) * &z), &q, l + 1)?.truncate(&caps);
        for (m, &s) in vars.s.iter().enumerate() {
            let sz = &vars.var(s) * &z;
            num = mul(&num, &poch(&sz, &q, l)?, &caps)?;
            den = mul(
                &den,
                &poch(&(&vars.var(vars.r[m + 1]) * &sz), &q, l)?,
                &caps,
            )?;
        }
        let bracket = &mul(&(&one + &s_sum), &zl, &caps)? - &mul(&(&tq + &s_sum), &tqzl, &caps)?;
        den = mul(&den, &bracket, &caps)?;
        let term = mul(&num, &inv(&den, &caps)?, &caps)?.shift(&Monomial::var(vars.p, l as u32));
        rhs = rhs.try_add(&term.truncate(&caps))?;
    }
    ck.compare("", &lhs.truncate(&caps), &rhs);
    Ok(ck.finish())
}

/// With `r = 1` and `s_m = w^m`, the `p`-weighted distribution collapses to `(p;q)_n`
/// independently of `t`; the generating form is checked under the p and q caps.
pub fn check_cyclotomic_p_series(
    colors: u32,
    n_max: usize,
    p_cap: u32,
    q_cap: u32,
) -> Result<VerificationReport> {
    let mut ck = Checker::new(
        "cor1-6",
        json!({"N": colors, "n_max": n_max, "p": p_cap, "q": q_cap}),
    );
    let vars = Vars::new(colors, 0);
    let subs: Vec<(String, u32)> = (1..colors).map(|k| (format!("s{k}"), k)).collect();
    let subs: Vec<(&str, u32)> = subs.iter().map(|(s, k)| (s.as_str(), *k)).collect();
    for n in 0..=n_max {
        let mut a = joint_distribution(n, &vars, true)?;
        for &r in &vars.r {
            a = a.evaluate_one(r);
        }
        let collapsed = cyclotomic_embed(&a, colors, &subs)?;
        let base = collapsed.base();
        let table = base.table().clone();
        let t_idx = table.require("t")?;
        let with_t = base.terms().any(|(m, _)| m.exponent(t_idx) > 0);
        if !ck.expect(!with_t, || {
            (format!("n={n}"), base.to_string(), "free of t".into())
        }) {
            break;
        }
        let (p, q) = (table.require("p")?, table.require("q")?);
        let pv: Poly = SparsePoly::var_pow(&table, p, 1);
        let qv: Poly = SparsePoly::var_pow(&table, q, 1);
        let want = poch(&pv, &qv, n)?;
        if !ck.compare(&format!("n={n} polynomial form"), base, &want) {
            break;
        }
        let caps = TruncationCaps::none().with(p, p_cap).with(q, q_cap);
        let lhs = base.try_mul_truncated(
            &invert_unit_series(&poch(&pv, &qv, n + 1)?.truncate(&caps), &caps)?,
            &caps,
        )?;
        let mut rhs = Poly::zero(&table);
        for l in 0..=p_cap {
            rhs.add_term(
                Monomial::var(p, l).mul(&Monomial::var(q, n as u32 * l)),
                &BigInt::one(),
            );
        }
        if !ck.compare(
            &format!("z^{n} generating form"),
            &lhs,
            &rhs.truncate(&caps),
        ) {
            break;
        }
    }
    Ok(ck.finish())
}

fn signed_p_series_variant(variant: FmajVariant, c: SeriesCaps) -> Result<VerificationReport> {
    let mut ck = Checker::new(
        "cor1-9",
        json!({"variant": variant.name(), "caps": c.json()}),
    );
    let vars = Vars::new(2, 0);
    let caps = c.on(&vars);
    let (z, t, q, p) = (
        vars.var(vars.z),
        vars.var(vars.t),
        vars.var(vars.q),
        vars.var(vars.p),
    );
    let (r, s) = (vars.var(vars.r[0]), vars.var(vars.s[0]));
    let one = vars.one();
    let q2 = &q * &q;
    let mut lhs = Poly::zero(&vars.table);
    for n in 0..=c.z as usize {
        let a = type_b_distribution(n, &vars, variant)?;
        let w = inv(&poch(&p, &q2, n + 1)?, &caps)?;
        lhs = lhs.try_add(&mul(&a, &w, &caps)?.shift(&z_power(&vars, n)))?;
    }
    let ttqq = &(&t * &t) * &q2;
    let sqt = &(&s * &q) * &t;
    let mut rhs = Poly::zero(&vars.table);
    for k in 0..=c.p as usize {
        let zk = poch(&z, &q2, k)?.truncate(&caps);
        let tzk = poch(&(&ttqq * &z), &q2, k)?.truncate(&caps);
        let num = mul(&mul(&(&one - &ttqq), &zk, &caps)?, &tzk, &caps)?;
        let bracket = &mul(&(&one + &sqt), &zk, &caps)? - &mul(&(&ttqq + &sqt), &tzk, &caps)?;
        let den = mul(
            &poch(&(&r * &z), &q2, k + 1)?.truncate(&caps),
            &bracket,
            &caps,
        )?;
        let term = mul(&num, &inv(&den, &caps)?, &caps)?.shift(&Monomial::var(vars.p, k as u32));
        rhs = rhs.try_add(&term.truncate(&caps))?;
    }
    ck.compare("", &lhs.truncate(&caps), &rhs);
    Ok(ck.finish())
}

/// The variant of the flag major index that makes the signed-permutation identities hold
/// as stated, determined by running every variant.
pub const PINNED_FMAJ: FmajVariant = FmajVariant::Natural;

/// Signed-permutation specialization of the p-series identity. Every fmaj variant is
/// tried; the report's status is that of [`PINNED_FMAJ`].
pub fn check_signed_p_series(c: SeriesCaps) -> Result<VerificationReport> {
    let mut outcomes = serde_json::Map::new();
    let mut pinned = None;
    for v in FmajVariant::ALL {
        let rep = signed_p_series_variant(v, c)?;
        outcomes.insert(v.name().into(), serde_json::to_value(rep.status).unwrap());
        if v == PINNED_FMAJ {
            pinned = Some(rep);
        }
    }
    let rep = pinned.unwrap();
    let details = json!({"pinned": PINNED_FMAJ.name(), "variants": outcomes});
    Ok(VerificationReport {
        params: json!({"caps": c.json()}),
        ..rep
    }
    .with_details(details))
}

/// `(p;q^2)_{n+1} sum_k p^k [2k+1]_q^n` against enumeration, truncated at the p cap.
pub fn check_signed_carlitz_variant(
    n_max: usize,
    p_cap: u32,
    variant: FmajVariant,
) -> Result<VerificationReport> {
    let mut ck = Checker::new(
        "cor1-10",
        json!({"n_max": n_max, "p": p_cap, "variant": variant.name()}),
    );
    let vars = Vars::new(2, 0);
    let caps = TruncationCaps::none().with(vars.p, p_cap);
    let (p, q) = (vars.var(vars.p), vars.var(vars.q));
    let q2 = &q * &q;
    for n in 0..=n_max {
        let mut lhs = type_b_distribution(n, &vars, variant)?;
        for v in [vars.t, vars.r[0], vars.s[0]] {
            lhs = lhs.evaluate_one(v);
        }
        let mut sum = Poly::zero(&vars.table);
        for k in 0..=p_cap {
            let base: Poly = q_int(&vars.table, vars.q, 2 * k as i64 + 1)?;
            let term = base
                .pow_truncated(n as u32, &caps)
                .shift(&Monomial::var(vars.p, k));
            sum = sum.try_add(&term)?;
        }
        let rhs = mul(&poch(&p, &q2, n + 1)?, &sum, &caps)?;
        if !ck.compare(&format!("n={n}"), &lhs.truncate(&caps), &rhs) {
            break;
        }
    }
    Ok(ck.finish())
}

pub fn check_signed_carlitz(n_max: usize, p_cap: u32) -> Result<VerificationReport> {
    let mut outcomes = serde_json::Map::new();
    for v in FmajVariant::ALL {
        let rep = check_signed_carlitz_variant(n_max, p_cap, v)?;
        outcomes.insert(v.name().into(), serde_json::to_value(rep.status).unwrap());
    }
    let rep = check_signed_carlitz_variant(n_max, p_cap, PINNED_FMAJ)?;
    Ok(rep.with_details(json!({"pinned": PINNED_FMAJ.name(), "variants": outcomes})))
}
