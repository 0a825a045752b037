use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use wreath_eulerian::polyring::{
    cyclotomic_coefficients, cyclotomic_embed, invert_unit_series, pochhammer, q_binomial,
    q_factorial, q_int, q_multinomial, qexp_series, Monomial, QExpKind, SparsePoly, TruncationCaps,
    VarTable,
};
use wreath_eulerian::{Poly, RatPoly};

fn table() -> Arc<VarTable> {
    VarTable::new(&["q", "t", "z"]).unwrap()
}

fn poly_from(t: &Arc<VarTable>, terms: &[([u32; 3], i64)]) -> Poly {
    SparsePoly::from_terms(
        t,
        terms
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e), BigInt::from(*c))),
    )
}

fn small_poly() -> impl Strategy<Value = Vec<([u32; 3], i64)>> {
    prop::collection::vec(([0u32..3, 0u32..3, 0u32..3], -4i64..5), 0..6)
}

proptest! {
    #[test]
    fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        let t = table();
        let (a, b, c) = (poly_from(&t, &a), poly_from(&t, &b), poly_from(&t, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(&t), a.clone());
    }

    #[test]
    fn truncated_inverse_roundtrip(a in small_poly(), c0 in prop::sample::select(vec![-1i64, 1])) {
        let t = table();
        let mut a = poly_from(&t, &a);
        let k = a.constant_term();
        a.add_term(Monomial::one(), &(BigInt::from(c0) - k));
        let caps = TruncationCaps::none().with(0, 3).with(1, 2).with(2, 2);
        let inv = invert_unit_series(&a, &caps).unwrap();
        let prod = a.try_mul_truncated(&inv, &caps).unwrap();
        prop_assert!(prod.is_one());
    }

    #[test]
    fn cyclotomic_embedding_is_multiplicative(a in small_poly(), b in small_poly(), n in 2u32..7) {
        let t = table();
        let (a, b) = (poly_from(&t, &a), poly_from(&t, &b));
        let subs = [("t", 1)];
        let ea = cyclotomic_embed(&a, n, &subs).unwrap();
        let eb = cyclotomic_embed(&b, n, &subs).unwrap();
        let eab = cyclotomic_embed(&(&a * &b), n, &subs).unwrap();
        prop_assert_eq!(ea.mul(&eb, &TruncationCaps::none()).unwrap(), eab.clone());
        let sum = cyclotomic_embed(&(&a + &b), n, &subs).unwrap();
        prop_assert_eq!(ea.add(&eb).unwrap(), sum);
    }

    #[test]
    fn json_roundtrip(a in small_poly()) {
        let a = poly_from(&table(), &a);
        prop_assert_eq!(Poly::from_json(&a.to_json()).unwrap(), a);
    }
}

// Counts 0/1 words with k ones by inversions.
fn binomial_by_inversions(t: &Arc<VarTable>, n: u32, k: u32) -> Poly {
    let mut out = Poly::zero(t);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != k {
            continue;
        }
        let bits: Vec<u32> = (0..n).map(|i| (mask >> i) & 1).collect();
        let inv = (0..n as usize)
            .flat_map(|i| (i + 1..n as usize).map(move |j| (i, j)))
            .filter(|&(i, j)| bits[i] > bits[j])
            .count();
        out.add_term(Monomial::var(0, inv as u32), &BigInt::from(1));
    }
    out
}

#[test]
fn q_binomial_matches_inversion_count() {
    let t = table();
    for n in 0..=7 {
        for k in 0..=n {
            let b: Poly = q_binomial(&t, 0, n as i64, k as i64).unwrap();
            assert_eq!(b, binomial_by_inversions(&t, n, k), "n={n} k={k}");
        }
    }
    let b: Poly = q_binomial(&t, 0, 2, 3).unwrap();
    assert!(b.is_zero());
}

#[test]
fn q_multinomial_is_factorial_ratio() {
    let t = table();
    let m: Poly = q_multinomial(&t, 0, 6, &[1, 2, 3]).unwrap();
    let f = |n| q_factorial::<BigInt>(&t, 0, n).unwrap();
    assert_eq!(&(&m * &f(1)) * &(&f(2) * &f(3)), f(6));
    assert!(q_multinomial::<BigInt>(&t, 0, 5, &[1, 2]).is_err());
}

#[test]
fn pochhammer_gives_q_factorial() {
    let t = table();
    let q = Poly::var(&t, "q").unwrap();
    for n in 0..6 {
        let lhs = pochhammer(&q, &q, n).unwrap();
        let one_minus_q = &Poly::one(&t) - &q;
        let rhs = &q_factorial::<BigInt>(&t, 0, n).unwrap()
            * &one_minus_q.pow_truncated(n as u32, &TruncationCaps::none());
        assert_eq!(lhs, rhs, "n={n}");
    }
    assert!(q_int::<BigInt>(&t, 0, -1).is_err());
}

#[test]
fn q_exponentials_are_mutually_inverse() {
    let t = table();
    let caps = TruncationCaps::none().with(0, 6).with(2, 5);
    let z: RatPoly = RatPoly::var(&t, "z").unwrap();
    let e = qexp_series(QExpKind::Exp, &z, 0, &caps).unwrap();
    let big = qexp_series(QExpKind::BigExp, &(-&z), 0, &caps).unwrap();
    assert!(e.try_mul_truncated(&big, &caps).unwrap().is_one());
    let one_plus_z = &RatPoly::one(&t) + &z;
    assert!(qexp_series(QExpKind::Exp, &one_plus_z, 0, &caps).is_err());
}

#[test]
fn cyclotomic_polynomials() {
    let show = |n| {
        cyclotomic_coefficients(n)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    assert_eq!(show(1), "-1 1");
    assert_eq!(show(2), "1 1");
    assert_eq!(show(4), "1 0 1");
    assert_eq!(show(6), "1 -1 1");
    assert_eq!(show(12), "1 0 -1 0 1");
}

#[test]
fn uncapped_inverse_is_rejected() {
    let t = table();
    let a = &Poly::one(&t) - &Poly::var(&t, "z").unwrap();
    assert!(invert_unit_series(&a, &TruncationCaps::none()).is_err());
    let two = Poly::from_i64(&t, 2);
    assert!(invert_unit_series(&two, &TruncationCaps::none()).is_err());
}
