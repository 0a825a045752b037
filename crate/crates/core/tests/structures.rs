use std::cmp::Ordering;

use proptest::prelude::*;
use wreath_eulerian::structures::{
    banner_to_ornament, bijection_f, bijection_g, cmp_factor_order, format_word, gamma,
    gamma_inverse, increasing_factorization, lyndon_factorize, ornament_to_banner, parse_word,
    validate_banner, BLetter, CompatiblePair, MarkedSequence, Necklace, Ornament, TieOrder,
};
use wreath_eulerian::wreath::ColoredPermutation;
use wreath_eulerian::Error;

fn word(text: &str) -> Vec<BLetter> {
    parse_word(text).unwrap()
}

#[test]
fn necklace_canonical_form_ignores_rotation() {
    let a = Necklace::new(&word("5!,5!,5^2,3,3,6^1,7!")).unwrap();
    let b = Necklace::new(&word("3,6^1,7!,5!,5!,5^2,3")).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.bars(), 3);
    assert_eq!(a.len(), 7);
}

#[test]
fn necklace_rules_are_enforced() {
    assert!(matches!(
        Necklace::new(&word("4^2,3^1,4^2,3^1")),
        Err(Error::NotPrimitive)
    ));
    assert!(Necklace::new(&word("3!,3,3^2")).is_ok());
    // barred letter followed by a larger one
    assert!(Necklace::new(&word("3!,4,1")).is_err());
    // unbarred 0-colored letter followed by a smaller one, across the wrap
    assert!(Necklace::new(&word("1^1,5")).is_err());
    assert!(Necklace::new(&word("2!")).is_err());
    assert!(Necklace::new(&[]).is_err());
}

#[test]
fn ornament_cv_type() {
    let r = Ornament::parse("(5!,5!,5^2,3,3,6^1,7!);(3^3,3^1);(3^3,3^1);(4,5!);(2);(1^3)").unwrap();
    assert_eq!(r.size(), 15);
    assert_eq!(
        r.cv_type(4).to_string(),
        "7:1,1,0;2:1,0,1;2:1,0,1;2:0,0,0;1:0,0,1;1:0,0,0"
    );
}

#[test]
fn worked_lyndon_and_increasing_factorization() {
    let w = word("6^1,1^2,5^1,4!,4!,4^1,4,4!,3^2,5,7^1");
    let show = |parts: Vec<Vec<BLetter>>| {
        parts
            .iter()
            .map(|p| format!("({})", format_word(p)))
            .collect::<String>()
    };
    assert_eq!(
        show(lyndon_factorize(&w)),
        "(6^1,1^2,5^1)(4^0!,4^0!,4^1,4^0,4^0!,3^2)(5^0,7^1)"
    );
    let blocks = increasing_factorization(&w).unwrap();
    assert_eq!(
        show(blocks.iter().map(|b| b.word()).collect()),
        "(6^1,1^2,5^1)(4^0!,4^0!,4^1,4^0)(4^0!,3^2)(5^0,7^1)"
    );
    assert!(increasing_factorization(&word("1,2")).is_err());
}

#[test]
fn worked_compatible_pair_to_ornament() {
    let pi = ColoredPermutation::parse("8^1,3^0,2^2,5^0,1^2,6^1,4^0,7^0", 3).unwrap();
    let pair = CompatiblePair::new(pi, vec![6, 5, 5, 4, 4, 4, 4, 3]).unwrap();
    let r = bijection_f(&pair).unwrap();
    let want = Ornament::parse("(6^1,3,4,4!,4^2);(5!,5^2);(4^1)").unwrap();
    assert_eq!(r, want);
    assert_eq!(bijection_g(&r, TieOrder::Forward, 3).unwrap(), pair);
}

#[test]
fn worked_ornament_to_compatible_pair() {
    let r = Ornament::parse("(5^1,5!,3);(5^1,5!,3);(4^1,3,3^1,4^1);(3^1);(3)").unwrap();
    let pair = bijection_g(&r, TieOrder::Forward, 2).unwrap();
    let sigma: Vec<u32> = pair.perm.values();
    let cycles: [&[u32]; 5] = [&[4, 2, 10], &[3, 1, 9], &[6, 11, 7, 5], &[8], &[12]];
    for c in cycles {
        for k in 0..c.len() {
            assert_eq!(
                sigma[c[k] as usize - 1],
                c[(k + 1) % c.len()],
                "cycle {c:?}"
            );
        }
    }
    assert_eq!(pair.seq, [5, 5, 5, 5, 4, 4, 3, 3, 3, 3, 3, 3]);
    assert_eq!(bijection_f(&pair).unwrap(), r);
}

#[test]
fn compatible_pair_validation() {
    let pi = ColoredPermutation::parse("8^1,3^0,2^2,5^0,1^2,6^1,4^0,7^0", 3).unwrap();
    // position 1 is in DEX, so the sequence must drop there
    assert!(CompatiblePair::new(pi.clone(), vec![5, 5, 5, 4, 4, 4, 4, 3]).is_err());
    assert!(CompatiblePair::new(pi.clone(), vec![6, 5, 5, 4, 4, 4, 4, 0]).is_err());
    assert!(CompatiblePair::new(pi, vec![6, 5, 5]).is_err());
}

#[test]
fn banner_rules() {
    assert!(validate_banner(&word("6^1,1^2,5^1,4!,4!,4^1,4,4!,3^2,5,7^1")).is_ok());
    assert!(matches!(
        validate_banner(&word("3,2")),
        Err(Error::RuleViolation { rule: 2, .. })
    ));
    assert!(matches!(
        validate_banner(&word("3!,4")),
        Err(Error::RuleViolation { rule: 1, .. })
    ));
    assert!(matches!(
        validate_banner(&word("3,3!")),
        Err(Error::RuleViolation { rule: 3, .. })
    ));
}

// (last block, remaining banner, marked values, bars, color, case)
type GammaExample = (
    &'static str,
    &'static str,
    &'static [u32],
    usize,
    u32,
    &'static str,
);

const GAMMA_EXAMPLES: [GammaExample; 21] = [
    ("4,4,4,4,9^2", "", &[4, 4, 4, 4, 9], 0, 2, "1"),
    ("4,4,9^1,2,2,3", "", &[2, 2, 3, 4, 4, 9], 0, 1, "2.1"),
    (
        "5,5,8^3,1,4,4!,2,7^1",
        "5,5,8^3,2,7^1",
        &[1, 4, 4],
        1,
        0,
        "2.2",
    ),
    (
        "5,5,8^1,1,4,7^3,6^2",
        "5,5,8^1,6^2",
        &[1, 4, 7],
        0,
        3,
        "2.3",
    ),
    (
        "4,4,6^1,3!,3!,2!,1,2,3",
        "4,4,6^1,3",
        &[1, 2, 2, 3, 3],
        3,
        0,
        "3.1",
    ),
    (
        "6,6,8^2,5!,4!,4!,2,4,4!,1,9^1",
        "6,6,8^2,1,9^1",
        &[2, 4, 4, 4, 4, 5],
        4,
        0,
        "3.2",
    ),
    (
        "5,8^1,4!,2!,1,1^1,1^3",
        "5,8^1,1^3",
        &[1, 1, 2, 4],
        2,
        1,
        "3.3",
    ),
    ("5!,5!,5!,1,3,5", "", &[1, 3, 5, 5, 5, 5], 3, 0, "4.1"),
    (
        "5!,5!,5!,1,3,4!,3^1,7^2",
        "5!,5!,5!,3^1,7^2",
        &[1, 3, 4],
        1,
        0,
        "4.2",
    ),
    (
        "6!,6!,2,2,4,8^1,5!,4^2",
        "6!,6!,5!,4^2",
        &[2, 2, 4, 8],
        0,
        1,
        "4.3",
    ),
    ("6!,6!,2,2,4,5^3", "", &[2, 2, 4, 5, 6, 6], 2, 3, "4.4"),
    ("6!,6!,2,2,4,7^3", "6!,6!,2,2,4", &[7], 0, 3, "4.5"),
    ("6!,6!,2,2,4,7^3,8^2", "6!,6!,2,2,4,7^3", &[8], 0, 2, "4.6"),
    ("7!,7!,6!,4!,1,2,4", "", &[1, 2, 4, 4, 6, 7, 7], 4, 0, "5.1"),
    (
        "7!,7!,6!,4!,1,2,5,8^2,1",
        "7!,7!,5,8^2,1",
        &[1, 2, 4, 6],
        2,
        0,
        "5.2",
    ),
    (
        "7!,7!,6!,4!,1,2,8^1,1",
        "7!,7!,6!,1,2,4!,1",
        &[8],
        0,
        1,
        "5.3",
    ),
    (
        "7!,7!,6!,4!,1,2,8^1,5",
        "7!,7!,6!,4!,1,2,5",
        &[8],
        0,
        1,
        "5.4",
    ),
    (
        "6!,6!,5!,1,2,2,4!,2!,2",
        "6!,6!,2!,2",
        &[1, 2, 2, 4, 5],
        2,
        0,
        "5.5",
    ),
    (
        "6!,6!,5!,1,2,2,4^5",
        "",
        &[1, 2, 2, 4, 5, 6, 6],
        3,
        5,
        "5.6",
    ),
    (
        "8!,8!,5!,1,2,2,4^5,7^3",
        "8!,8!,7^3",
        &[1, 2, 2, 4, 5],
        1,
        5,
        "5.7",
    ),
    (
        "8!,8!,5!,1,2,2,4^5,9^3",
        "8!,8!,5!,1,2,2,4^5",
        &[9],
        0,
        3,
        "5.8",
    ),
];

#[test]
fn worked_gamma_examples() {
    // A fixed first block keeps every example a banner with at least two blocks.
    let prefix = word("1,1^1");
    for (last, rest, values, bars, color, case) in GAMMA_EXAMPLES {
        let banner = [prefix.clone(), word(last)].concat();
        let image = gamma(&banner).unwrap_or_else(|e| panic!("case {case}: {e}"));
        assert_eq!(image.case, case);
        assert_eq!(
            format_word(&image.banner),
            format_word(&[prefix.clone(), word(rest)].concat()),
            "case {case}"
        );
        assert_eq!(
            image.marked,
            MarkedSequence::new(values.to_vec(), bars, color).unwrap(),
            "case {case}"
        );
        let (back, _) = gamma_inverse(&image.banner, &image.marked).unwrap();
        assert_eq!(back, banner, "case {case}");
    }
}

#[test]
fn worked_gamma_inverse_examples() {
    let cases = [
        (
            "5,5,5,8^1,2^3,4^1",
            vec![4],
            0,
            2,
            "5,5,5,8^1,4^2,2^3,4^1",
            "2.1",
        ),
        (
            "6!,6!,4!,2^2,1,3^1",
            vec![5],
            0,
            3,
            "6!,6!,5^3,4!,2^2,1,3^1",
            "2.2",
        ),
    ];
    for (b, values, bars, color, want, case) in cases {
        let marked = MarkedSequence::new(values, bars, color).unwrap();
        let (out, got_case) = gamma_inverse(&word(b), &marked).unwrap();
        assert_eq!(format_word(&out), format_word(&word(want)));
        assert_eq!(got_case, case);
    }
}

#[test]
fn gamma_rejects_bad_input() {
    assert!(gamma(&word("1^1,2")).is_err());
    assert!(gamma(&word("2^1,1^1")).is_err());
    assert!(MarkedSequence::new(vec![2, 1], 1, 0).is_err());
    assert!(MarkedSequence::new(vec![1, 2], 0, 0).is_err());
    assert!(MarkedSequence::new(vec![1, 2], 2, 1).is_err());
}

fn any_word() -> impl Strategy<Value = Vec<BLetter>> {
    let letter = (1u32..4, 0u32..3, any::<bool>())
        .prop_map(|(v, c, b)| BLetter::new(v, c, b && c == 0).unwrap());
    prop::collection::vec(letter, 1..9)
}

proptest! {
    #[test]
    fn lyndon_factors_are_maximal_rotations_in_order(w in any_word()) {
        let factors = lyndon_factorize(&w);
        prop_assert_eq!(factors.concat(), w);
        for f in &factors {
            for k in 1..f.len() {
                let rot = [&f[k..], &f[..k]].concat();
                prop_assert_eq!(cmp_factor_order(&rot, f), Ordering::Less);
            }
        }
        for pair in factors.windows(2) {
            prop_assert_ne!(cmp_factor_order(&pair[0], &pair[1]), Ordering::Greater);
        }
    }

    #[test]
    fn valid_banners_roundtrip_through_ornaments(w in any_word()) {
        if validate_banner(&w).is_ok() {
            let r = banner_to_ornament(&w).unwrap();
            prop_assert_eq!(ornament_to_banner(&r).unwrap(), w);
        }
    }

    #[test]
    fn necklaces_are_rotation_invariant(w in any_word(), k in 0usize..8) {
        if let Ok(n) = Necklace::new(&w) {
            let k = k % w.len();
            let rot = [&w[k..], &w[..k]].concat();
            prop_assert_eq!(Necklace::new(&rot).unwrap(), n);
        }
    }
}
