use wreath_eulerian::eulerian::{
    check_master_identity, check_recurrence_against_oracle, q_bruteforce, q_cv_bruteforce,
    LhsSource, OracleTable,
};
use wreath_eulerian::polyring::Monomial;
use wreath_eulerian::qsym::{
    complete_homogeneous, elementary, fundamental_f, is_symmetric, FCache, XAlphabet,
};
use wreath_eulerian::specialize::{eulerian_polynomial, joint_distribution};
use wreath_eulerian::vars::Vars;
use wreath_eulerian::wreath::CvCycleType;
use wreath_eulerian::Poly;

#[test]
fn fundamental_extremes() {
    let x = XAlphabet::standalone(3);
    assert_eq!(
        fundamental_f(&[], 3, &x).unwrap().poly,
        complete_homogeneous(3, &x)
    );
    assert_eq!(
        fundamental_f(&[1, 2], 3, &x).unwrap().poly,
        elementary(3, &x)
    );
    assert!(fundamental_f(&[3], 3, &x).is_err());
}

#[test]
fn empty_permutation_gives_one() {
    let q = q_bruteforce(0, 0, &[0, 0], &[0], &XAlphabet::standalone(2)).unwrap();
    assert!(q.poly.is_one());
}

#[test]
fn single_transposition_gives_complete_homogeneous() {
    let x = XAlphabet::standalone(3);
    let q = q_bruteforce(2, 1, &[0], &[], &x).unwrap();
    assert_eq!(q.poly, complete_homogeneous(2, &x));
}

#[test]
fn bruteforce_values_are_symmetric() {
    let x = XAlphabet::standalone(4);
    for (j, alpha, beta) in [
        (1, vec![0, 1], vec![1]),
        (0, vec![1, 0], vec![2]),
        (2, vec![0, 0], vec![1]),
    ] {
        let q = q_bruteforce(4, j, &alpha, &beta, &x).unwrap();
        assert!(!q.poly.is_zero() || j == 2);
        assert!(is_symmetric(&q, &x), "j={j} alpha={alpha:?} beta={beta:?}");
    }
    let cv = CvCycleType::parse("3:1,0;1:0,1", 3).unwrap();
    assert!(is_symmetric(&q_cv_bruteforce(&cv, 1, 3, &x).unwrap(), &x));
}

#[test]
fn oracle_table_agrees_with_direct_enumeration() {
    let x = XAlphabet::standalone(3);
    let table = OracleTable::build(3, 2).unwrap();
    let mut fc = FCache::new(x.clone());
    for (j, alpha, beta) in [
        (0, vec![3, 0], vec![0]),
        (1, vec![1, 0], vec![1]),
        (1, vec![0, 0], vec![2]),
    ] {
        assert_eq!(
            table.q(j, &alpha, &beta, &mut fc).unwrap(),
            q_bruteforce(3, j, &alpha, &beta, &x).unwrap().poly
        );
    }
}

#[test]
fn recurrence_and_master_identity_small() {
    assert!(check_recurrence_against_oracle(2, 3, 3).unwrap().is_ok());
    assert!(check_master_identity(2, 2, 3, 2, LhsSource::Recurrence)
        .unwrap()
        .is_ok());
    assert!(check_master_identity(2, 2, 3, 2, LhsSource::Oracle)
        .unwrap()
        .is_ok());
}

#[test]
fn symmetric_group_distribution_by_hand() {
    // sum over S_3 of q^maj t^exc r0^fix, listed permutation by permutation
    let vars = Vars::new(1, 0);
    let term = |q: u32, t: u32, fix: u32| {
        let mut e = vec![0; vars.table.len()];
        e[vars.q] = q;
        e[vars.t] = t;
        e[vars.r[0]] = fix;
        (Monomial::from_exponents(&e), num_bigint::BigInt::from(1))
    };
    let want = Poly::from_terms(
        &vars.table,
        [
            term(0, 0, 3),
            term(2, 1, 1),
            term(1, 1, 1),
            term(2, 2, 0),
            term(1, 1, 0),
            term(3, 1, 1),
        ],
    );
    assert_eq!(joint_distribution(3, &vars, false).unwrap(), want);
}

#[test]
fn eulerian_numbers() {
    assert_eq!(eulerian_polynomial(1).unwrap(), [1]);
    assert_eq!(eulerian_polynomial(4).unwrap(), [1, 11, 11, 1]);
    assert_eq!(eulerian_polynomial(5).unwrap(), [1, 26, 66, 26, 1]);
}
