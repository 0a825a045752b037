use wreath_eulerian::specialize::{
    check_dex_lemma, check_euler, check_macmahon, check_signed_carlitz_variant,
    check_specialization_pipeline, check_specialized_formulas, type_b_distribution, FmajVariant,
    PINNED_FMAJ,
};
use wreath_eulerian::vars::Vars;

#[test]
fn classical_checks_pass() {
    assert!(check_euler(5, 4).unwrap().is_ok());
    assert!(check_macmahon(5).unwrap().is_ok());
    assert!(check_dex_lemma(3, 4).unwrap().is_ok());
    assert!(check_specialized_formulas(2, 4).unwrap().is_ok());
}

#[test]
fn fmaj_variants() {
    assert_eq!(PINNED_FMAJ, FmajVariant::Natural);
    assert!(check_signed_carlitz_variant(3, 4, FmajVariant::Natural)
        .unwrap()
        .is_ok());
    assert!(check_signed_carlitz_variant(3, 4, FmajVariant::Transported)
        .unwrap()
        .is_ok());
    let alt = check_signed_carlitz_variant(3, 4, FmajVariant::Alt).unwrap();
    assert!(!alt.is_ok());
    assert!(alt.first_mismatch.is_some());
}

#[test]
fn fmaj_variants_share_a_marginal() {
    // 2^3 * 3! signed permutations
    let vars = Vars::new(2, 0);
    for v in FmajVariant::ALL {
        let d = type_b_distribution(3, &vars, v).unwrap();
        let total: i64 = d
            .terms()
            .map(|(_, c)| i64::try_from(c.clone()).unwrap())
            .sum();
        assert_eq!(total, 48, "{}", v.name());
    }
}

#[test]
fn specialization_pipeline_two_colors() {
    assert!(check_specialization_pipeline(2, 3, 6).unwrap().is_ok());
}
