use std::collections::{BTreeMap, HashSet};

use serde_json::json;

use crate::eulerian::OracleTable;
use crate::polyring::Monomial;
use crate::qsym::{complete_homogeneous, FCache, XAlphabet};
use crate::report::{Checker, VerificationReport};
use crate::wreath::{cycle_structure, dex_set, is_excedance, CvCycleType, Enumeration};
use crate::{Poly, Result};

use super::banner::{
    banner_profile, banner_to_ornament, enumerate_banners, increasing_sequences, k0_index,
    ornament_to_banner, MarkedSequence,
};
use super::compat::{bijection_f, bijection_g, decreasing_sequences, CompatiblePair, TieOrder};
use super::gamma::{gamma, gamma_inverse, CaseCoverage, FORWARD_CASES, INVERSE_CASES};
use super::letter::{format_word, BLetter};
use super::necklace::ornaments_of_size;

fn weight_monomial(values: impl IntoIterator<Item = u32>, max_value: u32) -> Monomial {
    let mut e = vec![0u32; max_value as usize];
    for v in values {
        e[v as usize - 1] += 1;
    }
    Monomial::from_exponents(&e)
}

fn sorted_values(word: &[BLetter]) -> Vec<u32> {
    let mut v: Vec<u32> = word.iter().map(|l| l.value).collect();
    v.sort_unstable();
    v
}

/// `f` against `g` on every compatible pair and every ornament up to size `n_max`.
pub fn check_bijection_f(n_max: usize, colors: u32, max_value: u32) -> Result<VerificationReport> {
    let mut ck = Checker::new(
        "bijection-f",
        json!({"n_max": n_max, "N": colors, "M": max_value}),
    );
    let mut reverse_ties_invert = true;
    let mut sizes = Vec::new();
    'outer: for n in 1..=n_max {
        let mut image = HashSet::new();
        let mut pairs = 0usize;
        for perm in Enumeration::new(n, colors)?.iter() {
            let cv = cycle_structure(&perm).cv_type;
            let exc = perm
                .letters()
                .iter()
                .enumerate()
                .filter(|(k, l)| is_excedance(**l, k + 1))
                .count();
            for seq in decreasing_sequences(n, max_value, &dex_set(&perm)) {
                pairs += 1;
                let pair = CompatiblePair {
                    perm: perm.clone(),
                    seq,
                };
                let orn = bijection_f(&pair)?;
                let back = bijection_g(&orn, TieOrder::Forward, colors)?;
                let label = || format!("{} with {:?}", pair.perm, pair.seq);
                if !ck.expect(back == pair, || {
                    (
                        label(),
                        format!("g(f) = {} with {:?}", back.perm, back.seq),
                        "identity".into(),
                    )
                }) {
                    break 'outer;
                }
                if bijection_g(&orn, TieOrder::Reverse, colors).ok().as_ref() != Some(&pair) {
                    reverse_ties_invert = false;
                }
                let ok = orn.cv_type(colors) == cv
                    && orn.bars() == exc
                    && orn.weight() == {
                        let mut s = pair.seq.clone();
                        s.sort_unstable();
                        s
                    };
                if !ck.expect(ok, || {
                    (
                        label(),
                        orn.to_string(),
                        "same cv type, bars = exc, same weight".into(),
                    )
                }) {
                    break 'outer;
                }
                image.insert(orn);
            }
        }
        let all = ornaments_of_size(n, colors, max_value);
        for orn in &all {
            let pair = bijection_g(orn, TieOrder::Forward, colors)?;
            let again = bijection_f(&pair)?;
            if !ck.expect(&again == orn, || {
                (orn.to_string(), again.to_string(), "f(g) = identity".into())
            }) {
                break 'outer;
            }
        }
        if !ck.expect(image.len() == pairs && image.len() == all.len(), || {
            (
                format!("n={n}"),
                format!("{pairs} pairs, {} images", image.len()),
                format!("{} ornaments", all.len()),
            )
        }) {
            break;
        }
        sizes.push(json!({"n": n, "pairs": pairs, "ornaments": all.len()}));
    }
    Ok(ck
        .finish()
        .with_details(json!({"sizes": sizes, "reverse_ties_also_invert": reverse_ties_invert})))
}

/// Ornaments against banners, plus the ornament count per (cv type, bars) against the
/// brute-force colored Eulerian quasisymmetric functions in `max_value` variables.
pub fn check_ornament_banner(
    n_max: usize,
    colors: u32,
    max_value: u32,
    q_n_max: usize,
) -> Result<VerificationReport> {
    let mut ck = Checker::new(
        "bijection-ornament-banner",
        json!({"n_max": n_max, "N": colors, "M": max_value, "q_n_max": q_n_max}),
    );
    let alphabet = XAlphabet::standalone(max_value as usize);
    let mut sizes = Vec::new();
    'outer: for n in 1..=n_max {
        let ornaments = ornaments_of_size(n, colors, max_value);
        let banners = enumerate_banners(n, colors, max_value);
        for orn in &ornaments {
            let b = ornament_to_banner(orn)?;
            let back = banner_to_ornament(&b)?;
            if !ck.expect(&back == orn, || {
                (orn.to_string(), back.to_string(), "round trip".into())
            }) {
                break 'outer;
            }
        }
        for b in &banners {
            let orn = banner_to_ornament(b)?;
            let back = ornament_to_banner(&orn)?;
            if !ck.expect(&back == b, || {
                (format_word(b), format_word(&back), "round trip".into())
            }) {
                break 'outer;
            }
        }
        if !ck.expect(ornaments.len() == banners.len(), || {
            (
                format!("n={n}"),
                format!("{} ornaments", ornaments.len()),
                format!("{} banners", banners.len()),
            )
        }) {
            break;
        }
        sizes.push(json!({"n": n, "count": ornaments.len()}));
        if n > q_n_max {
            continue;
        }
        let mut by_type: BTreeMap<(CvCycleType, usize), Poly> = BTreeMap::new();
        for orn in &ornaments {
            let key = (orn.cv_type(colors), orn.bars());
            let m = weight_monomial(orn.weight(), max_value);
            by_type
                .entry(key)
                .or_insert_with(|| Poly::zero(alphabet.table()))
                .add_term(m, &1.into());
        }
        let oracle = OracleTable::build(n, colors)?;
        let mut fc = FCache::new(alphabet.clone());
        let cv_types: HashSet<CvCycleType> =
            oracle.by_cv.keys().map(|(cv, _)| cv.clone()).collect();
        for cv in cv_types {
            for j in 0..n {
                let expected = oracle.q_cv(&cv, j, &mut fc)?;
                let got = by_type
                    .get(&(cv.clone(), j))
                    .cloned()
                    .unwrap_or_else(|| Poly::zero(alphabet.table()));
                if !ck.compare(&format!("cv={cv}, j={j}"), &got, &expected) {
                    break 'outer;
                }
            }
        }
    }
    Ok(ck.finish().with_details(json!({"sizes": sizes})))
}

fn orn_weight_ok(before: &[BLetter], after: &[BLetter], omega: &[u32]) -> bool {
    let mut joined: Vec<u32> = after
        .iter()
        .map(|l| l.value)
        .chain(omega.iter().copied())
        .collect();
    joined.sort_unstable();
    joined == sorted_values(before)
}

fn beta_vectors(len: usize, total_max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                let used: usize = v.iter().sum();
                (0..=total_max - used).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

/// The removal map on banners without size-one Lyndon factors, checked against its
/// inverse on both sides, with case coverage.
pub fn check_gamma(n_max: usize, colors: u32, max_value: u32) -> Result<VerificationReport> {
    let mut ck = Checker::new(
        "gamma",
        json!({"n_max": n_max, "N": colors, "M": max_value}),
    );
    let idx = k0_index(n_max, colors, max_value);
    let empty = Vec::new();
    let k0 = |n: usize, j: usize, beta: &[usize]| idx.get(&(n, j, beta.to_vec())).unwrap_or(&empty);
    let mut fwd = CaseCoverage::default();
    let mut inv = CaseCoverage::default();
    let mut checked = 0u64;
    let nc = colors as usize - 1;
    'outer: for n in 1..=n_max {
        for beta in beta_vectors(nc, n - 1) {
            let size: usize = beta.iter().sum();
            for j in 0..=n - size {
                let domain = k0(n, j, &beta);
                for b in domain {
                    let img = gamma(b)?;
                    fwd.record(img.case);
                    let (k_bars, beta2) = banner_profile(&img.banner, colors);
                    let ms = &img.marked;
                    let mut want_beta = beta.clone();
                    if ms.color > 0 {
                        want_beta[ms.color as usize - 1] -= 1;
                    }
                    let ok = img.banner.len() + ms.values.len() == n
                        && k_bars + ms.bars == j
                        && beta2 == want_beta
                        && orn_weight_ok(b, &img.banner, &ms.values);
                    if !ck.expect(ok, || {
                        (
                            format_word(b),
                            format!("case {}: {} | {:?}", img.case, format_word(&img.banner), ms),
                            "lands in the matching part".into(),
                        )
                    }) {
                        break 'outer;
                    }
                    let (back, case) = gamma_inverse(&img.banner, ms)?;
                    inv.record(case);
                    if !ck.expect(&back == b, || {
                        (
                            format_word(b),
                            format!("{} via {} then {case}", format_word(&back), img.case),
                            "inverse".into(),
                        )
                    }) {
                        break 'outer;
                    }
                    checked += 1;
                }
                // the other side: every (banner, marked sequence) pair of the parts
                let mut x_size = 0usize;
                for color in 0..colors {
                    let mut beta_rest = beta.clone();
                    if color > 0 {
                        if beta[color as usize - 1] == 0 {
                            continue;
                        }
                        beta_rest[color as usize - 1] -= 1;
                    }
                    for i in 0..n {
                        let len = n - i;
                        for kk in 0..=j {
                            let bars = j - kk;
                            let parts_ok = if color == 0 {
                                bars >= 1 && bars < len
                            } else {
                                bars < len
                            };
                            if !parts_ok {
                                continue;
                            }
                            let seqs = increasing_sequences(len, max_value);
                            for bp in k0(i, kk, &beta_rest) {
                                for seq in &seqs {
                                    x_size += 1;
                                    let ms = MarkedSequence::new(seq.clone(), bars, color)?;
                                    let (b, case) = gamma_inverse(bp, &ms)?;
                                    inv.record(case);
                                    let img = gamma(&b)?;
                                    let fine = img.banner == *bp && img.marked == ms;
                                    if !ck.expect(fine, || {
                                        (
                                            format!("{} | {:?}", format_word(bp), ms),
                                            format!(
                                                "{} via {case} then {}",
                                                format_word(&b),
                                                img.case
                                            ),
                                            "identity".into(),
                                        )
                                    }) {
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
                if !ck.expect(x_size == domain.len(), || {
                    (
                        format!("n={n}, j={j}, beta={beta:?}"),
                        format!("{} banners", domain.len()),
                        format!("{x_size} marked pairs"),
                    )
                }) {
                    break 'outer;
                }
            }
        }
    }
    // the weakly increasing sequences of each length enumerate h_n
    let alphabet = XAlphabet::standalone(max_value as usize);
    for len in 1..=n_max {
        let mut sum = Poly::zero(alphabet.table());
        for seq in increasing_sequences(len, max_value) {
            sum.add_term(weight_monomial(seq, max_value), &1.into());
        }
        if !ck.compare(
            &format!("marked sequences of length {len}"),
            &sum,
            &complete_homogeneous(len, &alphabet),
        ) {
            break;
        }
    }
    let details = json!({
        "banners_checked": checked,
        "forward_cases": fwd.counts,
        "inverse_cases": inv.counts,
        "forward_missing": fwd.missing(&FORWARD_CASES),
        "inverse_missing": inv.missing(&INVERSE_CASES),
    });
    Ok(ck.finish().with_details(details))
}
