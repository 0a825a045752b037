use std::collections::BTreeMap;

use serde_json::json;

use crate::report::{Checker, VerificationReport};
use crate::wreath::{statistics, Enumeration};
use crate::Result;

/// For every element: the DEX positions sum to `maj - exc`, and `|DEX|` is `des*`
/// or `des* - 1` according as the first letter is `1^0` or not.
pub fn check_dex_lemma(colors: u32, n_max: usize) -> Result<VerificationReport> {
    let mut ck = Checker::new("lemma-2", json!({"N": colors, "n_max": n_max}));
    for n in 1..=n_max {
        let en = Enumeration::new(n, colors)?;
        let bad = en.par_fold(
            || None,
            |acc: Option<String>, pi| {
                if acc.is_some() {
                    return acc;
                }
                let s = statistics(&pi);
                let first_is_one = pi.at(1).value == 1 && pi.at(1).color == 0;
                let want_len = if first_is_one {
                    s.des_star
                } else {
                    s.des_star.wrapping_sub(1)
                };
                let sum: usize = s.dex_set.iter().sum();
                if sum + s.exc != s.maj || s.dex_set.len() != want_len {
                    Some(pi.to_string())
                } else {
                    None
                }
            },
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (a, b) => a.or(b),
            },
        );
        if let Some(pi) = bad {
            let s = statistics(&crate::wreath::ColoredPermutation::parse(&pi, colors)?);
            ck.fail(
                pi,
                format!("DEX={:?}", s.dex_set),
                format!("maj={}, exc={}, des*={}", s.maj, s.exc, s.des_star),
            );
            break;
        }
    }
    Ok(ck.finish())
}

/// `des` and `exc` have the same distribution on `S_n`.
pub fn check_macmahon(n_max: usize) -> Result<VerificationReport> {
    let mut ck = Checker::new("macmahon", json!({"n_max": n_max}));
    for n in 1..=n_max {
        let mut des = BTreeMap::new();
        let mut exc = BTreeMap::new();
        for pi in Enumeration::new(n, 1)?.iter() {
            let s = statistics(&pi);
            *des.entry(s.des).or_insert(0u64) += 1;
            *exc.entry(s.exc).or_insert(0u64) += 1;
        }
        if !ck.expect(des == exc, || {
            (
                format!("n={n}"),
                format!("des {des:?}"),
                format!("exc {exc:?}"),
            )
        }) {
            break;
        }
    }
    Ok(ck.finish())
}
