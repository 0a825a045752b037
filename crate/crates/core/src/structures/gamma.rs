use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::{Error, Result};

use super::banner::{has_no_unit_factor, validate_banner, MarkedSequence};
use super::letter::{cmp_banner, BLetter};
use super::lyndon::{increasing_factorization, Block};

/// Case labels of the forward map, in order.
pub const FORWARD_CASES: [&str; 21] = [
    "1", "2.1", "2.2", "2.3", "3.1", "3.2", "3.3", "4.1", "4.2", "4.3", "4.4", "4.5", "4.6", "5.1",
    "5.2", "5.3", "5.4", "5.5", "5.6", "5.7", "5.8",
];

/// Case labels of the inverse map, in order.
pub const INVERSE_CASES: [&str; 20] = [
    "1.1", "1.2", "1.3", "2.1", "2.2", "2.3.1", "2.3.2", "2.3.3", "2.3.4", "2.3.5", "2.4.1",
    "2.4.2", "3.1", "3.2", "3.3", "4.1", "4.2", "4.3", "4.4", "4.5",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaImage {
    pub banner: Vec<BLetter>,
    pub marked: MarkedSequence,
    pub case: &'static str,
}

/// Counts how often each case label fires.
#[derive(Clone, Debug, Default)]
pub struct CaseCoverage {
    pub counts: BTreeMap<&'static str, u64>,
}

impl CaseCoverage {
    pub fn record(&mut self, case: &'static str) {
        *self.counts.entry(case).or_insert(0) += 1;
    }

    pub fn merge(&mut self, other: &CaseCoverage) {
        for (k, v) in &other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
    }

    pub fn missing(&self, all: &[&'static str]) -> Vec<&'static str> {
        all.iter()
            .copied()
            .filter(|c| !self.counts.contains_key(c))
            .collect()
    }
}

fn vals(word: &[BLetter]) -> Vec<u32> {
    word.iter().map(|l| l.value).collect()
}

fn rev_vals(word: &[BLetter]) -> Vec<u32> {
    word.iter().rev().map(|l| l.value).collect()
}

fn cat(parts: &[&[BLetter]]) -> Vec<BLetter> {
    parts.concat()
}

fn unreachable(what: &str, banner: &[BLetter]) -> Error {
    Error::UnreachableCase(format!("{what} in {}", super::letter::format_word(banner)))
}

/// End (exclusive) of the run of unbarred 0-colored letters starting at `from` whose
/// values do not exceed `limit`.
fn plain_run(word: &[BLetter], from: usize, limit: u32) -> usize {
    let mut e = from;
    while e < word.len() && word[e].is_plain() && word[e].value <= limit {
        e += 1;
    }
    e
}

fn leading(word: &[BLetter], pred: impl Fn(&BLetter) -> bool) -> usize {
    word.iter().take_while(|l| pred(l)).count()
}

/// Forward map: removes a marked sequence from the end of a banner whose Lyndon factors
/// all have size at least two and which is not entirely positively colored.
pub fn gamma(banner: &[BLetter]) -> Result<GammaImage> {
    validate_banner(banner)?;
    if banner.is_empty() || !has_no_unit_factor(banner) {
        return Err(Error::InvalidInput(
            "banner must be non-empty without size-one Lyndon factors".into(),
        ));
    }
    if banner.iter().all(|l| l.is_colored()) {
        return Err(Error::InvalidInput("banner has no 0-colored letter".into()));
    }
    let mut blocks = increasing_factorization(banner)?;
    let Block {
        head: a,
        reps: p,
        tail: u,
    } = blocks.pop().unwrap();
    let prefix: Vec<BLetter> = blocks.iter().flat_map(|b| b.word()).collect();
    if a.is_colored() {
        return Err(unreachable("last block head is positively colored", banner));
    }
    let ap = vec![a; p];
    let a_run = vec![a.value; p];
    // (label, rebuilt last block or None when it is removed, sequence, bars, color)
    let (case, rest, omega, bars, color): (
        &'static str,
        Option<Vec<BLetter>>,
        Vec<u32>,
        usize,
        u32,
    );
    if !a.barred {
        let c = u[0];
        if !c.is_colored() {
            return Err(unreachable(
                "letter after unbarred head is 0-colored",
                banner,
            ));
        }
        let i = &u[1..];
        let l = i.len();
        if l == 0 {
            let mut w = a_run.clone();
            w.push(c.value);
            (case, rest, omega, bars, color) = ("1", None, w, 0, c.color);
        } else if !i[0].barred {
            let t = leading(i, BLetter::is_plain);
            if t == l {
                let w = [vals(i), a_run.clone(), vec![c.value]].concat();
                (case, rest, omega, bars, color) = ("2.1", None, w, 0, c.color);
            } else {
                let x = i[t];
                let tilde = cat(&[&ap, &[c], &i[t + 1..]]);
                if x.barred {
                    (case, rest, omega, bars, color) = ("2.2", Some(tilde), vals(&i[..=t]), 1, 0);
                } else {
                    (case, rest, omega, bars, color) =
                        ("2.3", Some(tilde), vals(&i[..=t]), 0, x.color);
                }
            }
        } else {
            let r1 = leading(i, |l| l.barred);
            if r1 == l {
                return Err(unreachable("block tail ends barred", banner));
            }
            let lim = i[r1 - 1].value;
            let e = plain_run(i, r1, lim);
            let back = rev_vals(&i[..r1]);
            if e == l || i[e].value > lim {
                if e == r1 {
                    return Err(unreachable("empty plain run after barred prefix", banner));
                }
                let tilde = cat(&[&ap, &[c], &i[e..]]);
                (case, rest, omega, bars, color) =
                    ("3.1", Some(tilde), [vals(&i[r1..e]), back].concat(), r1, 0);
            } else {
                let x = i[e];
                let tilde = cat(&[&ap, &[c], &i[e + 1..]]);
                let w = [vals(&i[r1..=e]), back].concat();
                if x.barred {
                    (case, rest, omega, bars, color) = ("3.2", Some(tilde), w, r1 + 1, 0);
                } else {
                    (case, rest, omega, bars, color) = ("3.3", Some(tilde), w, r1, x.color);
                }
            }
        }
    } else {
        let i = &u[..];
        let l = i.len();
        if !i[0].barred {
            let t = leading(i, BLetter::is_plain);
            if t == l {
                (case, rest, omega, bars, color) =
                    ("4.1", None, [vals(i), a_run.clone()].concat(), p, 0);
            } else {
                let x = i[t];
                let s = t + 1;
                if x.barred {
                    (case, rest, omega, bars, color) =
                        ("4.2", Some(cat(&[&ap, &i[s..]])), vals(&i[..s]), 1, 0);
                } else if s == l {
                    if x.value <= a.value {
                        (case, rest, omega, bars, color) =
                            ("4.4", None, [vals(i), a_run.clone()].concat(), p, x.color);
                    } else {
                        (case, rest, omega, bars, color) = (
                            "4.5",
                            Some(cat(&[&ap, &i[..l - 1]])),
                            vec![x.value],
                            0,
                            x.color,
                        );
                    }
                } else {
                    let y = i[s];
                    if y.value <= a.value {
                        (case, rest, omega, bars, color) =
                            ("4.3", Some(cat(&[&ap, &i[s..]])), vals(&i[..s]), 0, x.color);
                    } else {
                        if !y.is_colored() {
                            return Err(unreachable("0-colored letter above barred head", banner));
                        }
                        (case, rest, omega, bars, color) = (
                            "4.6",
                            Some(cat(&[&ap, &i[..s], &i[s + 1..]])),
                            vec![y.value],
                            0,
                            y.color,
                        );
                    }
                }
            }
        } else {
            let r1 = leading(i, |l| l.barred);
            if r1 == l {
                return Err(unreachable("block tail ends barred", banner));
            }
            let lim = i[r1 - 1].value;
            let e = plain_run(i, r1, lim);
            let back = rev_vals(&i[..r1]);
            if e == l {
                let w = [vals(&i[r1..e]), back, a_run.clone()].concat();
                (case, rest, omega, bars, color) = ("5.1", None, w, p + r1, 0);
            } else {
                let x = i[e];
                if x.value > lim {
                    if e == r1 {
                        return Err(unreachable("empty plain run after barred prefix", banner));
                    }
                    if x.value <= a.value {
                        let w = [vals(&i[r1..e]), back].concat();
                        (case, rest, omega, bars, color) =
                            ("5.2", Some(cat(&[&ap, &i[e..]])), w, r1, 0);
                    } else {
                        if !x.is_colored() {
                            return Err(unreachable("0-colored letter above barred head", banner));
                        }
                        if e + 1 < l && lim >= i[e + 1].value {
                            let tilde =
                                cat(&[&ap, &i[..r1 - 1], &i[r1..e], &[i[r1 - 1]], &i[e + 1..]]);
                            (case, rest, omega, bars, color) =
                                ("5.3", Some(tilde), vec![x.value], 0, x.color);
                        } else {
                            let tilde = cat(&[&ap, &i[..e], &i[e + 1..]]);
                            (case, rest, omega, bars, color) =
                                ("5.4", Some(tilde), vec![x.value], 0, x.color);
                        }
                    }
                } else if x.barred {
                    let w = [vals(&i[r1..=e]), back].concat();
                    (case, rest, omega, bars, color) =
                        ("5.5", Some(cat(&[&ap, &i[e + 1..]])), w, r1 + 1, 0);
                } else {
                    let s = e + 1;
                    if s == l {
                        let w = [vals(&i[r1..=e]), back, a_run.clone()].concat();
                        (case, rest, omega, bars, color) = ("5.6", None, w, p + r1, x.color);
                    } else {
                        let y = i[s];
                        if y.value <= a.value {
                            let w = [vals(&i[r1..=e]), back].concat();
                            (case, rest, omega, bars, color) =
                                ("5.7", Some(cat(&[&ap, &i[s..]])), w, r1, x.color);
                        } else {
                            if !y.is_colored() {
                                return Err(unreachable(
                                    "0-colored letter above barred head",
                                    banner,
                                ));
                            }
                            let tilde = cat(&[&ap, &i[..s], &i[s + 1..]]);
                            (case, rest, omega, bars, color) =
                                ("5.8", Some(tilde), vec![y.value], 0, y.color);
                        }
                    }
                }
            }
        }
    }
    let mut out = prefix;
    if let Some(r) = rest {
        out.extend(r);
    }
    let marked = MarkedSequence::new(omega, bars, color)
        .map_err(|e| unreachable(&format!("case {case}: {e}"), banner))?;
    Ok(GammaImage {
        banner: out,
        marked,
        case,
    })
}

fn ge_head(x: &BLetter, head: Option<&BLetter>) -> bool {
    head.is_none_or(|a| cmp_banner(x, a) != Ordering::Less)
}

/// Inverse map: reinserts a marked sequence into a banner.
pub fn gamma_inverse(
    banner: &[BLetter],
    marked: &MarkedSequence,
) -> Result<(Vec<BLetter>, &'static str)> {
    validate_banner(banner)?;
    if !has_no_unit_factor(banner) {
        return Err(Error::InvalidInput(
            "banner has a size-one Lyndon factor".into(),
        ));
    }
    let MarkedSequence {
        values: w,
        bars: b,
        color: m,
    } = marked.clone();
    let q = w.len();
    let mut blocks = increasing_factorization(banner)?;
    let last = blocks.last().cloned();
    let head = last.as_ref().map(|bl| bl.head);
    let plain = |v: u32| BLetter::plain(v);
    let colored = |v: u32| BLetter::colored(v, m);
    let barred = |v: u32| BLetter::bar(v);
    // the body `j` of the last block, after its head run
    let (ap, j): (Vec<BLetter>, Vec<BLetter>) = match &last {
        Some(bl) => (vec![bl.head; bl.reps], bl.tail.clone()),
        None => (Vec::new(), Vec::new()),
    };
    enum Edit {
        Append(Vec<BLetter>),
        Replace(Vec<BLetter>),
    }
    let (case, edit): (&'static str, Edit);
    if m > 0 && b == 0 && q > 1 {
        let top = plain(w[q - 2]);
        let middle: Vec<BLetter> = w[..q - 1].iter().map(|&v| plain(v)).collect();
        if ge_head(&top, head.as_ref()) {
            let r = w[..q - 1].iter().filter(|&&v| v == w[q - 2]).count();
            let mut blk = vec![top; r];
            blk.push(colored(w[q - 1]));
            blk.extend(w[..q - 1 - r].iter().map(|&v| plain(v)));
            (case, edit) = ("1.1", Edit::Append(blk));
        } else if !head.unwrap().barred {
            let blk = cat(&[&ap, &j[..1], &middle, &[colored(w[q - 1])], &j[1..]]);
            (case, edit) = ("1.2", Edit::Replace(blk));
        } else {
            let blk = cat(&[&ap, &middle, &[colored(w[q - 1])], &j]);
            (case, edit) = ("1.3", Edit::Replace(blk));
        }
    } else if m > 0 && b == 0 {
        let Some(a) = head else {
            return Err(Error::UnreachableCase(
                "single colored letter with empty banner".into(),
            ));
        };
        let x = colored(w[0]);
        if !a.barred {
            (case, edit) = ("2.1", Edit::Replace(cat(&[&ap, &j[..1], &[x], &j[1..]])));
        } else if w[0] <= a.value {
            (case, edit) = ("2.2", Edit::Replace(cat(&[&ap, &[x], &j])));
        } else {
            let l = j.len();
            let insert = |s: usize| cat(&[&ap, &j[..s], &[x], &j[s..]]);
            if !j[0].barred {
                let t = leading(&j, BLetter::is_plain);
                if t == l {
                    (case, edit) = ("2.3.1", Edit::Replace(insert(l)));
                } else if j[t].is_colored() {
                    (case, edit) = ("2.3.2", Edit::Replace(insert(t + 1)));
                } else {
                    let blk = cat(&[&ap, &[j[t]], &j[..t], &[x], &j[t + 1..]]);
                    (case, edit) = ("2.4.1", Edit::Replace(blk));
                }
            } else {
                let r1 = leading(&j, |l| l.barred);
                if r1 == l {
                    return Err(unreachable("block tail ends barred", banner));
                }
                let lim = j[r1 - 1].value;
                let e = plain_run(&j, r1, lim);
                if e == l {
                    (case, edit) = ("2.3.3", Edit::Replace(insert(l)));
                } else if j[e].value > lim {
                    (case, edit) = ("2.3.4", Edit::Replace(insert(e)));
                } else if j[e].barred {
                    let blk = cat(&[&ap, &j[..r1], &[j[e]], &j[r1..e], &[x], &j[e + 1..]]);
                    (case, edit) = ("2.4.2", Edit::Replace(blk));
                } else {
                    (case, edit) = ("2.3.5", Edit::Replace(insert(e + 1)));
                }
            }
        }
    } else if m > 0 {
        let word: Vec<BLetter> = w[q - b..]
            .iter()
            .rev()
            .map(|&v| barred(v))
            .chain(w[..q - b - 1].iter().map(|&v| plain(v)))
            .chain(std::iter::once(colored(w[q - b - 1])))
            .collect();
        if ge_head(&barred(w[q - 1]), head.as_ref()) {
            (case, edit) = ("3.1", Edit::Append(word));
        } else if !head.unwrap().barred {
            (case, edit) = ("3.2", Edit::Replace(cat(&[&ap, &j[..1], &word, &j[1..]])));
        } else {
            (case, edit) = ("3.3", Edit::Replace(cat(&[&ap, &word, &j])));
        }
    } else {
        let bars_all: Vec<BLetter> = w[q - b..].iter().rev().map(|&v| barred(v)).collect();
        let bars_but_last = &bars_all[..b - 1];
        let plains: Vec<BLetter> = w[..q - b].iter().map(|&v| plain(v)).collect();
        let pivot = w[q - b];
        if ge_head(&barred(w[q - 1]), head.as_ref()) {
            (case, edit) = ("4.1", Edit::Append(cat(&[&bars_all, &plains])));
        } else if !head.unwrap().barred {
            if j.len() > 1 && pivot >= j[1].value {
                let blk = cat(&[
                    &ap,
                    &j[..1],
                    bars_but_last,
                    &plains,
                    &[barred(pivot)],
                    &j[1..],
                ]);
                (case, edit) = ("4.2", Edit::Replace(blk));
            } else {
                (case, edit) = (
                    "4.3",
                    Edit::Replace(cat(&[&ap, &j[..1], &bars_all, &plains, &j[1..]])),
                );
            }
        } else if pivot >= j[0].value {
            let blk = cat(&[&ap, bars_but_last, &plains, &[barred(pivot)], &j]);
            (case, edit) = ("4.4", Edit::Replace(blk));
        } else {
            (case, edit) = ("4.5", Edit::Replace(cat(&[&ap, &bars_all, &plains, &j])));
        }
    }
    let out: Vec<BLetter> = match edit {
        Edit::Append(blk) => {
            let mut o: Vec<BLetter> = banner.to_vec();
            o.extend(blk);
            o
        }
        Edit::Replace(blk) => {
            blocks.pop();
            let mut o: Vec<BLetter> = blocks.iter().flat_map(|bl| bl.word()).collect();
            o.extend(blk);
            o
        }
    };
    validate_banner(&out)
        .map_err(|e| unreachable(&format!("inverse case {case} broke the rules: {e}"), &out))?;
    Ok((out, case))
}
