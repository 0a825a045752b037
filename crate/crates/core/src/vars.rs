//! The shared variable layout used by the generating-function checks.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::polyring::{Monomial, SparsePoly, TruncationCaps, VarTable};
use crate::qsym::{x_name, XAlphabet};
use crate::Poly;

/// `z, t, p, q, r0..r{N-1}, s1..s{N-1}, x1..xM` in one table.
#[derive(Clone, Debug)]
pub struct Vars {
    pub table: Arc<VarTable>,
    pub colors: u32,
    pub z: usize,
    pub t: usize,
    pub p: usize,
    pub q: usize,
    pub r: Vec<usize>,
    pub s: Vec<usize>,
    pub x: XAlphabet,
}

impl Vars {
    pub fn new(colors: u32, m: usize) -> Self {
        let mut names: Vec<String> = ["z", "t", "p", "q"].iter().map(|s| s.to_string()).collect();
        names.extend((0..colors).map(|k| format!("r{k}")));
        names.extend((1..colors).map(|k| format!("s{k}")));
        names.extend((1..=m).map(x_name));
        let table = VarTable::new(&names).expect("distinct names");
        let idx = |n: &str| table.index(n).unwrap();
        Vars {
            z: idx("z"),
            t: idx("t"),
            p: idx("p"),
            q: idx("q"),
            r: (0..colors).map(|k| idx(&format!("r{k}"))).collect(),
            s: (1..colors).map(|k| idx(&format!("s{k}"))).collect(),
            x: XAlphabet::within(&table, m).unwrap(),
            colors,
            table,
        }
    }

    pub fn var(&self, index: usize) -> Poly {
        SparsePoly::var_pow(&self.table, index, 1)
    }

    pub fn one(&self) -> Poly {
        SparsePoly::one(&self.table)
    }

    pub fn int(&self, c: i64) -> Poly {
        SparsePoly::from_i64(&self.table, c)
    }

    /// `s1 + ... + s{N-1}`
    pub fn s_sum(&self) -> Poly {
        let mut out = SparsePoly::zero(&self.table);
        for &s in &self.s {
            out.add_term(Monomial::var(s, 1), &BigInt::from(1));
        }
        out
    }

    /// `r^alpha s^beta`; `alpha` has N entries, `beta` has N-1.
    pub fn rs_monomial(&self, alpha: &[usize], beta: &[usize]) -> Monomial {
        let mut exps = vec![0u32; self.table.len()];
        for (k, &a) in alpha.iter().enumerate() {
            exps[self.r[k]] += a as u32;
        }
        for (m, &b) in beta.iter().enumerate() {
            exps[self.s[m]] += b as u32;
        }
        Monomial::from_exponents(&exps)
    }

    /// Caps `z` and every r, s, x variable at `z_cap`, and `t` at `t_cap`.
    pub fn series_caps(&self, z_cap: u32, t_cap: u32) -> TruncationCaps {
        let mut caps = TruncationCaps::none()
            .with(self.z, z_cap)
            .with(self.t, t_cap);
        for &v in self.r.iter().chain(&self.s) {
            caps.set(v, z_cap);
        }
        self.x.cap_all(caps, z_cap)
    }
}
