use crate::polyring::{q_int, SparsePoly};
use crate::qsym::FCache;
use crate::vars::Vars;
use crate::{Poly, Result};

use super::gf::{sign, vectors_with_sum_at_most};
use super::OracleTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QnMethod {
    Recurrence,
    Closed,
}

/// All vectors of the given length with entry sum exactly `total`.
pub fn vectors_with_sum(len: usize, total: usize) -> Vec<Vec<usize>> {
    vectors_with_sum_at_most(len, total)
        .into_iter()
        .filter(|v| v.iter().sum::<usize>() == total)
        .collect()
}

/// Compositions of `n` into positive parts, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `P_k = sum_{|mu|+|nu|=k} (-1)^{|nu|} h_mu e_nu r^mu prod_m s_m^{nu_m + mu_m}`.
pub fn p_term(k: usize, vars: &Vars, fc: &mut FCache) -> Poly {
    let colors = vars.colors as usize;
    let mut out = SparsePoly::zero(&vars.table);
    for joint in vectors_with_sum(2 * colors - 1, k) {
        let (mu, nu) = joint.split_at(colors);
        let nu_total: usize = nu.iter().sum();
        let mut term = SparsePoly::constant(&vars.table, sign(nu_total));
        for &a in mu {
            term = &term * &fc.h(a);
        }
        for &b in nu {
            term = &term * &fc.e(b);
        }
        let s_exp: Vec<usize> = nu.iter().zip(&mu[1..]).map(|(a, b)| a + b).collect();
        out = &out + &term.shift(&vars.rs_monomial(mu, &s_exp));
    }
    out
}

/// `C_k = t [k-1]_t + [k]_t (s_1 + ... + s_{N-1})` for `k >= 1`.
pub fn c_term(k: usize, vars: &Vars) -> Poly {
    assert!(k >= 1, "C_k is only used for k >= 1");
    let t = vars.var(vars.t);
    let a: Poly = q_int(&vars.table, vars.t, k as i64 - 1).unwrap();
    let b: Poly = q_int(&vars.table, vars.t, k as i64).unwrap();
    &(&t * &a) + &(&b * &vars.s_sum())
}

/// `Q_n(t, r, s) = sum_{j,alpha,beta} Q_{n,j,alpha,beta} t^j r^alpha s^beta`.
pub fn qn_polynomial(n: usize, method: QnMethod, vars: &Vars) -> Poly {
    let mut fc = FCache::new(vars.x.clone());
    match method {
        QnMethod::Recurrence => {
            let mut qs: Vec<Poly> = vec![vars.one()];
            for m in 1..=n {
                let mut q = p_term(m, vars, &mut fc);
                for (k, prev) in qs.iter().enumerate() {
                    let hc = &fc.h(m - k) * &c_term(m - k, vars);
                    q = &q + &(prev * &hc);
                }
                qs.push(q);
            }
            qs.swap_remove(n)
        }
        QnMethod::Closed => {
            if n == 0 {
                return vars.one();
            }
            let mut out = SparsePoly::zero(&vars.table);
            for comp in compositions(n) {
                let (last, init) = comp.split_last().unwrap();
                let mut prefix = vars.one();
                for &k in init {
                    prefix = &prefix * &(&fc.h(k) * &c_term(k, vars));
                }
                let with_p = &prefix * &p_term(*last, vars, &mut fc);
                let all_hc = &prefix * &(&fc.h(*last) * &c_term(*last, vars));
                out = &(&out + &with_p) + &all_hc;
            }
            out
        }
    }
}

/// The same polynomial summed from enumeration.
pub fn qn_bruteforce(n: usize, vars: &Vars) -> Result<Poly> {
    let oracle = OracleTable::build(n, vars.colors)?;
    let mut fc = FCache::new(vars.x.clone());
    let mut out = SparsePoly::zero(&vars.table);
    for (j, alpha, beta) in oracle.by_w.keys() {
        let q = oracle.q(*j, alpha, beta, &mut fc)?;
        let mono = vars
            .rs_monomial(alpha, beta)
            .mul(&crate::polyring::Monomial::var(vars.t, *j as u32));
        out = &out + &q.shift(&mono);
    }
    Ok(out)
}
