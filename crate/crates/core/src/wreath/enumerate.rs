use rayon::prelude::*;

use crate::{Error, Result};

use super::{ColoredLetter, ColoredPermutation};

/// Default ceiling on the number of elements any single enumeration may visit.
pub const DEFAULT_RESOURCE_BOUND: u128 = 10_000_000;

/// The active bound: `WREATH_RESOURCE_BOUND` if set and parseable, else the default.
pub fn resource_bound() -> u128 {
    std::env::var("WREATH_RESOURCE_BOUND")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_RESOURCE_BOUND)
}

/// `N^n * n!`, saturating.
pub fn group_order(n: usize, colors: u32) -> u128 {
    let mut total: u128 = 1;
    for i in 1..=n as u128 {
        total = total.saturating_mul(i).saturating_mul(colors as u128);
    }
    total
}

pub fn check_guard(requested: u128) -> Result<()> {
    let bound = resource_bound();
    if requested > bound {
        Err(Error::ResourceGuard { requested, bound })
    } else {
        Ok(())
    }
}

/// All of `C_N wr S_n`, ordered lexicographically by value word and then by color
/// word (first position most significant).
#[derive(Clone, Debug)]
pub struct Enumeration {
    n: usize,
    colors: u32,
    total: u64,
}

impl Enumeration {
    pub fn new(n: usize, colors: u32) -> Result<Self> {
        if colors == 0 {
            return Err(Error::InvalidInput("N must be at least 1".into()));
        }
        let total = group_order(n, colors);
        check_guard(total)?;
        Ok(Enumeration {
            n,
            colors,
            total: total as u64,
        })
    }

    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// The element at a position of the documented order.
    pub fn element(&self, index: u64) -> ColoredPermutation {
        let color_words = (self.colors as u64).pow(self.n as u32);
        let mut perm_rank = index / color_words;
        let mut color_rank = index % color_words;
        let mut pool: Vec<u32> = (1..=self.n as u32).collect();
        let mut values = Vec::with_capacity(self.n);
        for k in (0..self.n).rev() {
            let f: u64 = (1..=k as u64).product();
            let d = (perm_rank / f) as usize;
            perm_rank %= f;
            values.push(pool.remove(d));
        }
        let mut colors = vec![0u32; self.n];
        for c in colors.iter_mut().rev() {
            *c = (color_rank % self.colors as u64) as u32;
            color_rank /= self.colors as u64;
        }
        let letters = values
            .into_iter()
            .zip(colors)
            .map(|(v, c)| ColoredLetter::new(v, c))
            .collect();
        ColoredPermutation::new_unchecked(letters, self.colors)
    }

    pub fn iter(&self) -> impl Iterator<Item = ColoredPermutation> + '_ {
        (0..self.total).map(move |i| self.element(i))
    }

    /// Parallel fold over all elements; `reduce` must be associative and commutative
    /// for the result to be independent of scheduling.
    pub fn par_fold<T, Id, F, R>(&self, identity: Id, fold: F, reduce: R) -> T
    where
        T: Send,
        Id: Fn() -> T + Sync + Send,
        F: Fn(T, ColoredPermutation) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        (0..self.total)
            .into_par_iter()
            .fold(&identity, |acc, i| fold(acc, self.element(i)))
            .reduce(&identity, reduce)
    }
}

/// Convenience wrapper around [`Enumeration::new`].
pub fn enumerate(n: usize, colors: u32) -> Result<Enumeration> {
    Enumeration::new(n, colors)
}
