//! Set partitions of `{1..n}` and the Möbius inversion that turns a sum
//! over pairwise-distinct index tuples into a signed sum over tuples with
//! prescribed coincidences.
//!
//! For a partition `S = {P_1, ..., P_m}` the weight is
//! `mu(S) = prod_j (-1)^{|P_j| - 1} (|P_j| - 1)!`, and
//!
//! ```text
//! sum_{distinct} f(x_1..x_n) = sum_S mu(S) * sum_{x_i = x_j whenever i, j share a block} f(x_1..x_n)
//! ```
//!
//! Partitions are generated from restricted-growth strings, which gives a
//! canonical duplicate-free order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::Rational;
use crate::error::{check_budget, Error, Result};

/// Largest `n` accepted by [`enumerate_partitions`]; Bell(12) = 4 213 597.
pub const MAX_PARTITION_N: usize = 12;

/// A set partition of `{1..n}`. Blocks are sorted by smallest element and
/// elements are sorted within blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    pub blocks: Vec<Vec<usize>>,
    pub mu: i64,
}

impl Partition {
    /// Builds a partition from a restricted-growth string (0-based labels).
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let m = rgs.iter().copied().max().map_or(0, |x| x + 1);
        let mut blocks = vec![Vec::new(); m];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        let mu = mobius_of_blocks(&blocks);
        Partition { blocks, mu }
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block sizes in block order; the exponent pattern obtained when all
    /// indices of a block are forced equal.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Block sizes sorted in decreasing order.
    pub fn shape(&self) -> Vec<usize> {
        let mut s = self.block_sizes();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Block index of every element `1..=n`.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                out[i - 1] = b;
            }
        }
        out
    }

    /// Checks disjointness, coverage, canonical order and the stored weight.
    pub fn is_valid(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        for block in &self.blocks {
            if block.is_empty() || block.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &i in block {
                if i == 0 || i > n || seen[i] {
                    return false;
                }
                seen[i] = true;
            }
        }
        self.blocks.windows(2).all(|w| w[0][0] < w[1][0])
            && self.mu == mobius_of_blocks(&self.blocks)
    }
}

fn mobius_of_blocks(blocks: &[Vec<usize>]) -> i64 {
    blocks
        .iter()
        .map(|b| {
            let k = b.len() as i64;
            let fact: i64 = (1..k).product();
            if (k - 1) % 2 == 0 {
                fact
            } else {
                -fact
            }
        })
        .product()
}

pub fn mobius_weight(p: &Partition) -> i64 {
    mobius_of_blocks(&p.blocks)
}

/// Bell numbers `B(0..=n)` via the Bell triangle.
pub fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Iterator over restricted-growth strings of length `n`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct RgsIter {
    current: Option<Vec<usize>>,
}

impl RgsIter {
    pub fn new(n: usize) -> Self {
        RgsIter {
            current: Some(vec![0; n]),
        }
    }
}

impl Iterator for RgsIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let n = out.len();
        let mut next = out.clone();
        // prefix maxima: a[i] may be at most 1 + max(a[..i])
        let mut prefix_max = vec![0usize; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(next[i - 1]);
        }
        let mut i = n;
        while i > 1 {
            i -= 1;
            if next[i] <= prefix_max[i] {
                next[i] += 1;
                for x in next.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                self.current = Some(next);
                return Some(out);
            }
        }
        Some(out)
    }
}

/// Lazily yields every partition of `{1..n}` in canonical order.
pub fn partitions(n: usize) -> impl Iterator<Item = Partition> {
    RgsIter::new(n).map(|rgs| Partition::from_rgs(&rgs))
}

/// All Bell(n) partitions of `{1..n}`, `1 <= n <= 12`.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 || n > MAX_PARTITION_N {
        return Err(Error::SizeGuard(format!(
            "partition size n = {n} outside 1..={MAX_PARTITION_N}"
        )));
    }
    Ok(partitions(n).collect())
}

/// Sum of `mu(S)` over all partitions `S` with the same shape, keyed by
/// shape (block sizes in decreasing order).
pub fn shape_weights(n: usize) -> Result<BTreeMap<Vec<usize>, i64>> {
    if n == 0 || n > MAX_PARTITION_N {
        return Err(Error::SizeGuard(format!(
            "partition size n = {n} outside 1..={MAX_PARTITION_N}"
        )));
    }
    let mut out = BTreeMap::new();
    for p in partitions(n) {
        *out.entry(p.shape()).or_insert(0) += p.mu;
    }
    Ok(out)
}

/// Values that can be accumulated with integer weights.
pub trait SignedAccumulate: Clone {
    fn add_scaled(&mut self, other: &Self, weight: i64);
}

macro_rules! impl_accumulate_int {
    ($($t:ty),*) => {$(
        impl SignedAccumulate for $t {
            fn add_scaled(&mut self, other: &Self, weight: i64) {
                *self += other * (weight as $t);
            }
        }
    )*};
}

impl_accumulate_int!(i64, i128);

impl SignedAccumulate for BigInt {
    fn add_scaled(&mut self, other: &Self, weight: i64) {
        *self += other * BigInt::from(weight);
    }
}

impl SignedAccumulate for Rational {
    fn add_scaled(&mut self, other: &Self, weight: i64) {
        *self = &*self + other * Rational::from(weight);
    }
}

/// `sum_S mu(S) * restricted(S)` over all partitions of `{1..n}`.
pub fn mobius_combine<T, F>(n: usize, zero: T, mut restricted: F) -> Result<T>
where
    T: SignedAccumulate,
    F: FnMut(&Partition) -> Result<T>,
{
    if n == 0 || n > MAX_PARTITION_N {
        return Err(Error::SizeGuard(format!(
            "partition size n = {n} outside 1..={MAX_PARTITION_N}"
        )));
    }
    let mut acc = zero;
    for p in partitions(n) {
        let v = restricted(&p)?;
        acc.add_scaled(&v, p.mu);
    }
    Ok(acc)
}

/// Sum of `f` over `n`-tuples of pairwise distinct elements of `domain`,
/// computed through the partition inversion. Each restricted sum is
/// enumerated directly over `|domain|^{#blocks}` tuples, so the cost is at
/// most `Bell(n) * |domain|^n` calls to `f`.
pub fn distinct_sum_by_inversion<D, T, F>(
    f: F,
    n: usize,
    domain: &[D],
    zero: T,
    budget: u64,
) -> Result<T>
where
    D: Clone,
    T: SignedAccumulate + std::ops::AddAssign,
    F: Fn(&[D]) -> T,
{
    if n == 0 || n > MAX_PARTITION_N {
        return Err(Error::SizeGuard(format!(
            "partition size n = {n} outside 1..={MAX_PARTITION_N}"
        )));
    }
    let d = domain.len() as u128;
    let work = d
        .checked_pow(n as u32)
        .and_then(|x| x.checked_mul(bell(n)))
        .unwrap_or(u128::MAX);
    check_budget(work, budget)?;
    let inner_zero = zero.clone();
    mobius_combine(n, zero, |p| {
        let labels = p.labels();
        let m = p.blocks.len();
        let mut acc = inner_zero.clone();
        let mut idx = vec![0usize; m];
        let mut tuple: Vec<D> = Vec::with_capacity(n);
        if domain.is_empty() {
            return Ok(acc);
        }
        loop {
            tuple.clear();
            tuple.extend(labels.iter().map(|&b| domain[idx[b]].clone()));
            acc += f(&tuple);
            // odometer over block values
            let mut pos = m;
            loop {
                if pos == 0 {
                    return Ok(acc);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < domain.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    })
}
