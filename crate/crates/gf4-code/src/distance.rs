//! Distance and weight counts of graph codes.
//!
//! A sum of rows indexed by `S` has X part `S` and Z part the XOR of the
//! neighbourhoods, so its weight is at least `|S|`. Enumerating row subsets by
//! increasing size therefore finds every codeword of weight `<= k` among the
//! subsets of size `<= k`.

use crate::code::GraphCode;
use graph_core::Graph;
use rayon::prelude::*;
use std::sync::atomic::{AtomicU32, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeType {
    TypeI,
    TypeII,
}

/// Counts `w_0..=w_p`. For the full distribution `p == n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn cutoff(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Walk all subsets of `{first+1..n}` of size `depth`, starting from the
/// accumulated Z part `z` and X part `x`. `leaf` returns false to stop.
fn walk<F: FnMut(u32) -> bool>(
    rows: &[u32],
    start: usize,
    depth: usize,
    z: u32,
    x: u32,
    leaf: &mut F,
) -> bool {
    if depth == 0 {
        return leaf((z | x).count_ones());
    }
    let n = rows.len();
    for i in start..=n - depth {
        if !walk(rows, i + 1, depth - 1, z ^ rows[i], x | 1 << i, leaf) {
            return false;
        }
    }
    true
}

/// Minimum weight over sums of exactly `k` rows, capped at `bound`. Stops once
/// the minimum is `<= stop`. With `anchored`, only subsets containing row 0.
fn min_weight_of_k_sums(rows: &[u32], k: usize, bound: u32, stop: u32, anchored: bool) -> u32 {
    let n = rows.len();
    let best = AtomicU32::new(bound);
    let branch = |z: u32, x: u32, start: usize, depth: usize| {
        if best.load(Ordering::Relaxed) <= stop {
            return;
        }
        let mut local = best.load(Ordering::Relaxed);
        let mut counter = 0u32;
        walk(rows, start, depth, z, x, &mut |w| {
            if w < local {
                local = best.fetch_min(w, Ordering::Relaxed).min(w);
            }
            counter = counter.wrapping_add(1);
            if counter & 0xffff == 0 {
                local = local.min(best.load(Ordering::Relaxed));
            }
            local > stop
        });
    };
    if anchored {
        (1..=n - k + 1)
            .into_par_iter()
            .for_each(|i| branch(rows[0] ^ rows[i], 1 | 1 << i, i + 1, k - 2));
    } else {
        (0..=n - k).into_par_iter().for_each(|i| branch(rows[i], 1 << i, i + 1, k - 1));
    }
    best.into_inner()
}

/// Shared driver: exact distance when `floor == 0`, otherwise stops early as
/// soon as some codeword of weight `<= floor` is found.
fn distance_search(g: &Graph, anchored: bool, floor: u32) -> u32 {
    let n = g.n();
    let rows = g.rows();
    // a single row has weight deg + 1, which also bounds the search
    let mut best = if anchored {
        g.degree(0) as u32 + 1
    } else {
        (0..n).map(|v| g.degree(v)).min().unwrap() as u32 + 1
    };
    for k in 2..=n {
        if best as usize <= k || best <= floor {
            break;
        }
        let stop = (k as u32).max(floor);
        best = best.min(min_weight_of_k_sums(rows, k, best, stop, anchored));
    }
    best
}

/// Minimum weight of a nonzero codeword.
pub fn code_distance(c: &GraphCode) -> u32 {
    distance_search(c.graph(), false, 0)
}

/// Distance of a code whose graph is vertex-transitive (circulant graphs, for
/// instance). Every codeword has a shift using row 0, so only those subsets
/// are searched. The caller is responsible for transitivity.
pub fn code_distance_transitive(c: &GraphCode) -> u32 {
    distance_search(c.graph(), true, 0)
}

/// True if the distance is at least `t`; usually much cheaper than computing
/// it when the answer is no.
pub fn distance_at_least(c: &GraphCode, t: u32, transitive: bool) -> bool {
    t == 0 || distance_search(c.graph(), transitive, t - 1) >= t
}

/// Histogram of weights `<= p` over sums of exactly `k` rows.
fn histogram_of_k_sums(rows: &[u32], k: usize, p: usize) -> Vec<u64> {
    let n = rows.len();
    (0..=n - k)
        .into_par_iter()
        .map(|i| {
            let mut h = vec![0u64; p + 1];
            walk(rows, i + 1, k - 1, rows[i], 1 << i, &mut |w| {
                if (w as usize) <= p {
                    h[w as usize] += 1;
                }
                true
            });
            h
        })
        .reduce(
            || vec![0u64; p + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )
}

/// `(w_0, ..., w_p)` using only sums of at most `p` rows.
pub fn partial_weight_distribution(c: &GraphCode, p: usize) -> WeightDistribution {
    let rows = c.graph().rows();
    let p = p.min(rows.len());
    let mut counts = vec![0u64; p + 1];
    counts[0] = 1;
    for k in 1..=p {
        for (a, b) in counts.iter_mut().zip(histogram_of_k_sums(rows, k, p)) {
            *a += b;
        }
    }
    WeightDistribution { counts }
}

/// Number of codewords of weight exactly `p`.
pub fn weight_count(c: &GraphCode, p: usize) -> u64 {
    if p == 0 {
        return 1;
    }
    let rows = c.graph().rows();
    if p > rows.len() {
        return 0;
    }
    (1..=p).map(|k| histogram_of_k_sums(rows, k, p)[p]).sum()
}

/// Full distribution by walking all `2^n` codewords in Gray order.
pub fn naive_weight_distribution(c: &GraphCode) -> WeightDistribution {
    let g = c.graph();
    let n = g.n();
    assert!(n <= 26, "naive enumeration is for small codes");
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    let (mut z, mut x) = (0u32, 0u32);
    for s in 1u64..1 << n {
        let i = s.trailing_zeros() as usize;
        z ^= g.row(i);
        x ^= 1 << i;
        counts[(z | x).count_ones() as usize] += 1;
    }
    WeightDistribution { counts }
}

/// Weight parity is additive on a self-dual code, so the code is type II
/// exactly when every row (weight `deg + 1`) has even weight.
pub fn code_type(c: &GraphCode) -> CodeType {
    if is_type_ii(c.graph()) {
        CodeType::TypeII
    } else {
        CodeType::TypeI
    }
}

fn is_type_ii(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) % 2 == 1)
}
