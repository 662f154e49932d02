use crate::{classify, OrbitError, OrbitRecord, Seed, Strategy};
use std::fmt::Write as _;

/// Number of LC orbits of connected graphs on `n` vertices, `n = 1..=12`.
pub const ORBIT_COUNTS: [u64; 12] = [1, 1, 1, 2, 4, 11, 26, 101, 440, 3132, 40457, 1274068];

pub fn orbit_count(n: usize) -> Option<u64> {
    ORBIT_COUNTS.get(n.checked_sub(1)?).copied()
}

/// Counts of codes, decomposable or not, split by the sizes of the
/// components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposableCounts {
    pub n: usize,
    pub total: u64,
    /// One entry per partition of `n`, largest parts first.
    pub partitions: Vec<PartitionCount>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCount {
    /// `(part, multiplicity)`, largest part first.
    pub parts: Vec<(usize, usize)>,
    pub count: u64,
}

impl PartitionCount {
    /// Short label such as `4^2`, `641^2` or `(10)1`.
    pub fn label(&self) -> String {
        let mut s = String::new();
        for &(a, b) in &self.parts {
            if a >= 10 {
                write!(s, "({a})").unwrap();
            } else {
                write!(s, "{a}").unwrap();
            }
            if b > 1 {
                write!(s, "^{b}").unwrap();
            }
        }
        s
    }
}

impl DecomposableCounts {
    pub fn get(&self, label: &str) -> Option<u64> {
        self.partitions.iter().find(|p| p.label() == label).map(|p| p.count)
    }
}

/// `orbit_counts[i]` is the number of orbits on `i + 1` vertices.
pub fn decomposable_counts(n: usize, orbit_counts: &[u64]) -> Result<DecomposableCounts, OrbitError> {
    if n == 0 {
        return Err(OrbitError::UnsupportedN(0));
    }
    if orbit_counts.len() < n {
        return Err(OrbitError::MissingCount(orbit_counts.len() + 1));
    }
    let mut partitions = Vec::new();
    let mut stack = Vec::new();
    partitions_of(n, n, &mut stack, &mut |parts| {
        let mut count = 1u64;
        for &(a, b) in parts {
            count *= multiset(orbit_counts[a - 1], b as u64);
        }
        partitions.push(PartitionCount { parts: parts.to_vec(), count });
    });
    let total = partitions.iter().map(|p| p.count).sum();
    Ok(DecomposableCounts { n, total, partitions })
}

/// Partitions of `n` with parts at most `max`, as `(part, mult)` runs,
/// in reverse lexicographic order.
fn partitions_of(n: usize, max: usize, stack: &mut Vec<(usize, usize)>, f: &mut impl FnMut(&[(usize, usize)])) {
    if n == 0 {
        f(stack);
        return;
    }
    for a in (1..=max.min(n)).rev() {
        for b in (1..=n / a).rev() {
            stack.push((a, b));
            partitions_of(n - a * b, a - 1, stack, f);
            stack.pop();
        }
    }
}

/// Multisets of size `b` from `m` kinds: `C(m + b - 1, b)`.
fn multiset(m: u64, b: u64) -> u64 {
    let mut r: u128 = 1;
    for i in 0..b as u128 {
        r = r * (m as u128 + i) / (i + 1);
    }
    r as u64
}

/// `Λ` over a full list of orbits: the least `λ`.
pub fn min_lambda(records: &[OrbitRecord]) -> Option<usize> {
    records.iter().map(|r| r.lambda).min()
}

/// `Λ_n` by exhaustive classification.
pub fn big_lambda(n: usize) -> Result<usize, OrbitError> {
    if n > 10 {
        return Err(OrbitError::UnsupportedN(n));
    }
    let recs = classify(n, Strategy::LowMem, Seed::Extensions)?;
    min_lambda(&recs).ok_or(OrbitError::UnsupportedN(n))
}

/// Known values `(k, R(k, k + 1))`.
const RAMSEY: [(usize, usize); 3] = [(2, 3), (3, 9), (4, 25)];

/// Largest `k` with `R(k, k + 1) <= n`, for `n >= 3`; 1 below that.
pub fn ramsey_lower_bound(n: usize) -> usize {
    RAMSEY.iter().filter(|&&(_, r)| r <= n).map(|&(k, _)| k).max().unwrap_or(1)
}
