//! The map to a Z4-linear code: w -> 1 and 1 -> 2, so `Gamma + w I` becomes
//! `2 Gamma + I`.

use crate::code::GraphCode;
use crate::distance::WeightDistribution;

/// The Z4 generator matrix `2 Gamma + I`.
pub fn to_z4(c: &GraphCode) -> Vec<Vec<u8>> {
    let g = c.graph();
    (0..g.n())
        .map(|i| {
            (0..g.n())
                .map(|j| if i == j { 1 } else { 2 * g.has_edge(i, j) as u8 })
                .collect()
        })
        .collect()
}

/// Hamming weights of all sums mod 4 of subsets of rows of `m`.
pub fn z4_weight_distribution(m: &[Vec<u8>]) -> WeightDistribution {
    let n = m.len();
    assert!(n <= 20, "Z4 enumeration is for small codes");
    let mut counts = vec![0u64; n + 1];
    let mut acc = vec![0u8; n];
    counts[0] = 1;
    for s in 1u64..1 << n {
        let i = s.trailing_zeros() as usize;
        // Gray order toggles row i in or out; removing it means adding 3 * row
        let sign = if (s ^ s >> 1) >> i & 1 == 1 { 1 } else { 3 };
        for (a, b) in acc.iter_mut().zip(&m[i]) {
            *a = (*a + sign * b) % 4;
        }
        counts[acc.iter().filter(|&&a| a != 0).count()] += 1;
    }
    WeightDistribution { counts }
}
