//! Circulant codes from unions of cosets of the powers of 4 mod p.

use crate::circulant::CirculantRow;
use crate::paley::{bordered, is_prime};
use crate::ConstructionError;
use gf4_code::GraphCode;
use std::collections::BTreeSet;

/// Cosets `cK` of `K = <4>` in the nonzero residues mod `p`, in order of their
/// least element; each comes with that multiplier `c`.
pub fn coset_partition(p: u32) -> Result<Vec<(u32, Vec<u32>)>, ConstructionError> {
    if p % 4 != 1 || !is_prime(p) || p > 31 {
        return Err(ConstructionError::UnsupportedOrder(p));
    }
    let mut k = vec![1u32];
    while (k.last().unwrap() * 4) % p != 1 {
        k.push(k.last().unwrap() * 4 % p);
    }
    let mut seen = vec![false; p as usize];
    let mut cosets = Vec::new();
    for c in 1..p {
        if !seen[c as usize] {
            let coset: Vec<u32> = k.iter().map(|&x| x * c % p).collect();
            coset.iter().for_each(|&x| seen[x as usize] = true);
            cosets.push((c, coset));
        }
    }
    Ok(cosets)
}

/// One valid choice of `H`: the multipliers of the cosets used and the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerResidue {
    pub p: u32,
    pub multipliers: Vec<u32>,
    pub h: BTreeSet<u32>,
}

impl PowerResidue {
    pub fn row(&self) -> CirculantRow {
        let mask = self.h.iter().fold(0u32, |m, &i| m | 1 << i);
        CirculantRow::new(self.p as usize, mask).expect("H is closed under negation")
    }

    pub fn sequence(&self) -> Vec<u8> {
        (0..self.p).map(|i| self.h.contains(&i) as u8).collect()
    }
}

/// Unions `H` of half the cosets with `H = -H` and `H ∪ 2H` all nonzero
/// residues. Only unions containing `K` itself are listed; any other valid
/// union is a multiple `cH` of one of these and gives an isomorphic graph.
pub fn valid_h_sets(p: u32) -> Result<Vec<PowerResidue>, ConstructionError> {
    let cosets = coset_partition(p)?;
    let c = cosets.len();
    let mut out = Vec::new();
    if c % 2 != 0 {
        return Ok(out);
    }
    for pick in 0u32..1 << c {
        if pick & 1 == 0 || pick.count_ones() as usize != c / 2 {
            continue;
        }
        let h: BTreeSet<u32> = graph_core::bits(pick)
            .flat_map(|i| cosets[i].1.iter().copied())
            .collect();
        let symmetric = h.iter().all(|&x| h.contains(&(p - x)));
        let covers = (1..p).all(|x| h.contains(&x) || h.iter().any(|&y| 2 * y % p == x));
        if symmetric && covers {
            let multipliers = graph_core::bits(pick).map(|i| cosets[i].0).collect();
            out.push(PowerResidue { p, multipliers, h });
        }
    }
    out.sort_by(|a, b| a.multipliers.cmp(&b.multipliers));
    Ok(out)
}

/// The length-17 circulant code from the first valid `H` and its bordered
/// length-18 extension.
pub fn code18() -> (GraphCode, GraphCode) {
    let h = valid_h_sets(17).expect("17 is supported").remove(0);
    let g = h.row().graph();
    (GraphCode::new(g), GraphCode::new(bordered(&g).expect("18 vertices")))
}
