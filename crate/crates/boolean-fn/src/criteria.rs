//! Cryptographic criteria from the Walsh spectrum and the autocorrelations.

use crate::autocorr::coset_sum;
use crate::transform::fwht;
use crate::{BoolError, BooleanFunction};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CryptoProperties {
    pub balanced: bool,
    /// Flat spectrum, every value `+-1` after normalisation.
    pub bent: bool,
    /// Largest `m` with a zero spectrum for `0 <= w(b) <= m`; `None` if unbalanced.
    pub resilience: Option<usize>,
    /// Largest `m` with a zero spectrum for `1 <= w(b) <= m`.
    pub correlation_immunity: usize,
    /// Distance to the nearest affine function.
    pub nonlinearity: u64,
    pub degree: usize,
}

pub fn crypto_properties(f: &BooleanFunction) -> CryptoProperties {
    let n = f.n();
    let w = f.walsh_scaled();
    let flat = 1i64 << (n / 2);
    let bent = n.is_multiple_of(2) && w.iter().all(|&v| v.abs() == flat);
    let correlation_immunity = spectrum_zero_order(&w, n);
    let balanced = w[0] == 0;
    let max = w.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
    CryptoProperties {
        balanced,
        bent,
        resilience: balanced.then_some(correlation_immunity),
        correlation_immunity,
        nonlinearity: (1u64 << (n - 1)) - max / 2,
        degree: f.degree(),
    }
}

/// Largest `m` such that `w[b] == 0` whenever `1 <= w_H(b) <= m`.
fn spectrum_zero_order(w: &[i64], n: usize) -> usize {
    let first_bad = (1..w.len()).filter(|&b| w[b] != 0).map(|b| b.count_ones() as usize).min();
    first_bad.map_or(n, |d| d - 1)
}

/// Order of resilience of `f`, or `None` if it is not balanced.
pub fn resilience(f: &BooleanFunction) -> Option<usize> {
    crypto_properties(f).resilience
}

/// `kappa(f, g) = sum (-1)^(f(x) + g(x))`.
pub fn correlation(f: &BooleanFunction, g: &BooleanFunction) -> Result<i64, BoolError> {
    if f.n() != g.n() {
        return Err(BoolError::Mismatch(f.n(), g.n()));
    }
    Ok(f.table().iter().zip(g.table()).map(|(a, b)| if a == b { 1 } else { -1 }).sum())
}

pub fn hamming_distance(f: &BooleanFunction, g: &BooleanFunction) -> Result<u64, BoolError> {
    Ok(f.add(g)?.weight())
}

/// `sum (-1)^(f(x) + f(x + a) + b.x)`, the overlap of `f` with its error
/// image under the shift `a` and the phase `b`.
pub fn error_overlap(f: &BooleanFunction, a: u32, b: u32) -> i64 {
    let t = f.table();
    (0..t.len())
        .map(|x| {
            let e = t[x] ^ t[x ^ a as usize] ^ ((b & x as u32).count_ones() & 1) as u8;
            1 - 2 * e as i64
        })
        .sum()
}

fn weight_between(m: u32, lo: usize, hi: usize) -> bool {
    (lo..=hi).contains(&(m.count_ones() as usize))
}

fn check_lm(n: usize, l: usize, m: usize, disjoint: bool) -> Result<(), BoolError> {
    if l == 0 || l > n || m > n || (disjoint && l + m > n) {
        return Err(BoolError::Mask(format!("invalid degree {l} and order {m} for {n} variables")));
    }
    Ok(())
}

/// Submasks of `m`, including 0 and `m`.
fn submasks(m: u32) -> impl Iterator<Item = u32> {
    let mut s = Some(m);
    std::iter::from_fn(move || {
        let cur = s?;
        s = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

/// PC(l) of order m: `r(a, mu, k) = 0` for `1 <= w(a) <= l`, `w(mu) <= m`,
/// `k` under `mu` and `a` outside it.
pub fn pc_check(f: &BooleanFunction, l: usize, m: usize) -> Result<bool, BoolError> {
    let n = f.n();
    check_lm(n, l, m, true)?;
    let full = (1u32 << n) - 1;
    let ok = (0..=full).into_par_iter().filter(|&mu| weight_between(mu, 0, m)).all(|mu| {
        submasks(full & !mu).filter(|&a| weight_between(a, 1, l)).all(|a| submasks(mu).all(|k| coset_sum(f, a, mu, k) == 0))
    });
    Ok(ok)
}

/// Extended propagation criterion: `f(x) + f(x + a)` is m-resilient for
/// `1 <= w(a) <= l`, i.e. every overlap with `w(a) <= l`, `w(b) <= m`, not
/// both zero, vanishes.
pub fn epc_check(f: &BooleanFunction, l: usize, m: usize) -> Result<bool, BoolError> {
    let n = f.n();
    check_lm(n, l, m, false)?;
    let size = 1usize << n;
    let ok = (1..size as u32).into_par_iter().filter(|&a| weight_between(a, 1, l)).all(|a| {
        let mut w: Vec<i64> = (0..size).map(|x| if f.eval(x as u32) == f.eval(x as u32 ^ a) { 1 } else { -1 }).collect();
        fwht(&mut w);
        w.iter().enumerate().all(|(b, &v)| v == 0 || b.count_ones() as usize > m)
    });
    Ok(ok)
}

/// APC(l) of order m: `s(a, mu, k) = 0` for `a, k` under `mu`,
/// `1 <= w(a) <= l` and `w(mu + a) <= m`.
pub fn apc_check(f: &BooleanFunction, l: usize, m: usize) -> Result<bool, BoolError> {
    let n = f.n();
    check_lm(n, l, m, true)?;
    let full = (1u32 << n) - 1;
    let ok = (1..=full).into_par_iter().filter(|&mu| weight_between(mu, 1, l + m)).all(|mu| {
        submasks(mu)
            .filter(|&a| weight_between(a, 1, l) && weight_between(mu ^ a, 0, m))
            .all(|a| submasks(mu).all(|k| coset_sum(f, a, mu, k) == 0))
    });
    Ok(ok)
}

/// `w_H(a, b)`: the number of positions where `a` or `b` is set.
pub fn pair_weight(a: u32, b: u32) -> usize {
    (a | b).count_ones() as usize
}

/// APC distance: the least nonzero `w_H(a, b)` whose error image is not
/// orthogonal to `f`. Pairs are swept by increasing weight and the sweep
/// stops at the first weight with a witness.
pub fn apc_distance(f: &BooleanFunction) -> usize {
    apc_witness(f).0
}

/// The APC distance together with one non-orthogonal pair `(a, b)` of that weight.
pub fn apc_witness(f: &BooleanFunction) -> (usize, (u32, u32)) {
    let n = f.n();
    for w in 1..=n {
        let supports = k_subsets(n, w);
        let hit = supports.par_iter().find_map_first(|&s| {
            // Each support position is in a only, b only, or both.
            let pos: Vec<u32> = (0..n as u32).filter(|i| s >> i & 1 == 1).collect();
            (0..3usize.pow(w as u32)).find_map(|mut code| {
                let (mut a, mut b) = (0u32, 0u32);
                for &p in &pos {
                    match code % 3 {
                        0 => a |= 1 << p,
                        1 => b |= 1 << p,
                        _ => {
                            a |= 1 << p;
                            b |= 1 << p;
                        }
                    }
                    code /= 3;
                }
                (error_overlap(f, a, b) != 0).then_some((a, b))
            })
        });
        if let Some(pair) = hit {
            return (w, pair);
        }
    }
    unreachable!("for any nonzero a some b overlaps, by Parseval")
}

/// All `w`-subsets of `0..n` as masks, in increasing order.
pub(crate) fn k_subsets(n: usize, w: usize) -> Vec<u32> {
    (0..1u32 << n).filter(|m| m.count_ones() as usize == w).collect()
}
