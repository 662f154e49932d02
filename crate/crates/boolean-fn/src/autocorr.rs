//! Periodic and aperiodic autocorrelations, with and without fixed variables.
//!
//! All four are the same signed sum over a coset of fixed variables:
//! `sum (-1)^(f(x) + f(x + a))` over the `x` with `x & mu == k`. They differ
//! only in which masks are allowed.

use crate::{BoolError, BooleanFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutocorrelationKind {
    /// `r(a)`: nothing fixed.
    Periodic,
    /// `r(a, mu, k)`: variables in `mu` fixed to `k`, shift outside `mu`.
    FixedPeriodic,
    /// `s(a, k)`: the shifted variables themselves fixed to `k`.
    Aperiodic,
    /// `s(a, mu, k)`: variables in `mu` fixed to `k`, shift inside `mu`.
    FixedAperiodic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutocorrelationQuery {
    pub kind: AutocorrelationKind,
    pub a: u32,
    pub mu: u32,
    pub k: u32,
}

impl AutocorrelationQuery {
    pub fn periodic(a: u32) -> Self {
        AutocorrelationQuery { kind: AutocorrelationKind::Periodic, a, mu: 0, k: 0 }
    }

    pub fn fixed_periodic(a: u32, mu: u32, k: u32) -> Self {
        AutocorrelationQuery { kind: AutocorrelationKind::FixedPeriodic, a, mu, k }
    }

    pub fn aperiodic(a: u32, k: u32) -> Self {
        AutocorrelationQuery { kind: AutocorrelationKind::Aperiodic, a, mu: a, k }
    }

    pub fn fixed_aperiodic(a: u32, mu: u32, k: u32) -> Self {
        AutocorrelationQuery { kind: AutocorrelationKind::FixedAperiodic, a, mu, k }
    }

    /// Checks the mask conditions for `n` variables.
    pub fn validate(&self, n: usize) -> Result<(), BoolError> {
        let full = if n >= 32 { u32::MAX } else { (1u32 << n) - 1 };
        let Self { kind, a, mu, k } = *self;
        if (a | mu | k) & !full != 0 {
            return Err(BoolError::Mask(format!("masks exceed {n} variables")));
        }
        let covered = |u: u32, v: u32| u & !v == 0;
        let ok = match kind {
            AutocorrelationKind::Periodic => mu == 0 && k == 0,
            AutocorrelationKind::FixedPeriodic => covered(k, mu) && covered(a, !mu),
            AutocorrelationKind::Aperiodic => mu == a && covered(k, a),
            AutocorrelationKind::FixedAperiodic => covered(a, mu) && covered(k, mu),
        };
        if ok {
            Ok(())
        } else {
            Err(BoolError::Mask(format!("{kind:?} with a={a:#b}, mu={mu:#b}, k={k:#b}")))
        }
    }
}

pub fn autocorrelation(f: &BooleanFunction, q: &AutocorrelationQuery) -> Result<i64, BoolError> {
    q.validate(f.n())?;
    Ok(coset_sum(f, q.a, q.mu, q.k))
}

/// `sum (-1)^(f(x) + f(x + a))` over `x & mu == k`, masks unchecked.
pub(crate) fn coset_sum(f: &BooleanFunction, a: u32, mu: u32, k: u32) -> i64 {
    let t = f.table();
    let free = !mu & ((t.len() - 1) as u32);
    // Enumerate the subsets of `free` and add `k`.
    let mut s: u32 = 0;
    let mut total = 0i64;
    loop {
        let x = (s | k) as usize;
        total += if t[x] == t[x ^ a as usize] { 1 } else { -1 };
        if s == free {
            break;
        }
        s = (s.wrapping_sub(free)) & free;
    }
    total
}

/// Periodic autocorrelation `r(a)`.
pub fn periodic(f: &BooleanFunction, a: u32) -> Result<i64, BoolError> {
    autocorrelation(f, &AutocorrelationQuery::periodic(a))
}

/// `r(a)` for every `a`.
pub fn periodic_all(f: &BooleanFunction) -> Vec<i64> {
    (0..f.table().len() as u32).map(|a| coset_sum(f, a, 0, 0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_enumeration() {
        let f: BooleanFunction = "01,02,12".parse().unwrap();
        assert_eq!(periodic(&f, 0).unwrap(), 8);
        assert_eq!(periodic(&f, 7).unwrap(), -8);
        // x_2 fixed to 1: f = x0 x1 + x0 + x1, shifted by x0.
        let q = AutocorrelationQuery::fixed_periodic(1, 4, 4);
        assert_eq!(autocorrelation(&f, &q).unwrap(), 0);
        assert!(autocorrelation(&f, &AutocorrelationQuery::fixed_periodic(4, 4, 0)).is_err());
        assert!(autocorrelation(&f, &AutocorrelationQuery::aperiodic(1, 2)).is_err());
        assert_eq!(autocorrelation(&f, &AutocorrelationQuery::fixed_aperiodic(7, 7, 0)).unwrap(), -1);
    }
}
