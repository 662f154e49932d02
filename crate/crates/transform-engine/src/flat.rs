//! Recovering Boolean functions from flat spectra with eighth-root phases.

use crate::SpectralVector;
use boolean_fn::{anft_m, BooleanFunction};
use std::f64::consts::FRAC_PI_4;

const TOL: f64 = 1e-6;

/// `S = w^(4 f'(x) + 2 h(x) + c)` with `w = e^(i pi/4)`: the Boolean part, the
/// `Z_4` linear coefficients of `h` and the `Z_8` constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatRecovery {
    /// The monomials of degree two or more.
    pub function: BooleanFunction,
    /// `h_i` for each variable.
    pub linear: Vec<u8>,
    pub constant: u8,
}

impl FlatRecovery {
    pub fn affine_is_trivial(&self) -> bool {
        self.linear.iter().all(|&h| h == 0)
    }
}

/// The `Z_8` phase table if `s` is flat and every coefficient is a positive
/// real multiple of an eighth root of unity.
pub fn flat_phases(s: &SpectralVector) -> Option<Vec<u8>> {
    if !s.is_flat(TOL) {
        return None;
    }
    s.coeffs()
        .iter()
        .map(|z| {
            let t = z.arg() / FRAC_PI_4;
            let r = t.round();
            ((t - r).abs() < TOL).then(|| r.rem_euclid(8.0) as u8)
        })
        .collect()
}

/// Recovers `f'` when `s` is Boolean flat: its `Z_8` ANF may have only 0 or 4
/// on monomials of degree two or more, and even linear coefficients.
pub fn recover_boolean_flat(s: &SpectralVector) -> Option<FlatRecovery> {
    let phases: Vec<u32> = flat_phases(s)?.into_iter().map(u32::from).collect();
    recover_from_phases(s.n(), &phases)
}

/// As [`recover_boolean_flat`], from an exact `Z_8` phase table.
pub fn recover_from_phases(n: usize, phases: &[u32]) -> Option<FlatRecovery> {
    let anf = anft_m(phases, 8).ok()?;
    let mut quad = Vec::new();
    let mut linear = vec![0u8; n];
    for (k, &c) in anf.iter().enumerate() {
        match (k as u32).count_ones() {
            0 => {}
            1 if c % 2 == 0 => linear[k.trailing_zeros() as usize] = (c / 2) as u8,
            1 => return None,
            _ if c == 0 => {}
            _ if c == 4 => quad.push(k as u32),
            _ => return None,
        }
    }
    let function = BooleanFunction::from_monomials(n, &quad).ok()?;
    Some(FlatRecovery { function, linear, constant: anf[0] as u8 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_phase_table() {
        let r = recover_from_phases(3, &[1, 7, 7, 1, 7, 1, 1, 7]).unwrap();
        assert_eq!(r.function, "01,02,12".parse().unwrap());
        assert_eq!(r.linear, vec![3, 3, 3]);
        assert_eq!(r.constant, 1);
        // w^(x0 x1) is flat but not Boolean flat
        assert!(recover_from_phases(2, &[0, 0, 0, 1]).is_none());
    }
}
