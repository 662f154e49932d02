use crate::TransformError;
use boolean_fn::BooleanFunction;
use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

/// Row-major 2x2 complex matrix.
pub type Matrix2 = [[Complex64; 2]; 2];

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub const IDENTITY: Matrix2 = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
pub const HADAMARD: Matrix2 =
    [[c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)], [c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0)]];
/// Negahadamard `(1 i; 1 -i) / sqrt 2`.
pub const NEGAHADAMARD: Matrix2 =
    [[c(FRAC_1_SQRT_2, 0.0), c(0.0, FRAC_1_SQRT_2)], [c(FRAC_1_SQRT_2, 0.0), c(0.0, -FRAC_1_SQRT_2)]];
pub const SIGMA_X: Matrix2 = [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
pub const SIGMA_Z: Matrix2 = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]];

/// `diag(1, e^(2 pi i / k))`.
pub fn rho(k: u32) -> Matrix2 {
    let mut m = IDENTITY;
    m[1][1] = Complex64::from_polar(1.0, std::f64::consts::TAU / k as f64);
    m
}

pub fn mat_mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[Complex64::default(); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat_inverse(a: &Matrix2) -> Option<Matrix2> {
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if det.norm() < 1e-12 {
        return None;
    }
    Some([[a[1][1] / det, -a[0][1] / det], [-a[1][0] / det, a[0][0] / det]])
}

pub fn is_unitary(a: &Matrix2, tol: f64) -> bool {
    let adj = [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]];
    let p = mat_mul(a, &adj);
    (0..2).all(|i| (0..2).all(|j| (p[i][j] - IDENTITY[i][j]).norm() <= tol))
}

/// A vector of `2^n` complex coefficients; coordinate `x = sum 2^i x_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralVector {
    n: usize,
    coeffs: Vec<Complex64>,
}

impl SpectralVector {
    pub fn new(coeffs: Vec<Complex64>) -> Result<SpectralVector, TransformError> {
        if !coeffs.len().is_power_of_two() {
            return Err(TransformError::Invalid(format!("length {} is not a power of two", coeffs.len())));
        }
        Ok(SpectralVector { n: coeffs.len().trailing_zeros() as usize, coeffs })
    }

    /// `2^(-n/2) (-1)^f(x)`, a unit vector.
    pub fn from_function(f: &BooleanFunction) -> SpectralVector {
        let s = (f.table().len() as f64).sqrt().recip();
        let coeffs = f.table().iter().map(|&v| c(if v == 0 { s } else { -s }, 0.0)).collect();
        SpectralVector { n: f.n(), coeffs }
    }

    /// `(-1)^f(x)` without normalisation.
    pub fn bipolar(f: &BooleanFunction) -> SpectralVector {
        let coeffs = f.table().iter().map(|&v| c(if v == 0 { 1.0 } else { -1.0 }, 0.0)).collect();
        SpectralVector { n: f.n(), coeffs }
    }

    /// `e^(i pi p(x) / 4)` for a table of `Z_8` phases.
    pub fn from_phases(phases: &[u8]) -> Result<SpectralVector, TransformError> {
        let coeffs = phases
            .iter()
            .map(|&p| Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4 * (p % 8) as f64))
            .collect();
        SpectralVector::new(coeffs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn max_norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm_sqr()).fold(0.0, f64::max)
    }

    /// Every coefficient has the same magnitude, within `tol` relative.
    pub fn is_flat(&self, tol: f64) -> bool {
        let mean = self.norm_sqr() / self.coeffs.len() as f64;
        mean > 0.0 && self.coeffs.iter().all(|z| (z.norm_sqr() - mean).abs() <= tol * mean)
    }

    /// Applies `m` to axis `axis` (variable `x_axis`) in place.
    pub fn apply_axis(&mut self, axis: usize, m: &Matrix2) {
        butterfly_axis(&mut self.coeffs, axis, m);
    }

    /// Applies `factors[i]` to variable `x_i` for every `i`.
    pub fn transform(&self, factors: &[Matrix2]) -> Result<SpectralVector, TransformError> {
        let mut out = self.clone();
        butterfly(&mut out.coeffs, factors)?;
        Ok(out)
    }
}

/// One pass of the butterfly on bit `axis`: `y_j = t00 x_j + t01 x_{j+h}`
/// where bit `axis` of `j` is clear, `y_{j+h} = t10 x_j + t11 x_{j+h}`.
pub fn butterfly_axis(v: &mut [Complex64], axis: usize, m: &Matrix2) {
    let h = 1usize << axis;
    assert!(h < v.len(), "axis {axis} out of range");
    for j in 0..v.len() {
        if j & h == 0 {
            let (a, b) = (v[j], v[j + h]);
            v[j] = m[0][0] * a + m[0][1] * b;
            v[j + h] = m[1][0] * a + m[1][1] * b;
        }
    }
}

/// Applies the tensor product of `factors` (factor `i` on variable `x_i`)
/// with `n` butterfly passes; identity factors are skipped.
pub fn butterfly(v: &mut [Complex64], factors: &[Matrix2]) -> Result<(), TransformError> {
    if !v.len().is_power_of_two() || 1usize << factors.len() != v.len() {
        return Err(TransformError::Dimension { expected: v.len().trailing_zeros() as usize, got: factors.len() });
    }
    for (axis, m) in factors.iter().enumerate() {
        if *m != IDENTITY {
            butterfly_axis(v, axis, m);
        }
    }
    Ok(())
}
