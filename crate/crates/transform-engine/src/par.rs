//! Peak-to-average power ratios, flat spectra and the Clifford merit factor.

use crate::multispectrum::{fold_spectra, Multispectrum, TransformSet};
use crate::{SpectralVector, TransformError};
use boolean_fn::BooleanFunction;
use std::fmt::Write as _;

/// Relative tolerance for calling a spectrum flat.
pub const FLAT_TOL: f64 = 1e-9;

/// `2^n max |S_k|^2` over every transform of `s` from `T^n`, with `s`
/// scaled to unit norm.
pub fn par(s: &SpectralVector, set: &TransformSet) -> Result<f64, TransformError> {
    let norm = s.norm_sqr();
    if norm == 0.0 {
        return Err(TransformError::Invalid("zero vector".into()));
    }
    let peak = fold_spectra(s, set, 0.0f64, |m, _, v| m.max(v.max_norm_sqr()), f64::max)?;
    Ok((1u64 << s.n()) as f64 * peak / norm)
}

/// The peak and a word reaching it.
pub fn par_witness(s: &SpectralVector, set: &TransformSet) -> Result<(f64, Vec<u8>), TransformError> {
    let norm = s.norm_sqr();
    if norm == 0.0 {
        return Err(TransformError::Invalid("zero vector".into()));
    }
    let (peak, word) = fold_spectra(
        s,
        set,
        (-1.0f64, Vec::new()),
        |acc, w, v| {
            let m = v.max_norm_sqr();
            if m > acc.0 {
                (m, w.to_vec())
            } else {
                acc
            }
        },
        |a, b| if b.0 > a.0 { b } else { a },
    )?;
    Ok(((1u64 << s.n()) as f64 * peak / norm, word))
}

pub fn par_ihn(f: &BooleanFunction) -> Result<f64, TransformError> {
    par(&SpectralVector::from_function(f), &TransformSet::ihn())
}

pub fn par_ih(f: &BooleanFunction) -> Result<f64, TransformError> {
    par(&SpectralVector::from_function(f), &TransformSet::ih())
}

pub fn par_hn(f: &BooleanFunction) -> Result<f64, TransformError> {
    par(&SpectralVector::from_function(f), &TransformSet::hn())
}

/// Number of flat spectra among the `3^n` `{I,H,N}^n` transforms of `f`.
/// Each word stands for `2^n` of the `6^n` transforms counted with the
/// sign variants `{I, H, N}` times `{I, sigma_z}`, all equally flat.
pub fn count_flat_spectra(f: &BooleanFunction) -> Result<u64, TransformError> {
    let s = SpectralVector::from_function(f);
    fold_spectra(&s, &TransformSet::ihn(), 0u64, |c, _, v| c + v.is_flat(FLAT_TOL) as u64, |a, b| a + b)
}

/// Sum of `|S_k|^4` over all `{I,H,N}^n` transforms of the unnormalised
/// `(-1)^f`, where each spectrum has mean square 1.
pub fn fourth_power_sum(f: &BooleanFunction) -> Result<f64, TransformError> {
    let s = SpectralVector::bipolar(f);
    fold_spectra(
        &s,
        &TransformSet::ihn(),
        0.0f64,
        |a, _, v| a + v.coeffs().iter().map(|z| z.norm_sqr().powi(2)).sum::<f64>(),
        |a, b| a + b,
    )
}

/// Clifford merit factor `6^n / (a - 6^n)`; infinite when `a = 6^n`.
pub fn cmf(f: &BooleanFunction) -> Result<f64, TransformError> {
    let a = fourth_power_sum(f)?;
    let six = 6f64.powi(f.n() as i32);
    let den = a - six;
    if den.abs() <= 1e-9 * six {
        Ok(f64::INFINITY)
    } else {
        Ok(six / den)
    }
}

/// Distinct values of `|S_k|^2` in one spectrum, up to relative tolerance.
pub fn distinct_magnitudes(v: &SpectralVector, tol: f64) -> Vec<f64> {
    let scale = v.max_norm_sqr().max(f64::MIN_POSITIVE);
    let mut out: Vec<f64> = Vec::new();
    for z in v.coeffs() {
        let m = z.norm_sqr();
        if !out.iter().any(|&x| (x - m).abs() <= tol * scale) {
            out.push(m);
        }
    }
    out.sort_by(f64::total_cmp);
    out
}

/// Every spectrum as CSV rows `word,coordinate,re,im`, in Gray order.
pub fn spectrum_csv(s: &SpectralVector, set: &TransformSet) -> Result<String, TransformError> {
    let mut out = String::from("word,coordinate,re,im\n");
    let mut ms = Multispectrum::new(s, set)?;
    while let Some((w, v)) = ms.advance() {
        let name = set.word_name(w);
        for (k, z) in v.coeffs().iter().enumerate() {
            writeln!(out, "{name},{k},{},{}", z.re, z.im).unwrap();
        }
    }
    Ok(out)
}
