//! Tensor-product transforms on vectors of length `2^n`, one axis at a time.
//! Axis `i` pairs index `j` (bit `i` clear) with `j + 2^i`.

use crate::BoolError;

fn check_len(len: usize) {
    assert!(len.is_power_of_two(), "length {len} is not a power of two");
}

/// Mod 2 algebraic normal form transform, `(1 0; 1 1)` on every axis. It is
/// its own inverse, so it maps a truth table to its ANF and back.
pub fn anft(t: &[u8]) -> Vec<u8> {
    check_len(t.len());
    let mut v: Vec<u8> = t.iter().map(|&x| x & 1).collect();
    let mut h = 1;
    while h < v.len() {
        for j in 0..v.len() {
            if j & h != 0 {
                v[j] ^= v[j - h];
            }
        }
        h <<= 1;
    }
    v
}

fn check_modulus(m: u32) -> Result<(), BoolError> {
    if m < 2 || m % 2 == 1 {
        return Err(BoolError::Modulus(m));
    }
    Ok(())
}

/// Generalised ANF of a `Z_m`-valued table: `(1 0; m-1 1)` on every axis.
pub fn anft_m(t: &[u32], m: u32) -> Result<Vec<u32>, BoolError> {
    check_modulus(m)?;
    check_len(t.len());
    let mut v: Vec<u32> = t.iter().map(|&x| x % m).collect();
    let mut h = 1;
    while h < v.len() {
        for j in 0..v.len() {
            if j & h != 0 {
                v[j] = (v[j] + m - v[j - h]) % m;
            }
        }
        h <<= 1;
    }
    Ok(v)
}

/// Inverse of [`anft_m`]: `(1 0; 1 1)` mod `m` on every axis.
pub fn anft_m_inverse(c: &[u32], m: u32) -> Result<Vec<u32>, BoolError> {
    check_modulus(m)?;
    check_len(c.len());
    let mut v: Vec<u32> = c.iter().map(|&x| x % m).collect();
    let mut h = 1;
    while h < v.len() {
        for j in 0..v.len() {
            if j & h != 0 {
                v[j] = (v[j] + v[j - h]) % m;
            }
        }
        h <<= 1;
    }
    Ok(v)
}

/// Unnormalised Walsh-Hadamard transform in place.
pub fn fwht(v: &mut [i64]) {
    check_len(v.len());
    let mut h = 1;
    while h < v.len() {
        for j in 0..v.len() {
            if j & h == 0 {
                let (x, y) = (v[j], v[j + h]);
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
        h <<= 1;
    }
}

/// Walsh-Hadamard transform normalised by `2^(-n/2)`, so it is unitary.
pub fn wht(v: &[f64]) -> Vec<f64> {
    check_len(v.len());
    let mut out = v.to_vec();
    let mut h = 1;
    while h < out.len() {
        for j in 0..out.len() {
            if j & h == 0 {
                let (x, y) = (out[j], out[j + h]);
                out[j] = x + y;
                out[j + h] = x - y;
            }
        }
        h <<= 1;
    }
    let scale = (out.len() as f64).sqrt().recip();
    out.iter_mut().for_each(|x| *x *= scale);
    out
}
