//! k-ary reflected Gray code sequences.

use crate::TransformError;

/// Largest sequence length accepted.
pub const MAX_WORDS: u64 = 1 << 48;

/// Gray code `q_{k,r}`: all `k^r` words over `0..k`, consecutive words
/// differing in one position. `q_{k,1} = (0, .., k-1)` and `q_{k,r}` is the
/// concatenation over `c` of `c` prefixed to `q_{k,r-1}`, reversed for odd `c`.
/// Words are written with the prefix symbol first.
pub fn gray_sequence(k: usize, r: usize) -> Result<Vec<Vec<u8>>, TransformError> {
    if k == 0 || r == 0 || k > 256 {
        return Err(TransformError::Invalid(format!("alphabet {k}, length {r}")));
    }
    let total = (k as u64).checked_pow(r as u32).filter(|&t| t <= MAX_WORDS);
    if total.is_none() {
        return Err(TransformError::TooLarge(k, r));
    }
    let mut seq: Vec<Vec<u8>> = (0..k).map(|c| vec![c as u8]).collect();
    for _ in 1..r {
        let mut next = Vec::with_capacity(seq.len() * k);
        for c in 0..k {
            let mut block: Vec<Vec<u8>> = seq.iter().map(|w| prefixed(c as u8, w)).collect();
            if c % 2 == 1 {
                block.reverse();
            }
            next.extend(block);
        }
        seq = next;
    }
    Ok(seq)
}

fn prefixed(c: u8, w: &[u8]) -> Vec<u8> {
    let mut v = Vec::with_capacity(w.len() + 1);
    v.push(c);
    v.extend_from_slice(w);
    v
}

/// Word number `i` of `q_{k,r}` without building the sequence. Each prefix
/// symbol that is odd reverses everything after it.
pub fn gray_word(k: usize, r: usize, mut i: u64) -> Vec<u8> {
    let mut digits = vec![0u64; r];
    for d in digits.iter_mut().rev() {
        *d = i % k as u64;
        i /= k as u64;
    }
    let mut flips = 0u64;
    digits
        .into_iter()
        .map(|d| {
            let g = if flips.is_multiple_of(2) { d } else { k as u64 - 1 - d };
            flips += g;
            g as u8
        })
        .collect()
}

/// The single position where two consecutive words differ.
pub fn changed_position(a: &[u8], b: &[u8]) -> Option<usize> {
    let mut diff = a.iter().zip(b).enumerate().filter(|(_, (x, y))| x != y).map(|(i, _)| i);
    let first = diff.next()?;
    diff.next().is_none().then_some(first)
}

pub fn word_string(w: &[u8]) -> String {
    w.iter().map(|&d| char::from_digit(d as u32, 36).unwrap_or('?')).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ternary_pairs() {
        let q: Vec<String> = gray_sequence(3, 2).unwrap().iter().map(|w| word_string(w)).collect();
        assert_eq!(q, ["00", "01", "02", "12", "11", "10", "20", "21", "22"]);
        assert_eq!(gray_sequence(2, 1).unwrap(), vec![vec![0], vec![1]]);
        assert!(matches!(gray_sequence(2, 49), Err(TransformError::TooLarge(2, 49))));
    }
}
