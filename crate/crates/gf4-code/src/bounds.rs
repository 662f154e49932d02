//! Upper bounds on the distance of self-dual codes and the best known values.

use crate::distance::CodeType;
use crate::CodeError;

/// Rains–Sloane upper bound on the distance for length `n`.
pub fn distance_bound(n: usize, t: CodeType) -> Result<u32, CodeError> {
    if n == 0 {
        return Err(CodeError::Length(n));
    }
    let q = (n / 6) as u32;
    match t {
        CodeType::TypeI => Ok(match n % 6 {
            0 => 2 * q + 1,
            5 => 2 * q + 3,
            _ => 2 * q + 2,
        }),
        CodeType::TypeII if n % 2 == 1 => Err(CodeError::OddTypeII(n)),
        CodeType::TypeII => Ok(2 * q + 2),
    }
}

// (low, high) for n = 2..=30; low is the best known code, high the upper bound
const DM: [(u32, u32); 29] = [
    (2, 2),
    (2, 2),
    (2, 2),
    (3, 3),
    (4, 4),
    (3, 3),
    (4, 4),
    (4, 4),
    (4, 4),
    (5, 5),
    (6, 6),
    (5, 5),
    (6, 6),
    (6, 6),
    (6, 6),
    (7, 7),
    (8, 8),
    (7, 7),
    (8, 8),
    (8, 8),
    (8, 8),
    (8, 9),
    (8, 10),
    (8, 9),
    (8, 10),
    (9, 10),
    (10, 10),
    (11, 11),
    (12, 12),
];

/// Highest distance of any self-dual code of length `n`, as a range when it
/// is not known exactly.
pub fn best_known_dm(n: usize) -> Result<(u32, u32), CodeError> {
    if !(2..=30).contains(&n) {
        return Err(CodeError::OutOfTable(n));
    }
    Ok(DM[n - 2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dm_never_exceeds_the_bound() {
        for n in 2..=30 {
            let (lo, hi) = best_known_dm(n).unwrap();
            assert!(lo <= hi);
            let mut b = distance_bound(n, CodeType::TypeI).unwrap();
            if n % 2 == 0 {
                b = b.max(distance_bound(n, CodeType::TypeII).unwrap());
            }
            assert!(hi <= b, "n = {n}");
        }
    }
}
