//! Walking every transform `U_0 (x) .. (x) U_{n-1}` from a transform set, one
//! butterfly pass per step.

use crate::gray::{changed_position, gray_word};
use crate::spectral::{
    is_unitary, mat_inverse, mat_mul, Matrix2, SpectralVector, HADAMARD, IDENTITY, NEGAHADAMARD, SIGMA_X,
};
use crate::TransformError;

#[derive(Clone, Debug)]
pub struct TransformSet {
    names: Vec<String>,
    mats: Vec<Matrix2>,
    /// `step[a][b] = M_b M_a^{-1}`.
    step: Vec<Vec<Matrix2>>,
}

impl TransformSet {
    /// A set of unitary matrices; each must be unitary within `1e-12`.
    pub fn new(named: Vec<(String, Matrix2)>) -> Result<TransformSet, TransformError> {
        if named.is_empty() || named.len() > 36 {
            return Err(TransformError::Invalid(format!("{} matrices", named.len())));
        }
        let (names, mats): (Vec<String>, Vec<Matrix2>) = named.into_iter().unzip();
        for (name, m) in names.iter().zip(&mats) {
            if !is_unitary(m, 1e-12) {
                return Err(TransformError::NotUnitary(name.clone()));
            }
        }
        let mut step = Vec::new();
        for (a, ma) in mats.iter().enumerate() {
            let inv = mat_inverse(ma).ok_or_else(|| TransformError::Singular(names[a].clone()))?;
            step.push(mats.iter().map(|mb| mat_mul(mb, &inv)).collect());
        }
        Ok(TransformSet { names, mats, step })
    }

    fn of(list: &[(&str, Matrix2)]) -> TransformSet {
        TransformSet::new(list.iter().map(|(s, m)| (s.to_string(), *m)).collect()).expect("built-in sets are unitary")
    }

    /// `{I, H, N}`, symbols 0, 1, 2.
    pub fn ihn() -> TransformSet {
        Self::of(&[("I", IDENTITY), ("H", HADAMARD), ("N", NEGAHADAMARD)])
    }

    pub fn ih() -> TransformSet {
        Self::of(&[("I", IDENTITY), ("H", HADAMARD)])
    }

    pub fn hn() -> TransformSet {
        Self::of(&[("H", HADAMARD), ("N", NEGAHADAMARD)])
    }

    /// `{I, sigma_x}`: the bit flips.
    pub fn ix() -> TransformSet {
        Self::of(&[("I", IDENTITY), ("X", SIGMA_X)])
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn matrix(&self, i: usize) -> &Matrix2 {
        &self.mats[i]
    }

    /// `M_to M_from^{-1}`.
    pub fn transition(&self, from: usize, to: usize) -> &Matrix2 {
        &self.step[from][to]
    }

    /// Number of words of length `n`, if it fits.
    pub fn word_count(&self, n: usize) -> Result<u64, TransformError> {
        (self.len() as u64)
            .checked_pow(n as u32)
            .filter(|&t| t <= crate::gray::MAX_WORDS)
            .ok_or(TransformError::TooLarge(self.len(), n))
    }

    /// Factors for a word; `word[i]` acts on `x_i`.
    pub fn factors(&self, word: &[u8]) -> Vec<Matrix2> {
        word.iter().map(|&w| self.mats[w as usize]).collect()
    }

    pub fn word_name(&self, word: &[u8]) -> String {
        word.iter().map(|&w| self.names[w as usize].as_str()).collect::<Vec<_>>().join("")
    }
}

/// One applied step: the matrix on a single axis, or the initial transform.
#[derive(Clone, Debug, PartialEq)]
pub enum Step {
    /// The first word, applied in full.
    Initial(Vec<u8>),
    /// `transition(from, to)` on variable `axis`.
    Axis { axis: usize, from: u8, to: u8 },
}

/// Every transform of `s` from `T^n` in Gray order (or a contiguous range of
/// that order). Each call to [`Multispectrum::advance`] performs one
/// single-axis pass.
pub struct Multispectrum<'a> {
    set: &'a TransformSet,
    base: &'a SpectralVector,
    n: usize,
    next: u64,
    end: u64,
    word: Vec<u8>,
    current: SpectralVector,
    last: Option<Step>,
}

impl<'a> Multispectrum<'a> {
    pub fn new(s: &'a SpectralVector, set: &'a TransformSet) -> Result<Multispectrum<'a>, TransformError> {
        let total = set.word_count(s.n())?;
        Self::range(s, set, 0, total)
    }

    /// Words `start..end` of the Gray order; the first is computed directly.
    pub fn range(
        s: &'a SpectralVector,
        set: &'a TransformSet,
        start: u64,
        end: u64,
    ) -> Result<Multispectrum<'a>, TransformError> {
        let total = set.word_count(s.n())?;
        if start > end || end > total {
            return Err(TransformError::Invalid(format!("range {start}..{end} of {total}")));
        }
        Ok(Multispectrum {
            set,
            base: s,
            n: s.n(),
            next: start,
            end,
            word: Vec::new(),
            current: s.clone(),
            last: None,
        })
    }

    /// Moves to the next transform and returns its word and spectrum. Word
    /// symbol `i` is the factor on `x_i`.
    pub fn advance(&mut self) -> Option<(&[u8], &SpectralVector)> {
        if self.next >= self.end {
            return None;
        }
        let k = self.set.len();
        // The first symbol of a word (the Gray prefix) is the factor on x_0.
        let w = gray_word(k, self.n, self.next);
        if self.last.is_none() {
            self.current = self.base.transform(&self.set.factors(&w)).expect("length matches");
            self.last = Some(Step::Initial(w.clone()));
        } else {
            let axis = changed_position(&self.word, &w).expect("Gray step");
            let (from, to) = (self.word[axis], w[axis]);
            self.current.apply_axis(axis, self.set.transition(from as usize, to as usize));
            self.last = Some(Step::Axis { axis, from, to });
        }
        self.word = w;
        self.next += 1;
        Some((&self.word, &self.current))
    }

    pub fn last_step(&self) -> Option<&Step> {
        self.last.as_ref()
    }
}

/// Calls `f` on every transform of `s`, splitting the Gray order into
/// contiguous segments run in parallel, and combines the results with `join`.
pub fn fold_spectra<T, F, J>(s: &SpectralVector, set: &TransformSet, init: T, f: F, join: J) -> Result<T, TransformError>
where
    T: Send + Clone + Sync,
    F: Fn(T, &[u8], &SpectralVector) -> T + Sync,
    J: Fn(T, T) -> T + Sync,
{
    use rayon::prelude::*;
    let total = set.word_count(s.n())?;
    let segments = (4 * rayon::current_num_threads() as u64).min(total).max(1);
    let size = total.div_ceil(segments);
    let parts: Vec<T> = (0..segments)
        .into_par_iter()
        .map(|i| {
            let (a, b) = (i * size, ((i + 1) * size).min(total));
            let mut acc = init.clone();
            let mut ms = Multispectrum::range(s, set, a, b).expect("valid range");
            while let Some((w, v)) = ms.advance() {
                acc = f(acc, w, v);
            }
            acc
        })
        .collect();
    Ok(parts.into_iter().fold(init, join))
}
