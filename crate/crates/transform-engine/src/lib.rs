//! Tensor transforms of Boolean functions.
//!
//! Spectra under words from a set of 2x2 unitaries are computed with a
//! butterfly pass per factor and walked in Gray order so that consecutive
//! words differ on one axis. On top of that: Boolean-flat recovery, orbits
//! under `{I,H,N}^n` and bit flips, PAR, the Clifford merit factor, the
//! interlace polynomial and two low-PAR constructions.

mod construct;
mod error;
mod flat;
mod gray;
mod interlace;
mod multispectrum;
mod orbit;
mod par;
mod schmidt;
mod spectral;

pub use construct::{construct1, construct2, parse_components, permutation_components, Components};
pub use error::TransformError;
pub use flat::{flat_phases, recover_boolean_flat, recover_from_phases, FlatRecovery};
pub use gray::{changed_position, gray_sequence, gray_word, word_string, MAX_WORDS};
pub use interlace::{interlace_q, interlace_q_with_pivot, InterlaceCache, InterlacePolynomial};
pub use multispectrum::{fold_spectra, Multispectrum, Step, TransformSet};
pub use orbit::{
    canonical_function, connected_functions, extend_functions, function_orbit_counts, function_orbits,
    ihn_orbit, is_connected_function, ix_ihn_orbit, ix_orbit, OrbitCounts, Symmetry,
};
pub use par::{
    cmf, count_flat_spectra, distinct_magnitudes, fourth_power_sum, par, par_hn, par_ih, par_ihn, par_witness,
    spectrum_csv, FLAT_TOL,
};
pub use schmidt::{schmidt_bounds, SchmidtBounds};
pub use spectral::{
    butterfly, butterfly_axis, is_unitary, mat_inverse, mat_mul, rho, Matrix2, SpectralVector, HADAMARD, IDENTITY,
    NEGAHADAMARD, SIGMA_X, SIGMA_Z,
};
