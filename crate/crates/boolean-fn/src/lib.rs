//! Boolean functions of a few variables: truth tables and ANF, Walsh and
//! generalised ANF transforms, autocorrelations, propagation criteria and the
//! APC distance, plus the link to graphs through quadratic functions.

pub mod autocorr;
pub mod convert;
pub mod criteria;
mod error;
pub mod function;
pub mod transform;

pub use autocorr::{autocorrelation, periodic, periodic_all, AutocorrelationKind, AutocorrelationQuery};
pub use convert::{
    apply_pauli_error, function_graph, function_hypergraph, graph_function, hypergraph_function, lc_on_function,
};
pub use criteria::{
    apc_check, apc_distance, apc_witness, correlation, crypto_properties, epc_check, error_overlap,
    hamming_distance, pair_weight, pc_check, resilience, CryptoProperties,
};
pub use error::BoolError;
pub use function::{BooleanFunction, GeneralizedFunction, MAX_VARS};
pub use transform::{anft, anft_m, anft_m_inverse, fwht, wht};
