//! Classical constructions of self-dual codes as graphs: Paley graphs and
//! (bordered) quadratic residue codes, the power-of-four construction at
//! p = 17, circulant graph codes and nested regular graphs.

pub mod circulant;
pub mod code18;
mod error;
pub mod nested;
pub mod paley;

pub use circulant::{circulant_graph, circulant_search, CirculantHit, CirculantRow};
pub use code18::{code18, coset_partition, valid_h_sets, PowerResidue};
pub use error::ConstructionError;
pub use nested::{
    clique_graph_with_cycles, is_hamiltonian_cycle, nested_build, nested_validate,
    regular_degree_bound, NestedSpec,
};
pub use paley::{
    bordered, bordered_qr, bqr_regularize, is_prime, legendre_sequence, paley_graph, qr_code,
    strongly_regular_parameters, Gfq,
};
