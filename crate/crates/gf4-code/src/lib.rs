//! Self-dual additive codes over GF(4) of dimension zero, mostly in graph
//! form (generator matrix `Gamma + w I`).

pub mod bounds;
pub mod code;
pub mod distance;
mod error;
pub mod gf4;
pub mod z4;

pub use bounds::{best_known_dm, distance_bound};
pub use code::{code_graph, graph_to_code, stabilizer_to_graph, GraphCode, GraphForm, StabilizerCode};
pub use distance::{
    code_distance, code_distance_transitive, code_type, distance_at_least, naive_weight_distribution, partial_weight_distribution,
    weight_count, CodeType, WeightDistribution,
};
pub use error::CodeError;
pub use gf4::{trace_inner_field, Gf4, Gf4Vec};
pub use z4::{to_z4, z4_weight_distribution};
