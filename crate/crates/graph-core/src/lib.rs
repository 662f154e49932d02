//! Small simple graphs (at most 32 vertices) stored as adjacency bitmasks,
//! with local complementation, canonical labeling, graph6 I/O, exact
//! independence numbers, maximal cliques and exhaustive generation.

pub mod canon;
mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod hypergraph;
pub mod independence;

pub use canon::{
    canonical_form, canonical_form_partitioned, canonical_graph, canonical_key, is_isomorphic,
    CanonicalForm, GraphKey,
};
pub use error::GraphError;
pub use generate::{extensions, generate_all, generate_connected};
pub use graph::{bits, from_edge_list, low_mask, to_edge_list, Graph, VertexSet, MAX_N};
pub use hypergraph::Hypergraph;
pub use independence::{
    clique_number, independence_number, max_independent_set, maximal_cliques,
    min_vertex_cover_size,
};
