use crate::canon::{canonical_graph, GraphKey};
use crate::error::GraphError;
use crate::graph::{Graph, MAX_N};
use std::collections::HashSet;

/// The `2^n - 1` one-vertex extensions of `g`: a new vertex `n` joined to
/// each nonempty subset of the existing vertices.
pub fn extensions(g: &Graph) -> Result<impl Iterator<Item = Graph> + '_, GraphError> {
    if g.n() >= MAX_N {
        return Err(GraphError::TooManyVertices(g.n() + 1));
    }
    let top: u64 = 1 << g.n();
    Ok((1..top).map(move |s| g.extend(s as u32).expect("subset of V")))
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, connected or not, sorted by canonical key.
///
/// Built by vertex extension from the classes on `n - 1` vertices; every
/// graph is an extension of one of its vertex-deleted subgraphs.
pub fn generate_all(n: usize) -> Result<Vec<Graph>, GraphError> {
    if !(1..=10).contains(&n) {
        return Err(GraphError::Invalid(format!("generation supports 1..=10 vertices, got {n}")));
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let top: u64 = 1 << g.n();
            for s in 0..top {
                let c = canonical_graph(&g.extend(s as u32)?);
                if seen.insert(GraphKey::of(&c)) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    level.sort_by_cached_key(GraphKey::of);
    Ok(level)
}

/// One representative per isomorphism class of connected graphs on `n` vertices.
pub fn generate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    Ok(generate_all(n)?.into_iter().filter(Graph::is_connected).collect())
}
