//! Bounds on the Schmidt measure of quadratic graph states.

use crate::par::par_ih;
use crate::TransformError;
use boolean_fn::{function_graph, graph_function, BooleanFunction};
use graph_core::min_vertex_cover_size;
use orbit_enum::lc_orbit;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchmidtBounds {
    pub lower: f64,
    pub upper: usize,
}

/// Bounds for a quadratic. Upper: `min(n - lambda, minimum vertex cover)`.
/// Lower: `n - log2 PAR_IH` of a bipartite orbit member if the orbit has
/// one, which is exact there; otherwise just 1 with an edge, 0 without.
pub fn schmidt_bounds(f: &BooleanFunction) -> Result<SchmidtBounds, TransformError> {
    let g = function_graph(&f.strip_affine())?;
    let n = g.n();
    let orbit = lc_orbit(&g);
    let lambda = orbit.graphs().map(|h| graph_core::independence_number(&h)).max().unwrap_or(n);
    let upper = (n - lambda).min(min_vertex_cover_size(&g));
    let lower = match orbit.graphs().find(|h| h.is_bipartite()) {
        Some(h) => n as f64 - par_ih(&graph_function(&h))?.log2(),
        None if g.edge_count() > 0 => 1.0,
        None => 0.0,
    };
    Ok(SchmidtBounds { lower, upper })
}
