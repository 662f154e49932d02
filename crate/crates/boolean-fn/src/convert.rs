//! Graphs and hypergraphs of Boolean functions, Pauli errors and LC.

use crate::{BoolError, BooleanFunction};
use graph_core::{bits, Graph, Hypergraph};

/// Graph of a quadratic function: one edge per quadratic monomial. Affine
/// terms are ignored.
pub fn function_graph(f: &BooleanFunction) -> Result<Graph, BoolError> {
    let d = f.degree();
    if d > 2 {
        return Err(BoolError::NotQuadratic(d));
    }
    let edges: Vec<(usize, usize)> = f
        .monomials()
        .into_iter()
        .filter(|m| m.count_ones() == 2)
        .map(|m| (m.trailing_zeros() as usize, 31 - m.leading_zeros() as usize))
        .collect();
    Ok(Graph::from_edges(f.n(), &edges)?)
}

/// `sum x_i x_j` over the edges of `g`.
pub fn graph_function(g: &Graph) -> BooleanFunction {
    let ms: Vec<u32> = g.edges().into_iter().map(|(a, b)| 1 << a | 1 << b).collect();
    BooleanFunction::from_monomials(g.n(), &ms).expect("graph fits")
}

/// Hypergraph of the monomials of degree two or more.
pub fn function_hypergraph(f: &BooleanFunction) -> Result<Hypergraph, BoolError> {
    let edges = f.monomials().into_iter().filter(|m| m.count_ones() >= 2);
    Ok(Hypergraph::new(f.n(), edges)?)
}

pub fn hypergraph_function(h: &Hypergraph) -> BooleanFunction {
    BooleanFunction::from_monomials(h.n(), h.edges()).expect("hypergraph fits")
}

/// Error image `f(x + a) + b.x` of the Pauli error with bit flips `a` and
/// phase flips `b`; the global phase is dropped.
pub fn apply_pauli_error(f: &BooleanFunction, a: u32, b: u32) -> Result<BooleanFunction, BoolError> {
    let size = f.table().len();
    if (a | b) as usize >= size {
        return Err(BoolError::Mask(format!("a={a:#b}, b={b:#b} exceed {} variables", f.n())));
    }
    let t = f.table();
    BooleanFunction::from_fn(f.n(), |x| (t[(x ^ a) as usize] ^ ((x & b).count_ones() & 1) as u8) == 1)
}

/// Local complementation on the variable `v` of a quadratic function: adds
/// `x_j x_k` for every pair of neighbours `j < k` of `v`.
pub fn lc_on_function(f: &BooleanFunction, v: usize) -> Result<BooleanFunction, BoolError> {
    if v >= f.n() {
        return Err(BoolError::Mask(format!("variable {v} out of range")));
    }
    let g = function_graph(f)?;
    let nb: Vec<usize> = bits(g.row(v)).collect();
    let mut extra = Vec::new();
    for (i, &j) in nb.iter().enumerate() {
        for &k in &nb[i + 1..] {
            extra.push(1u32 << j | 1 << k);
        }
    }
    f.add(&BooleanFunction::from_monomials(f.n(), &extra)?)
}
