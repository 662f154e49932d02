use crate::canon::{canonical_labeling, CanonicalForm};
use crate::error::GraphError;
use crate::graph::{bits, low_mask, Graph, MAX_N};
use crate::graph6;

/// Hypergraph on `n` vertices; every edge has at least two vertices.
/// Edges are kept sorted and distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<u32>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = u32>) -> Result<Hypergraph, GraphError> {
        if n == 0 || n > MAX_N {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut e: Vec<u32> = edges.into_iter().collect();
        for &m in &e {
            if m & !low_mask(n) != 0 {
                return Err(GraphError::Invalid(format!("edge {m:#b} outside 0..{n}")));
            }
            if m.count_ones() < 2 {
                return Err(GraphError::Invalid(format!("edge {m:#b} has fewer than 2 vertices")));
            }
        }
        e.sort_unstable();
        let before = e.len();
        e.dedup();
        if e.len() != before {
            return Err(GraphError::Invalid("repeated edge".into()));
        }
        Ok(Hypergraph { n, edges: e })
    }

    pub fn from_graph(g: &Graph) -> Hypergraph {
        let edges = g.edges().into_iter().map(|(a, b)| 1u32 << a | 1 << b);
        Hypergraph::new(g.n(), edges).expect("graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[u32] {
        &self.edges
    }

    /// Connected in the usual sense; an uncovered vertex counts as its own component.
    pub fn is_connected(&self) -> bool {
        let mut comp = 1u32;
        loop {
            let mut next = comp;
            for &e in &self.edges {
                if e & comp != 0 {
                    next |= e;
                }
            }
            if next == comp {
                return comp == low_mask(self.n);
            }
            comp = next;
        }
    }

    pub fn permute(&self, perm: &[usize]) -> Hypergraph {
        let edges = self.edges.iter().map(|&e| bits(e).fold(0u32, |m, v| m | 1 << perm[v]));
        Hypergraph::new(self.n, edges).expect("permutation keeps edges valid")
    }

    /// Incidence graph: the original vertices, then one vertex per edge of
    /// size three or more. Two-edges go in directly as graph edges.
    pub fn incidence_graph(&self) -> Result<(Graph, [u32; 2]), GraphError> {
        let big: Vec<u32> = self.edges.iter().copied().filter(|e| e.count_ones() > 2).collect();
        let total = self.n + big.len();
        if total > MAX_N {
            return Err(GraphError::Invalid(format!(
                "incidence graph needs {total} vertices, more than {MAX_N}"
            )));
        }
        let mut g = Graph::empty(total)?;
        for &e in &self.edges {
            if e.count_ones() == 2 {
                let a = e.trailing_zeros() as usize;
                let b = 31 - e.leading_zeros() as usize;
                g.add_edge(a, b);
            }
        }
        for (k, &e) in big.iter().enumerate() {
            for v in bits(e) {
                g.add_edge(v, self.n + k);
            }
        }
        let orig = low_mask(self.n);
        Ok((g, [orig, low_mask(total) & !orig]))
    }

    /// Canonical form through the coloured incidence graph. `perm` covers the
    /// original vertices only.
    pub fn canonical_form(&self) -> Result<CanonicalForm, GraphError> {
        let (g, cells) = self.incidence_graph()?;
        let cells: Vec<u32> = cells.into_iter().filter(|&c| c != 0).collect();
        let (cg, perm) = canonical_labeling(&g, &cells);
        Ok(CanonicalForm {
            code: graph6::encode_bytes(&cg),
            perm: perm[..self.n].to_vec(),
        })
    }

    /// The isomorphic copy labelled canonically.
    pub fn canonical(&self) -> Result<Hypergraph, GraphError> {
        let cf = self.canonical_form()?;
        Ok(self.permute(&cf.perm))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, e: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, e.iter().map(|s| s.iter().fold(0u32, |m, &v| m | 1 << v))).unwrap()
    }

    #[test]
    fn worked_example_is_isomorphic_to_its_image() {
        let a = h(4, &[&[0, 1, 2], &[1, 2, 3], &[1, 2], &[1, 3]]);
        let b = h(4, &[&[0, 2, 3], &[1, 2, 3], &[1, 3], &[2, 3]]);
        assert_eq!(a.canonical_form().unwrap().code, b.canonical_form().unwrap().code);
        assert_eq!(a.canonical().unwrap(), b.canonical().unwrap());
    }

    #[test]
    fn distinguishes_edge_vs_triangle_hyperedge() {
        let tri = h(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let cube = h(3, &[&[0, 1, 2]]);
        assert_ne!(tri.canonical_form().unwrap().code, cube.canonical_form().unwrap().code);
    }

    #[test]
    fn validation() {
        assert!(Hypergraph::new(3, [0b1]).is_err());
        assert!(Hypergraph::new(3, [0b1000]).is_err());
        assert!(Hypergraph::new(3, [0b11, 0b11]).is_err());
        assert!(h(3, &[&[0, 1], &[1, 2]]).is_connected());
        assert!(!h(4, &[&[0, 1, 2]]).is_connected());
    }
}
