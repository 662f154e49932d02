//! The interlace polynomial `Q(G, z)`.

use graph_core::{bits, canonical_graph, canonical_key, Graph, GraphKey};
use std::collections::HashMap;
use std::fmt;

/// Coefficients of `Q(G, z)`, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InterlacePolynomial {
    coeffs: Vec<u64>,
}

impl InterlacePolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> InterlacePolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        InterlacePolynomial { coeffs }
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> InterlacePolynomial {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        InterlacePolynomial { coeffs: c }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * z + c as f64)
    }

    fn add(&self, other: &InterlacePolynomial) -> InterlacePolynomial {
        let mut c = vec![0; self.coeffs.len().max(other.coeffs.len())];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[i] += a;
        }
        for (i, &b) in other.coeffs.iter().enumerate() {
            c[i] += b;
        }
        InterlacePolynomial::new(c)
    }

    fn shift(&self, k: usize) -> InterlacePolynomial {
        let mut c = vec![0; k];
        c.extend_from_slice(&self.coeffs);
        InterlacePolynomial::new(c)
    }
}

impl fmt::Display for InterlacePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            terms.push(match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "z".into(),
                (1, c) => format!("{c}z"),
                (i, 1) => format!("z^{i}"),
                (i, c) => format!("{c}z^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Memo table keyed by canonical form, reusable across graphs.
#[derive(Default)]
pub struct InterlaceCache {
    memo: HashMap<(usize, GraphKey), InterlacePolynomial>,
}

impl InterlaceCache {
    pub fn new() -> InterlaceCache {
        InterlaceCache::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `Q(G) = Q(G - u) + Q(G^u - u) + Q(G^{uvu} - u)` with `u` the lowest
    /// non-isolated vertex and `v` its lowest neighbour; each isolated vertex
    /// contributes a factor `z`.
    pub fn q(&mut self, g: &Graph) -> InterlacePolynomial {
        let isolated = (0..g.n()).filter(|&v| g.row(v) == 0).count();
        if isolated == g.n() {
            return InterlacePolynomial::monomial(isolated);
        }
        let core = if isolated > 0 {
            let keep = (0..g.n()).filter(|&v| g.row(v) != 0).fold(0u32, |m, v| m | 1 << v);
            g.induced_subgraph(keep).expect("subset of vertices")
        } else {
            *g
        };
        let c = canonical_graph(&core);
        let key = (c.n(), canonical_key(&c));
        if let Some(p) = self.memo.get(&key) {
            return p.shift(isolated);
        }
        let u = 0;
        let v = bits(c.row(u)).next().expect("no isolated vertices");
        let gu = c.local_complement(u).expect("vertex exists");
        let pivot = gu.local_complement(v).and_then(|h| h.local_complement(u)).expect("vertex exists");
        let p = self
            .q(&c.delete_vertex(u).expect("vertex exists"))
            .add(&self.q(&gu.delete_vertex(u).expect("vertex exists")))
            .add(&self.q(&pivot.delete_vertex(u).expect("vertex exists")));
        self.memo.insert(key, p.clone());
        p.shift(isolated)
    }
}

pub fn interlace_q(g: &Graph) -> InterlacePolynomial {
    InterlaceCache::new().q(g)
}

/// The recursion with an arbitrary edge `uv` for the first step, for
/// checking that the pivot choice does not matter.
pub fn interlace_q_with_pivot(g: &Graph, u: usize, v: usize) -> Option<InterlacePolynomial> {
    if u >= g.n() || !g.has_edge(u, v) {
        return None;
    }
    let mut cache = InterlaceCache::new();
    let gu = g.local_complement(u).ok()?;
    let pivot = gu.local_complement(v).and_then(|h| h.local_complement(u)).ok()?;
    Some(
        cache
            .q(&g.delete_vertex(u).ok()?)
            .add(&cache.q(&gu.delete_vertex(u).ok()?))
            .add(&cache.q(&pivot.delete_vertex(u).ok()?)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        assert_eq!(interlace_q(&Graph::empty(1).unwrap()).coeffs(), &[0, 1]);
        assert_eq!(interlace_q(&Graph::complete(2).unwrap()).coeffs(), &[0, 3]);
        assert_eq!(interlace_q(&Graph::empty(3).unwrap()).to_string(), "z^3");
    }
}
