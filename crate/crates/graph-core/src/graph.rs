use crate::error::GraphError;
use std::fmt;

/// Largest supported vertex count. Rows and vertex sets are single `u32` words.
pub const MAX_N: usize = 32;

/// Bitmask over at most 32 vertices.
pub type VertexSet = u32;

#[inline]
pub fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterate over the set bits of a mask, lowest first.
#[inline]
pub fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Simple undirected graph on `n <= 32` vertices.
///
/// Row `i` of `adj` holds the neighbourhood of vertex `i`; rows `>= n` are zero
/// so that derived equality and hashing only see the real graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_N],
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_N {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: [0; MAX_N] })
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.add_edge(0, 1);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::Invalid(format!("self-loop at {a}")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Build from adjacency rows, checking symmetry and the diagonal.
    pub fn from_rows(rows: &[u32]) -> Result<Graph, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let m = low_mask(n);
        for (i, &r) in rows.iter().enumerate() {
            if r & !m != 0 {
                return Err(GraphError::Invalid(format!("row {i} has bits beyond n")));
            }
            if r >> i & 1 == 1 {
                return Err(GraphError::Invalid(format!("self-loop at {i}")));
            }
            g.adj[i] = r;
        }
        for i in 0..n {
            for j in bits(g.adj[i]) {
                if g.adj[j] >> i & 1 == 0 {
                    return Err(GraphError::Invalid(format!("asymmetric entry ({i},{j})")));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b && a < self.n && b < self.n);
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    #[inline]
    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
    }

    #[inline]
    pub fn toggle_edge(&mut self, a: usize, b: usize) {
        debug_assert!(a != b);
        self.adj[a] ^= 1 << b;
        self.adj[b] ^= 1 << a;
    }

    pub fn vertex_mask(&self) -> u32 {
        low_mask(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in bits(self.adj[i] >> i >> 1) {
                out.push((i, i + 1 + j));
            }
        }
        out
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.regular_degree() == Some(k)
    }

    /// Local complementation at `v`: complement the subgraph induced by `N_v`.
    pub fn local_complement(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let mut g = *self;
        g.lc_in_place(v);
        Ok(g)
    }

    /// Unchecked local complementation, for hot loops.
    #[inline]
    pub fn lc_in_place(&mut self, v: usize) {
        let nv = self.adj[v];
        for u in bits(nv) {
            self.adj[u] ^= nv & !(1 << u);
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = *self;
        let all = low_mask(self.n);
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & all & !(1 << v);
        }
        g
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in ascending vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if s & !self.vertex_mask() != 0 {
            return Err(GraphError::Invalid("vertex set is not a subset of V".into()));
        }
        let verts: Vec<usize> = bits(s).collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Remove vertex `v`, shifting higher labels down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        self.induced_subgraph(self.vertex_mask() & !(1 << v))
    }

    /// Add vertex `n` joined to `nbrs`.
    pub fn extend(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        if self.n >= MAX_N {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        if nbrs & !self.vertex_mask() != 0 {
            return Err(GraphError::Invalid("neighbour set outside V".into()));
        }
        let mut g = *self;
        g.n += 1;
        g.adj[self.n] = nbrs;
        for u in bits(nbrs) {
            g.adj[u] |= 1 << self.n;
        }
        Ok(g)
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph { n: self.n, adj: [0; MAX_N] };
        for v in 0..self.n {
            let mut r = 0;
            for u in bits(self.adj[v]) {
                r |= 1 << perm[u];
            }
            g.adj[perm[v]] = r;
        }
        g
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for u in bits(frontier) {
                    next |= self.adj[u];
                }
                frontier = next & !comp;
                comp |= next;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut colour = [u8::MAX; MAX_N];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in bits(self.adj[u]) {
                    if colour[w] == u8::MAX {
                        colour[w] = colour[u] ^ 1;
                        stack.push(w);
                    } else if colour[w] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        bits(s).all(|v| self.adj[v] & s == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        bits(s).all(|v| (self.adj[v] | 1 << v) & s == s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Plain edge-list text: `"n m"` then one `"i j"` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.n(), edges.len());
    for (a, b) in edges {
        s.push_str(&format!("{a} {b}\n"));
    }
    s
}

pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut nums = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| GraphError::Parse(format!("bad integer {t:?}")))
    });
    let mut next = |what: &str| {
        nums.next()
            .unwrap_or_else(|| Err(GraphError::Parse(format!("missing {what}"))))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let a = next("edge endpoint")?;
        let b = next("edge endpoint")?;
        edges.push((a, b));
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lc_worked_example() {
        // N_0 = {1,2,3} with induced edges 12 and 13; after LC only 23 remains there
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let h = g.local_complement(0).unwrap();
        assert!(!h.has_edge(1, 2));
        assert!(!h.has_edge(1, 3));
        assert!(h.has_edge(2, 3));
        assert_eq!(h.row(0), g.row(0));
    }

    #[test]
    fn lc_out_of_range() {
        let g = Graph::path(3).unwrap();
        assert!(matches!(
            g.local_complement(3),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        ));
    }

    #[test]
    fn components_of_two_k2() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components(), vec![0b0011, 0b1100]);
        assert!(!g.is_connected());
    }

    #[test]
    fn induced_keeps_order() {
        let g = Graph::cycle(5).unwrap();
        let h = g.induced_subgraph(0b10110).unwrap();
        // vertices 1,2,4 -> 0,1,2; edges 1-2 only (4 is adjacent to 0 and 3)
        assert_eq!(h.edges(), vec![(0, 1)]);
        assert!(g.induced_subgraph(1 << 7).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(6).unwrap();
        let t = to_edge_list(&g);
        assert!(t.starts_with("6 6\n"));
        assert_eq!(from_edge_list(&t).unwrap(), g);
        assert!(from_edge_list("3 1\n0").is_err());
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01]).is_err());
    }

    #[test]
    fn bipartite() {
        assert!(Graph::cycle(6).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
    }
}
