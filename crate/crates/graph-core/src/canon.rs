//! Canonical labeling by individualisation and refinement.
//!
//! Equitable colour refinement, then a search over the first non-singleton
//! cell. Every leaf of the search tree is a labeling; we keep the one whose
//! relabelled graph has the least graph6 encoding. Automorphisms found when
//! two leaves coincide prune sibling branches (orbit pruning plus the usual
//! jump back to the common ancestor).

use crate::error::GraphError;
use crate::graph::{bits, low_mask, Graph, VertexSet, MAX_N};
use crate::graph6;

/// Canonical encoding plus the labeling that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// graph6 bytes of the canonically relabelled graph.
    pub code: Vec<u8>,
    /// `perm[v]` is the canonical label of input vertex `v`.
    pub perm: Vec<usize>,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        graph6::decode_bytes(&self.code).expect("canonical code is valid graph6")
    }

    pub fn code_str(&self) -> &str {
        std::str::from_utf8(&self.code).expect("graph6 is ASCII")
    }
}

/// Compact canonical key. Bits of the upper triangle in graph6 order, first
/// bit most significant, so integer order is graph6 order for a fixed `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKey {
    Small(u128),
    Large(Box<[u8]>),
}

impl GraphKey {
    pub fn of(g: &Graph) -> GraphKey {
        let n = g.n();
        if n <= 16 {
            let mut k = 0u128;
            for j in 1..n {
                let col = g.row(j);
                for i in 0..j {
                    k = k << 1 | (col >> i & 1) as u128;
                }
            }
            GraphKey::Small(k)
        } else {
            GraphKey::Large(graph6::encode_bytes(g).into_boxed_slice())
        }
    }

    pub fn to_graph(&self, n: usize) -> Graph {
        match self {
            GraphKey::Small(k) => {
                let mut g = Graph::empty(n).expect("valid n");
                let mut b = n * (n - 1) / 2;
                for j in 1..n {
                    for i in 0..j {
                        b -= 1;
                        if k >> b & 1 == 1 {
                            g.add_edge(i, j);
                        }
                    }
                }
                g
            }
            GraphKey::Large(bytes) => graph6::decode_bytes(bytes).expect("stored graph6"),
        }
    }
}

/// Canonical form with no vertex colouring.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (cg, perm) = canonical_labeling(g, &[low_mask(g.n())]);
    CanonicalForm { code: graph6::encode_bytes(&cg), perm }
}

/// Canonical form respecting an ordered partition of the vertices.
///
/// Only relabelings that map each cell onto itself are considered, so the
/// output is an invariant of coloured isomorphism.
pub fn canonical_form_partitioned(
    g: &Graph,
    partition: &[VertexSet],
) -> Result<CanonicalForm, GraphError> {
    check_partition(g.n(), partition)?;
    let cells: Vec<u32> = partition.iter().copied().filter(|&c| c != 0).collect();
    let (cg, perm) = canonical_labeling(g, &cells);
    Ok(CanonicalForm { code: graph6::encode_bytes(&cg), perm })
}

/// Canonical graph itself; the cheapest entry point for deduplication.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g, &[low_mask(g.n())]).0
}

pub fn canonical_key(g: &Graph) -> GraphKey {
    GraphKey::of(&canonical_graph(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_graph(a) == canonical_graph(b)
}

fn check_partition(n: usize, partition: &[VertexSet]) -> Result<(), GraphError> {
    let mut seen = 0u32;
    for &c in partition {
        if c & !low_mask(n) != 0 {
            return Err(GraphError::InvalidPartition("cell contains vertices >= n".into()));
        }
        if seen & c != 0 {
            return Err(GraphError::InvalidPartition("cells overlap".into()));
        }
        seen |= c;
    }
    if seen != low_mask(n) {
        return Err(GraphError::InvalidPartition("cells do not cover all vertices".into()));
    }
    Ok(())
}

/// Returns the canonical graph and `perm` with `perm[v]` = new label of `v`.
pub(crate) fn canonical_labeling(g: &Graph, cells: &[u32]) -> (Graph, Vec<usize>) {
    let n = g.n();
    let mut cells = cells.to_vec();
    let queue = cells.clone();
    refine(g, &mut cells, queue);
    let mut s = Search {
        g,
        n,
        best: None,
        best_path: Vec::new(),
        path: Vec::with_capacity(n),
        orbits: Vec::new(),
    };
    s.search(cells, 0);
    let (_, leaf) = s.best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in leaf[..n].iter().enumerate() {
        perm[v as usize] = pos;
    }
    (g.permute(&perm), perm)
}

/// Equitable refinement. Cells stay in place; a split cell is replaced by its
/// fragments ordered by neighbour count into the splitter. The procedure
/// depends only on cell positions, never on labels, so it commutes with
/// relabeling.
fn refine(g: &Graph, cells: &mut Vec<u32>, mut queue: Vec<u32>) {
    let n = g.n();
    let mut groups = [0u32; MAX_N + 1];
    while let Some(w) = queue.pop() {
        if cells.len() == n {
            return;
        }
        let mut i = 0;
        while i < cells.len() {
            let c = cells[i];
            if c & (c - 1) == 0 {
                i += 1;
                continue;
            }
            let mut lo = MAX_N + 1;
            let mut hi = 0;
            for v in bits(c) {
                let k = (g.row(v) & w).count_ones() as usize;
                groups[k] |= 1 << v;
                lo = lo.min(k);
                hi = hi.max(k);
            }
            if lo == hi {
                groups[lo] = 0;
                i += 1;
                continue;
            }
            let mut frags = Vec::new();
            for slot in groups.iter_mut().take(hi + 1).skip(lo) {
                if *slot != 0 {
                    frags.push(*slot);
                    *slot = 0;
                }
            }
            let k = frags.len();
            queue.extend_from_slice(&frags);
            cells.splice(i..i + 1, frags);
            i += k;
        }
    }
}

enum Flow {
    Continue,
    /// Abandon everything below this level.
    JumpTo(usize),
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Best encoding so far and its leaf order.
    best: Option<([u32; MAX_N], [u8; MAX_N])>,
    best_path: Vec<usize>,
    path: Vec<usize>,
    /// Union-find per level over automorphisms fixing the path prefix.
    orbits: Vec<[u8; MAX_N]>,
}

fn uf_find(p: &mut [u8; MAX_N], mut x: usize) -> usize {
    while p[x] as usize != x {
        let nx = p[p[x] as usize];
        p[x] = nx;
        x = nx as usize;
    }
    x
}

impl Search<'_> {
    fn search(&mut self, cells: Vec<u32>, level: usize) -> Flow {
        if cells.len() == self.n {
            return self.leaf(&cells);
        }
        let t = cells
            .iter()
            .position(|&c| c & (c - 1) != 0)
            .expect("non-discrete partition has a big cell");
        let target = cells[t];
        if self.orbits.len() <= level {
            self.orbits.push([0; MAX_N]);
        }
        for (i, p) in self.orbits[level].iter_mut().enumerate() {
            *p = i as u8;
        }
        let mut explored: u32 = 0;
        for v in bits(target) {
            if explored != 0 {
                let uf = &mut self.orbits[level];
                let rv = uf_find(uf, v);
                if bits(explored).any(|u| uf_find(uf, u) == rv) {
                    continue;
                }
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut child, vec![1 << v]);
            self.path.truncate(level);
            self.path.push(v);
            match self.search(child, level + 1) {
                Flow::Continue => {}
                Flow::JumpTo(k) if k == level => {}
                Flow::JumpTo(k) => return Flow::JumpTo(k),
            }
        }
        Flow::Continue
    }

    fn leaf(&mut self, cells: &[u32]) -> Flow {
        let n = self.n;
        let mut order = [0u8; MAX_N];
        let mut pos = [0u8; MAX_N];
        for (p, &c) in cells.iter().enumerate() {
            let v = c.trailing_zeros() as u8;
            order[p] = v;
            pos[v as usize] = p as u8;
        }
        // Column j of the relabelled upper triangle, bit-reversed so that
        // integer comparison matches graph6 byte order.
        let mut enc = [0u32; MAX_N];
        let mut ord = std::cmp::Ordering::Equal;
        for j in 1..n {
            let mut col = 0u32;
            for u in bits(self.g.row(order[j] as usize)) {
                let p = pos[u] as usize;
                if p < j {
                    col |= 1 << (31 - p);
                }
            }
            enc[j] = col;
            if ord == std::cmp::Ordering::Equal {
                if let Some((b, _)) = &self.best {
                    ord = col.cmp(&b[j]);
                    if ord == std::cmp::Ordering::Greater {
                        return Flow::Continue;
                    }
                }
            }
        }
        match &self.best {
            None => {
                self.best = Some((enc, order));
                self.best_path = self.path.clone();
                Flow::Continue
            }
            Some(_) if ord == std::cmp::Ordering::Less => {
                self.best = Some((enc, order));
                self.best_path = self.path.clone();
                Flow::Continue
            }
            Some((_, border)) => {
                // Same graph: gamma maps best-leaf order onto this leaf order.
                let border = *border;
                let k = self
                    .path
                    .iter()
                    .zip(&self.best_path)
                    .position(|(a, b)| a != b)
                    .unwrap_or(self.path.len());
                for lvl in 0..=k.min(self.orbits.len().saturating_sub(1)) {
                    let uf = &mut self.orbits[lvl];
                    for p in 0..n {
                        let a = uf_find(uf, border[p] as usize);
                        let b = uf_find(uf, order[p] as usize);
                        if a != b {
                            uf[a.max(b)] = a.min(b) as u8;
                        }
                    }
                }
                Flow::JumpTo(k)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_labelings_agree() {
        let c5 = Graph::cycle(5).unwrap();
        let p = c5.permute(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&c5).code, canonical_form(&p).code);
    }

    #[test]
    fn perm_reproduces_code() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let cf = canonical_form(&g);
        assert_eq!(graph6::encode_bytes(&g.permute(&cf.perm)), cf.code);
    }

    #[test]
    fn complete_graph_is_cheap() {
        let k = Graph::complete(32).unwrap();
        assert_eq!(canonical_graph(&k), k);
    }

    #[test]
    fn key_round_trip() {
        let g = graph6::decode("IheA@GUAo").unwrap();
        assert_eq!(GraphKey::of(&g).to_graph(10), g);
        let big = Graph::cycle(20).unwrap();
        assert_eq!(GraphKey::of(&big).to_graph(20), big);
    }

    #[test]
    fn partition_must_cover() {
        let g = Graph::path(3).unwrap();
        assert!(canonical_form_partitioned(&g, &[0b001, 0b010]).is_err());
        assert!(canonical_form_partitioned(&g, &[0b011, 0b110]).is_err());
        assert!(canonical_form_partitioned(&g, &[0b101, 0b010]).is_ok());
    }

    #[test]
    fn colours_distinguish() {
        // P3 with an endpoint coloured differently from the centre-coloured one
        let g = Graph::path(3).unwrap();
        let a = canonical_form_partitioned(&g, &[0b001, 0b110]).unwrap();
        let b = canonical_form_partitioned(&g, &[0b010, 0b101]).unwrap();
        assert_ne!(a.code, b.code);
        let c = canonical_form_partitioned(&g, &[0b100, 0b011]).unwrap();
        assert_eq!(a.code, c.code);
    }
}
