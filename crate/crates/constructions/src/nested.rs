//! Nested regular graphs `R^{k1}_{n1}[R^{k2}_{n2}[...]]`.
//!
//! A spec lists the layers outermost first. Level `j` (1-based, `j >= 2`) is
//! built from the level `j-1` graph by blowing each vertex up into a block
//! `R^{kj}_{nj}` and joining the blocks of every edge `(a, b)` by a perfect
//! matching: vertex `t` of block `a` to vertex `perm[t]` of block `b`.
//! Unlisted matchings are the identity.

use crate::ConstructionError;
use graph_core::Graph;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NestedSpec {
    /// `(n_i, k_i)`, outermost first.
    pub layers: Vec<(usize, usize)>,
    /// `(level, a, b) -> perm` with `a < b` vertices of the level-1 graph.
    pub matchings: BTreeMap<(usize, usize, usize), Vec<usize>>,
}

impl NestedSpec {
    pub fn new(layers: &[(usize, usize)]) -> NestedSpec {
        NestedSpec { layers: layers.to_vec(), matchings: BTreeMap::new() }
    }

    /// Nested clique graph `K_{n1}[K_{n2}[...]]`.
    pub fn cliques(sizes: &[usize]) -> NestedSpec {
        NestedSpec::new(&sizes.iter().map(|&n| (n, n - 1)).collect::<Vec<_>>())
    }

    pub fn with_matching(mut self, level: usize, a: usize, b: usize, perm: &[usize]) -> NestedSpec {
        let (a, b, perm) = if a < b {
            (a, b, perm.to_vec())
        } else {
            // a malformed perm is stored as given and rejected by check()
            let mut inv = vec![usize::MAX; perm.len()];
            perm.iter().enumerate().for_each(|(t, &u)| {
                if let Some(slot) = inv.get_mut(u) {
                    *slot = t;
                }
            });
            (b, a, inv)
        };
        self.matchings.insert((level, a, b), perm);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.layers.iter().map(|l| l.0).product()
    }

    pub fn degree(&self) -> usize {
        self.layers.iter().map(|l| l.1).sum()
    }

    fn check(&self) -> Result<(), ConstructionError> {
        if self.layers.is_empty() {
            return Err(ConstructionError::BadSpec("no layers".into()));
        }
        let total = self.layers.iter().try_fold(1usize, |acc, l| acc.checked_mul(l.0));
        if !total.is_some_and(|t| (1..=32).contains(&t)) {
            return Err(ConstructionError::BadSpec("more than 32 vertices".into()));
        }
        for &(n, k) in &self.layers {
            if k >= n || (n * k) % 2 == 1 {
                return Err(ConstructionError::BadSpec(format!("no {k}-regular graph on {n} vertices")));
            }
        }
        for (&(level, a, b), perm) in &self.matchings {
            if level < 2 || level > self.layers.len() || a >= b {
                return Err(ConstructionError::BadSpec(format!("matching ({level}, {a}, {b})")));
            }
            let n = self.layers[level - 1].0;
            let mut seen = vec![false; n];
            if perm.len() != n || perm.iter().any(|&u| u >= n || std::mem::replace(&mut seen[u], true)) {
                return Err(ConstructionError::BadSpec(format!("matching ({level}, {a}, {b}) is not a permutation")));
            }
        }
        Ok(())
    }

    /// Text form: `layer n k` lines outermost first, then
    /// `match level a b : perm...` lines. `#` starts a comment.
    pub fn parse(text: &str) -> Result<NestedSpec, ConstructionError> {
        let mut spec = NestedSpec::default();
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = || ConstructionError::Parse(format!("line {}: {line:?}", ln + 1));
            let nums = |s: &str| -> Result<Vec<usize>, ConstructionError> {
                s.split_whitespace().map(|t| t.parse().map_err(|_| bad())).collect()
            };
            if let Some(rest) = line.strip_prefix("layer") {
                match nums(rest)?[..] {
                    [n, k] => spec.layers.push((n, k)),
                    _ => return Err(bad()),
                }
            } else if let Some(rest) = line.strip_prefix("match") {
                let (head, perm) = rest.split_once(':').ok_or_else(bad)?;
                match nums(head)?[..] {
                    [level, a, b] if a != b => spec = spec.with_matching(level, a, b, &nums(perm)?),
                    _ => return Err(bad()),
                }
            } else {
                return Err(bad());
            }
        }
        spec.check()?;
        Ok(spec)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (n, k) in &self.layers {
            writeln!(s, "layer {n} {k}").unwrap();
        }
        for ((level, a, b), perm) in &self.matchings {
            let p: Vec<String> = perm.iter().map(|x| x.to_string()).collect();
            writeln!(s, "match {level} {a} {b} : {}", p.join(" ")).unwrap();
        }
        s
    }
}

/// The default `R^k_n`: clique, cycle, or circulant with offsets `1..=k/2`
/// (plus `n/2` when `k` is odd).
fn regular_block(n: usize, k: usize) -> Graph {
    let mut g = Graph::empty(n).expect("n <= 32");
    for i in 0..n {
        for s in 1..=k / 2 {
            g.add_edge(i, (i + s) % n);
        }
        if k % 2 == 1 {
            g.add_edge(i, (i + n / 2) % n);
        }
    }
    g
}

/// Builds the graph; block `b` of the last level holds vertices
/// `b * n_l .. (b + 1) * n_l`.
pub fn nested_build(spec: &NestedSpec) -> Result<Graph, ConstructionError> {
    spec.check()?;
    let (n1, k1) = spec.layers[0];
    let mut g = regular_block(n1, k1);
    for (idx, &(nl, kl)) in spec.layers.iter().enumerate().skip(1) {
        let level = idx + 1;
        let block = regular_block(nl, kl);
        let mut h = Graph::empty(g.n() * nl).expect("checked size");
        for b in 0..g.n() {
            for (s, t) in block.edges() {
                h.add_edge(b * nl + s, b * nl + t);
            }
        }
        for (a, b) in g.edges() {
            let perm = spec.matchings.get(&(level, a, b));
            for t in 0..nl {
                let u = perm.map_or(t, |p| p[t]);
                h.add_edge(a * nl + t, b * nl + u);
            }
        }
        g = h;
    }
    Ok(g)
}

/// Checks `g` against `spec`, given a partition for every level: `parts[0]`
/// splits the vertices of `g` into blocks of size `n_l`, `parts[1]` splits
/// the blocks of `parts[0]` (by index) into blocks of size `n_{l-1}`, and
/// so on. Returns false if the structure does not match.
pub fn nested_validate(
    g: &Graph,
    parts: &[Vec<Vec<usize>>],
    spec: &NestedSpec,
) -> Result<bool, ConstructionError> {
    let l = spec.layers.len();
    if l == 0 || parts.len() + 1 != l {
        return Err(ConstructionError::BadSpec(format!(
            "{} layers need {} partitions, got {}",
            l,
            l.saturating_sub(1),
            parts.len()
        )));
    }
    if g.n() != spec.vertex_count() {
        return Ok(false);
    }
    let mut g = *g;
    for (i, blocks) in parts.iter().enumerate() {
        let (nl, kl) = spec.layers[l - 1 - i];
        let Some(q) = quotient(&g, blocks, nl, kl)? else {
            return Ok(false);
        };
        g = q;
    }
    let (n1, k1) = spec.layers[0];
    Ok(g.n() == n1 && g.is_k_regular(k1))
}

/// Quotient graph if the partition has the required block structure.
fn quotient(g: &Graph, blocks: &[Vec<usize>], nl: usize, kl: usize) -> Result<Option<Graph>, ConstructionError> {
    let mut owner = vec![usize::MAX; g.n()];
    for (b, block) in blocks.iter().enumerate() {
        if block.len() != nl {
            return Err(ConstructionError::BadSpec(format!("block {b} has size {}, expected {nl}", block.len())));
        }
        for &v in block {
            if v >= g.n() || owner[v] != usize::MAX {
                return Err(ConstructionError::BadSpec(format!("vertex {v} missing or repeated")));
            }
            owner[v] = b;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(ConstructionError::BadSpec("partition does not cover all vertices".into()));
    }
    let masks: Vec<u32> = blocks.iter().map(|b| b.iter().fold(0, |m, &v| m | 1 << v)).collect();
    let mut q = Graph::empty(blocks.len()).map_err(|e| ConstructionError::BadSpec(e.to_string()))?;
    for (i, bi) in blocks.iter().enumerate() {
        if !bi.iter().all(|&v| (g.row(v) & masks[i]).count_ones() as usize == kl) {
            return Ok(None);
        }
        for j in i + 1..blocks.len() {
            // each vertex of block i meets block j in 0 or 1 vertices, and
            // either no vertex or all of them do, both ways round
            let hits: Vec<u32> = bi.iter().map(|&v| (g.row(v) & masks[j]).count_ones()).collect();
            if hits.iter().all(|&h| h == 0) {
                continue;
            }
            let back_ok = blocks[j].iter().all(|&v| (g.row(v) & masks[i]).count_ones() == 1);
            if !back_ok || !hits.iter().all(|&h| h == 1) {
                return Ok(None);
            }
            q.add_edge(i, j);
        }
    }
    Ok(Some(q))
}

/// Cliques on the blocks plus the edges of the given cycles.
pub fn clique_graph_with_cycles(
    n: usize,
    blocks: &[Vec<usize>],
    cycles: &[Vec<usize>],
) -> Result<Graph, ConstructionError> {
    let mut g = Graph::empty(n).map_err(|e| ConstructionError::BadSpec(e.to_string()))?;
    let oob = |v: usize| ConstructionError::BadSpec(format!("vertex {v} out of range"));
    for b in blocks {
        for (i, &u) in b.iter().enumerate() {
            for &v in &b[i + 1..] {
                if u.max(v) >= n {
                    return Err(oob(u.max(v)));
                }
                g.add_edge(u, v);
            }
        }
    }
    for c in cycles {
        for (i, &u) in c.iter().enumerate() {
            let v = c[(i + 1) % c.len()];
            if u.max(v) >= n {
                return Err(oob(u.max(v)));
            }
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// True if `cycle` visits every vertex once and consecutive vertices (and the
/// last and first) are adjacent.
pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.n();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = 0u64;
    for &v in cycle {
        if v >= n || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Minimum regular vertex degree for an `[[n,0,d]]` code: regular of degree
/// `d - 1`, or of degree `d` when `n` is odd and `d` even.
pub fn regular_degree_bound(g: &Graph, d: u32) -> bool {
    let d = d as usize;
    match g.regular_degree() {
        Some(k) if d >= 1 && k == d - 1 => true,
        Some(k) => g.n() % 2 == 1 && d.is_multiple_of(2) && k == d,
        None => false,
    }
}
