use crate::graph::{bits, Graph, VertexSet};

/// A maximum independent set, by branch and bound.
///
/// Branches on a highest-degree vertex of the remaining candidates, first
/// excluding then including it, pruning when the candidates cannot beat the
/// incumbent.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    let mut best = 0u32;
    // Isolated-in-candidates vertices can always be taken, which keeps the
    // search shallow on sparse graphs.
    fn go(g: &Graph, mut cand: u32, mut cur: u32, best: &mut u32) {
        loop {
            let mut free = 0;
            for v in bits(cand) {
                if g.row(v) & cand == 0 {
                    free |= 1 << v;
                }
            }
            if free == 0 {
                break;
            }
            cur |= free;
            cand &= !free;
        }
        if cand == 0 {
            if cur.count_ones() > best.count_ones() {
                *best = cur;
            }
            return;
        }
        if cur.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = bits(cand)
            .max_by_key(|&v| ((g.row(v) & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("non-empty");
        go(g, cand & !(1 << v) & !g.row(v), cur | 1 << v, best);
        go(g, cand & !(1 << v), cur, best);
    }
    go(g, g.vertex_mask(), 0, &mut best);
    best
}

pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).count_ones() as usize
}

pub fn min_vertex_cover_size(g: &Graph) -> usize {
    g.n() - independence_number(g)
}

pub fn clique_number(g: &Graph) -> usize {
    independence_number(&g.complement())
}

/// All maximal cliques (Bron-Kerbosch with Tomita pivoting).
pub fn maximal_cliques(g: &Graph) -> impl Iterator<Item = VertexSet> {
    let mut out = Vec::new();
    fn bk(g: &Graph, r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = bits(p | x)
            .max_by_key(|&u| (g.row(u) & p).count_ones())
            .expect("p non-empty");
        for v in bits(p & !g.row(pivot)) {
            bk(g, r | 1 << v, p & g.row(v), x & g.row(v), out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    bk(g, 0, g.vertex_mask(), 0, &mut out);
    out.into_iter()
}
