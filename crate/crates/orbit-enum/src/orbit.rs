use crate::{GraphStore, OrbitError};
use graph_core::{canonical_graph, independence_number, Graph, GraphKey};

/// All non-isomorphic graphs reachable from `g` by local complementations.
pub fn lc_orbit(g: &Graph) -> GraphStore {
    lc_orbit_limited(g, usize::MAX).expect("no limit")
}

/// As [`lc_orbit`], giving up once more than `limit` graphs are found.
pub fn lc_orbit_limited(g: &Graph, limit: usize) -> Result<GraphStore, OrbitError> {
    let mut store = GraphStore::new(g.n());
    visit_orbit(g, limit, |_, _| {}, &mut store)?;
    Ok(store)
}

/// Walks the orbit with an explicit stack, calling `f` once on each new
/// canonical member together with its key.
pub(crate) fn visit_orbit<F: FnMut(&Graph, &GraphKey)>(
    g: &Graph,
    limit: usize,
    mut f: F,
    store: &mut GraphStore,
) -> Result<(), OrbitError> {
    let start = canonical_graph(g);
    let key = GraphKey::of(&start);
    if !store.insert_key(key.clone()) {
        return Ok(());
    }
    f(&start, &key);
    let mut stack = vec![start];
    while let Some(h) = stack.pop() {
        for v in 0..h.n() {
            // LC at a vertex of degree < 2 changes nothing
            if h.degree(v) < 2 {
                continue;
            }
            let k = canonical_graph(&h.local_complement(v).expect("v < n"));
            let key = GraphKey::of(&k);
            if store.insert_key(key.clone()) {
                if store.len() > limit {
                    return Err(OrbitError::Budget { limit, partial: store.len() });
                }
                f(&k, &key);
                stack.push(k);
            }
        }
    }
    Ok(())
}

/// The first orbit member in graph6 order.
pub fn lc_canonise(g: &Graph) -> Graph {
    lc_orbit(g).first().expect("orbit contains g")
}

/// Largest independence number over the orbit of `g`.
pub fn lambda(g: &Graph) -> usize {
    lc_orbit(g).graphs().map(|h| independence_number(&h)).max().unwrap()
}
