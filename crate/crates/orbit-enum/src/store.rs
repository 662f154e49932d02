use graph_core::{canonical_key, Graph, GraphKey};
use std::collections::BTreeSet;

/// Set of canonically labelled graphs on `n` vertices, kept as their keys in
/// graph6 order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphStore {
    n: usize,
    keys: BTreeSet<GraphKey>,
}

impl GraphStore {
    pub fn new(n: usize) -> GraphStore {
        GraphStore { n, keys: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Insert a key; true if it was new.
    pub fn insert_key(&mut self, k: GraphKey) -> bool {
        self.keys.insert(k)
    }

    pub fn contains_key(&self, k: &GraphKey) -> bool {
        self.keys.contains(k)
    }

    pub fn remove_key(&mut self, k: &GraphKey) -> bool {
        self.keys.remove(k)
    }

    /// Canonises `g` first.
    pub fn insert(&mut self, g: &Graph) -> bool {
        self.insert_key(canonical_key(g))
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.contains_key(&canonical_key(g))
    }

    /// Removes and returns the first graph in key order.
    pub fn remove_next(&mut self) -> Option<Graph> {
        self.keys.pop_first().map(|k| k.to_graph(self.n))
    }

    pub fn first(&self) -> Option<Graph> {
        self.keys.first().map(|k| k.to_graph(self.n))
    }

    pub fn keys(&self) -> impl Iterator<Item = &GraphKey> {
        self.keys.iter()
    }

    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.keys.iter().map(|k| k.to_graph(self.n))
    }
}
