//! Classification of all LC orbits of connected graphs on `n` vertices.

use crate::orbit::{lc_orbit_limited, visit_orbit};
use crate::{GraphStore, OrbitError, OrbitRecord};
use gf4_code::{partial_weight_distribution, GraphCode};
use graph_core::{canonical_graph, generate_connected, independence_number, Graph, GraphKey};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashSet};

/// Largest partial weight cutoff picked automatically.
pub const MAX_AUTO_CUTOFF: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Canonise every seed through its whole orbit.
    Canonise,
    /// Keep every orbit member seen so far and skip seeds already covered.
    Fast,
    /// Hold one orbit at a time, striking its members off the seed set.
    LowMem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seed {
    AllConnected,
    /// One-vertex extensions of one graph from each orbit on `n - 1` vertices.
    Extensions,
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub strategy: Strategy,
    pub seed: Seed,
    /// Partial weight distribution cutoff for bucketing; `None` picks one.
    pub pwd_cutoff: Option<usize>,
    /// Give up on any orbit with more members than this.
    pub max_orbit: usize,
}

impl ClassifyOptions {
    pub fn new(strategy: Strategy, seed: Seed) -> ClassifyOptions {
        ClassifyOptions { strategy, seed, pwd_cutoff: None, max_orbit: usize::MAX }
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub n: usize,
    /// Cutoff used for bucketing and stored in each record.
    pub pwd_cutoff: usize,
    pub seeds: usize,
    pub buckets: usize,
    /// Sorted by distance (highest first), then representative.
    pub records: Vec<OrbitRecord>,
}

pub fn classify(n: usize, strategy: Strategy, seed: Seed) -> Result<Vec<OrbitRecord>, OrbitError> {
    Ok(classify_with(n, &ClassifyOptions::new(strategy, seed))?.records)
}

pub fn classify_with(n: usize, opts: &ClassifyOptions) -> Result<Classification, OrbitError> {
    let seeds = seed_graphs(n, opts.seed)?;
    classify_seeds(n, seeds, opts)
}

/// Classifications for every `n` in `1..=max_n`, each level seeded by the
/// extensions of the previous one.
pub fn classify_up_to(max_n: usize, opts: &ClassifyOptions) -> Result<Vec<Classification>, OrbitError> {
    let mut out: Vec<Classification> = Vec::new();
    for n in 1..=max_n {
        let seeds = match out.last() {
            Some(prev) if opts.seed == Seed::Extensions => {
                let reps: Vec<Graph> = prev.records.iter().map(OrbitRecord::graph).collect::<Result<_, _>>()?;
                extension_set(&reps)
            }
            _ => seed_graphs(n, opts.seed)?,
        };
        out.push(classify_seeds(n, seeds, opts)?);
    }
    Ok(out)
}

/// Canonical seed graphs, without isomorphs.
pub fn seed_graphs(n: usize, seed: Seed) -> Result<Vec<Graph>, OrbitError> {
    match seed {
        Seed::AllConnected if (1..=10).contains(&n) => {
            generate_connected(n).map_err(|_| OrbitError::UnsupportedN(n))
        }
        Seed::Extensions if (1..=2).contains(&n) => seed_graphs(n, Seed::AllConnected),
        Seed::Extensions if n <= 12 => {
            let reps = classify(n - 1, Strategy::LowMem, Seed::Extensions)?;
            let reps: Vec<Graph> = reps.iter().map(OrbitRecord::graph).collect::<Result<_, _>>()?;
            Ok(extension_set(&reps))
        }
        _ => Err(OrbitError::UnsupportedN(n)),
    }
}

/// All extensions of the given graphs with isomorphs removed, in key order.
pub fn extension_set(reps: &[Graph]) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in reps {
        for s in 1u32..1 << g.n() {
            let c = canonical_graph(&g.extend(s).expect("n < 32"));
            if seen.insert(GraphKey::of(&c)) {
                out.push(c);
            }
        }
    }
    out.sort_by_cached_key(GraphKey::of);
    out
}

/// Runs the chosen strategy over arbitrary seeds on `n` vertices. Seeds from
/// the same orbit may appear any number of times.
pub fn classify_seeds(
    n: usize,
    seeds: Vec<Graph>,
    opts: &ClassifyOptions,
) -> Result<Classification, OrbitError> {
    let count = seeds.len();
    let p = match opts.pwd_cutoff {
        Some(p) => p,
        None => auto_cutoff(&seeds, 4 * rayon::current_num_threads()),
    };
    let buckets = bucket_by_pwd(seeds, p);
    let parts: Vec<Vec<OrbitRecord>> = buckets
        .into_par_iter()
        .map(|(_, graphs)| run_bucket(n, graphs, opts, p))
        .collect::<Result<_, _>>()?;
    let buckets = parts.len();
    let mut records: Vec<OrbitRecord> = parts.into_iter().flatten().collect();
    sort_records(&mut records);
    Ok(Classification { n, pwd_cutoff: p, seeds: count, buckets, records })
}

/// Highest distance first, then representative in graph6 order.
pub fn sort_records(records: &mut [OrbitRecord]) {
    records.sort_by(|a, b| b.d.cmp(&a.d).then_with(|| a.g6.cmp(&b.g6)));
}

fn pwd(g: &Graph, p: usize) -> Vec<u64> {
    partial_weight_distribution(&GraphCode::new(*g), p).counts
}

/// Groups graphs by `w_0..w_p`. Graphs in one orbit share a bucket.
pub fn bucket_by_pwd(graphs: Vec<Graph>, p: usize) -> BTreeMap<Vec<u64>, Vec<Graph>> {
    let keyed: Vec<(Vec<u64>, Graph)> = graphs.into_par_iter().map(|g| (pwd(&g, p), g)).collect();
    let mut out: BTreeMap<Vec<u64>, Vec<Graph>> = BTreeMap::new();
    for (k, g) in keyed {
        out.entry(k).or_default().push(g);
    }
    out
}

/// Smallest cutoff giving more than `target` buckets, at most [`MAX_AUTO_CUTOFF`].
pub fn auto_cutoff(graphs: &[Graph], target: usize) -> usize {
    let full: Vec<Vec<u64>> = graphs.par_iter().map(|g| pwd(g, MAX_AUTO_CUTOFF)).collect();
    for p in 0..MAX_AUTO_CUTOFF {
        let distinct: HashSet<&[u64]> = full.iter().map(|w| &w[..w.len().min(p + 1)]).collect();
        if distinct.len() > target {
            return p;
        }
    }
    MAX_AUTO_CUTOFF
}

/// Orbit of `g` with its minimum member and largest independence number.
struct Walked {
    store: GraphStore,
    lambda: usize,
}

fn walk(g: &Graph, limit: usize) -> Result<Walked, OrbitError> {
    let mut store = GraphStore::new(g.n());
    let mut lambda = 0;
    visit_orbit(g, limit, |h, _| lambda = lambda.max(independence_number(h)), &mut store)?;
    Ok(Walked { store, lambda })
}

fn record(w: &Walked, p: usize) -> OrbitRecord {
    let rep = w.store.first().expect("orbit is nonempty");
    OrbitRecord::new(&rep, w.store.len() as u64, w.lambda, p)
}

fn run_bucket(
    n: usize,
    graphs: Vec<Graph>,
    opts: &ClassifyOptions,
    p: usize,
) -> Result<Vec<OrbitRecord>, OrbitError> {
    let limit = opts.max_orbit;
    let mut out = Vec::new();
    match opts.strategy {
        Strategy::Canonise => {
            let mut reps = GraphStore::new(n);
            for g in &graphs {
                let first = lc_orbit_limited(g, limit)?.first().expect("nonempty");
                reps.insert_key(GraphKey::of(&first));
            }
            for rep in reps.graphs() {
                out.push(record(&walk(&rep, limit)?, p));
            }
        }
        Strategy::Fast => {
            let mut seen = GraphStore::new(n);
            for g in &graphs {
                if seen.contains(g) {
                    continue;
                }
                let w = walk(g, limit)?;
                for k in w.store.keys() {
                    seen.insert_key(k.clone());
                }
                out.push(record(&w, p));
            }
        }
        Strategy::LowMem => {
            let mut todo = GraphStore::new(n);
            for g in &graphs {
                todo.insert(g);
            }
            while let Some(g) = todo.remove_next() {
                let w = walk(&g, limit)?;
                for k in w.store.keys() {
                    todo.remove_key(k);
                }
                out.push(record(&w, p));
            }
        }
    }
    Ok(out)
}
