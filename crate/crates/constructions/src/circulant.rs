use crate::ConstructionError;
use gf4_code::{code_distance_transitive, distance_at_least, GraphCode};
use graph_core::Graph;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

/// First row of a symmetric circulant adjacency matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CirculantRow {
    n: usize,
    mask: u32,
}

impl CirculantRow {
    pub fn new(n: usize, mask: u32) -> Result<CirculantRow, ConstructionError> {
        if !(1..=32).contains(&n) {
            return Err(ConstructionError::BadRow(format!("length {n}")));
        }
        if mask & 1 != 0 || (n < 32 && mask >> n != 0) {
            return Err(ConstructionError::BadRow("bit 0 set or bits beyond n".into()));
        }
        if (1..n).any(|i| (mask >> i & 1) != (mask >> (n - i) & 1)) {
            return Err(ConstructionError::BadRow("not symmetric".into()));
        }
        Ok(CirculantRow { n, mask })
    }

    /// Row determined by its offsets `1..=n/2`.
    pub fn from_half(n: usize, half: u32) -> CirculantRow {
        let mut mask = 0;
        for i in 1..=n / 2 {
            if half >> (i - 1) & 1 == 1 {
                mask |= 1 << i | 1 << (n - i);
            }
        }
        CirculantRow { n, mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn degree(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn graph(&self) -> Graph {
        circulant_graph(*self)
    }
}

pub fn circulant_graph(row: CirculantRow) -> Graph {
    let n = row.n;
    let mut g = Graph::empty(n).expect("n checked");
    for i in 0..n {
        for k in graph_core::bits(row.mask) {
            g.add_edge(i, (i + k) % n);
        }
    }
    g
}

impl fmt::Display for CirculantRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω")?;
        for i in 1..self.n {
            write!(f, "{}", self.mask >> i & 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CirculantRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CirculantRow {
    type Err = ConstructionError;

    /// `ω` (or `w`) followed by `n - 1` bits, e.g. `ω00101110100`.
    fn from_str(s: &str) -> Result<CirculantRow, ConstructionError> {
        let s = s.trim();
        let rest = s
            .strip_prefix('ω')
            .or_else(|| s.strip_prefix('w'))
            .ok_or_else(|| ConstructionError::BadRow(format!("{s:?} must start with ω or w")))?;
        let mut mask = 0u32;
        for (i, c) in rest.chars().enumerate() {
            match c {
                '0' => {}
                '1' if i < 31 => mask |= 1 << (i + 1),
                _ => return Err(ConstructionError::BadRow(format!("bad symbol {c:?} in {s:?}"))),
            }
        }
        CirculantRow::new(rest.chars().count() + 1, mask)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CirculantHit {
    pub row: CirculantRow,
    pub distance: u32,
    pub degree: u32,
}

/// Sweep all `2^ceil((n-1)/2)` symmetric circulants on `n` vertices.
///
/// With a target, returns every row reaching distance `>= d_target`. Without
/// one, returns the rows achieving the highest distance found. Hits are
/// sorted by degree, then by row.
pub fn circulant_search(n: usize, d_target: Option<u32>) -> Vec<CirculantHit> {
    assert!((2..=32).contains(&n));
    let halves = 1u32 << (n / 2);
    // each row is a codeword, so weight + 1 bounds the distance
    let floor = AtomicU32::new(d_target.unwrap_or(1));
    let mut hits: Vec<CirculantHit> = (0..halves)
        .into_par_iter()
        .filter_map(|half| {
            let row = CirculantRow::from_half(n, half);
            let degree = row.degree();
            let need = floor.load(Ordering::Relaxed);
            if degree + 1 < need {
                return None;
            }
            let code = GraphCode::new(row.graph());
            if !distance_at_least(&code, need, true) {
                return None;
            }
            let distance = code_distance_transitive(&code);
            if d_target.is_none() {
                floor.fetch_max(distance, Ordering::Relaxed);
            }
            Some(CirculantHit { row, distance, degree })
        })
        .collect();
    let best = floor.into_inner();
    if d_target.is_none() {
        hits.retain(|h| h.distance == best);
    }
    hits.sort_by_key(|h| (h.degree, h.row));
    hits
}
