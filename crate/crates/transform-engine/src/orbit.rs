//! Orbits of Boolean functions under `{I,H,N}^n` and bit flips.

use crate::flat::recover_boolean_flat;
use crate::multispectrum::{fold_spectra, TransformSet};
use crate::{SpectralVector, TransformError};
use boolean_fn::{function_hypergraph, hypergraph_function, BooleanFunction};
use rayon::prelude::*;
use std::collections::{BTreeSet, HashMap};

/// The function with affine terms removed, relabelled by the canonical form
/// of its hypergraph.
pub fn canonical_function(f: &BooleanFunction) -> Result<BooleanFunction, TransformError> {
    let h = function_hypergraph(&f.strip_affine())?;
    Ok(hypergraph_function(&h.canonical()?))
}

pub fn is_connected_function(f: &BooleanFunction) -> bool {
    function_hypergraph(f).map(|h| h.is_connected()).unwrap_or(false)
}

/// Distinct canonical functions recovered from the Boolean flat `{I,H,N}^n`
/// transforms of `f`, `f` itself included.
pub fn ihn_orbit(f: &BooleanFunction) -> Result<BTreeSet<BooleanFunction>, TransformError> {
    let s = SpectralVector::from_function(f);
    let set = TransformSet::ihn();
    let found = fold_spectra(
        &s,
        &set,
        Vec::new(),
        |mut acc, _, v| {
            if let Some(r) = recover_boolean_flat(v) {
                acc.push(r.function);
            }
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    let distinct: BTreeSet<BooleanFunction> = found.into_iter().collect();
    distinct.iter().map(canonical_function).collect()
}

/// Canonical bit-flip images `f(x + a)` of `f`, affine terms removed.
pub fn ix_orbit(f: &BooleanFunction) -> Result<BTreeSet<BooleanFunction>, TransformError> {
    let images: BTreeSet<BooleanFunction> = (0..1u32 << f.n()).map(|a| f.shift(a).strip_affine()).collect();
    images.iter().map(canonical_function).collect()
}

/// The `{I,H,N}^n` orbit, then the bit-flip images of every member.
pub fn ix_ihn_orbit(f: &BooleanFunction) -> Result<BTreeSet<BooleanFunction>, TransformError> {
    let first = ihn_orbit(f)?;
    let mut all = first.clone();
    for g in &first {
        all.extend(ix_orbit(g)?);
    }
    Ok(all)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// `{I, sigma_x}^n`.
    BitFlip,
    /// `{I, sigma_x}^n {I, H, N}^n`.
    BitFlipIhn,
}

impl Symmetry {
    pub fn orbit(self, f: &BooleanFunction) -> Result<BTreeSet<BooleanFunction>, TransformError> {
        match self {
            Symmetry::BitFlip => ix_orbit(f),
            Symmetry::BitFlipIhn => ix_ihn_orbit(f),
        }
    }
}

/// Canonical connected functions of `n` variables without affine terms,
/// by exhaustive enumeration (`n <= 4`).
pub fn connected_functions(n: usize) -> Result<Vec<BooleanFunction>, TransformError> {
    if n == 0 || n > 4 {
        return Err(TransformError::Invalid(format!("exhaustive enumeration needs 1 <= n <= 4, got {n}")));
    }
    let monomials: Vec<u32> = (0..1u32 << n).filter(|m| m.count_ones() >= 2).collect();
    let mut out = BTreeSet::new();
    for sel in 0u64..1 << monomials.len() {
        let ms: Vec<u32> = (0..monomials.len()).filter(|i| sel >> i & 1 == 1).map(|i| monomials[i]).collect();
        let f = BooleanFunction::from_monomials(n, &ms)?;
        if is_connected_function(&f) {
            out.insert(canonical_function(&f)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// Every function on one more variable obtained by adding `x_n` in any
/// set of monomials with at least one other variable. Connected results
/// only, canonised and deduplicated.
pub fn extend_functions(reps: &[BooleanFunction]) -> Result<Vec<BooleanFunction>, TransformError> {
    let found: Result<Vec<Vec<BooleanFunction>>, TransformError> = reps
        .par_iter()
        .map(|f| {
            let n = f.n();
            let base = f.monomials();
            let new_var = 1u32 << n;
            let extra: Vec<u32> = (1..1u32 << n).map(|m| m | new_var).collect();
            let mut out = Vec::new();
            for sel in 1u64..1 << extra.len() {
                let mut ms = base.clone();
                ms.extend((0..extra.len()).filter(|i| sel >> i & 1 == 1).map(|i| extra[i]));
                let g = BooleanFunction::from_monomials(n + 1, &ms)?;
                if is_connected_function(&g) {
                    out.push(canonical_function(&g)?);
                }
            }
            Ok(out)
        })
        .collect();
    let all: BTreeSet<BooleanFunction> = found?.into_iter().flatten().collect();
    Ok(all.into_iter().collect())
}

/// Orbits meeting `seeds`, each given by its least member. Orbits are joined
/// whenever they share a function, so the result is a partition even if an
/// orbit computation misses members.
pub fn function_orbits(seeds: &[BooleanFunction], sym: Symmetry) -> Result<Vec<BooleanFunction>, TransformError> {
    let mut ids: HashMap<BooleanFunction, usize> = HashMap::new();
    let mut parent: Vec<usize> = Vec::new();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut id = |f: BooleanFunction, parent: &mut Vec<usize>| -> usize {
        *ids.entry(f).or_insert_with(|| {
            parent.push(parent.len());
            parent.len() - 1
        })
    };
    let seeds: Vec<BooleanFunction> = seeds.iter().map(canonical_function).collect::<Result<_, _>>()?;
    let mut done: BTreeSet<BooleanFunction> = BTreeSet::new();
    for chunk in seeds.chunks(256) {
        let todo: Vec<&BooleanFunction> = chunk.iter().filter(|f| !done.contains(*f)).collect();
        let orbits: Vec<BTreeSet<BooleanFunction>> =
            todo.par_iter().map(|f| sym.orbit(f)).collect::<Result<_, _>>()?;
        for (f, orbit) in todo.into_iter().zip(orbits) {
            let root = id(f.clone(), &mut parent);
            for g in orbit {
                let j = id(g.clone(), &mut parent);
                let (a, b) = (find(&mut parent, root), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
                done.insert(g);
            }
            done.insert(f.clone());
        }
    }
    let mut best: HashMap<usize, BooleanFunction> = HashMap::new();
    for f in &seeds {
        let i = ids[f];
        let r = find(&mut parent, i);
        best.entry(r).and_modify(|b| {
            if f < b {
                *b = f.clone();
            }
        }).or_insert_with(|| f.clone());
    }
    let mut reps: Vec<BooleanFunction> = best.into_values().collect();
    reps.sort();
    Ok(reps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitCounts {
    pub n: usize,
    pub bit_flip: usize,
    pub bit_flip_ihn: usize,
}

/// `|O_{1,n}|` and `|O_{2,n}|`. Exhaustive over all connected functions
/// for `n <= 4`; from `n = 5` the seeds are the extensions of every
/// connected function on `n - 1` variables.
pub fn function_orbit_counts(n: usize) -> Result<OrbitCounts, TransformError> {
    let seeds = if n <= 4 { connected_functions(n)? } else { extend_functions(&connected_functions(n - 1)?)? };
    Ok(OrbitCounts {
        n,
        bit_flip: function_orbits(&seeds, Symmetry::BitFlip)?.len(),
        bit_flip_ihn: function_orbits(&seeds, Symmetry::BitFlipIhn)?.len(),
    })
}
