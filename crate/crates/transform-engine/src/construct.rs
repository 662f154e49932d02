//! Low-PAR constructions from a template graph whose edges carry vectors of
//! component functions.

use crate::TransformError;
use boolean_fn::BooleanFunction;
use graph_core::Graph;
use std::collections::BTreeMap;

/// Components of a map on a block: `comps[k]` is output bit `k`, a function
/// of the block's variables only.
pub type Components = Vec<BooleanFunction>;

fn product(a: &BooleanFunction, b: &BooleanFunction) -> BooleanFunction {
    let t = a.table().iter().zip(b.table()).map(|(x, y)| x & y).collect();
    BooleanFunction::new(a.n(), t).expect("same length")
}

fn block_mask(block: &[usize]) -> u32 {
    block.iter().fold(0, |m, &v| m | 1 << v)
}

fn check_support(f: &BooleanFunction, n: usize, block: &[usize], what: &str) -> Result<(), TransformError> {
    if f.n() != n {
        return Err(TransformError::Arity(format!("{what} has {} variables, expected {n}", f.n())));
    }
    let mask = block_mask(block);
    if f.monomials().iter().any(|m| m & !mask != 0) {
        return Err(TransformError::Arity(format!("{what} depends on variables outside its block")));
    }
    Ok(())
}

fn check_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<(), TransformError> {
    let mut seen = 0u64;
    for b in blocks {
        for &v in b {
            if v >= n || seen >> v & 1 == 1 {
                return Err(TransformError::Arity(format!("blocks do not partition 0..{n}")));
            }
            seen |= 1 << v;
        }
    }
    if seen.count_ones() as usize != n || blocks.iter().any(Vec::is_empty) {
        return Err(TransformError::Arity(format!("blocks do not partition 0..{n}")));
    }
    Ok(())
}

/// Sums `Gamma_{i,j}(y_i) . Gamma_{j,i}(y_j)` over template edges `i < j`,
/// the dot product taken over components, then adds every `g_j(y_j)`.
/// `gamma` must hold both `(i, j)` and `(j, i)` for every template edge,
/// with equal lengths, and nothing else.
pub fn construct2(
    n: usize,
    blocks: &[Vec<usize>],
    template: &Graph,
    gamma: &BTreeMap<(usize, usize), Components>,
    offsets: &[BooleanFunction],
) -> Result<BooleanFunction, TransformError> {
    check_blocks(n, blocks)?;
    let l = blocks.len();
    if template.n() != l || offsets.len() != l {
        return Err(TransformError::Arity(format!(
            "{l} blocks, template on {} vertices, {} offsets",
            template.n(),
            offsets.len()
        )));
    }
    for &(i, j) in gamma.keys() {
        if i >= l || j >= l || !template.has_edge(i, j) {
            return Err(TransformError::Arity(format!("Gamma({i},{j}) is not on a template edge")));
        }
    }
    let mut p = BooleanFunction::zero(n)?;
    for (i, j) in template.edges() {
        let (a, b) = match (gamma.get(&(i, j)), gamma.get(&(j, i))) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(TransformError::Arity(format!("missing Gamma entry for edge {i}{j}"))),
        };
        if a.len() != b.len() || a.is_empty() {
            return Err(TransformError::Arity(format!(
                "Gamma({i},{j}) has {} components, Gamma({j},{i}) has {}",
                a.len(),
                b.len()
            )));
        }
        for (x, y) in a.iter().zip(b) {
            check_support(x, n, &blocks[i], &format!("Gamma({i},{j})"))?;
            check_support(y, n, &blocks[j], &format!("Gamma({j},{i})"))?;
            p = p.add(&product(x, y))?;
        }
    }
    for (j, g) in offsets.iter().enumerate() {
        check_support(g, n, &blocks[j], &format!("g_{j}"))?;
        p = p.add(g)?;
    }
    Ok(p)
}

fn is_permutation(c: &Components, n: usize, from: &[usize]) -> bool {
    if c.len() != from.len() {
        return false;
    }
    let mut seen = vec![false; 1 << c.len()];
    for y in 0..1u32 << from.len() {
        let x = from.iter().enumerate().fold(0u32, |x, (k, &v)| x | (y >> k & 1) << v);
        debug_assert!(x < 1 << n);
        let img = c.iter().enumerate().fold(0usize, |acc, (k, f)| acc | (f.eval(x) as usize) << k);
        if std::mem::replace(&mut seen[img], true) {
            return false;
        }
    }
    true
}

/// The path version: `p = sum_j theta_j(y_j) . gamma_j(y_{j+1}) + sum_j g_j(y_j)`
/// with each `theta_j` and `gamma_j` a permutation given by components.
/// PAR over `{H,N}^n` is then at most `2^{t_max}`.
pub fn construct1(
    n: usize,
    blocks: &[Vec<usize>],
    theta: &[Components],
    gamma: &[Components],
    offsets: &[BooleanFunction],
) -> Result<BooleanFunction, TransformError> {
    check_blocks(n, blocks)?;
    let l = blocks.len();
    if theta.len() + 1 != l || gamma.len() + 1 != l {
        return Err(TransformError::Arity(format!("{l} blocks need {} maps each side", l.saturating_sub(1))));
    }
    let mut map = BTreeMap::new();
    for j in 0..l - 1 {
        if !is_permutation(&theta[j], n, &blocks[j]) || !is_permutation(&gamma[j], n, &blocks[j + 1]) {
            return Err(TransformError::Arity(format!("theta_{j} or gamma_{j} is not a permutation")));
        }
        map.insert((j, j + 1), theta[j].clone());
        map.insert((j + 1, j), gamma[j].clone());
    }
    let path = if l == 1 { Graph::empty(1)? } else { Graph::path(l)? };
    construct2(n, blocks, &path, &map, offsets)
}

/// Components of the map `y -> perm[y]` on `block`, bit `k` of `y` being
/// variable `block[k]`.
pub fn permutation_components(n: usize, block: &[usize], perm: &[u32]) -> Result<Components, TransformError> {
    let t = block.len();
    if perm.len() != 1 << t {
        return Err(TransformError::Arity(format!("permutation of length {} on {t} variables", perm.len())));
    }
    (0..t)
        .map(|k| {
            BooleanFunction::from_fn(n, |x| {
                let y = block.iter().enumerate().fold(0usize, |y, (i, &v)| y | ((x >> v & 1) as usize) << i);
                perm[y] >> k & 1 == 1
            })
            .map_err(TransformError::from)
        })
        .collect()
}

/// Components written as ANF strings separated by `|`, each over `n` variables.
pub fn parse_components(text: &str, n: usize) -> Result<Components, TransformError> {
    text.split('|').map(|s| Ok(BooleanFunction::parse_anf(s.trim(), Some(n))?)).collect()
}
