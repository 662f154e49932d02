use crate::gf4::{Gf4, Gf4Vec};
use crate::CodeError;
use graph_core::{bits, low_mask, Graph};
use std::fmt;

/// Zero-dimensional stabilizer code in binary form S = (Z | X).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StabilizerCode {
    n: usize,
    rows: Vec<Gf4Vec>,
}

impl StabilizerCode {
    /// Checks length, self-duality and GF(2) independence of the `n` rows.
    pub fn new(n: usize, rows: Vec<Gf4Vec>) -> Result<StabilizerCode, CodeError> {
        if n == 0 || n > 32 {
            return Err(CodeError::Length(n));
        }
        if rows.len() != n {
            return Err(CodeError::Shape(format!("need {n} generators, got {}", rows.len())));
        }
        let m = low_mask(n);
        if rows.iter().any(|r| (r.z | r.x) & !m != 0) {
            return Err(CodeError::Shape("generator has symbols beyond length n".into()));
        }
        for (i, a) in rows.iter().enumerate() {
            for (j, b) in rows.iter().enumerate().skip(i + 1) {
                if a.trace_inner(b) != 0 {
                    return Err(CodeError::NotSelfDual(i, j));
                }
            }
        }
        if gf2_rank(rows.iter().map(|r| (r.x as u64) << 32 | r.z as u64).collect()) != n {
            return Err(CodeError::Dependent);
        }
        Ok(StabilizerCode { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Gf4Vec] {
        &self.rows
    }

    /// All `2^n` codewords (GF(2) span of the rows). Small `n` only.
    pub fn codewords(&self) -> impl Iterator<Item = Gf4Vec> + '_ {
        assert!(self.n <= 24, "codeword enumeration is for small codes");
        (0u32..1 << self.n).map(move |s| {
            bits(s).fold(Gf4Vec::default(), |acc, i| acc + self.rows[i])
        })
    }

    /// Full weight distribution by enumerating all codewords.
    pub fn weight_distribution(&self) -> Vec<u64> {
        let mut w = vec![0u64; self.n + 1];
        for c in self.codewords() {
            w[c.weight() as usize] += 1;
        }
        w
    }

    /// Parse `Z|X` rows of 0/1, one generator per line.
    pub fn parse_binary(text: &str) -> Result<StabilizerCode, CodeError> {
        let mut rows = Vec::new();
        let mut n = None;
        for (ln, line) in text.lines().enumerate() {
            let line: String = line.chars().filter(|c| !c.is_whitespace()).collect();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (zs, xs) = line
                .split_once('|')
                .ok_or_else(|| CodeError::Parse(format!("line {}: expected Z|X", ln + 1)))?;
            if zs.len() != xs.len() || n.is_some_and(|n| n != zs.len()) {
                return Err(CodeError::Parse(format!("line {}: inconsistent length", ln + 1)));
            }
            n = Some(zs.len());
            let parse = |s: &str| -> Result<u32, CodeError> {
                s.chars().enumerate().try_fold(0u32, |m, (i, c)| match c {
                    '0' => Ok(m),
                    '1' => Ok(m | 1 << i),
                    _ => Err(CodeError::Parse(format!("line {}: bad symbol {c:?}", ln + 1))),
                })
            };
            rows.push(Gf4Vec::new(parse(zs)?, parse(xs)?));
        }
        StabilizerCode::new(n.unwrap_or(0), rows)
    }

    /// Parse a generator matrix over {0, 1, w, W} (W = w^2), one row per line.
    pub fn parse_generator(text: &str) -> Result<StabilizerCode, CodeError> {
        let mut rows = Vec::new();
        let mut n = None;
        for (ln, line) in text.lines().enumerate() {
            let syms: Vec<char> = line.chars().filter(|c| !c.is_whitespace()).collect();
            if syms.is_empty() || syms[0] == '#' {
                continue;
            }
            if n.is_some_and(|n| n != syms.len()) {
                return Err(CodeError::Parse(format!("line {}: inconsistent length", ln + 1)));
            }
            n = Some(syms.len());
            let mut r = Gf4Vec::default();
            for (i, c) in syms.into_iter().enumerate() {
                let a = Gf4::from_char(c)
                    .ok_or_else(|| CodeError::Parse(format!("line {}: bad symbol {c:?}", ln + 1)))?;
                r.set(i, a);
            }
            rows.push(r);
        }
        StabilizerCode::new(n.unwrap_or(0), rows)
    }

    pub fn to_binary_string(&self) -> String {
        let bitstr = |m: u32| (0..self.n).map(|i| if m >> i & 1 == 1 { '1' } else { '0' }).collect::<String>();
        self.rows.iter().map(|r| format!("{}|{}\n", bitstr(r.z), bitstr(r.x))).collect()
    }

    pub fn to_generator_string(&self) -> String {
        self.rows
            .iter()
            .map(|r| (0..self.n).map(|i| r.get(i).to_char()).collect::<String>() + "\n")
            .collect()
    }
}

impl fmt::Debug for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StabilizerCode(n={}):\n{}", self.n, self.to_generator_string())
    }
}

/// Graph code: generator matrix `Gamma + w I`, i.e. Z = Gamma and X = I.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GraphCode {
    graph: Graph,
}

impl GraphCode {
    pub fn new(graph: Graph) -> GraphCode {
        GraphCode { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Row `i` as a codeword: Z part = neighbourhood, X part = e_i.
    #[inline]
    pub fn row(&self, i: usize) -> Gf4Vec {
        Gf4Vec::new(self.graph.row(i), 1 << i)
    }

    pub fn stabilizer(&self) -> StabilizerCode {
        let rows = (0..self.n()).map(|i| self.row(i)).collect();
        StabilizerCode::new(self.n(), rows).expect("graph codes are self-dual")
    }
}

pub fn graph_to_code(g: &Graph) -> GraphCode {
    GraphCode::new(*g)
}

pub fn code_graph(c: &GraphCode) -> Graph {
    *c.graph()
}

/// Rank over GF(2) of 64-bit rows.
pub(crate) fn gf2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pr = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row >> bit & 1 == 1 {
                *row ^= pr;
            }
        }
        rank += 1;
    }
    rank
}

/// Result of converting a stabilizer code to graph form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphForm {
    pub graph: Graph,
    /// Columns on which z and x were swapped before inverting X.
    pub hadamard_cols: u32,
    /// Columns whose diagonal entry (a Y on the diagonal) was cleared.
    pub cleared_diagonal: u32,
}

/// Find an equivalent graph code.
///
/// If X is singular, columns outside the leftmost pivot set of X get a
/// Hadamard (z and x swapped). Then row reduce to X = I; the Z block is the
/// adjacency matrix once its diagonal is cleared.
pub fn stabilizer_to_graph(s: &StabilizerCode) -> Result<GraphForm, CodeError> {
    let n = s.n();
    let mut xs: Vec<u32> = s.rows().iter().map(|r| r.x).collect();
    let mut pivots = 0u32;
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..n).find(|&r| xs[r] >> c & 1 == 1) else {
            continue;
        };
        xs.swap(rank, p);
        let pr = xs[rank];
        for (r, row) in xs.iter_mut().enumerate() {
            if r != rank && *row >> c & 1 == 1 {
                *row ^= pr;
            }
        }
        pivots |= 1 << c;
        rank += 1;
    }
    let had = low_mask(n) & !pivots;
    let mut rows: Vec<Gf4Vec> = s.rows().iter().map(|r| r.hadamard(had)).collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| rows[r].x >> c & 1 == 1)
            .ok_or(CodeError::NoGraphForm)?;
        rows.swap(c, p);
        let pr = rows[c];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != c && row.x >> c & 1 == 1 {
                *row = *row + pr;
            }
        }
    }
    let mut adj = Vec::with_capacity(n);
    let mut diag = 0u32;
    for (i, r) in rows.iter().enumerate() {
        debug_assert_eq!(r.x, 1 << i);
        diag |= (r.z >> i & 1) << i;
        adj.push(r.z & !(1 << i));
    }
    let graph = Graph::from_rows(&adj).map_err(|_| CodeError::NoGraphForm)?;
    Ok(GraphForm { graph, hadamard_cols: had, cleared_diagonal: diag })
}
