use crate::ConstructionError;
use gf4_code::GraphCode;
use graph_core::Graph;

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Bit `i` set iff `i` is a nonzero square mod `p`.
pub fn legendre_sequence(p: u32) -> Result<Vec<u8>, ConstructionError> {
    if p == 2 || !is_prime(p) {
        return Err(ConstructionError::NotPrime(p));
    }
    let mut l = vec![0u8; p as usize];
    for y in 1..p {
        l[(y * y % p) as usize] = 1;
    }
    Ok(l)
}

/// GF(q) for q = p or q = p^2. Elements are indices `a * p + b` standing for
/// `a x + b`, with `x^2 = -c1 x - c0` for the least monic irreducible
/// `x^2 + c1 x + c0`, ordered by `(c1, c0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gfq {
    p: u32,
    square: bool,
    c1: u32,
    c0: u32,
}

impl Gfq {
    pub fn new(q: u32) -> Result<Gfq, ConstructionError> {
        if is_prime(q) {
            return Ok(Gfq { p: q, square: false, c1: 0, c0: 0 });
        }
        let p = (q as f64).sqrt().round() as u32;
        if p * p != q || !is_prime(p) {
            return Err(ConstructionError::UnsupportedOrder(q));
        }
        for c1 in 0..p {
            for c0 in 1..p {
                if (0..p).all(|r| (r * r + c1 * r + c0) % p != 0) {
                    return Ok(Gfq { p, square: true, c1, c0 });
                }
            }
        }
        unreachable!("an irreducible quadratic exists for every prime")
    }

    pub fn order(&self) -> u32 {
        if self.square {
            self.p * self.p
        } else {
            self.p
        }
    }

    /// `(c1, c0)` of the defining polynomial, for p^2 fields.
    pub fn modulus(&self) -> Option<(u32, u32)> {
        self.square.then_some((self.c1, self.c0))
    }

    fn split(&self, e: u32) -> (u32, u32) {
        (e / self.p, e % self.p)
    }

    pub fn sub(&self, e: u32, f: u32) -> u32 {
        let p = self.p;
        let ((a, b), (c, d)) = (self.split(e), self.split(f));
        (a + p - c) % p * p + (b + p - d) % p
    }

    pub fn mul(&self, e: u32, f: u32) -> u32 {
        let p = self.p;
        let ((a, b), (c, d)) = (self.split(e), self.split(f));
        // (a x + b)(c x + d) = ac x^2 + (ad + bc) x + bd
        let ac = a * c % p;
        let x1 = (a * d + b * c + (p - self.c1) * ac) % p;
        let x0 = (b * d + (p - self.c0) * ac) % p;
        x1 * p + x0
    }

    /// Indicator of nonzero squares.
    pub fn squares(&self) -> Vec<bool> {
        let q = self.order();
        let mut s = vec![false; q as usize];
        for y in 1..q {
            s[self.mul(y, y) as usize] = true;
        }
        s
    }
}

/// Paley graph on GF(m), m a prime or prime square with m = 1 mod 4.
pub fn paley_graph(m: u32) -> Result<Graph, ConstructionError> {
    if m % 4 != 1 || m > 32 {
        return Err(ConstructionError::UnsupportedOrder(m));
    }
    let f = Gfq::new(m)?;
    let sq = f.squares();
    let mut g = Graph::empty(m as usize).expect("m <= 32");
    for i in 0..m {
        for j in i + 1..m {
            if sq[f.sub(i, j) as usize] {
                g.add_edge(i as usize, j as usize);
            }
        }
    }
    Ok(g)
}

pub fn qr_code(m: u32) -> Result<GraphCode, ConstructionError> {
    Ok(GraphCode::new(paley_graph(m)?))
}

/// Add a new vertex 0 joined to every vertex; old vertex `i` becomes `i + 1`.
pub fn bordered(g: &Graph) -> Result<Graph, ConstructionError> {
    let n = g.n();
    if n >= 32 {
        return Err(ConstructionError::UnsupportedOrder(n as u32 + 1));
    }
    let mut h = Graph::empty(n + 1).expect("n + 1 <= 32");
    for (a, b) in g.edges() {
        h.add_edge(a + 1, b + 1);
    }
    for v in 1..=n {
        h.add_edge(0, v);
    }
    Ok(h)
}

pub fn bordered_qr(m: u32) -> Result<GraphCode, ConstructionError> {
    Ok(GraphCode::new(bordered(&paley_graph(m)?)?))
}

/// LC at non-border vertex `v` (1..=m) of the bordered Paley graph.
pub fn bqr_regularize(m: u32, v: usize) -> Result<Graph, ConstructionError> {
    let g = bordered(&paley_graph(m)?)?;
    if v == 0 || v > m as usize {
        return Err(ConstructionError::UnsupportedOrder(m));
    }
    Ok(g.local_complement(v).expect("vertex in range"))
}

/// `(n, k, lambda, mu)` if `g` is strongly regular.
pub fn strongly_regular_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    let k = g.regular_degree()?;
    let (mut lambda, mut mu) = (None, None);
    for a in 0..n {
        for b in a + 1..n {
            let common = (g.row(a) & g.row(b)).count_ones() as usize;
            let slot = if g.has_edge(a, b) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda.unwrap_or(0), mu.unwrap_or(0)))
}
