use crate::transform::{anft, anft_m, anft_m_inverse, fwht};
use crate::BoolError;
use std::fmt;
use std::str::FromStr;

/// Largest number of variables accepted.
pub const MAX_VARS: usize = 24;

fn check_vars(n: usize) -> Result<(), BoolError> {
    if n == 0 || n > MAX_VARS {
        return Err(BoolError::Vars(n));
    }
    Ok(())
}

/// Boolean function of `n` variables stored as its truth table. Entry `x` is
/// `f(x_0, .., x_{n-1})` with `x = sum 2^i x_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    n: usize,
    table: Vec<u8>,
}

impl BooleanFunction {
    pub fn new(n: usize, table: Vec<u8>) -> Result<BooleanFunction, BoolError> {
        check_vars(n)?;
        if table.len() != 1 << n {
            return Err(BoolError::Length { expected: 1 << n, got: table.len() });
        }
        if let Some(&v) = table.iter().find(|&&v| v > 1) {
            return Err(BoolError::Value { value: v as u32, m: 2 });
        }
        Ok(BooleanFunction { n, table })
    }

    pub fn zero(n: usize) -> Result<BooleanFunction, BoolError> {
        check_vars(n)?;
        Ok(BooleanFunction { n, table: vec![0; 1 << n] })
    }

    /// From the ANF coefficient vector; entry `k` belongs to the monomial
    /// `prod_{k_i = 1} x_i`.
    pub fn from_anf(n: usize, anf: &[u8]) -> Result<BooleanFunction, BoolError> {
        check_vars(n)?;
        if anf.len() != 1 << n {
            return Err(BoolError::Length { expected: 1 << n, got: anf.len() });
        }
        BooleanFunction::new(n, anft(anf))
    }

    /// Sum of the given monomials, each a variable mask; repeats cancel.
    pub fn from_monomials(n: usize, monomials: &[u32]) -> Result<BooleanFunction, BoolError> {
        check_vars(n)?;
        let mut anf = vec![0u8; 1 << n];
        for &m in monomials {
            if (m as usize) >> n != 0 {
                return Err(BoolError::Mask(format!("monomial {m:#b} uses a variable beyond x{}", n - 1)));
            }
            anf[m as usize] ^= 1;
        }
        BooleanFunction::from_anf(n, &anf)
    }

    /// Builds the function from its value at every point.
    pub fn from_fn(n: usize, f: impl Fn(u32) -> bool) -> Result<BooleanFunction, BoolError> {
        check_vars(n)?;
        Ok(BooleanFunction { n, table: (0..1u32 << n).map(|x| f(x) as u8).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn eval(&self, x: u32) -> u8 {
        self.table[x as usize]
    }

    pub fn anf(&self) -> Vec<u8> {
        anft(&self.table)
    }

    /// Monomials present in the ANF, as variable masks in increasing order.
    pub fn monomials(&self) -> Vec<u32> {
        self.anf().iter().enumerate().filter(|(_, &c)| c == 1).map(|(k, _)| k as u32).collect()
    }

    /// Algebraic degree; 0 for constants.
    pub fn degree(&self) -> usize {
        self.monomials().iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.table.iter().map(|&v| v as u64).sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.weight() << 1 == 1u64 << self.n
    }

    /// Bipolar truth table `(-1)^f(x)`.
    pub fn bipolar(&self) -> Vec<i64> {
        self.table.iter().map(|&v| 1 - 2 * v as i64).collect()
    }

    /// Walsh spectrum scaled by `2^(n/2)`: `sum_x (-1)^(f(x) + b.x)`, exact.
    pub fn walsh_scaled(&self) -> Vec<i64> {
        let mut v = self.bipolar();
        fwht(&mut v);
        v
    }

    /// Walsh spectrum, normalised by `2^(-n/2)`.
    pub fn walsh_spectrum(&self) -> Vec<f64> {
        let scale = (2f64).powf(-(self.n as f64) / 2.0);
        self.walsh_scaled().iter().map(|&w| w as f64 * scale).collect()
    }

    /// The function with every monomial of degree at most one removed.
    pub fn strip_affine(&self) -> BooleanFunction {
        let mut anf = self.anf();
        anf[0] = 0;
        for i in 0..self.n {
            anf[1 << i] = 0;
        }
        BooleanFunction { n: self.n, table: anft(&anf) }
    }

    /// `f(x + a)`.
    pub fn shift(&self, a: u32) -> BooleanFunction {
        let table = (0..self.table.len()).map(|x| self.table[x ^ a as usize]).collect();
        BooleanFunction { n: self.n, table }
    }

    /// Pointwise sum mod 2.
    pub fn add(&self, other: &BooleanFunction) -> Result<BooleanFunction, BoolError> {
        if self.n != other.n {
            return Err(BoolError::Mismatch(self.n, other.n));
        }
        let table = self.table.iter().zip(&other.table).map(|(a, b)| a ^ b).collect();
        Ok(BooleanFunction { n: self.n, table })
    }

    /// Relabels variables: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> BooleanFunction {
        assert_eq!(perm.len(), self.n, "permutation length");
        let ms: Vec<u32> = self
            .monomials()
            .into_iter()
            .map(|m| (0..self.n).filter(|&i| m >> i & 1 == 1).fold(0u32, |a, i| a | 1 << perm[i]))
            .collect();
        BooleanFunction::from_monomials(self.n, &ms).expect("same variables")
    }

    /// Truth table as hexadecimal: entry `x` is bit `x` of the number,
    /// most significant digit first.
    pub fn to_hex(&self) -> String {
        let digits = (self.table.len() / 4).max(1);
        (0..digits)
            .rev()
            .map(|d| {
                let v = (0..4).filter(|&b| self.table.get(4 * d + b) == Some(&1)).fold(0, |v, b| v | 1 << b);
                char::from_digit(v, 16).unwrap()
            })
            .collect()
    }

    pub fn from_hex(n: usize, s: &str) -> Result<BooleanFunction, BoolError> {
        check_vars(n)?;
        let s = s.trim().trim_start_matches("0x");
        let len = 1usize << n;
        let digits = (len / 4).max(1);
        if s.len() != digits {
            return Err(BoolError::Parse(format!("expected {digits} hex digits for n = {n}, got {}", s.len())));
        }
        let mut table = vec![0u8; len];
        for (d, c) in s.chars().rev().enumerate() {
            let v = c.to_digit(16).ok_or_else(|| BoolError::Parse(format!("bad hex digit {c:?}")))?;
            for b in 0..4 {
                let x = 4 * d + b;
                if v >> b & 1 == 1 {
                    if x >= len {
                        return Err(BoolError::Parse(format!("hex value too large for n = {n}")));
                    }
                    table[x] = 1;
                }
            }
        }
        BooleanFunction::new(n, table)
    }

    /// ANF in the abbreviated text form: comma separated monomials, highest
    /// degree first, each written as its variable indices ("012,03,12").
    /// Indices of 10 and above are parenthesised and the constant term is "()".
    pub fn to_anf_string(&self) -> String {
        let mut ms = self.monomials();
        ms.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), var_list(m)));
        ms.iter().map(|&m| monomial_text(m)).collect::<Vec<_>>().join(",")
    }

    /// Parses the abbreviated ANF text. With `n = None` the number of
    /// variables is one more than the largest index used (at least 1).
    pub fn parse_anf(text: &str, n: Option<usize>) -> Result<BooleanFunction, BoolError> {
        let mut ms = Vec::new();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            ms.push(parse_monomial(tok)?);
        }
        let used = ms.iter().map(|&m| 32 - m.leading_zeros() as usize).max().unwrap_or(0);
        let n = match n {
            Some(n) if n < used => {
                return Err(BoolError::Parse(format!("variable x{} used but n = {n}", used - 1)))
            }
            Some(n) => n,
            None => used.max(1),
        };
        BooleanFunction::from_monomials(n, &ms)
    }
}

fn var_list(m: u32) -> Vec<u32> {
    (0..32).filter(|i| m >> i & 1 == 1).collect()
}

fn monomial_text(m: u32) -> String {
    if m == 0 {
        return "()".into();
    }
    var_list(m).iter().map(|&i| if i < 10 { i.to_string() } else { format!("({i})") }).collect()
}

fn parse_monomial(tok: &str) -> Result<u32, BoolError> {
    if tok == "()" {
        return Ok(0);
    }
    let mut m = 0u32;
    let mut chars = tok.chars();
    while let Some(c) = chars.next() {
        let v = if c == '(' {
            let inner: String = chars.by_ref().take_while(|&c| c != ')').collect();
            inner.parse::<u32>().map_err(|_| BoolError::Parse(format!("bad index in {tok:?}")))?
        } else {
            c.to_digit(10).ok_or_else(|| BoolError::Parse(format!("bad character {c:?} in {tok:?}")))?
        };
        if v as usize >= MAX_VARS {
            return Err(BoolError::Vars(v as usize + 1));
        }
        if m >> v & 1 == 1 {
            return Err(BoolError::Parse(format!("repeated variable in {tok:?}")));
        }
        m |= 1 << v;
    }
    Ok(m)
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_anf_string())
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n, self.to_anf_string())
    }
}

impl FromStr for BooleanFunction {
    type Err = BoolError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BooleanFunction::parse_anf(s, None)
    }
}

/// Function from `Z_2^n` to `Z_m`, `m` even.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedFunction {
    n: usize,
    m: u32,
    table: Vec<u32>,
}

impl GeneralizedFunction {
    pub fn new(n: usize, m: u32, table: Vec<u32>) -> Result<GeneralizedFunction, BoolError> {
        check_vars(n)?;
        if m < 2 || m % 2 == 1 {
            return Err(BoolError::Modulus(m));
        }
        if table.len() != 1 << n {
            return Err(BoolError::Length { expected: 1 << n, got: table.len() });
        }
        if let Some(&value) = table.iter().find(|&&v| v >= m) {
            return Err(BoolError::Value { value, m });
        }
        Ok(GeneralizedFunction { n, m, table })
    }

    pub fn from_anf(n: usize, m: u32, anf: &[u32]) -> Result<GeneralizedFunction, BoolError> {
        check_vars(n)?;
        if anf.len() != 1 << n {
            return Err(BoolError::Length { expected: 1 << n, got: anf.len() });
        }
        let table = anft_m_inverse(anf, m)?;
        GeneralizedFunction::new(n, m, table)
    }

    /// `(m / 2) f`, the usual embedding of a Boolean function.
    pub fn from_boolean(f: &BooleanFunction, m: u32) -> Result<GeneralizedFunction, BoolError> {
        let table = f.table().iter().map(|&v| v as u32 * (m / 2)).collect();
        GeneralizedFunction::new(f.n(), m, table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn anf(&self) -> Vec<u32> {
        anft_m(&self.table, self.m).expect("modulus checked on construction")
    }
}
