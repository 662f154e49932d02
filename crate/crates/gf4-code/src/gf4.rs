//! GF(4) through the Pauli map: I -> 0, Z -> 1, X -> w, Y -> w^2.
//!
//! An element is a `(z, x)` bit pair (bit 0 = z, bit 1 = x). Addition is XOR
//! and w^2 = w + 1 holds because (1,0) + (0,1) = (1,1).

use std::fmt;
use std::ops::{Add, Mul};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const W: Gf4 = Gf4(2);
    pub const W2: Gf4 = Gf4(3);
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::W, Gf4::W2];

    pub fn from_zx(z: bool, x: bool) -> Gf4 {
        Gf4(z as u8 | (x as u8) << 1)
    }

    pub fn z(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn x(self) -> bool {
        self.0 & 2 == 2
    }

    /// Exponent of w, or `None` for zero.
    fn log(self) -> Option<u8> {
        match self.0 {
            1 => Some(0),
            2 => Some(1),
            3 => Some(2),
            _ => None,
        }
    }

    fn exp(k: u8) -> Gf4 {
        [Gf4::ONE, Gf4::W, Gf4::W2][(k % 3) as usize]
    }

    /// Conjugation is the Frobenius map x -> x^2.
    pub fn conj(self) -> Gf4 {
        self * self
    }

    /// tr(x) = x + x^2, always 0 or 1.
    pub fn trace(self) -> u8 {
        let t = self + self.conj();
        debug_assert!(t == Gf4::ZERO || t == Gf4::ONE);
        t.0
    }

    pub fn from_char(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' | 'ω' => Some(Gf4::W),
            'W' => Some(Gf4::W2),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        ['0', '1', 'w', 'W'][self.0 as usize]
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, o: Gf4) -> Gf4 {
        Gf4(self.0 ^ o.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    // adds logarithms
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: Gf4) -> Gf4 {
        match (self.log(), o.log()) {
            (Some(a), Some(b)) => Gf4::exp(a + b),
            _ => Gf4::ZERO,
        }
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Vector over GF(4) of length at most 32, as two bitmasks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gf4Vec {
    pub z: u32,
    pub x: u32,
}

impl Gf4Vec {
    pub fn new(z: u32, x: u32) -> Gf4Vec {
        Gf4Vec { z, x }
    }

    pub fn get(&self, i: usize) -> Gf4 {
        Gf4::from_zx(self.z >> i & 1 == 1, self.x >> i & 1 == 1)
    }

    pub fn set(&mut self, i: usize, a: Gf4) {
        self.z = self.z & !(1 << i) | (a.z() as u32) << i;
        self.x = self.x & !(1 << i) | (a.x() as u32) << i;
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        (self.z | self.x).count_ones()
    }

    /// Trace inner product: parity of the symplectic form.
    #[inline]
    pub fn trace_inner(&self, o: &Gf4Vec) -> u8 {
        (((self.z & o.x).count_ones() + (self.x & o.z).count_ones()) & 1) as u8
    }

    /// Swap the z and x bits on the columns in `cols` (a Hadamard there).
    pub fn hadamard(&self, cols: u32) -> Gf4Vec {
        let d = (self.z ^ self.x) & cols;
        Gf4Vec { z: self.z ^ d, x: self.x ^ d }
    }
}

impl Add for Gf4Vec {
    type Output = Gf4Vec;
    fn add(self, o: Gf4Vec) -> Gf4Vec {
        Gf4Vec { z: self.z ^ o.z, x: self.x ^ o.x }
    }
}

/// Trace inner product by field arithmetic, the slow definition.
pub fn trace_inner_field(u: &[Gf4], v: &[Gf4]) -> Option<u8> {
    if u.len() != v.len() {
        return None;
    }
    Some(u.iter().zip(v).map(|(a, b)| (*a * b.conj()).trace()).sum::<u8>() & 1)
}
