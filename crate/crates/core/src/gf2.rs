//! Arithmetic in the vector space GF(2)³ and its dual.
//!
//! Vectors are packed into the low three bits of a byte with the first
//! coordinate in the most significant position, so `(b1, b2, b3)` encodes as
//! `4*b1 + 2*b2 + b3`. With this packing the lexicographic order on
//! coordinate tuples agrees with the integer order, and the basis vectors are
//! `e1 = 4`, `e2 = 2`, `e3 = 1`.

use core::fmt;
use core::ops::{Add, AddAssign};

/// An element of GF(2)³.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf2Vec3(u8);

impl Gf2Vec3 {
    pub const ZERO: Self = Self(0);
    pub const E1: Self = Self(0b100);
    pub const E2: Self = Self(0b010);
    pub const E3: Self = Self(0b001);
    pub const E123: Self = Self(0b111);

    /// Builds a vector from its integer code; only the codes `0..=7` are valid.
    pub const fn from_bits(bits: u8) -> Option<Self> {
        if bits < 8 {
            Some(Self(bits))
        } else {
            None
        }
    }

    pub const fn from_coords(b1: bool, b2: bool, b3: bool) -> Self {
        Self(((b1 as u8) << 2) | ((b2 as u8) << 1) | (b3 as u8))
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn coords(self) -> [bool; 3] {
        [self.0 & 4 != 0, self.0 & 2 != 0, self.0 & 1 != 0]
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// All seven nonzero vectors in increasing order.
    pub fn nonzero() -> impl Iterator<Item = Self> + Clone {
        (1..8u8).map(Self)
    }
}

impl Add for Gf2Vec3 {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf2Vec3 {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for Gf2Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.coords();
        write!(f, "({},{},{})", a as u8, b as u8, c as u8)
    }
}

impl fmt::Display for Gf2Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Three vectors form a basis of GF(2)³ iff none is zero, they are pairwise
/// distinct, and none is the sum of the other two.
pub fn is_basis(a: Gf2Vec3, b: Gf2Vec3, c: Gf2Vec3) -> bool {
    !a.is_zero() && !b.is_zero() && !c.is_zero() && a != b && a != c && b != c && a + b != c
}

/// A linear functional on GF(2)³, stored as its coefficient vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf2Functional(u8);

impl Gf2Functional {
    pub const ZERO: Self = Self(0);

    pub const fn from_bits(bits: u8) -> Option<Self> {
        if bits < 8 {
            Some(Self(bits))
        } else {
            None
        }
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn eval(self, v: Gf2Vec3) -> bool {
        (self.0 & v.0).count_ones() & 1 == 1
    }

    /// All functionals in increasing order, including zero.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..8u8).map(Self)
    }
}

impl fmt::Debug for Gf2Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi{:?}", Gf2Vec3(self.0))
    }
}

impl fmt::Display for Gf2Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A 3×3 matrix over GF(2), stored by the images of `e1`, `e2`, `e3`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf2Mat3 {
    cols: [Gf2Vec3; 3],
}

impl Gf2Mat3 {
    pub const IDENTITY: Self = Self {
        cols: [Gf2Vec3::E1, Gf2Vec3::E2, Gf2Vec3::E3],
    };

    /// The matrix sending `e1, e2, e3` to the given columns.
    pub const fn from_columns(cols: [Gf2Vec3; 3]) -> Self {
        Self { cols }
    }

    pub const fn columns(&self) -> [Gf2Vec3; 3] {
        self.cols
    }

    pub fn apply(&self, v: Gf2Vec3) -> Gf2Vec3 {
        let [a, b, c] = v.coords();
        let mut out = Gf2Vec3::ZERO;
        if a {
            out += self.cols[0];
        }
        if b {
            out += self.cols[1];
        }
        if c {
            out += self.cols[2];
        }
        out
    }

    pub fn is_invertible(&self) -> bool {
        is_basis(self.cols[0], self.cols[1], self.cols[2])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            cols: other.cols.map(|c| self.apply(c)),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_invertible() {
            return None;
        }
        // The group is tiny; find the preimage of each basis vector directly.
        let mut cols = [Gf2Vec3::ZERO; 3];
        for (slot, target) in cols.iter_mut().zip([Gf2Vec3::E1, Gf2Vec3::E2, Gf2Vec3::E3]) {
            *slot = Gf2Vec3::nonzero().find(|&v| self.apply(v) == target)?;
        }
        Some(Self { cols })
    }

    /// The unique matrix sending the basis `(a, b, c)` to `(e1, e2, e3)`.
    pub fn to_standard_basis(a: Gf2Vec3, b: Gf2Vec3, c: Gf2Vec3) -> Option<Self> {
        Self::from_columns([a, b, c]).inverse()
    }

    /// The 168 elements of GL(3, 2) in lexicographic order of their columns.
    pub fn general_linear_group() -> impl Iterator<Item = Self> {
        Gf2Vec3::nonzero().flat_map(|a| {
            Gf2Vec3::nonzero().flat_map(move |b| {
                Gf2Vec3::nonzero()
                    .filter(move |&c| is_basis(a, b, c))
                    .map(move |c| Self::from_columns([a, b, c]))
            })
        })
    }
}

impl fmt::Debug for Gf2Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?} {:?} {:?}]", self.cols[0], self.cols[1], self.cols[2])
    }
}

/// Solves `ξ(v) = 1` for every `v` in `rows` by Gaussian elimination.
///
/// Returns `None` when the system is inconsistent. When it is underdetermined
/// the lexicographically smallest solution is returned.
pub fn solve_unit_functional<I>(rows: I) -> Option<Gf2Functional>
where
    I: IntoIterator<Item = Gf2Vec3>,
{
    // Each row is 3 coefficient bits plus the right-hand side in bit 3.
    let mut pivots: [Option<u8>; 3] = [None; 3];
    for v in rows {
        let mut row = v.bits() | 0b1000;
        for (col, pivot) in pivots.iter_mut().enumerate() {
            let bit = 4 >> col;
            if row & bit == 0 {
                continue;
            }
            match *pivot {
                Some(p) => row ^= p,
                None => {
                    *pivot = Some(row);
                    break;
                }
            }
        }
        if row == 0b1000 {
            return None;
        }
    }

    // Back substitution with free variables set to zero. A pivot row only
    // has bits at its own column and later (less significant) ones.
    let mut xi = 0u8;
    for col in (0..3).rev() {
        if let Some(row) = pivots[col] {
            let bit = 4u8 >> col;
            let rhs = (row >> 3) & 1;
            if rhs ^ parity(row & (bit - 1) & xi) == 1 {
                xi |= bit;
            }
        }
    }

    // Null space vectors, one per free column.
    let mut null_space = [0u8; 3];
    let mut n = 0;
    for free in (0..3).filter(|&c| pivots[c].is_none()) {
        let mut v = 4u8 >> free;
        for col in (0..3).rev() {
            if let Some(row) = pivots[col] {
                let bit = 4u8 >> col;
                if parity(row & (bit - 1) & v) == 1 {
                    v |= bit;
                }
            }
        }
        null_space[n] = v;
        n += 1;
    }

    // Reduced echelon form on leading bits, then clear leading bits greedily.
    let null_space = &mut null_space[..n];
    for i in 0..n {
        let lead = leading_bit(null_space[i]);
        for j in 0..n {
            if j != i && null_space[j] & lead != 0 {
                null_space[j] ^= null_space[i];
            }
        }
    }
    for &v in null_space.iter() {
        if xi & leading_bit(v) != 0 {
            xi ^= v;
        }
    }
    Some(Gf2Functional(xi))
}

fn parity(bits: u8) -> u8 {
    (bits.count_ones() & 1) as u8
}

fn leading_bit(bits: u8) -> u8 {
    debug_assert!(bits != 0);
    1 << (7 - bits.leading_zeros())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn brute_force(rows: &[Gf2Vec3]) -> Option<Gf2Functional> {
        Gf2Functional::all().find(|xi| rows.iter().all(|&v| xi.eval(v)))
    }

    #[test]
    fn solver_matches_brute_force_on_every_subset() {
        for mask in 0u32..(1 << 7) {
            let rows: Vec<Gf2Vec3> = Gf2Vec3::nonzero()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, v)| v)
                .collect();
            assert_eq!(solve_unit_functional(rows.iter().copied()), brute_force(&rows), "{rows:?}");
        }
    }

    #[test]
    fn gl3_has_168_elements() {
        let all: Vec<_> = Gf2Mat3::general_linear_group().collect();
        assert_eq!(all.len(), 168);
        for m in &all {
            let inv = m.inverse().unwrap();
            assert_eq!(m.compose(&inv), Gf2Mat3::IDENTITY);
        }
    }

    #[test]
    fn basis_detection() {
        assert!(is_basis(Gf2Vec3::E1, Gf2Vec3::E2, Gf2Vec3::E3));
        assert!(is_basis(Gf2Vec3::E1, Gf2Vec3::E2, Gf2Vec3::E123));
        assert!(!is_basis(Gf2Vec3::E1, Gf2Vec3::E2, Gf2Vec3::E1 + Gf2Vec3::E2));
        assert!(!is_basis(Gf2Vec3::E1, Gf2Vec3::E1, Gf2Vec3::E3));
    }

    #[test]
    fn to_standard_basis_maps_basis_to_unit_vectors() {
        let m = Gf2Mat3::to_standard_basis(Gf2Vec3::E123, Gf2Vec3::E2, Gf2Vec3::E3).unwrap();
        assert_eq!(m.apply(Gf2Vec3::E123), Gf2Vec3::E1);
        assert_eq!(m.apply(Gf2Vec3::E2), Gf2Vec3::E2);
        assert_eq!(m.apply(Gf2Vec3::E3), Gf2Vec3::E3);
    }
}
