//! Points of the standard apartment in normalized coordinates.
//!
//! A point is a coordinate vector `(x_1, ..., x_r)` with `x_r = 0`; two raw
//! vectors differing by a constant vector describe the same point, and
//! [`Point::normalize`] picks the representative with last entry zero. A
//! point lies in the (closed) Weyl chamber when its coordinates are weakly
//! decreasing.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coord::Coord;
use crate::error::{Error, Result};

/// A normalized point of the apartment with coordinates in `T`.
///
/// Invariants: at least two coordinates, the last one zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point<T> {
    coords: Vec<T>,
}

/// An apartment vertex: integer coordinates.
///
/// Coordinates are `i64` with the working bound `|n_i| <= 2^30`; all
/// quantities derived here (box values, sequence entries) then stay far from
/// overflow.
pub type Vertex = Point<i64>;

/// A rational point of the apartment, with exact arbitrary-precision
/// coordinates.
pub type RationalPoint = Point<BigRational>;

impl<T: Coord> Point<T> {
    /// Normalizes a raw coordinate vector by subtracting its last entry,
    /// so that equivalent vectors become equal.
    pub fn normalize(coords: Vec<T>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidRank(coords.len()));
        }
        let last = coords.last().expect("nonempty").clone();
        let coords = coords.into_iter().map(|c| c - last.clone()).collect();
        Ok(Point { coords })
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// The `i`-th coordinate, 1-based as in `x = (x_1, ..., x_r)`.
    pub fn coord(&self, i: usize) -> &T {
        &self.coords[i - 1]
    }

    /// True when the coordinates are weakly decreasing, i.e. the point lies
    /// in the closed Weyl chamber.
    pub fn is_weyl(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn min_coord(&self) -> &T {
        self.coords.iter().min().expect("nonempty")
    }

    pub fn max_coord(&self) -> &T {
        self.coords.iter().max().expect("nonempty")
    }

    /// `max - min` of the coordinates; zero exactly for the origin.
    pub fn spread(&self) -> T {
        self.max_coord().clone() - self.min_coord().clone()
    }

    /// The root `alpha_{i,j}(x) = x_i - x_j` (indices 1-based).
    pub fn root(&self, i: usize, j: usize) -> T {
        self.coord(i).clone() - self.coord(j).clone()
    }

    /// Applies a coordinate permutation (an element of the Weyl group) and
    /// renormalizes. `perm` is 0-based: entry `i` of the result is
    /// coordinate `perm[i]` of the input.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let r = self.rank();
        if perm.len() != r {
            return Err(Error::InvalidArgument(format!(
                "permutation has length {}, expected {r}",
                perm.len()
            )));
        }
        let mut seen = vec![false; r];
        for &p in perm {
            if p >= r || seen[p] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen[p] = true;
        }
        Self::normalize(perm.iter().map(|&p| self.coords[p].clone()).collect())
    }

    /// Sorts the coordinates decreasingly and renormalizes: the unique Weyl
    /// representative of the orbit of this point.
    pub fn weyl_sorted(&self) -> Self {
        let mut coords = self.coords.clone();
        coords.sort_by(|a, b| b.cmp(a));
        Self::normalize(coords).expect("rank preserved")
    }

    /// The Dynkin-diagram involution in normalized coordinates:
    /// `x -> (x_1 - x_r, x_1 - x_{r-1}, ..., x_1 - x_1 = 0)`.
    ///
    /// Defined on the Weyl chamber, where it is an involution and satisfies
    /// `alpha_i(hat(x)) = alpha_{r-i}(x)`.
    pub fn hat(&self) -> Result<Self> {
        if !self.is_weyl() {
            return Err(Error::NotInWeylChamber);
        }
        let x1 = self.coords[0].clone();
        let coords = self
            .coords
            .iter()
            .rev()
            .map(|c| x1.clone() - c.clone())
            .collect();
        Ok(Point { coords })
    }
}

impl Vertex {
    /// The zero vertex (also written `n_0`).
    pub fn zero(r: usize) -> Self {
        Point { coords: vec![0; r] }
    }

    /// The fundamental dominant weight `n_j = (1,...,1,0,...,0)` with `j`
    /// ones; `j = 0` gives the zero vertex.
    pub fn fundamental_weight(r: usize, j: usize) -> Self {
        assert!(j < r, "fundamental weight index out of range");
        let mut coords = vec![0; r];
        coords[..j].fill(1);
        Point { coords }
    }

    /// The vector `y = n_{r-1} = (1,...,1,0)`.
    pub fn y(r: usize) -> Self {
        Self::fundamental_weight(r, r - 1)
    }

    /// The standard basis vector `e_i` (1-based, `1 <= i < r`). Not itself a
    /// normalized vertex for `i = r`, so that index is rejected.
    pub fn unit(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r, "unit vector index out of range");
        let mut coords = vec![0; r];
        coords[i - 1] = 1;
        Point { coords }
    }

    /// True when this vertex equals some fundamental weight `n_j`,
    /// `0 <= j < r`.
    pub fn is_fundamental_weight(&self) -> bool {
        self.coords.iter().all(|&c| c == 0 || c == 1) && self.is_weyl()
    }

    /// Exact rational copy of this vertex.
    pub fn to_rational(&self) -> RationalPoint {
        Point {
            coords: self
                .coords
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    /// Combinatorial difference as raw coordinates (not normalized).
    pub fn diff(&self, other: &Vertex) -> Vec<i64> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect()
    }

    /// Product order `self <= other` componentwise.
    pub fn le(&self, other: &Vertex) -> bool {
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// True when the two (normalized) vertices span an edge of the
    /// apartment: comparable with componentwise difference in `{0, 1}`.
    pub fn is_neighbor_of(&self, other: &Vertex) -> bool {
        if self == other {
            return false;
        }
        let d = self.diff(other);
        d.iter().all(|&x| x == 0 || x == 1) || d.iter().all(|&x| x == 0 || x == -1)
    }
}

impl Add<&Vertex> for &Vertex {
    type Output = Vertex;
    fn add(self, rhs: &Vertex) -> Vertex {
        debug_assert_eq!(self.rank(), rhs.rank());
        Point {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&Vertex> for &Vertex {
    type Output = Vertex;
    fn sub(self, rhs: &Vertex) -> Vertex {
        debug_assert_eq!(self.rank(), rhs.rank());
        Point {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<T: Coord> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<T: Coord> fmt::Debug for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[i64]) -> Vertex {
        Vertex::normalize(coords.to_vec()).unwrap()
    }

    #[test]
    fn normalize_subtracts_last_coordinate() {
        assert_eq!(v(&[5, 4, 2, 1]).coords(), &[4, 3, 1, 0]);
        assert_eq!(v(&[0, 0, 0]).coords(), &[0, 0, 0]);
        assert_eq!(v(&[-1, -1, -2]).coords(), &[1, 1, 0]);
    }

    #[test]
    fn normalize_rejects_rank_below_two() {
        assert!(matches!(
            Vertex::normalize(vec![3]),
            Err(Error::InvalidRank(1))
        ));
    }

    #[test]
    fn weyl_test() {
        assert!(v(&[4, 3, 1, 0]).is_weyl());
        assert!(!v(&[0, 1, 0]).is_weyl());
        assert!(Vertex::zero(5).is_weyl());
    }

    #[test]
    fn hat_formula_and_involution() {
        assert_eq!(v(&[3, 1, 0]).hat().unwrap(), v(&[3, 2, 0]));
        // t * n_j maps to t * n_{r-j}
        let r = 5;
        for j in 1..r {
            let p = Vertex::normalize(
                Vertex::fundamental_weight(r, j)
                    .coords()
                    .iter()
                    .map(|c| 3 * c)
                    .collect(),
            )
            .unwrap();
            let q = Vertex::normalize(
                Vertex::fundamental_weight(r, r - j)
                    .coords()
                    .iter()
                    .map(|c| 3 * c)
                    .collect(),
            )
            .unwrap();
            assert_eq!(p.hat().unwrap(), q);
        }
        assert!(v(&[0, 1, 0]).hat().is_err());
    }

    #[test]
    fn hat_flips_simple_roots() {
        let x = v(&[7, 4, 4, 1, 0]);
        let h = x.hat().unwrap();
        let r = x.rank();
        for i in 1..r {
            assert_eq!(h.root(i, i + 1), x.root(r - i, r - i + 1));
        }
    }

    #[test]
    fn last_reflection_matches_closed_form() {
        // s_{alpha_{r-1}} swaps the last two coordinates:
        // (x_1, ..., x_{r-1}, 0) -> (x_1 - x_{r-1}, ..., -x_{r-1}, 0).
        let x = v(&[4, 3, 1, 0]);
        let s = x.permuted(&[0, 1, 3, 2]).unwrap();
        assert_eq!(s, v(&[3, 2, -1, 0]));
        // identity
        assert_eq!(x.permuted(&[0, 1, 2, 3]).unwrap(), x);
        // transposition (1 2)
        assert_eq!(x.permuted(&[1, 0, 2, 3]).unwrap(), v(&[3, 4, 1, 0]));
    }

    #[test]
    fn weyl_sorted_is_weyl_representative() {
        let x = v(&[-1, 2, 0]);
        let w = x.weyl_sorted();
        assert!(w.is_weyl());
        assert_eq!(w, v(&[3, 1, 0]));
    }
}
