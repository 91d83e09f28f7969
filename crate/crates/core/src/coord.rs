//! The scalar type underlying point coordinates.
//!
//! Membership in the vanishing complexes is decided by exact equality of
//! sums `x_i + s`, so every coordinate type must support exact ordered
//! arithmetic. Vertices use `i64`, rational points use
//! [`num_rational::BigRational`]; the whole combinatorial layer is generic
//! over this trait.

use std::fmt::{Debug, Display};

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

/// An exactly ordered scalar. No floating-point type implements this.
pub trait Coord:
    Clone + Ord + Eq + Debug + Display + Num + Signed + FromPrimitive + 'static
{
    /// Embeds a small integer (shift counts, unit steps) into the scalar.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer embeds into coordinate type")
    }
}

impl Coord for i64 {}
impl Coord for BigRational {}
