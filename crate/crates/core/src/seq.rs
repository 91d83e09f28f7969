//! Characteristic sequences.
//!
//! The `d`-characteristic sequence of a point `x` is the multiset
//! `{ x_i + s : 1 <= i <= r, 0 <= s < d }` sorted increasingly with
//! multiplicities. Equality of two consecutive entries `v_k = v_{k+1}` is
//! the entire membership criterion; everything in this crate reduces to it.

use std::fmt;

use crate::coord::Coord;
use crate::error::{Error, Result};
use crate::point::Point;

/// Finite horizon `d`, or the limit sequence `v_k = lim_d v_k^{(d)}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Horizon {
    Finite(u32),
    Infinite,
}

impl Horizon {
    /// The largest weight `k` admitting a membership test, or `None` when
    /// unbounded.
    pub fn max_weight(self, r: usize) -> Option<u32> {
        match self {
            Horizon::Finite(d) => Some(r as u32 * d - 1),
            Horizon::Infinite => None,
        }
    }

    /// Validates `k` for membership tests at this horizon.
    pub fn check_weight(self, r: usize, k: u32) -> Result<()> {
        match self.max_weight(r) {
            _ if k < 1 => Err(Error::InvalidWeight {
                k,
                max: self.max_weight(r).unwrap_or(u32::MAX),
            }),
            Some(max) if k > max => Err(Error::InvalidWeight { k, max }),
            _ => Ok(()),
        }
    }

    /// Horizon actually used to evaluate the membership test at weight `k`.
    ///
    /// The finite and limit sequences agree on their first `d` entries, and
    /// the equality `v_k = v_{k+1}` computed at horizon `d = k` coincides
    /// with the limit criterion, so the limit never needs more than `k`
    /// columns.
    pub fn effective(self, k: u32) -> u32 {
        match self {
            Horizon::Finite(d) => d,
            Horizon::Infinite => k.max(1),
        }
    }
}

impl fmt::Display for Horizon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Horizon::Finite(d) => write!(f, "{d}"),
            Horizon::Infinite => write!(f, "inf"),
        }
    }
}

/// The sorted value list `(v_1^{(d)}, ..., v_{rd}^{(d)})` of a point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DSequence<T> {
    r: usize,
    d: u32,
    values: Vec<T>,
}

impl<T: Coord> DSequence<T> {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn horizon(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `v_k^{(d)}`, 1-based as in the definition; `1 <= k <= rd`.
    pub fn value(&self, k: u32) -> &T {
        &self.values[(k - 1) as usize]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// The membership criterion at weight `k`: `v_k = v_{k+1}` exactly.
    pub fn vanishes_at(&self, k: u32) -> bool {
        self.value(k) == self.value(k + 1)
    }
}

/// Computes the `d`-characteristic sequence of an apartment point.
pub fn d_sequence<T: Coord>(x: &Point<T>, d: u32) -> Result<DSequence<T>> {
    if d < 1 {
        return Err(Error::InvalidHorizon);
    }
    let r = x.rank();
    let mut values = Vec::with_capacity(r * d as usize);
    for c in x.coords() {
        for s in 0..d {
            values.push(c.clone() + T::from_int(s as i64));
        }
    }
    values.sort();
    Ok(DSequence { r, d, values })
}

/// `v_k^{(d)}` as a single value.
pub fn sequence_value<T: Coord>(x: &Point<T>, d: u32, k: u32) -> Result<T> {
    let rd = x.rank() as u32 * d;
    if k < 1 || k > rd {
        return Err(Error::InvalidWeight { k, max: rd });
    }
    Ok(d_sequence(x, d)?.value(k).clone())
}
