//! Independent brute-force baselines for the property suites.
//!
//! Everything here recomputes from the raw definitions through a different
//! code path than the main modules, so that differential tests compare two
//! honest routes rather than one implementation with itself.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{member_of_kind, Kind, SimplexChain};
use crate::coord::Coord;
use crate::error::Result;
use crate::point::{Point, RationalPoint, Vertex};
use crate::seq::Horizon;

/// Reproducible sampling parameters.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub seed: u64,
    pub sample_count: usize,
    /// Maximum denominator for rational barycentric weights (at least 2).
    pub denominator_bound: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            seed: 0x5eed,
            sample_count: 1000,
            denominator_bound: 7,
        }
    }
}

impl OracleConfig {
    /// The deterministic generator for this configuration. ChaCha8 has
    /// stable cross-platform output for a fixed seed.
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Definitional recomputation of the characteristic sequence: materialize
/// all `r * d` values in row order and insertion-sort them. Must agree with
/// the main path exactly.
pub fn oracle_sequence<T: Coord>(x: &Point<T>, d: u32) -> Result<Vec<T>> {
    if d < 1 {
        return Err(crate::error::Error::InvalidHorizon);
    }
    let mut values: Vec<T> = Vec::new();
    for s in 0..d {
        for c in x.coords() {
            let v = c.clone() + T::from_int(s as i64);
            let pos = values.iter().take_while(|w| **w <= v).count();
            values.insert(pos, v);
        }
    }
    Ok(values)
}

/// A strictly positive rational barycentric combination of a chain's
/// vertices, sampled reproducibly; lies in the open simplex.
pub fn sample_interior_point(
    chain: &SimplexChain,
    cfg: &OracleConfig,
    rng: &mut ChaCha8Rng,
) -> RationalPoint {
    let vs = chain.vertices();
    if vs.len() == 1 {
        return vs[0].to_rational();
    }
    let weights: Vec<i64> = vs
        .iter()
        .map(|_| rng.gen_range(1..=cfg.denominator_bound.max(2) as i64))
        .collect();
    let total: i64 = weights.iter().sum();
    let r = vs[0].rank();
    let mut coords = vec![BigRational::from_integer(BigInt::from(0)); r];
    for (v, w) in vs.iter().zip(&weights) {
        let t = BigRational::new(BigInt::from(*w), BigInt::from(total));
        for (acc, c) in coords.iter_mut().zip(v.coords()) {
            *acc += &t * BigRational::from_integer(BigInt::from(*c));
        }
    }
    Point::normalize(coords).expect("rank preserved")
}

/// Direction of a simplex extension search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Up,
    Down,
}

/// Exhaustively searches the candidate vertices extending `sigma` past its
/// max (`Up`) or below its min (`Down`) inside the complex of the given
/// kind. Ground truth for the maximality hypotheses of the simplex lemmas.
pub fn exhaustive_extension_search(
    sigma: &SimplexChain,
    horizon: Horizon,
    k: u32,
    direction: Direction,
    kind: Kind,
) -> Result<Option<Vertex>> {
    let r = sigma.min().rank();
    let span = sigma.max().diff(sigma.min());
    let full = (1u32 << (r - 1)) - 1;
    let mut hits = Vec::new();
    for mask in 1..=full {
        // Candidate steps must keep the whole chain within one unit cube.
        let disjoint = (0..r - 1).all(|i| (mask >> i) & 1 == 0 || span[i] == 0);
        if !disjoint {
            continue;
        }
        let candidate = match direction {
            Direction::Up => {
                let coords = sigma
                    .max()
                    .coords()
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| c + ((mask >> i) & 1) as i64)
                    .collect();
                Vertex::normalize(coords)?
            }
            Direction::Down => {
                let coords = sigma
                    .min()
                    .coords()
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| c - ((mask >> i) & 1) as i64)
                    .collect();
                Vertex::normalize(coords)?
            }
        };
        if kind == Kind::Weyl && !candidate.is_weyl() {
            continue;
        }
        if member_of_kind(kind, &candidate, horizon, k)? {
            hits.push(candidate);
        }
    }
    hits.sort();
    Ok(hits.into_iter().next())
}
