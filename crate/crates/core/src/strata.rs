//! Stratification of `W(d,k)` and the edge-path reduction to a
//! fundamental weight.
//!
//! Members split by the size of the repeated value against the horizon,
//! and the whole vertex set decomposes as the low stratum together with
//! rays `n + j*y` over two thin base strata. The same case analysis drives
//! a terminating walk from any member down to some fundamental weight, the
//! constructive form of connectedness.

use std::fmt;

use crate::diagram::critical_index;
use crate::error::{Error, Result};
use crate::membership::{member_w, vanishing_value};
use crate::point::Vertex;
use crate::seq::{d_sequence, Horizon};

/// Stratum tags for members of `W(d,k)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Stratum {
    /// Repeated value below the horizon.
    S1,
    /// Repeated value at least the horizon.
    S2,
    /// Member at both `k-1` and `k` with value exactly `d - 1`.
    S3,
    /// On the last wall (`n_{r-1} = 0`) with value at least the horizon.
    S4,
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stratum::S1 => "S1",
            Stratum::S2 => "S2",
            Stratum::S3 => "S3",
            Stratum::S4 => "S4",
        };
        f.write_str(s)
    }
}

/// Classifies a member vertex of `W(d,k)`: S3 and S4 are the ray bases and
/// take precedence, otherwise S1/S2 split on the repeated value.
pub fn classify_stratum(n: &Vertex, d: u32, k: u32) -> Result<Stratum> {
    let horizon = Horizon::Finite(d);
    if !member_w(n, horizon, k)? {
        return Err(Error::NotMember(n.to_string()));
    }
    let v = vanishing_value(n, horizon, k)?;
    if k >= 2 && v == d as i64 - 1 && member_w(n, horizon, k - 1)? {
        return Ok(Stratum::S3);
    }
    if *n.coord(n.rank() - 1) == 0 && v >= d as i64 {
        return Ok(Stratum::S4);
    }
    Ok(if v < d as i64 {
        Stratum::S1
    } else {
        Stratum::S2
    })
}

/// True when the member `n` lies on a ray `b + j*y` over an S3 or S4 base
/// vertex `b` (the second leg of the decomposition of `W(d,k)`).
pub fn in_ray_stratum(n: &Vertex, d: u32, k: u32) -> Result<bool> {
    let horizon = Horizon::Finite(d);
    if !member_w(n, horizon, k)? {
        return Err(Error::NotMember(n.to_string()));
    }
    let r = n.rank();
    let y = Vertex::y(r);
    let mut base = n.clone();
    for _ in 0..=*n.coord(r - 1) {
        if member_w(&base, horizon, k)? {
            let s = classify_stratum(&base, d, k)?;
            if s == Stratum::S3 || s == Stratum::S4 {
                return Ok(true);
            }
        }
        base = &base - &y;
    }
    Ok(false)
}

/// An edge path in a vanishing complex: consecutive vertices at
/// combinatorial distance one, all members.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgePath {
    vertices: Vec<Vertex>,
}

impl EdgePath {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn start(&self) -> &Vertex {
        &self.vertices[0]
    }

    pub fn end(&self) -> &Vertex {
        &self.vertices[self.vertices.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Re-verifies the path: memberships, unit steps, fundamental endpoint.
    pub fn verify(&self, horizon: Horizon, k: u32) -> Result<()> {
        for v in &self.vertices {
            if !member_w(v, horizon, k)? {
                return Err(Error::NotMember(v.to_string()));
            }
        }
        for w in self.vertices.windows(2) {
            if !w[0].is_neighbor_of(&w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "path steps {} -> {} are not neighbors",
                    w[0], w[1]
                )));
            }
        }
        if !self.end().is_fundamental_weight() {
            return Err(Error::InvalidArgument(format!(
                "path ends at non-fundamental vertex {}",
                self.end()
            )));
        }
        Ok(())
    }
}

/// Constructs an edge path inside `W(d,k)` from a member vertex to one of
/// the fundamental weights `n_0, ..., n_{r-1}`.
///
/// An infinite horizon is evaluated at `d = k`, where the two complexes
/// agree. Each step re-checks membership; the walk lowers the height `n_1`
/// except across the bounded detour near multiples of a fundamental
/// weight.
pub fn reduce_to_fundamental(n: &Vertex, horizon: Horizon, k: u32) -> Result<EdgePath> {
    horizon.check_weight(n.rank(), k)?;
    let d = horizon.effective(k);
    let fin = Horizon::Finite(d);
    if !member_w(n, fin, k)? {
        return Err(Error::NotMember(n.to_string()));
    }
    let r = n.rank();
    let mut path = vec![n.clone()];
    let mut current = n.clone();
    let budget = 16 * (*n.coord(1) as usize + r + d as usize + k as usize) + 64;
    for _ in 0..budget {
        if current.is_fundamental_weight() {
            return Ok(EdgePath { vertices: path });
        }
        let next = reduction_step(&current, d, k)?;
        if !member_w(&next, fin, k)? {
            return Err(Error::InvalidArgument(format!(
                "reduction step left the complex at {next}"
            )));
        }
        path.push(next.clone());
        current = next;
    }
    Err(Error::ReductionStuck(budget))
}

/// One step of the reduction, following the stratified case analysis.
fn reduction_step(n: &Vertex, d: u32, k: u32) -> Result<Vertex> {
    let r = n.rank();
    let fin = Horizon::Finite(d);
    let seq = d_sequence(n, d)?;
    let v = *seq.value(k);

    if v >= d as i64 {
        // High stratum: peel the maximal positive fundamental weight.
        let i = (1..r).rev().find(|&i| *n.coord(i) > 0).expect("nonzero");
        return Ok(n - &Vertex::fundamental_weight(r, i));
    }

    let rho = critical_index(n, fin, k)?;
    let n1 = *n.coord(1);

    // Height above the repeated value: drop a weight ending where the
    // coordinates cross the value; the box numbering at k is untouched.
    if n1 > v {
        for i in 1..rho {
            if n.coord(i) > n.coord(i + 1) && *n.coord(i) > v {
                return Ok(n - &Vertex::fundamental_weight(r, i));
            }
        }
    }

    // Left devices: a descent strictly below the critical row.
    for i in 1..rho {
        if n.coord(i) > n.coord(i + 1) && i != r - rho {
            return Ok(n - &Vertex::fundamental_weight(r, i));
        }
    }

    // Right devices: a descent strictly below the critical row, deepest
    // first.
    for i in (rho + 1..r).rev() {
        let next = if i + 1 == r { 0 } else { *n.coord(i + 1) };
        if *n.coord(i) > next && i != r - rho {
            return Ok(n - &Vertex::fundamental_weight(r, i));
        }
    }

    // Critical-row device.
    if n.coord(rho) > n.coord(rho + 1) && rho != r - rho {
        return Ok(n - &Vertex::fundamental_weight(r, rho));
    }

    // All remaining descents sit at r - rho: n = t * n_{r-rho}, t >= 2.
    let t = n1;
    let base = Vertex::fundamental_weight(r, r - rho);
    debug_assert_eq!(
        n.coords(),
        base.coords().iter().map(|c| c * t).collect::<Vec<_>>()
    );
    Ok(if rho <= r - rho {
        n - &Vertex::unit(r, r - rho)
    } else {
        n + &Vertex::unit(r, r - rho + 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[i64]) -> Vertex {
        Vertex::normalize(coords.to_vec()).unwrap()
    }

    #[test]
    fn classify_requires_membership() {
        assert!(matches!(
            classify_stratum(&v(&[1, 0, 0]), 2, 2),
            Err(Error::NotMember(_))
        ));
    }

    #[test]
    fn low_weight_members_are_s1() {
        // k <= d forces the repeated value below the horizon.
        for n in [v(&[0, 0, 0]), v(&[1, 1, 0]), v(&[3, 1, 0])] {
            for (d, k) in [(2u32, 2u32), (3, 2), (3, 3)] {
                if member_w(&n, Horizon::Finite(d), k).unwrap() {
                    assert_eq!(classify_stratum(&n, d, k).unwrap(), Stratum::S1);
                }
            }
        }
    }

    #[test]
    fn wall_members_high_value_are_s4_rays() {
        // W(2,5) = {(t,t,0)}: v grows with t, rays over the S3/S4 bases.
        let d = 2;
        let k = 5;
        for t in 1..6 {
            let n = v(&[t, t, 0]);
            assert!(member_w(&n, Horizon::Finite(d), k).unwrap());
            assert!(in_ray_stratum(&n, d, k).unwrap());
        }
    }

    #[test]
    fn s3_critical_index_relation() {
        // For S3 members, rho_k + 1 = rho_{k-1} < r.
        for bound in 0..5i64 {
            for n1 in 0..=bound {
                for n2 in 0..=n1 {
                    let n = v(&[n1, n2, 0]);
                    for (d, k) in [(2u32, 3u32), (2, 4), (3, 4), (3, 5)] {
                        if member_w(&n, Horizon::Finite(d), k).unwrap()
                            && classify_stratum(&n, d, k).unwrap() == Stratum::S3
                        {
                            let rho_k = critical_index(&n, Horizon::Finite(d), k).unwrap();
                            let rho_km1 = critical_index(&n, Horizon::Finite(d), k - 1).unwrap();
                            assert_eq!(rho_k + 1, rho_km1);
                            assert!(rho_km1 < n.rank());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduce_trivial_and_detour() {
        // A fundamental weight reduces to itself.
        let n = Vertex::fundamental_weight(3, 1);
        let p = reduce_to_fundamental(&n, Horizon::Finite(2), 1).unwrap();
        assert_eq!(p.len(), 1);
        p.verify(Horizon::Finite(2), 1).unwrap();

        // t * n_{r - rho} with t > 1 starts with the detour vertex.
        // (2,2,0) in W(3,4): rho = 1, r - rho = 2, rho <= r - rho, and no
        // distance-lowering device applies.
        let n = v(&[2, 2, 0]);
        let d = Horizon::Finite(3);
        assert!(member_w(&n, d, 4).unwrap());
        let rho = critical_index(&n, d, 4).unwrap();
        assert_eq!(rho, 1);
        let p = reduce_to_fundamental(&n, d, 4).unwrap();
        p.verify(d, 4).unwrap();
        assert_eq!(p.vertices()[1], v(&[2, 1, 0]));
    }

    #[test]
    fn reduce_small_window_sweep() {
        for r in [3usize, 4] {
            for d in [2u32, 3] {
                for k in 1..(r as u32 * d) {
                    for n in
                        crate::complex::enumerate_window(r, 4, crate::complex::Kind::Weyl).unwrap()
                    {
                        if member_w(&n, Horizon::Finite(d), k).unwrap() {
                            let p = reduce_to_fundamental(&n, Horizon::Finite(d), k).unwrap();
                            p.verify(Horizon::Finite(d), k).unwrap();
                        }
                    }
                }
            }
        }
    }
}
