//! Windowed vanishing complexes and their verifiers.
//!
//! A window truncates a full subcomplex of the chamber or the apartment to
//! a finite coordinate range. Simplices of the apartment are totally
//! ordered vertex chains inside a `[m, m + y]` cube, so a window complex is
//! stored as its member vertex set plus the maximal chains of members.
//! Global theorems (equidimensionality, boundarylessness, symmetry) are
//! checked on every simplex whose margin neighborhood stays inside the
//! window.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::membership::{member_a, member_w};
use crate::point::Vertex;
use crate::seq::Horizon;

/// Which cone the window lives in: the Weyl chamber or the full apartment.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Kind {
    Weyl,
    Apartment,
}

impl Kind {
    pub fn letter(self) -> &'static str {
        match self {
            Kind::Weyl => "W",
            Kind::Apartment => "A",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "W" | "w" | "weyl" => Ok(Kind::Weyl),
            "A" | "a" | "apartment" => Ok(Kind::Apartment),
            other => Err(Error::InvalidArgument(format!(
                "unknown kind {other:?}, expected W or A"
            ))),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

/// Membership dispatch for a window kind.
pub fn member_of_kind(kind: Kind, v: &Vertex, horizon: Horizon, k: u32) -> Result<bool> {
    match kind {
        Kind::Weyl => member_w(v, horizon, k),
        Kind::Apartment => member_a(v, horizon, k),
    }
}

/// A simplex of the apartment: a totally ordered set of normalized
/// vertices with componentwise span at most `y`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct SimplexChain {
    vertices: Vec<Vertex>,
}

impl SimplexChain {
    /// Validates and sorts a vertex set into a chain.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidChain("empty vertex set".into()));
        }
        let r = vertices[0].rank();
        if vertices.iter().any(|v| v.rank() != r) {
            return Err(Error::InvalidChain("mixed ranks".into()));
        }
        vertices.sort();
        vertices.dedup();
        for w in vertices.windows(2) {
            let d = w[1].diff(&w[0]);
            if !d.iter().all(|&x| (0..=1).contains(&x)) || d.iter().all(|&x| x == 0) {
                return Err(Error::InvalidChain(format!(
                    "{} and {} are not comparable neighbors",
                    w[0], w[1]
                )));
            }
        }
        let span = vertices[vertices.len() - 1].diff(&vertices[0]);
        if !span.iter().all(|&x| (0..=1).contains(&x)) {
            return Err(Error::InvalidChain("span exceeds one unit cube".into()));
        }
        Ok(SimplexChain { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn min(&self) -> &Vertex {
        &self.vertices[0]
    }

    pub fn max(&self) -> &Vertex {
        &self.vertices[self.vertices.len() - 1]
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.vertices.binary_search(v).is_ok()
    }
}

impl fmt::Display for SimplexChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All normalized window vertices for a kind, in lexicographic order.
///
/// Weyl windows are `0 <= n_{r-1} <= ... <= n_1 <= N`; apartment windows
/// contain every vertex whose coordinate spread (including the trailing
/// zero) is at most `N`.
pub fn enumerate_window(r: usize, bound: i64, kind: Kind) -> Result<Vec<Vertex>> {
    if r < 2 {
        return Err(Error::InvalidRank(r));
    }
    if bound < 0 {
        return Err(Error::InvalidArgument("window bound must be >= 0".into()));
    }
    let mut out = Vec::new();
    let mut coords = vec![0i64; r];
    match kind {
        Kind::Weyl => {
            fn rec(coords: &mut Vec<i64>, pos: usize, hi: i64, out: &mut Vec<Vertex>) {
                if pos == coords.len() - 1 {
                    out.push(Vertex::normalize(coords.clone()).expect("valid rank"));
                    return;
                }
                for v in 0..=hi {
                    coords[pos] = v;
                    rec(coords, pos + 1, v, out);
                }
            }
            // Generate with n_1 outermost ascending for lexicographic order.
            rec(&mut coords, 0, bound, &mut out);
        }
        Kind::Apartment => {
            fn rec(coords: &mut Vec<i64>, pos: usize, bound: i64, out: &mut Vec<Vertex>) {
                if pos == coords.len() - 1 {
                    let mx = coords.iter().max().unwrap().max(&0);
                    let mn = coords.iter().min().unwrap().min(&0);
                    if mx - mn <= bound {
                        out.push(Vertex::normalize(coords.clone()).expect("valid rank"));
                    }
                    return;
                }
                for v in -bound..=bound {
                    coords[pos] = v;
                    rec(coords, pos + 1, bound, out);
                }
            }
            rec(&mut coords, 0, bound, &mut out);
        }
    }
    out.sort();
    Ok(out)
}

/// The `2^r - 2` apartment neighbors of a normalized vertex, sorted.
pub fn neighbors(v: &Vertex) -> Vec<Vertex> {
    let r = v.rank();
    let mut out = Vec::with_capacity((1usize << r) - 2);
    for mask in 1..((1u32 << r) - 1) {
        let coords = v
            .coords()
            .iter()
            .enumerate()
            .map(|(i, &c)| c + ((mask >> i) & 1) as i64)
            .collect();
        out.push(Vertex::normalize(coords).expect("valid rank"));
    }
    out.sort();
    out.dedup();
    out
}

/// Neighbors lying inside the Weyl chamber.
pub fn weyl_neighbors(v: &Vertex) -> Vec<Vertex> {
    neighbors(v).into_iter().filter(|u| u.is_weyl()).collect()
}

/// A finite window of a vanishing complex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexWindow {
    pub r: usize,
    pub horizon: Horizon,
    pub k: u32,
    pub kind: Kind,
    pub bound: i64,
    pub margin: u32,
    vertices: Vec<Vertex>,
    maximal_simplices: Vec<SimplexChain>,
}

impl ComplexWindow {
    /// Assembles a window from parts, revalidating the structural
    /// invariants (sortedness and the full-subcomplex property are the
    /// caller's responsibility; chains are validated).
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        r: usize,
        horizon: Horizon,
        k: u32,
        kind: Kind,
        bound: i64,
        margin: u32,
        mut vertices: Vec<Vertex>,
        maximal_simplices: Vec<SimplexChain>,
    ) -> Result<Self> {
        vertices.sort();
        vertices.dedup();
        for s in &maximal_simplices {
            for v in s.vertices() {
                if vertices.binary_search(v).is_err() {
                    return Err(Error::MalformedDocument(format!(
                        "simplex {s} uses vertex {v} outside the vertex set"
                    )));
                }
            }
        }
        Ok(ComplexWindow {
            r,
            horizon,
            k,
            kind,
            bound,
            margin,
            vertices,
            maximal_simplices,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn maximal_simplices(&self) -> &[SimplexChain] {
        &self.maximal_simplices
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn vertex_index(&self, v: &Vertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Dimension of the window complex (`None` when empty).
    pub fn dim(&self) -> Option<usize> {
        self.maximal_simplices.iter().map(SimplexChain::dim).max()
    }

    /// Edges (1-simplices), each ordered pair of window vertex indices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let r = self.r;
        let mut out = Vec::new();
        for (a, v) in self.vertices.iter().enumerate() {
            for mask in 1..(1u32 << (r - 1)) {
                let u = add_mask(v, mask);
                if let Some(b) = self.vertex_index(&u) {
                    out.push((a, b));
                }
            }
        }
        out.sort();
        out
    }

    /// True when every lattice vertex within combinatorial distance
    /// `margin` of `v` lies in the window region (independent of
    /// membership). One edge step changes the Weyl height `n_1`, or an
    /// apartment spread, by at most one.
    pub fn is_interior(&self, v: &Vertex, margin: u32) -> bool {
        match self.kind {
            Kind::Weyl => *v.coord(1) + margin as i64 <= self.bound,
            Kind::Apartment => v.spread() + margin as i64 <= self.bound,
        }
    }

    fn interior_simplex(&self, s: &SimplexChain, margin: u32) -> bool {
        s.vertices().iter().all(|v| self.is_interior(v, margin))
    }
}

fn add_mask(v: &Vertex, mask: u32) -> Vertex {
    let coords = v
        .coords()
        .iter()
        .enumerate()
        .map(|(i, &c)| c + ((mask >> i) & 1) as i64)
        .collect();
    Vertex::normalize(coords).expect("valid rank")
}

fn sub_mask(v: &Vertex, mask: u32) -> Vertex {
    let coords = v
        .coords()
        .iter()
        .enumerate()
        .map(|(i, &c)| c - ((mask >> i) & 1) as i64)
        .collect();
    Vertex::normalize(coords).expect("valid rank")
}

/// Builds the window of `W(d,k)`/`A(d,k)` (or the limit complexes) with
/// the given bound: member vertices plus all maximal chains of members.
/// The full-subcomplex property holds by construction.
pub fn build_complex(
    r: usize,
    horizon: Horizon,
    k: u32,
    bound: i64,
    kind: Kind,
    margin: u32,
) -> Result<ComplexWindow> {
    horizon.check_weight(r, k)?;
    let candidates = enumerate_window(r, bound, kind)?;
    let vertices = candidates
        .into_par_iter()
        .filter_map(|v| match member_of_kind(kind, &v, horizon, k) {
            Ok(true) => Some(v),
            _ => None,
        })
        .collect::<Vec<_>>();
    let maximal_simplices = maximal_chains(&vertices, r, kind);
    ComplexWindow::from_parts(
        r,
        horizon,
        k,
        kind,
        bound,
        margin,
        vertices,
        maximal_simplices,
    )
}

/// Maximal chains of the complex induced on a sorted vertex set.
fn maximal_chains(vertices: &[Vertex], r: usize, kind: Kind) -> Vec<SimplexChain> {
    let contains = |v: &Vertex| vertices.binary_search(v).is_ok();
    let mut out: Vec<SimplexChain> = vertices
        .par_iter()
        .flat_map_iter(|m| {
            let full = (1u32 << (r - 1)) - 1;
            let present: Vec<u32> = (1..=full).filter(|&d| contains(&add_mask(m, d))).collect();
            // Chains with minimum m that cannot be extended below m.
            let mut found = Vec::new();
            let mut stack = vec![0u32];
            chains_rec(m, &present, &mut stack, &mut found, &|top: u32| {
                // A window vertex w = m - eps with support disjoint from the
                // top delta would extend the chain downward.
                let free = full & !top;
                let mut eps = free;
                loop {
                    if eps != 0 {
                        let w = sub_mask(m, eps);
                        if (kind == Kind::Apartment || w.is_weyl()) && contains(&w) {
                            return false;
                        }
                    }
                    if eps == 0 {
                        break;
                    }
                    eps = (eps - 1) & free;
                }
                true
            });
            found
        })
        .collect();
    out.sort();
    out
}

fn chains_rec(
    m: &Vertex,
    present: &[u32],
    stack: &mut Vec<u32>,
    found: &mut Vec<SimplexChain>,
    is_min: &dyn Fn(u32) -> bool,
) {
    let last = *stack.last().expect("stack starts at 0");
    // Minimal available deltas strictly above `last`: extending only by
    // covers enumerates exactly the maximal chains of the poset.
    let above: Vec<u32> = present
        .iter()
        .copied()
        .filter(|&d| d != last && d & last == last)
        .collect();
    let minimal: Vec<u32> = above
        .iter()
        .copied()
        .filter(|&d| !above.iter().any(|&e| e != d && e & d == e))
        .collect();
    if minimal.is_empty() {
        if is_min(last) {
            let vs = stack.iter().map(|&d| add_mask(m, d)).collect();
            found.push(SimplexChain::new(vs).expect("constructed chains are valid"));
        }
        return;
    }
    for d in minimal {
        stack.push(d);
        chains_rec(m, present, stack, found, is_min);
        stack.pop();
    }
}

/// Disjoint-set forest with path compression and union by size.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Connected components of a window complex.
#[derive(Clone, Debug)]
pub struct Components {
    pub count: usize,
    /// Component id per window vertex, ids numbered by first occurrence.
    pub component_of: Vec<usize>,
    /// Lexicographically least vertex of each component.
    pub representatives: Vec<Vertex>,
}

pub fn connected_components(cw: &ComplexWindow) -> Components {
    let n = cw.vertices().len();
    let mut uf = UnionFind::new(n);
    for (a, b) in cw.edges() {
        uf.union(a, b);
    }
    let mut ids = vec![usize::MAX; n];
    let mut component_of = vec![0usize; n];
    let mut representatives = Vec::new();
    let mut next = 0;
    for (i, slot) in component_of.iter_mut().enumerate() {
        let root = uf.find(i);
        if ids[root] == usize::MAX {
            ids[root] = next;
            representatives.push(cw.vertices()[i].clone());
            next += 1;
        }
        *slot = ids[root];
    }
    Components {
        count: next,
        component_of,
        representatives,
    }
}

/// A failed check, pointing at the offending simplex.
#[derive(Clone, Debug)]
pub struct Violation {
    pub simplex: SimplexChain,
    pub detail: String,
    pub on_chamber_wall: bool,
}

/// Outcome of a window verifier.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// True when the simplex touches the chamber boundary: some vertex lies on
/// some wall (`n_i = n_{i+1}` for an `i`, counting `n_r = 0`).
fn on_chamber_wall(s: &SimplexChain) -> bool {
    let r = s.min().rank();
    s.vertices()
        .iter()
        .any(|v| (1..=r - 1).any(|i| v.coord(i) == v.coord(i + 1)))
}

/// Checks that every maximal simplex inside the margin has the full
/// codimension-one dimension `r - 2` (i.e. `r - 1` vertices) and the
/// admissible span shape: `max - min` equals `y` or `y - e_i`.
pub fn verify_strong_equidimensionality(cw: &ComplexWindow, margin: u32) -> VerificationReport {
    let want = cw.r - 1;
    let mut report = VerificationReport::default();
    for s in cw.maximal_simplices() {
        if !cw.interior_simplex(s, margin) {
            continue;
        }
        report.checked += 1;
        if s.len() != want {
            report.violations.push(Violation {
                on_chamber_wall: on_chamber_wall(s),
                detail: format!("maximal simplex has {} vertices, expected {want}", s.len()),
                simplex: s.clone(),
            });
            continue;
        }
        if want >= 2 {
            let span = s.max().diff(s.min());
            let zeros = span[..cw.r - 1].iter().filter(|&&x| x == 0).count();
            if !(zeros == 0 || zeros == 1) {
                report.violations.push(Violation {
                    on_chamber_wall: on_chamber_wall(s),
                    detail: format!("span {span:?} is neither y nor y - e_i"),
                    simplex: s.clone(),
                });
            }
        }
    }
    report
}

/// Checks that every interior `(r-3)`-simplex is a face of at least two
/// `(r-2)`-simplices. Refuses Weyl windows unless `report_only` is set,
/// since the property genuinely fails on the chamber walls.
pub fn verify_boundaryless(
    cw: &ComplexWindow,
    margin: u32,
    report_only: bool,
) -> Result<VerificationReport> {
    if cw.kind == Kind::Weyl && !report_only {
        return Err(Error::WeylBoundaryRefused);
    }
    let r = cw.r;
    let mut report = VerificationReport::default();
    if r < 3 {
        return Ok(report); // no (r-3)-simplices: the condition is empty
    }
    let face_len = r - 2;
    let mut faces: BTreeSet<SimplexChain> = BTreeSet::new();
    for s in cw.maximal_simplices() {
        collect_subsets(s.vertices(), face_len, &mut faces);
    }
    for tau in faces {
        if !cw.interior_simplex(&tau, margin) {
            continue;
        }
        report.checked += 1;
        let extensions = extension_count(cw, &tau);
        if extensions < 2 {
            report.violations.push(Violation {
                on_chamber_wall: on_chamber_wall(&tau),
                detail: format!("face of only {extensions} simplices of dimension {}", r - 2),
                simplex: tau.clone(),
            });
        }
    }
    Ok(report)
}

fn collect_subsets(vs: &[Vertex], size: usize, out: &mut BTreeSet<SimplexChain>) {
    if vs.len() < size {
        return;
    }
    let n = vs.len();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let subset: Vec<Vertex> = idx.iter().map(|&i| vs[i].clone()).collect();
        out.insert(SimplexChain::new(subset).expect("subset of a chain is a chain"));
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - size {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Number of distinct window vertices `u` with `tau + {u}` a simplex of
/// the window complex.
fn extension_count(cw: &ComplexWindow, tau: &SimplexChain) -> usize {
    let r = cw.r;
    let full = (1u32 << (r - 1)) - 1;
    let mut candidates: BTreeSet<Vertex> = BTreeSet::new();
    // Any extension lies in [max - y, min + y]; scan both unit cubes.
    for mask in 0..=full {
        candidates.insert(add_mask(tau.min(), mask));
        candidates.insert(sub_mask(tau.max(), mask));
    }
    candidates
        .into_iter()
        .filter(|u| {
            !tau.contains(u) && cw.contains(u) && {
                let mut vs = tau.vertices().to_vec();
                vs.push(u.clone());
                SimplexChain::new(vs).is_ok()
            }
        })
        .count()
}

/// Reflects vertex `n` of a maximal apartment simplex `tau` across the
/// opposite facet: the unique other vertex completing `tau - {n}` to a
/// maximal simplex.
pub fn reflect_in_facet(tau: &SimplexChain, n: &Vertex) -> Result<Vertex> {
    let r = n.rank();
    if tau.len() != r {
        return Err(Error::InvalidArgument(format!(
            "expected a maximal simplex with {r} vertices, got {}",
            tau.len()
        )));
    }
    let vs = tau.vertices();
    for w in vs.windows(2) {
        let d = w[1].diff(&w[0]);
        if d.iter().map(|&x| x.abs()).sum::<i64>() != 1 {
            return Err(Error::InvalidArgument(
                "maximal simplex must be a chain of unit steps".into(),
            ));
        }
    }
    let Some(j) = vs.iter().position(|v| v == n) else {
        return Err(Error::InvalidArgument(format!(
            "{n} is not a vertex of {tau}"
        )));
    };
    let y = Vertex::y(r);
    Ok(if j == 0 {
        &vs[1] + &y
    } else if j == r - 1 {
        &vs[r - 2] - &y
    } else {
        &(&vs[j - 1] + &vs[j + 1]) - &vs[j]
    })
}

/// The unit-step refinement of a member edge, marking the at most one
/// intermediate non-member.
#[derive(Clone, Debug)]
pub struct RefinedEdge {
    pub chain: Vec<Vertex>,
    /// Position (into `chain`) of the unique non-member, when present.
    pub exception: Option<usize>,
}

/// Refines an ordered member edge `m < n` at distance one into unit steps
/// `m = m^(0) < m^(1) < ... < m^(s) = n`, adding `e_j` for `j` in
/// increasing order, and locates the non-member intermediate if any.
pub fn refine_edge(m: &Vertex, n: &Vertex, horizon: Horizon, k: u32) -> Result<RefinedEdge> {
    let d = n.diff(m);
    if !d.iter().all(|&x| (0..=1).contains(&x)) || d.iter().all(|&x| x == 0) {
        return Err(Error::InvalidArgument(format!(
            "{m} and {n} are not an ordered edge at distance one"
        )));
    }
    for (name, v) in [("lower", m), ("upper", n)] {
        if !member_w(v, horizon, k)? {
            return Err(Error::InvalidArgument(format!(
                "{name} endpoint {v} is not a member"
            )));
        }
    }
    let r = m.rank();
    let mut chain = vec![m.clone()];
    let mut current = m.clone();
    for j in 1..r {
        if d[j - 1] == 1 {
            current = &current + &Vertex::unit(r, j);
            chain.push(current.clone());
        }
    }
    let mut exception = None;
    for (pos, v) in chain.iter().enumerate() {
        if !member_w(v, horizon, k)? {
            if exception.is_some() {
                return Err(Error::InvalidArgument(format!(
                    "edge {m} < {n} has more than one non-member refinement step"
                )));
            }
            exception = Some(pos);
        }
    }
    Ok(RefinedEdge { chain, exception })
}

/// Outcome of comparing a window of `W(d,k)` with the hat image of
/// `W(d, rd-k)`.
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub k: u32,
    pub dual_k: u32,
    /// Members of `W(d,k)` whose hat image is missing from `W(d,rd-k)`.
    pub missing: Vec<Vertex>,
    /// Members of `W(d,rd-k)` not hit by the hat image.
    pub extra: Vec<Vertex>,
}

impl SymmetryReport {
    pub fn matched(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Verifies `hat(W(d,k)) = W(d, rd-k)` on a window. The involution fixes
/// the height `n_1`, so the window bound transports without adjustment.
pub fn check_involution_symmetry(r: usize, d: u32, k: u32, bound: i64) -> Result<SymmetryReport> {
    let horizon = Horizon::Finite(d);
    horizon.check_weight(r, k)?;
    let dual_k = r as u32 * d - k;
    let members = |kk: u32| -> Result<Vec<Vertex>> {
        let mut out = Vec::new();
        for v in enumerate_window(r, bound, Kind::Weyl)? {
            if member_w(&v, horizon, kk)? {
                out.push(v);
            }
        }
        Ok(out)
    };
    let lhs = members(k)?;
    let rhs = members(dual_k)?;
    let mut image: Vec<Vertex> = lhs.iter().map(|v| v.hat().expect("weyl")).collect();
    image.sort();
    let rhs_set: BTreeSet<_> = rhs.iter().cloned().collect();
    let image_set: BTreeSet<_> = image.iter().cloned().collect();
    Ok(SymmetryReport {
        k,
        dual_k,
        missing: image_set.difference(&rhs_set).cloned().collect(),
        extra: rhs_set.difference(&image_set).cloned().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[i64]) -> Vertex {
        Vertex::normalize(coords.to_vec()).unwrap()
    }

    #[test]
    fn window_enumeration() {
        let w = enumerate_window(3, 1, Kind::Weyl).unwrap();
        assert_eq!(w, vec![v(&[0, 0, 0]), v(&[1, 0, 0]), v(&[1, 1, 0])]);
        assert_eq!(enumerate_window(3, 2, Kind::Weyl).unwrap().len(), 6);
        let w2 = enumerate_window(2, 3, Kind::Weyl).unwrap();
        assert_eq!(w2, vec![v(&[0, 0]), v(&[1, 0]), v(&[2, 0]), v(&[3, 0])]);
    }

    #[test]
    fn apartment_window_is_weyl_orbit_of_weyl_window() {
        // Spread-bounded enumeration equals Weyl window plus permutations.
        let r = 3;
        let bound = 2;
        let direct: BTreeSet<Vertex> = enumerate_window(r, bound, Kind::Apartment)
            .unwrap()
            .into_iter()
            .collect();
        let mut orbit = BTreeSet::new();
        let perms: [&[usize]; 6] = [
            &[0, 1, 2],
            &[0, 2, 1],
            &[1, 0, 2],
            &[1, 2, 0],
            &[2, 0, 1],
            &[2, 1, 0],
        ];
        for w in enumerate_window(r, bound, Kind::Weyl).unwrap() {
            for p in perms {
                orbit.insert(w.permuted(p).unwrap());
            }
        }
        assert_eq!(direct, orbit);
    }

    #[test]
    fn neighbor_counts() {
        let zero = Vertex::zero(3);
        let nb = neighbors(&zero);
        assert_eq!(nb.len(), 6);
        assert_eq!(weyl_neighbors(&zero), vec![v(&[1, 0, 0]), v(&[1, 1, 0])]);
        assert_eq!(neighbors(&Vertex::zero(4)).len(), 14);
        // Brute-force cross-check of the neighbor relation for r = 4.
        let x = v(&[4, 3, 1, 0]);
        for u in neighbors(&x) {
            assert!(x.is_neighbor_of(&u));
        }
    }

    #[test]
    fn wall_windows() {
        let cw = build_complex(3, Horizon::Finite(2), 1, 3, Kind::Weyl, 1).unwrap();
        let wall: Vec<Vertex> = (0..=3).map(|n| v(&[n, 0, 0])).collect();
        assert_eq!(cw.vertices(), &wall[..]);

        let cw = build_complex(3, Horizon::Finite(2), 5, 3, Kind::Weyl, 1).unwrap();
        let wall: Vec<Vertex> = (0..=3).map(|n| v(&[n, n, 0])).collect();
        assert_eq!(cw.vertices(), &wall[..]);
    }

    #[test]
    fn cycle_in_w46() {
        let cw = build_complex(3, Horizon::Finite(4), 6, 5, Kind::Weyl, 1).unwrap();
        let comps = connected_components(&cw);
        let edges = cw.edges().len();
        let vertices = cw.vertices().len();
        // First Betti number of the window graph.
        assert!(edges + comps.count > vertices, "expected a cycle");
        for u in [
            v(&[1, 0, 0]),
            v(&[2, 0, 0]),
            v(&[3, 1, 0]),
            v(&[3, 2, 0]),
            v(&[2, 2, 0]),
            v(&[1, 1, 0]),
        ] {
            assert!(cw.contains(&u));
        }
    }

    #[test]
    fn full_subcomplex_property() {
        let cw = build_complex(3, Horizon::Finite(2), 2, 4, Kind::Weyl, 1).unwrap();
        for s in cw.maximal_simplices() {
            for u in s.vertices() {
                assert!(cw.contains(u));
            }
        }
        // Every member pair of neighbors appears inside some maximal chain.
        for (a, b) in cw.edges() {
            let va = &cw.vertices()[a];
            let vb = &cw.vertices()[b];
            assert!(cw
                .maximal_simplices()
                .iter()
                .any(|s| s.contains(va) && s.contains(vb)));
        }
    }

    #[test]
    fn reflection_cases() {
        let tau = SimplexChain::new(vec![v(&[0, 0, 0]), v(&[1, 0, 0]), v(&[1, 1, 0])]).unwrap();
        assert_eq!(
            reflect_in_facet(&tau, &v(&[0, 0, 0])).unwrap(),
            &v(&[1, 0, 0]) + &Vertex::y(3)
        );
        assert_eq!(
            reflect_in_facet(&tau, &v(&[1, 1, 0])).unwrap(),
            &v(&[1, 0, 0]) - &Vertex::y(3)
        );
        let reflected = reflect_in_facet(&tau, &v(&[1, 0, 0])).unwrap();
        assert_eq!(reflected, v(&[0, 1, 0]));
        let rest = SimplexChain::new(vec![v(&[0, 0, 0]), v(&[1, 1, 0]), reflected]).unwrap();
        assert_eq!(rest.len(), 3);
        assert!(reflect_in_facet(&tau, &v(&[5, 5, 0])).is_err());
    }

    #[test]
    fn involution_symmetry_small() {
        for (k, dual) in [(1, 5), (2, 4), (3, 3)] {
            let rep = check_involution_symmetry(3, 2, k, 6).unwrap();
            assert_eq!(rep.dual_k, dual);
            assert!(rep.matched(), "k={k}: {:?}", rep);
        }
    }

    #[test]
    fn component_edge_cases() {
        // Empty window: zero components.
        let empty =
            ComplexWindow::from_parts(3, Horizon::Finite(2), 4, Kind::Weyl, 0, 1, vec![], vec![])
                .unwrap();
        assert_eq!(connected_components(&empty).count, 0);

        // Rank 2: zero-dimensional complexes, every member isolated.
        for (d, k) in [(2u32, 1u32), (2, 2), (2, 3), (3, 4)] {
            let cw = build_complex(2, Horizon::Finite(d), k, 6, Kind::Weyl, 1).unwrap();
            assert!(cw.edges().is_empty(), "d={d} k={k}");
            let comps = connected_components(&cw);
            assert_eq!(comps.count, cw.vertices().len());
        }
    }

    #[test]
    fn single_vertex_complex_fails_equidimensionality() {
        let cw = ComplexWindow::from_parts(
            4,
            Horizon::Finite(2),
            2,
            Kind::Apartment,
            8,
            1,
            vec![Vertex::zero(4)],
            vec![SimplexChain::new(vec![Vertex::zero(4)]).unwrap()],
        )
        .unwrap();
        let report = verify_strong_equidimensionality(&cw, 1);
        assert_eq!(report.violations.len(), 1);
    }

    #[test]
    fn boundaryless_refuses_weyl_without_report_mode() {
        let cw = build_complex(3, Horizon::Finite(2), 2, 4, Kind::Weyl, 1).unwrap();
        assert!(matches!(
            verify_boundaryless(&cw, 1, false),
            Err(Error::WeylBoundaryRefused)
        ));
        assert!(verify_boundaryless(&cw, 1, true).is_ok());
    }

    #[test]
    fn refine_edge_cases() {
        let h = Horizon::Finite(2);
        // Equal values at both ends: no exception.
        let refined = refine_edge(&v(&[1, 1, 0]), &v(&[2, 1, 0]), h, 2).unwrap();
        assert_eq!(refined.chain.len(), 2);
        assert!(refined.exception.is_none());
        // Value grows along the edge: exactly one non-member step.
        let refined = refine_edge(&v(&[0, 0, 0]), &v(&[1, 1, 0]), h, 2).unwrap();
        assert_eq!(refined.chain.len(), 3);
        assert_eq!(refined.exception, Some(1));
        // Not an edge.
        assert!(refine_edge(&v(&[0, 0, 0]), &v(&[2, 1, 0]), h, 2).is_err());
    }
}
