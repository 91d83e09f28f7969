//! Diagrams of apartment vertices.
//!
//! The `d`-diagram of a vertex `n` collects the boxes `(i, v)` with
//! `n_i <= v < n_i + d`, totally ordered by value, ties broken by *larger*
//! index first. Numbering the boxes increasingly recovers the
//! characteristic sequence through the values, and the index of box `k+1`
//! is the critical index of a member vertex.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::membership::member_w;
use crate::point::Vertex;
use crate::seq::Horizon;

/// A box `(i, v)` of a diagram; `i` is the row index (1-based), `v` the
/// column value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct DBox {
    pub index: usize,
    pub value: i64,
}

impl Ord for DBox {
    fn cmp(&self, other: &Self) -> Ordering {
        // (i,v) <= (i',v')  iff  v < v'  or  (v = v' and i >= i')
        self.value
            .cmp(&other.value)
            .then_with(|| other.index.cmp(&self.index))
    }
}

impl PartialOrd for DBox {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The `d`-diagram of an apartment vertex, boxes in numbering order
/// `B_1 < B_2 < ... < B_{rd}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DDiagram {
    vertex: Vertex,
    d: u32,
    boxes: Vec<DBox>,
}

impl DDiagram {
    pub fn vertex(&self) -> &Vertex {
        &self.vertex
    }

    pub fn horizon(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// `B_k^{(d)}`, 1-based.
    pub fn boxed(&self, k: u32) -> DBox {
        self.boxes[(k - 1) as usize]
    }

    pub fn boxes(&self) -> &[DBox] {
        &self.boxes
    }

    /// True when `(i, v)` is a box of this diagram.
    pub fn contains(&self, i: usize, v: i64) -> bool {
        let n_i = self.vertex.coord(i);
        *n_i <= v && v < n_i + self.d as i64
    }
}

/// Builds the `d`-diagram of an apartment vertex (Weyl not required).
pub fn d_diagram(n: &Vertex, d: u32) -> Result<DDiagram> {
    if d < 1 {
        return Err(Error::InvalidHorizon);
    }
    let r = n.rank();
    let mut boxes = Vec::with_capacity(r * d as usize);
    for i in 1..=r {
        let base = *n.coord(i);
        for s in 0..d as i64 {
            boxes.push(DBox {
                index: i,
                value: base + s,
            });
        }
    }
    boxes.sort();
    Ok(DDiagram {
        vertex: n.clone(),
        d,
        boxes,
    })
}

/// The first `len` boxes of the infinite diagram `diag(n)`, numbered as in
/// the limit. Realized through a finite diagram wide enough that the prefix
/// has stabilized.
pub fn diagram_prefix(n: &Vertex, len: usize) -> Result<Vec<DBox>> {
    if len == 0 {
        return Ok(Vec::new());
    }
    let r = n.rank();
    let spread = n.spread();
    // The len-th infinite box value is at most max + ceil(len/r) - 1, so
    // this horizon keeps every earlier box inside the finite diagram.
    let d = (spread + len.div_ceil(r) as i64 + 1).max(1) as u32;
    let diagram = d_diagram(n, d)?;
    if len > diagram.len() {
        return Err(Error::InvalidArgument(format!(
            "prefix length {len} exceeds diagram size {}",
            diagram.len()
        )));
    }
    Ok(diagram.boxes()[..len].to_vec())
}

/// The critical index `rho_k^{(d)}(n) = i(B_{k+1}^{(d)}(n))` of a member
/// vertex of the Weyl chamber. Undefined (an error) off the chamber or on
/// non-members.
pub fn critical_index(n: &Vertex, horizon: Horizon, k: u32) -> Result<usize> {
    if !n.is_weyl() {
        return Err(Error::NotInWeylChamber);
    }
    horizon.check_weight(n.rank(), k)?;
    if !member_w(n, horizon, k)? {
        return Err(Error::UndefinedCriticalIndex(n.to_string()));
    }
    let rho = match horizon {
        Horizon::Finite(d) => d_diagram(n, d)?.boxed(k + 1).index,
        Horizon::Infinite => diagram_prefix(n, k as usize + 1)?[k as usize].index,
    };
    debug_assert!(rho >= 1 && rho < n.rank());
    Ok(rho)
}

/// The box bijection realizing the hat involution on diagrams:
/// `delta(i, v) = (r + 1 - i, n_1 + d - 1 - v)`, an order-reversing map
/// from `diag^{(d)}(n)` onto `diag^{(d)}(hat(n))`.
pub fn delta_box(n: &Vertex, d: u32, b: DBox) -> DBox {
    DBox {
        index: n.rank() + 1 - b.index,
        value: n.coord(1) + d as i64 - 1 - b.value,
    }
}
