//! Exact combinatorics of the vanishing complexes `W(d,k)`, `A(d,k)` and
//! their infinite-horizon limits inside the standard apartment of the
//! Bruhat-Tits building of `PGL(r)`.
//!
//! Membership of a point in a complex is decided purely combinatorially:
//! sort the multiset `{x_i + s : 1 <= i <= r, 0 <= s < d}` and test whether
//! entries `k` and `k+1` coincide. Everything else here (diagrams, critical
//! indices, window enumeration, stratification, edge-path reduction, the
//! Dynkin involution, verifiers for connectedness, strong
//! equidimensionality and boundarylessness) is built on that test with
//! exact integer and rational arithmetic throughout; no floating point
//! enters any membership decision.
//!
//! The core is generic over the coordinate scalar via [`coord::Coord`];
//! [`Vertex`] (`i64`) and [`RationalPoint`] (arbitrary-precision rationals)
//! are the two concrete instantiations.

pub mod complex;
pub mod coord;
pub mod diagram;
pub mod error;
pub mod io;
pub mod membership;
pub mod oracle;
pub mod point;
pub mod render;
pub mod seq;
pub mod strata;

pub use complex::{
    build_complex, check_involution_symmetry, connected_components, enumerate_window, neighbors,
    refine_edge, reflect_in_facet, verify_boundaryless, verify_strong_equidimensionality,
    weyl_neighbors, ComplexWindow, Components, Kind, SimplexChain, SymmetryReport,
    VerificationReport, Violation,
};
pub use coord::Coord;
pub use diagram::{critical_index, d_diagram, delta_box, diagram_prefix, DBox, DDiagram};
pub use error::{Error, Result};
pub use membership::{
    admissible, k_capped, member_a, member_w, predict_add_weight, predict_down_shift,
    vanishing_value, AddWeightPrediction, DownShiftPrediction,
};
pub use oracle::{
    exhaustive_extension_search, oracle_sequence, sample_interior_point, Direction, OracleConfig,
};
pub use point::{Point, RationalPoint, Vertex};
pub use render::{render_svg, ChamberLayout, StrokeStyle};
pub use seq::{d_sequence, DSequence, Horizon};
pub use strata::{classify_stratum, in_ray_stratum, reduce_to_fundamental, EdgePath, Stratum};
