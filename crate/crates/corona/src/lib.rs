//! Exact enumeration of coronas: boundary lozenge tilings that wrap a
//! hexagon or diamond drawn on the triangular lattice.
//!
//! Three independent counting routes are implemented and cross-validated:
//!
//! * [`bruteforce`] — geometric enumeration by backtracking exact cover;
//! * [`transfer`] — weighted adjacency matrices whose traces are the
//!   corona-counting polynomials;
//! * [`closedform`] — closed formulas and rational generating functions.
//!
//! [`lattice`] supplies the coordinate system and region geometry,
//! [`polyalg`] the exact integer polynomial arithmetic, and [`render`]
//! SVG output for small instances.
//!
//! All counting is exact; there is no floating point outside of [`render`]
//! coordinate output.

pub mod bruteforce;
pub mod closedform;
pub mod lattice;
pub mod polyalg;
pub mod render;
pub mod transfer;

pub use bruteforce::{
    enumerate_coronas, enumerate_count_only, is_valid_corona, Corona, CoronaHistogram,
    CoronaViolation,
};
pub use closedform::CountBreakdown;
pub use lattice::{build_region, Lozenge, Orientation, Region, Shape, TriangleId};
pub use polyalg::{PolyMatrix, Polynomial};
