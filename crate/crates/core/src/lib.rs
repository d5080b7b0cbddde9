//! Point-in-polygon classification for convex polygons built on shoelace
//! area reasoning.
//!
//! The headline method inserts the query point into the vertex ring as an
//! extra vertex and compares the resulting area with the original one: an
//! interior point pulls an edge inwards and shrinks the area, an exterior
//! point can always push some edge outwards and grow it, and a point on an
//! edge leaves it unchanged. Two variants ship:
//!
//! * [`classify::classify_extra_vertex_append`] inserts the point on the
//!   closing edge only. It never reports an interior point as outside, but
//!   it misses exterior points that sit behind the closing edge's
//!   supporting line.
//! * [`classify::classify_extra_vertex_best_edge`] scans every insertion
//!   position using O(1) area deltas and agrees with the half-plane oracle.
//!
//! Fixed-vertex triangulation, ray casting and angle-sum baselines live next
//! to them, together with segment / polygon containment, seeded convex
//! polygon generators, a differential fuzzer and a timing harness.

pub mod classify;
pub mod cli;
pub mod containment;
pub mod error;
pub mod geom;
pub mod harness;
pub mod polygen;

pub use classify::{AlgorithmId, Classification};
pub use error::{Error, Result};
pub use geom::{Orientation, Point, Polygon, Tolerance};
