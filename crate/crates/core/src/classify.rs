//! Point-in-polygon classifiers.
//!
//! Every classifier returns the same three-way [`Classification`]. The
//! area-based ones (both extra-vertex variants and triangulation) compare
//! areas with [`Tolerance::compare_areas`]; ray casting and angle sum have no
//! native notion of "on the boundary" and use [`is_point_on_ring`] first.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{cross_det, is_point_on_ring, on_segment_within, triangle_signed2};
use crate::geom::{Point, Polygon, Tolerance};

/// Where a query point lies relative to a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Inside,
    Outside,
    #[serde(rename = "boundary")]
    OnBoundary,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Inside => "inside",
            Classification::Outside => "outside",
            Classification::OnBoundary => "boundary",
        }
    }

    /// Inside or on the boundary.
    pub fn is_closed_inside(self) -> bool {
        self != Classification::Outside
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Identifies a classifier by a stable kebab-case name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgorithmId {
    ExtraVertexAppend,
    ExtraVertexBestEdge,
    Triangulation,
    RayCasting,
    AngleSum,
    HalfPlaneOracle,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 6] = [
        AlgorithmId::ExtraVertexAppend,
        AlgorithmId::ExtraVertexBestEdge,
        AlgorithmId::Triangulation,
        AlgorithmId::RayCasting,
        AlgorithmId::AngleSum,
        AlgorithmId::HalfPlaneOracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgorithmId::ExtraVertexAppend => "extra-vertex-append",
            AlgorithmId::ExtraVertexBestEdge => "extra-vertex-best-edge",
            AlgorithmId::Triangulation => "triangulation",
            AlgorithmId::RayCasting => "ray-casting",
            AlgorithmId::AngleSum => "angle-sum",
            AlgorithmId::HalfPlaneOracle => "half-plane-oracle",
        }
    }

    pub fn requires_convex(self) -> bool {
        !matches!(self, AlgorithmId::RayCasting | AlgorithmId::AngleSum)
    }

    pub fn classify(self, poly: &Polygon, p: Point, tol: &Tolerance) -> Result<Classification> {
        match self {
            AlgorithmId::ExtraVertexAppend => classify_extra_vertex_append(poly, p, tol),
            AlgorithmId::ExtraVertexBestEdge => classify_extra_vertex_best_edge(poly, p, tol),
            AlgorithmId::Triangulation => classify_triangulation(poly, p, tol),
            AlgorithmId::RayCasting => Ok(classify_ray_casting(poly, p, tol)),
            AlgorithmId::AngleSum => Ok(classify_angle_sum(poly, p, tol)),
            AlgorithmId::HalfPlaneOracle => classify_half_plane_oracle(poly, p, tol),
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownAlgorithm(pub String);

impl fmt::Display for UnknownAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = AlgorithmId::ALL.iter().map(|a| a.as_str()).collect();
        write!(
            f,
            "unknown algorithm `{}` (valid: extra-vertex, {})",
            self.0,
            names.join(", ")
        )
    }
}

impl std::error::Error for UnknownAlgorithm {}

impl FromStr for AlgorithmId {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        // bare "extra-vertex" names the corrected method
        if s == "extra-vertex" {
            return Ok(AlgorithmId::ExtraVertexBestEdge);
        }
        AlgorithmId::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| UnknownAlgorithm(s.to_string()))
    }
}

fn require_convex(poly: &Polygon) -> Result<()> {
    if poly.is_convex() {
        Ok(())
    } else {
        Err(Error::NotConvex)
    }
}

fn check_edge(poly: &Polygon, edge_index: usize) -> Result<()> {
    if edge_index < poly.len() {
        Ok(())
    } else {
        Err(Error::BadIndex {
            index: edge_index,
            len: poly.len(),
        })
    }
}

fn table_one(area_with_point: f64, area: f64, tol: &Tolerance) -> Classification {
    match tol.compare_areas(area_with_point, area) {
        Ordering::Greater => Classification::Outside,
        Ordering::Less => Classification::Inside,
        Ordering::Equal => Classification::OnBoundary,
    }
}

/// Change in the shoelace sum when `p` is inserted between vertex
/// `edge_index` and its successor.
pub fn insertion_delta(poly: &Polygon, edge_index: usize, p: Point) -> Result<f64> {
    check_edge(poly, edge_index)?;
    let (a, b) = poly.edge(edge_index);
    Ok(delta(a, b, p))
}

#[inline]
fn delta(a: Point, b: Point, p: Point) -> f64 {
    cross_det(a, p) + cross_det(p, b) - cross_det(a, b)
}

/// Area of the ring with `p` inserted after vertex `edge_index`, by a full
/// shoelace pass over all `n + 1` vertices.
pub fn area_with_insertion(poly: &Polygon, edge_index: usize, p: Point) -> Result<f64> {
    check_edge(poly, edge_index)?;
    let vs = poly.vertices();
    let (head, tail) = vs.split_at(edge_index + 1);
    let (before, after) = (head[edge_index], vs[(edge_index + 1) % vs.len()]);
    // head ... before -> p -> after ... tail -> head[0]
    let mut sum = chain_sum(head) + cross_det(before, p) + cross_det(p, after);
    if let Some(&last) = tail.last() {
        sum += chain_sum(tail) + cross_det(last, head[0]);
    }
    Ok(0.5 * sum.abs())
}

// Shoelace terms along an open vertex chain.
fn chain_sum(chain: &[Point]) -> f64 {
    chain.windows(2).map(|w| cross_det(w[0], w[1])).sum()
}

/// Appends `p` after the last vertex, recomputes the area and compares it
/// with the original.
///
/// Only the closing edge is tried. An exterior point lying on the interior
/// side of the closing edge's supporting line still shrinks the area and
/// comes back `Inside`; interior points are never reported `Outside`.
pub fn classify_extra_vertex_append(
    poly: &Polygon,
    p: Point,
    tol: &Tolerance,
) -> Result<Classification> {
    require_convex(poly)?;
    let appended = area_with_insertion(poly, poly.len() - 1, p)?;
    Ok(table_one(appended, poly.area(), tol))
}

/// Tries `p` as an extra vertex on every edge using O(1) area deltas.
///
/// Outside if some insertion grows the area beyond tolerance, on the
/// boundary if none grows it but one keeps it equal, inside otherwise.
pub fn classify_extra_vertex_best_edge(
    poly: &Polygon,
    p: Point,
    tol: &Tolerance,
) -> Result<Classification> {
    require_convex(poly)?;
    let sum = poly.signed_sum();
    let area = poly.area();
    let mut touches = false;
    for (a, b) in poly.edges() {
        let grown = 0.5 * (sum + delta(a, b, p)).abs();
        match tol.compare_areas(grown, area) {
            Ordering::Greater => return Ok(Classification::Outside),
            Ordering::Equal => touches = true,
            Ordering::Less => {}
        }
    }
    Ok(if touches {
        Classification::OnBoundary
    } else {
        Classification::Inside
    })
}

/// Sum of the unsigned areas of the triangles `(p, v_i, v_{i+1})`.
pub fn triangle_area_sum(poly: &Polygon, p: Point) -> f64 {
    0.5 * poly
        .edges()
        .map(|(a, b)| triangle_signed2(p, a, b).abs())
        .sum::<f64>()
}

/// Fixed-point triangulation: the triangles fanned from `p` cover the
/// polygon exactly when `p` is in the closed region and overshoot it
/// otherwise.
pub fn classify_triangulation(poly: &Polygon, p: Point, tol: &Tolerance) -> Result<Classification> {
    require_convex(poly)?;
    let area = poly.area();
    let fan = triangle_area_sum(poly, p);
    match tol.compare_areas(fan, area) {
        Ordering::Greater => Ok(Classification::Outside),
        Ordering::Equal if is_point_on_ring(poly, p, tol) => Ok(Classification::OnBoundary),
        Ordering::Equal => Ok(Classification::Inside),
        Ordering::Less => Err(Error::InternalInconsistency(format!(
            "triangle fan area {fan} is below polygon area {area}"
        ))),
    }
}

/// Number of ring edges crossed by the ray from `p` towards +x, counting an
/// edge when exactly one endpoint lies strictly above `p`.
pub fn ray_crossings(poly: &Polygon, p: Point) -> usize {
    poly.edges()
        .filter(|&(a, b)| {
            (a.y > p.y) != (b.y > p.y) && {
                let x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
                x > p.x
            }
        })
        .count()
}

/// Crossing-parity test. Works for any simple polygon.
pub fn classify_ray_casting(poly: &Polygon, p: Point, tol: &Tolerance) -> Classification {
    if is_point_on_ring(poly, p, tol) {
        return Classification::OnBoundary;
    }
    if ray_crossings(poly, p) % 2 == 1 {
        Classification::Inside
    } else {
        Classification::Outside
    }
}

/// Signed sum of the angles each edge subtends at `p`: `±2π` inside
/// (negative for clockwise rings), `0` outside.
pub fn angle_sum(poly: &Polygon, p: Point) -> f64 {
    poly.edges()
        .map(|(a, b)| {
            let (u, v) = (a - p, b - p);
            cross_det(u, v).atan2(u.dot(v))
        })
        .sum()
}

pub fn classify_angle_sum(poly: &Polygon, p: Point, tol: &Tolerance) -> Classification {
    if is_point_on_ring(poly, p, tol) {
        return Classification::OnBoundary;
    }
    if angle_sum(poly, p).abs() > PI {
        Classification::Inside
    } else {
        Classification::Outside
    }
}

/// Ground truth for convex polygons: `p` is inside iff it is on the interior
/// side of every edge's supporting line.
///
/// Uses no area sums. Orientation comes from the sharpest corner and the
/// boundary band is scaled by the bounding box.
pub fn classify_half_plane_oracle(
    poly: &Polygon,
    p: Point,
    tol: &Tolerance,
) -> Result<Classification> {
    require_convex(poly)?;
    let vs = poly.vertices();
    let n = vs.len();
    let turn = (0..n)
        .map(|i| triangle_signed2(vs[(i + n - 1) % n], vs[i], vs[(i + 1) % n]))
        .max_by(|a, b| a.abs().total_cmp(&b.abs()))
        .expect("polygon has vertices");
    let (lo, hi) = poly.bounding_box();
    let extent = (hi.x - lo.x) * (hi.y - lo.y);
    let band2 = 2.0 * tol.area_band(extent, extent);

    let mut on_edge = false;
    for (a, b) in poly.edges() {
        // positive towards the interior
        let side = -turn.signum() * triangle_signed2(a, p, b);
        if side < -band2 {
            return Ok(Classification::Outside);
        }
        if side <= band2 && on_segment_within(a, b, p, band2) {
            on_edge = true;
        }
    }
    Ok(if on_edge {
        Classification::OnBoundary
    } else {
        Classification::Inside
    })
}
