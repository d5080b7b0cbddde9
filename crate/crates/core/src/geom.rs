//! Planar primitives: points, shoelace sums, orientation, convexity and
//! polygon validation.
//!
//! All arithmetic is `f64`. Signs follow the `x_a * y_b - x_b * y_a`
//! convention, so a clockwise ring has a negative shoelace sum.

use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

// Points serialize as a two-element `[x, y]` array.
impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.x, self.y).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (x, y) = <(f64, f64)>::deserialize(deserializer)?;
        Ok(Point::new(x, y))
    }
}

/// Comparison tolerances for areas and angles.
///
/// Two areas are equal when `|a - b| <= abs_eps + rel_eps * max(|a|, |b|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
    pub angle_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_eps: 1e-9,
            rel_eps: 1e-12,
            angle_eps: 1e-6,
        }
    }
}

impl Tolerance {
    pub fn new(abs_eps: f64, rel_eps: f64, angle_eps: f64) -> Result<Self> {
        for (name, v) in [
            ("abs_eps", abs_eps),
            ("rel_eps", rel_eps),
            ("angle_eps", angle_eps),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(Tolerance {
            abs_eps,
            rel_eps,
            angle_eps,
        })
    }

    /// Width of the equality band for two areas.
    pub fn area_band(&self, a: f64, b: f64) -> f64 {
        self.abs_eps + self.rel_eps * a.abs().max(b.abs())
    }

    pub fn areas_equal(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.area_band(a, b)
    }

    /// Three-way area comparison; `Equal` inside the band.
    pub fn compare_areas(&self, a: f64, b: f64) -> Ordering {
        let band = self.area_band(a, b);
        if a > b + band {
            Ordering::Greater
        } else if a < b - band {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

/// Winding direction of a vertex ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
}

impl Orientation {
    /// `+1.0` for counter-clockwise, `-1.0` for clockwise.
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Clockwise => -1.0,
            Orientation::CounterClockwise => 1.0,
        }
    }
}

/// The pairwise determinant `x_a * y_b - x_b * y_a`.
#[inline]
pub fn cross_det(a: Point, b: Point) -> f64 {
    a.x * b.y - b.x * a.y
}

/// Twice the signed area of triangle `abc`; positive when counter-clockwise.
#[inline]
pub fn triangle_signed2(a: Point, b: Point, c: Point) -> f64 {
    cross_det(b - a, c - a)
}

/// Raw cyclic shoelace sum: twice the signed area, negative for clockwise rings.
pub fn shoelace_signed_sum(vertices: &[Point]) -> Result<f64> {
    if vertices.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "need at least 3 vertices, got {}",
            vertices.len()
        )));
    }
    Ok(ring_signed_sum(vertices.iter().copied()))
}

/// Shoelace sum over an arbitrary vertex sequence, closing back to the first.
pub(crate) fn ring_signed_sum(mut ring: impl Iterator<Item = Point>) -> f64 {
    let Some(first) = ring.next() else {
        return 0.0;
    };
    let mut prev = first;
    let mut sum = 0.0;
    for v in ring {
        sum += cross_det(prev, v);
        prev = v;
    }
    sum + cross_det(prev, first)
}

/// A validated vertex ring.
///
/// Holds at least three finite vertices, no two consecutive ones equal, and
/// a non-zero shoelace sum. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
    signed_sum: f64,
    orientation: Orientation,
    convex: bool,
}

/// Builds a [`Polygon`], rejecting degenerate rings.
///
/// Non-convex rings are accepted; the convexity flag is informational and
/// classifiers that need convexity check it themselves.
pub fn validate(raw: Vec<Point>) -> Result<Polygon> {
    let n = raw.len();
    if n < 3 {
        return Err(Error::DegenerateInput(format!(
            "need at least 3 vertices, got {n}"
        )));
    }
    if let Some(i) = raw.iter().position(|p| !p.is_finite()) {
        return Err(Error::DegenerateInput(format!(
            "vertex {i} has a non-finite coordinate"
        )));
    }
    for i in 0..n {
        if raw[i] == raw[(i + 1) % n] {
            return Err(Error::DegenerateInput(format!(
                "vertices {i} and {} are identical",
                (i + 1) % n
            )));
        }
    }
    let signed_sum = ring_signed_sum(raw.iter().copied());
    if signed_sum == 0.0 || !signed_sum.is_finite() {
        return Err(Error::DegenerateInput(format!(
            "ring encloses no area (signed sum {signed_sum})"
        )));
    }
    let orientation = if signed_sum < 0.0 {
        Orientation::Clockwise
    } else {
        Orientation::CounterClockwise
    };
    let convex = is_convex_ring(&raw);
    Ok(Polygon {
        vertices: raw,
        signed_sum,
        orientation,
        convex,
    })
}

// Every turn goes the same way (straight corners allowed, reversals not) and
// the total turning is one full revolution.
fn is_convex_ring(vertices: &[Point]) -> bool {
    let n = vertices.len();
    let mut turn_sign = 0.0_f64;
    let mut turning = 0.0;
    for i in 0..n {
        let a = vertices[(i + n - 1) % n];
        let b = vertices[i];
        let c = vertices[(i + 1) % n];
        let cross = triangle_signed2(a, b, c);
        let dot = (b - a).dot(c - b);
        if cross == 0.0 {
            if dot < 0.0 {
                return false;
            }
            continue;
        }
        if turn_sign == 0.0 {
            turn_sign = cross.signum();
        } else if cross.signum() != turn_sign {
            return false;
        }
        turning += cross.atan2(dot);
    }
    (turning.abs() - TAU).abs() < 1e-6
}

impl Polygon {
    /// Same as [`validate`].
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        validate(vertices)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn signed_sum(&self) -> f64 {
        self.signed_sum
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }

    pub fn area(&self) -> f64 {
        0.5 * self.signed_sum.abs()
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1` (wrapping).
    pub fn edge(&self, i: usize) -> (Point, Point) {
        let n = self.vertices.len();
        (self.vertices[i], self.vertices[(i + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Mean of the vertices. Strictly interior for convex polygons.
    pub fn vertex_centroid(&self) -> Point {
        let n = self.vertices.len() as f64;
        let s = self
            .vertices
            .iter()
            .fold(Point::default(), |acc, &v| acc + v);
        s * (1.0 / n)
    }

    /// `(min, max)` corners of the axis-aligned bounding box.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices[1..] {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    /// Exact diameter (largest vertex-to-vertex distance), O(n^2).
    pub fn diameter(&self) -> f64 {
        let mut best = 0.0_f64;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                best = best.max((*a - *b).norm());
            }
        }
        best
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<Polygon> {
        validate(self.vertices.iter().map(|&v| f(v)).collect())
    }

    pub fn reversed(&self) -> Polygon {
        let mut vs = self.vertices.clone();
        vs.reverse();
        validate(vs).expect("reversal preserves validity")
    }

    pub fn rotated(&self, offset: usize) -> Polygon {
        let mut vs = self.vertices.clone();
        let k = offset % vs.len();
        vs.rotate_left(k);
        validate(vs).expect("cyclic rotation preserves validity")
    }

    /// Doubled-area band used for "on an edge" decisions: inserting a point
    /// whose triangle with an edge lies within this band leaves the polygon
    /// area equal under `tol`.
    pub(crate) fn edge_band2(&self, tol: &Tolerance) -> f64 {
        let a = self.area();
        2.0 * tol.area_band(a, a)
    }
}

// Polygons serialize as their vertex array; deserializing validates.
impl Serialize for Polygon {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polygon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vertices = Vec::<Point>::deserialize(deserializer)?;
        validate(vertices).map_err(serde::de::Error::custom)
    }
}

/// Half the absolute shoelace sum.
pub fn area(poly: &Polygon) -> f64 {
    poly.area()
}

/// True when `p` lies on some edge segment within the tolerance band.
pub fn is_point_on_ring(poly: &Polygon, p: Point, tol: &Tolerance) -> bool {
    let band2 = poly.edge_band2(tol);
    poly.edges().any(|(a, b)| on_segment_within(a, b, p, band2))
}

// `band2` is a doubled-area band; the matching distance slack along the
// segment is band2 / |ab|.
pub(crate) fn on_segment_within(a: Point, b: Point, p: Point, band2: f64) -> bool {
    if triangle_signed2(a, p, b).abs() > band2 {
        return false;
    }
    let slack = band2 / (b - a).norm();
    p.x >= a.x.min(b.x) - slack
        && p.x <= a.x.max(b.x) + slack
        && p.y >= a.y.min(b.y) - slack
        && p.y <= a.y.max(b.y) + slack
}
