//! Seeded generators for convex polygons and labelled query points.
//!
//! Polygons are built from sorted angles on a circle of fixed radius (always
//! convex), then pushed through a random orientation-preserving affine map.
//! Point generators stay clear of the tolerance band by construction and
//! every generated label is re-checked against the half-plane oracle.

use std::f64::consts::TAU;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify_half_plane_oracle, Classification};
use crate::error::{Error, Result};
use crate::geom::{validate, Orientation, Point, Polygon, Tolerance};

/// Parameters for [`gen_convex`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub n: usize,
    pub seed: u64,
    pub radius: f64,
    /// Strength of the affine distortion, as a fraction in `[0, 0.5)`.
    pub jitter: f64,
    pub orientation: Orientation,
}

impl GenConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        GenConfig {
            n,
            seed,
            radius: 100.0,
            jitter: 0.25,
            orientation: Orientation::Clockwise,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidConfig(format!(
                "n must be at least 3, got {}",
                self.n
            )));
        }
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "radius must be positive and finite, got {}",
                self.radius
            )));
        }
        if !(0.0..0.5).contains(&self.jitter) {
            return Err(Error::InvalidConfig(format!(
                "jitter must lie in [0, 0.5), got {}",
                self.jitter
            )));
        }
        Ok(())
    }
}

pub(crate) fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mixes a base seed with a stream index (splitmix64 finalizer).
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

// Standard exponential draw.
fn exp1(rng: &mut ChaCha8Rng) -> f64 {
    -(1.0 - rng.random::<f64>()).ln()
}

/// Random convex polygon with exactly `cfg.n` vertices.
pub fn gen_convex(cfg: &GenConfig) -> Result<Polygon> {
    cfg.validate()?;
    let n = cfg.n;
    let mut rng = rng_from(cfg.seed);

    // Angular gaps: a fixed floor plus a uniform split of the remainder.
    let min_gap = 0.1 * TAU / n as f64;
    let spare = TAU - min_gap * n as f64;
    let weights: Vec<f64> = (0..n).map(|_| exp1(&mut rng)).collect();
    let total: f64 = weights.iter().sum();

    let start = rng.random_range(0.0..TAU);
    let rot = rng.random_range(0.0..TAU);
    let j = cfg.jitter;
    let (sx, sy) = if j > 0.0 {
        (
            rng.random_range(1.0 - j..1.0 + j),
            rng.random_range(1.0 - j..1.0 + j),
        )
    } else {
        (1.0, 1.0)
    };
    let shear = if j > 0.0 {
        rng.random_range(-j..j)
    } else {
        0.0
    };
    let r = cfg.radius;
    let center = Point::new(rng.random_range(-r..r), rng.random_range(-r..r));

    // rotation * scale * shear; determinant sx * sy > 0
    let (s, c) = rot.sin_cos();
    let m = [
        [c * sx, c * sx * shear - s * sy],
        [s * sx, s * sx * shear + c * sy],
    ];

    let mut angle = start;
    let mut vertices = Vec::with_capacity(n);
    for w in &weights {
        let (py, px) = angle.sin_cos();
        let (px, py) = (r * px, r * py);
        vertices.push(Point::new(
            center.x + m[0][0] * px + m[0][1] * py,
            center.y + m[1][0] * px + m[1][1] * py,
        ));
        angle += min_gap + spare * w / total;
    }
    if cfg.orientation == Orientation::Clockwise {
        vertices.reverse();
    }
    let poly = validate(vertices)?;
    if !poly.is_convex() {
        return Err(Error::InternalInconsistency(
            "generated polygon failed the convexity check".into(),
        ));
    }
    Ok(poly)
}

/// `Σ w_i · p_i`.
pub fn convex_combination(points: &[Point], weights: &[f64]) -> Point {
    points
        .iter()
        .zip(weights)
        .fold(Point::default(), |acc, (&p, &w)| acc + p * w)
}

/// `from + t · (to − from)`.
pub fn scale_from(from: Point, to: Point, t: f64) -> Point {
    from + (to - from) * t
}

/// Point at parameter `u` along edge `edge_index`.
pub fn point_on_edge(poly: &Polygon, edge_index: usize, u: f64) -> Point {
    let (a, b) = poly.edge(edge_index % poly.len());
    scale_from(a, b, u)
}

const MAX_ATTEMPTS: usize = 64;

fn oracle_label(poly: &Polygon, p: Point) -> Result<Classification> {
    classify_half_plane_oracle(poly, p, &Tolerance::default())
}

/// A point strictly inside a convex polygon: a convex combination of three
/// distinct vertices with every weight at least 0.05.
pub fn gen_point_inside(poly: &Polygon, seed: u64) -> Result<Point> {
    let mut rng = rng_from(seed);
    let vs = poly.vertices();
    for _ in 0..MAX_ATTEMPTS {
        let idx = rand::seq::index::sample(&mut rng, vs.len(), 3);
        let picked = [vs[idx.index(0)], vs[idx.index(1)], vs[idx.index(2)]];
        let e = [exp1(&mut rng), exp1(&mut rng), exp1(&mut rng)];
        let total: f64 = e.iter().sum();
        let weights = e.map(|x| 0.05 + 0.85 * x / total);
        let p = convex_combination(&picked, &weights);
        if oracle_label(poly, p)? == Classification::Inside {
            return Ok(p);
        }
    }
    // three collinear picks every time; the vertex mean is always interior
    Ok(poly.vertex_centroid())
}

/// A point strictly outside a convex polygon: a boundary point pushed away
/// from the vertex centroid by a factor in `[1.1, 3]`.
pub fn gen_point_outside(poly: &Polygon, seed: u64) -> Result<Point> {
    let mut rng = rng_from(seed);
    let center = poly.vertex_centroid();
    for _ in 0..MAX_ATTEMPTS {
        let edge = rng.random_range(0..poly.len());
        let b = point_on_edge(poly, edge, rng.random_range(0.0..=1.0));
        let p = scale_from(center, b, rng.random_range(1.1..=3.0));
        if oracle_label(poly, p)? == Classification::Outside {
            return Ok(p);
        }
    }
    Err(Error::InternalInconsistency(
        "no exterior point found along centroid rays".into(),
    ))
}

/// A point on a random edge, away from both of its endpoints.
pub fn gen_point_on_edge(poly: &Polygon, seed: u64) -> Point {
    let mut rng = rng_from(seed);
    let edge = rng.random_range(0..poly.len());
    point_on_edge(poly, edge, rng.random_range(0.1..=0.9))
}

/// A point within ±0.1% of the boundary along a centroid ray. Its label is
/// whatever the oracle says; used to stress tolerances, not as a fixture.
pub fn gen_point_near_boundary(poly: &Polygon, seed: u64) -> Point {
    let mut rng = rng_from(seed);
    let center = poly.vertex_centroid();
    let edge = rng.random_range(0..poly.len());
    let b = point_on_edge(poly, edge, rng.random_range(0.0..=1.0));
    scale_from(center, b, rng.random_range(0.999..=1.001))
}
