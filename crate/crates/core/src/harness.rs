//! Timing comparison of classifiers and the differential fuzzer.
//!
//! The benchmark follows a trials x reps protocol: every rep times one
//! classification call (or `points_per_rep` calls) with a monotonic clock,
//! each trial records the mean over its reps. Within a trial all algorithms
//! see the same polygon and the same point sequence.

use std::collections::BTreeMap;
use std::hint::black_box;
use std::io::{self, Write};
use std::time::Instant;

use rand::RngExt;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_half_plane_oracle, AlgorithmId, Classification};
use crate::error::{Error, Result};
use crate::geom::{Orientation, Point, Polygon, Tolerance};
use crate::polygen::{self, derive_seed, GenConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub vertex_counts: Vec<usize>,
    pub trials: usize,
    pub reps: usize,
    pub algorithms: Vec<AlgorithmId>,
    pub seed: u64,
    pub points_per_rep: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            vertex_counts: vec![20, 180],
            trials: 20,
            reps: 100,
            algorithms: vec![AlgorithmId::ExtraVertexAppend, AlgorithmId::Triangulation],
            seed: 0,
            points_per_rep: 1,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 || self.reps == 0 || self.points_per_rep == 0 {
            return Err(Error::InvalidConfig(
                "trials, reps and points_per_rep must all be at least 1".into(),
            ));
        }
        if self.vertex_counts.is_empty() || self.vertex_counts.iter().any(|&n| n < 3) {
            return Err(Error::InvalidConfig(
                "vertex counts must be non-empty and each at least 3".into(),
            ));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidConfig("no algorithms selected".into()));
        }
        Ok(())
    }
}

/// Mean time of one classification call for one (trial, size, algorithm).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub trial: usize,
    pub n_vertices: usize,
    pub algorithm: AlgorithmId,
    pub mean_time_ns: f64,
}

/// The polygon and query points used by every algorithm in one trial.
pub fn trial_inputs(cfg: &BenchConfig, trial: usize, n: usize) -> Result<(Polygon, Vec<Point>)> {
    let base = derive_seed(derive_seed(cfg.seed, trial as u64), n as u64);
    let poly = polygen::gen_convex(&GenConfig::new(n, base))?;
    let count = cfg.reps * cfg.points_per_rep;
    let points = (0..count)
        .map(|i| {
            let s = derive_seed(base, i as u64);
            if i % 2 == 0 {
                polygen::gen_point_inside(&poly, s)
            } else {
                polygen::gen_point_outside(&poly, s)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((poly, points))
}

fn time_reps(
    algorithm: AlgorithmId,
    poly: &Polygon,
    points: &[Point],
    per_rep: usize,
    tol: &Tolerance,
) -> Result<f64> {
    let mut total_ns = 0.0;
    let mut reps = 0usize;
    for chunk in points.chunks(per_rep) {
        let start = Instant::now();
        for &p in chunk {
            let _ = black_box(algorithm.classify(black_box(poly), black_box(p), tol));
        }
        total_ns += start.elapsed().as_nanos() as f64 / chunk.len() as f64;
        reps += 1;
    }
    let mean = total_ns / reps as f64;
    if mean > 0.0 {
        Ok(mean)
    } else {
        Err(Error::ClockUnavailable)
    }
}

/// Runs the timing protocol. Strictly single-threaded.
///
/// Returns `trials * vertex_counts * algorithms` records ordered by trial,
/// then vertex count, then algorithm as configured.
pub fn run_benchmark(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    cfg.validate()?;
    let tol = Tolerance::default();

    // warm-up: one untimed rep block per size and algorithm, also surfacing
    // any classification error before the timed loops discard results
    for &n in &cfg.vertex_counts {
        let (poly, points) = trial_inputs(cfg, 0, n)?;
        for &alg in &cfg.algorithms {
            for &p in &points {
                black_box(alg.classify(&poly, p, &tol)?);
            }
        }
    }

    let mut records =
        Vec::with_capacity(cfg.trials * cfg.vertex_counts.len() * cfg.algorithms.len());
    for trial in 0..cfg.trials {
        for &n in &cfg.vertex_counts {
            let (poly, points) = trial_inputs(cfg, trial, n)?;
            for &alg in &cfg.algorithms {
                let mean_time_ns = time_reps(alg, &poly, &points, cfg.points_per_rep, &tol)?;
                records.push(BenchRecord {
                    trial,
                    n_vertices: n,
                    algorithm: alg,
                    mean_time_ns,
                });
            }
        }
    }
    Ok(records)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub n_vertices: usize,
    pub algorithm: AlgorithmId,
    pub grand_mean_ns: f64,
    /// `grand_mean_ns` divided by the extra-vertex grand mean at the same
    /// size (append variant if timed, else best-edge); `None` if neither ran.
    pub ratio_vs_extra_vertex: Option<f64>,
}

/// Grand means per (size, algorithm), ordered by size then algorithm.
pub fn summarize(records: &[BenchRecord]) -> Result<Vec<SummaryRow>> {
    if records.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut acc: BTreeMap<(usize, AlgorithmId), (f64, usize)> = BTreeMap::new();
    for r in records {
        let e = acc.entry((r.n_vertices, r.algorithm)).or_default();
        e.0 += r.mean_time_ns;
        e.1 += 1;
    }
    let means: BTreeMap<_, f64> = acc
        .into_iter()
        .map(|(k, (sum, count))| (k, sum / count as f64))
        .collect();
    let reference = |n: usize| {
        means
            .get(&(n, AlgorithmId::ExtraVertexAppend))
            .or_else(|| means.get(&(n, AlgorithmId::ExtraVertexBestEdge)))
            .copied()
    };
    Ok(means
        .iter()
        .map(|(&(n, algorithm), &grand_mean_ns)| SummaryRow {
            n_vertices: n,
            algorithm,
            grand_mean_ns,
            ratio_vs_extra_vertex: reference(n).map(|r| grand_mean_ns / r),
        })
        .collect())
}

pub const RECORDS_HEADER: &str = "trial,n_vertices,algorithm,mean_time_ns";
pub const SUMMARY_HEADER: &str = "n_vertices,algorithm,grand_mean_ns,ratio_vs_extra_vertex";

pub fn write_records_csv<W: Write>(mut out: W, records: &[BenchRecord]) -> io::Result<()> {
    writeln!(out, "{RECORDS_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{}",
            r.trial, r.n_vertices, r.algorithm, r.mean_time_ns
        )?;
    }
    Ok(())
}

pub fn write_summary_csv<W: Write>(mut out: W, rows: &[SummaryRow]) -> io::Result<()> {
    writeln!(out, "{SUMMARY_HEADER}")?;
    for r in rows {
        let ratio = r
            .ratio_vs_extra_vertex
            .map(|x| x.to_string())
            .unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{}",
            r.n_vertices, r.algorithm, r.grand_mean_ns, ratio
        )?;
    }
    Ok(())
}

/// How the fuzzer picks query points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointMode {
    /// Uniform mix of inside, outside and on-edge points.
    Mixed,
    Inside,
    Outside,
    OnEdge,
    /// Within ±0.1% of the boundary along a centroid ray.
    NearBoundary,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub iterations: usize,
    pub algorithms: Vec<AlgorithmId>,
    pub mode: PointMode,
}

impl FuzzConfig {
    pub fn new(seed: u64, iterations: usize, algorithms: Vec<AlgorithmId>) -> Self {
        FuzzConfig {
            seed,
            iterations,
            algorithms,
            mode: PointMode::Mixed,
        }
    }
}

/// A classifier answer that differs from the half-plane oracle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Divergence {
    pub polygon: Polygon,
    pub point: Point,
    pub expected: Classification,
    pub got: Classification,
    pub algorithm: AlgorithmId,
}

/// One fuzz case: a polygon with 3..=64 vertices of either orientation and a
/// query point drawn per `mode`.
pub fn fuzz_case(seed: u64, iteration: usize, mode: PointMode) -> Result<(Polygon, Point)> {
    let s = derive_seed(seed, iteration as u64);
    let mut rng = polygen::rng_from(s);
    let mut gen = GenConfig::new(rng.random_range(3..=64), derive_seed(s, 0));
    if rng.random::<bool>() {
        gen.orientation = Orientation::CounterClockwise;
    }
    let poly = polygen::gen_convex(&gen)?;
    let ps = derive_seed(s, 1);
    let mode = match mode {
        PointMode::Mixed => match rng.random_range(0..3) {
            0 => PointMode::Inside,
            1 => PointMode::Outside,
            _ => PointMode::OnEdge,
        },
        m => m,
    };
    let point = match mode {
        PointMode::Inside => polygen::gen_point_inside(&poly, ps)?,
        PointMode::Outside => polygen::gen_point_outside(&poly, ps)?,
        PointMode::OnEdge => polygen::gen_point_on_edge(&poly, ps),
        PointMode::NearBoundary => polygen::gen_point_near_boundary(&poly, ps),
        PointMode::Mixed => unreachable!("resolved above"),
    };
    Ok((poly, point))
}

/// Compares each algorithm with the half-plane oracle over `iterations`
/// seeded cases. Divergences come back in iteration order, then algorithm
/// order as configured.
pub fn differential_fuzz(cfg: &FuzzConfig) -> Result<Vec<Divergence>> {
    if cfg.iterations == 0 {
        return Err(Error::InvalidConfig("iterations must be at least 1".into()));
    }
    let tol = Tolerance::default();
    let mut found = Vec::new();
    for i in 0..cfg.iterations {
        let (poly, point) = fuzz_case(cfg.seed, i, cfg.mode)?;
        let expected = classify_half_plane_oracle(&poly, point, &tol)?;
        for &alg in &cfg.algorithms {
            let got = alg.classify(&poly, point, &tol)?;
            if got != expected {
                found.push(Divergence {
                    polygon: poly.clone(),
                    point,
                    expected,
                    got,
                    algorithm: alg,
                });
            }
        }
    }
    Ok(found)
}
