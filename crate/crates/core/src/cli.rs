//! Command-line front end.
//!
//! Exit codes: 0 success, 1 fuzz divergences found, 2 usage / parse / I/O
//! error, 3 degenerate input, 4 polygon not convex.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{classify_half_plane_oracle, AlgorithmId};
use crate::containment::{polygon_inside, segment_inside};
use crate::error::Error;
use crate::geom::{validate, Orientation, Point, Polygon, Tolerance};
use crate::harness::{self, BenchConfig, FuzzConfig, PointMode};
use crate::polygen::{self, GenConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIVERGENCE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_NOT_CONVEX: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "shoelace-pip",
    version,
    about = "Convex point-in-polygon tests from shoelace areas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the area of a polygon file.
    Area { polygon: PathBuf },
    /// Classify a point as inside, outside or boundary.
    Classify(ClassifyArgs),
    /// Test whether a segment or another polygon lies inside a convex polygon.
    Contains(ContainsArgs),
    /// Generate a random convex polygon file.
    Gen(GenArgs),
    /// Time classifiers and write per-trial and summary CSV.
    Bench(BenchArgs),
    /// Compare classifiers against the half-plane oracle on random cases.
    Fuzz(FuzzArgs),
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    polygon: PathBuf,
    /// Query point as X,Y.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    point: Point,
    #[arg(long, default_value = "extra-vertex", value_parser = parse_algorithm)]
    algorithm: AlgorithmId,
    /// Absolute area tolerance.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Append a note when the answer differs from the half-plane oracle.
    #[arg(long)]
    check_oracle: bool,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("what").required(true).args(["segment", "inner_polygon"]))]
struct ContainsArgs {
    polygon: PathBuf,
    /// Segment as X1,Y1:X2,Y2.
    #[arg(long, value_parser = parse_segment, allow_hyphen_values = true)]
    segment: Option<(Point, Point)>,
    #[arg(long)]
    inner_polygon: Option<PathBuf>,
    #[arg(long)]
    epsilon: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PointKind {
    Inside,
    Outside,
    Edge,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrientationArg {
    Cw,
    Ccw,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    n: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Also generate a query point of this kind.
    #[arg(long)]
    point: Option<PointKind>,
    /// Where to write the point as X,Y; stdout if omitted.
    #[arg(long)]
    point_out: Option<PathBuf>,
    #[arg(long, default_value_t = 100.0)]
    radius: f64,
    #[arg(long, default_value_t = 0.25)]
    jitter: f64,
    #[arg(long, value_enum, default_value_t = OrientationArg::Cw)]
    orientation: OrientationArg,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [20usize, 180])]
    n_list: Vec<usize>,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 100)]
    reps: usize,
    #[arg(long, value_delimiter = ',', value_parser = parse_algorithm,
          default_value = "extra-vertex-append,triangulation")]
    algorithms: Vec<AlgorithmId>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    points_per_rep: usize,
    /// Per-trial records CSV.
    #[arg(long, default_value = "bench.csv")]
    out: PathBuf,
    /// Summary CSV; defaults to `<out stem>_summary.csv` next to `--out`.
    #[arg(long)]
    summary_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Mixed,
    Inside,
    Outside,
    Edge,
    NearBoundary,
}

#[derive(Debug, Args)]
struct FuzzArgs {
    #[arg(long)]
    iterations: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_delimiter = ',', value_parser = parse_algorithm,
          default_value = "extra-vertex-best-edge,triangulation,ray-casting,angle-sum")]
    algorithms: Vec<AlgorithmId>,
    #[arg(long, value_enum, default_value_t = ModeArg::Mixed)]
    mode: ModeArg,
    /// JSON report path; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_algorithm(s: &str) -> Result<AlgorithmId, String> {
    s.parse()
        .map_err(|e: crate::classify::UnknownAlgorithm| e.to_string())
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected X,Y, got `{s}`"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("bad coordinate `{t}`"))
    };
    Ok(Point::new(num(x)?, num(y)?))
}

fn parse_segment(s: &str) -> Result<(Point, Point), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected X1,Y1:X2,Y2, got `{s}`"))?;
    Ok((parse_point(a)?, parse_point(b)?))
}

/// Parses the plain-text polygon format: one `x y` pair per line, blank
/// lines and lines starting with `#` ignored.
pub fn parse_polygon_text(text: &str) -> Result<Vec<Point>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [x, y] = fields[..] else {
            return Err(format!(
                "line {}: expected two numbers, found {}",
                i + 1,
                fields.len()
            ));
        };
        let num = |t: &str| {
            t.parse::<f64>()
                .map_err(|_| format!("line {}: bad number `{t}`", i + 1))
        };
        out.push(Point::new(num(x)?, num(y)?));
    }
    Ok(out)
}

pub fn format_polygon_text(poly: &Polygon, header: &str) -> String {
    let mut s = String::new();
    for line in header.lines() {
        let _ = writeln!(s, "# {line}");
    }
    for v in poly.vertices() {
        let _ = writeln!(s, "{} {}", v.x, v.y);
    }
    s
}

/// Formats with 12 significant digits in fixed notation.
pub fn format_sig12(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v:.11}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateInput(_) | Error::InternalInconsistency(_) => EXIT_DEGENERATE,
            Error::NotConvex => EXIT_NOT_CONVEX,
            Error::BadIndex { .. }
            | Error::EmptyInput
            | Error::ClockUnavailable
            | Error::InvalidConfig(_) => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_polygon(path: &Path) -> Result<Polygon, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let points =
        parse_polygon_text(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(validate(points)?)
}

fn write_file(path: &Path, contents: &[u8]) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn tolerance(epsilon: Option<f64>) -> Result<Tolerance, Failure> {
    let d = Tolerance::default();
    match epsilon {
        None => Ok(d),
        Some(e) => Ok(Tolerance::new(e, d.rel_eps, d.angle_eps)?),
    }
}

/// Runs the CLI with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| usage(e.to_string());
    match command {
        Command::Area { polygon } => {
            let poly = read_polygon(&polygon)?;
            writeln!(out, "{}", format_sig12(poly.area())).map_err(io)?;
        }
        Command::Classify(a) => {
            let poly = read_polygon(&a.polygon)?;
            let tol = tolerance(a.epsilon)?;
            let got = a.algorithm.classify(&poly, a.point, &tol)?;
            let mut line = got.as_str().to_string();
            if a.check_oracle {
                let truth = classify_half_plane_oracle(&poly, a.point, &tol)?;
                if truth != got {
                    let _ = write!(line, " [DIVERGES: oracle={truth}]");
                }
            }
            writeln!(out, "{line}").map_err(io)?;
        }
        Command::Contains(a) => {
            let poly = read_polygon(&a.polygon)?;
            let tol = tolerance(a.epsilon)?;
            let inside = match (a.segment, a.inner_polygon) {
                (Some((p, q)), _) => segment_inside(&poly, p, q, &tol)?,
                (None, Some(path)) => polygon_inside(&poly, &read_polygon(&path)?, &tol)?,
                (None, None) => return Err(usage("need --segment or --inner-polygon")),
            };
            writeln!(out, "{inside}").map_err(io)?;
        }
        Command::Gen(a) => {
            let mut cfg = GenConfig::new(a.n as usize, a.seed);
            cfg.radius = a.radius;
            cfg.jitter = a.jitter;
            cfg.orientation = match a.orientation {
                OrientationArg::Cw => Orientation::Clockwise,
                OrientationArg::Ccw => Orientation::CounterClockwise,
            };
            let poly = polygen::gen_convex(&cfg)?;
            let header = format!("convex polygon n={} seed={}", a.n, a.seed);
            write_file(&a.out, format_polygon_text(&poly, &header).as_bytes())?;
            if let Some(kind) = a.point {
                let seed = polygen::derive_seed(a.seed, u64::MAX);
                let p = match kind {
                    PointKind::Inside => polygen::gen_point_inside(&poly, seed)?,
                    PointKind::Outside => polygen::gen_point_outside(&poly, seed)?,
                    PointKind::Edge => polygen::gen_point_on_edge(&poly, seed),
                };
                let text = format!("{},{}\n", p.x, p.y);
                match a.point_out {
                    Some(path) => write_file(&path, text.as_bytes())?,
                    None => out.write_all(text.as_bytes()).map_err(io)?,
                }
            }
        }
        Command::Bench(a) => {
            let cfg = BenchConfig {
                vertex_counts: a.n_list,
                trials: a.trials,
                reps: a.reps,
                algorithms: a.algorithms,
                seed: a.seed,
                points_per_rep: a.points_per_rep,
            };
            let records = harness::run_benchmark(&cfg)?;
            let rows = harness::summarize(&records)?;
            let mut buf = Vec::new();
            harness::write_records_csv(&mut buf, &records).map_err(io)?;
            write_file(&a.out, &buf)?;
            let summary_path = a.summary_out.unwrap_or_else(|| summary_path_for(&a.out));
            let mut buf = Vec::new();
            harness::write_summary_csv(&mut buf, &rows).map_err(io)?;
            write_file(&summary_path, &buf)?;
            out.write_all(&buf).map_err(io)?;
        }
        Command::Fuzz(a) => {
            let cfg = FuzzConfig {
                seed: a.seed,
                iterations: a.iterations,
                algorithms: a.algorithms,
                mode: match a.mode {
                    ModeArg::Mixed => PointMode::Mixed,
                    ModeArg::Inside => PointMode::Inside,
                    ModeArg::Outside => PointMode::Outside,
                    ModeArg::Edge => PointMode::OnEdge,
                    ModeArg::NearBoundary => PointMode::NearBoundary,
                },
            };
            let found = harness::differential_fuzz(&cfg)?;
            let json = serde_json::to_string_pretty(&found).map_err(|e| usage(e.to_string()))?;
            match a.out {
                Some(path) => write_file(&path, format!("{json}\n").as_bytes())?,
                None => writeln!(out, "{json}").map_err(io)?,
            }
            if !found.is_empty() {
                return Ok(EXIT_DIVERGENCE);
            }
        }
    }
    Ok(EXIT_OK)
}

fn summary_path_for(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "bench".into());
    out.with_file_name(format!("{stem}_summary.csv"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12() {
        assert_eq!(format_sig12(1.0), "1.00000000000");
        assert_eq!(format_sig12(6.0), "6.00000000000");
        assert_eq!(format_sig12(31234.5), "31234.5000000");
        assert_eq!(format_sig12(0.0123), "0.0123000000000");
        assert_eq!(format_sig12(1e13), "10000000000000");
    }

    #[test]
    fn polygon_text() {
        let pts = parse_polygon_text("# square\n0 0\n\n 0 1 \n1\t1\n1 0\n").unwrap();
        assert_eq!(pts.len(), 4);
        assert_eq!(pts[2], Point::new(1.0, 1.0));
        assert!(parse_polygon_text("0 0\n1\n")
            .unwrap_err()
            .contains("line 2"));
        assert!(parse_polygon_text("0 0 0\n").is_err());
        assert!(parse_polygon_text("0 x\n").is_err());
        let poly = validate(pts).unwrap();
        let text = format_polygon_text(&poly, "hello");
        assert!(text.starts_with("# hello\n0 0\n"));
        assert_eq!(parse_polygon_text(&text).unwrap(), poly.vertices());
    }

    #[test]
    fn point_and_segment_flags() {
        assert_eq!(parse_point("-1,2.5"), Ok(Point::new(-1.0, 2.5)));
        assert!(parse_point("1;2").is_err());
        assert_eq!(
            parse_segment("0.2,0.2:0.8,0.8"),
            Ok((Point::new(0.2, 0.2), Point::new(0.8, 0.8)))
        );
        assert!(parse_segment("0,0").is_err());
    }

    #[test]
    fn summary_path() {
        assert_eq!(
            summary_path_for(Path::new("out/b.csv")),
            PathBuf::from("out/b_summary.csv")
        );
    }
}
