//! Command-line front end. Every subcommand writes JSON (or CSV where noted)
//! to stdout or `--output`.
//!
//! Exit codes: 0 on success, 2 for usage errors and malformed input, 3 when
//! a self-certifying construction fails verification, 1 otherwise.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::dynamics;
use crate::ellipse::{EllipseModel, EllipsePoint};
use crate::error::Error;
use crate::graph::CyclicGraph;
use crate::oracle;
use crate::sampler::{self, SamplerSpec};
use crate::vr::{self, Convention};

#[derive(Parser, Debug)]
#[command(name = "ellipse-rips", version, about = "Vietoris-Rips complexes of ellipse samples via cyclic graphs")]
pub struct Cli {
    /// Worker threads for parallel subcommands.
    #[arg(long, global = true, env = "ELLIPSE_RIPS_THREADS")]
    pub threads: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Homotopy type, winding fraction and periodic orbits of a graph or sample.
    Classify(InputArgs),
    /// Rounds of dominated-vertex removal and the resulting core.
    Dismantle(InputArgs),
    /// Periodic orbits and fast/slow labels of the cyclic dynamics.
    Dynamics(InputArgs),
    /// Ellipse geometry: h, g_r, s, critical radii, triangles, z-points.
    Geometry(GeometryArgs),
    /// Dense samples with a prescribed number of periodic orbits, or uniform samples.
    Sample(SampleArgs),
    /// Barcodes of the full ellipse or of a small sample.
    Barcode(BarcodeArgs),
    /// Classification over a grid of scales.
    Sweep(SweepArgs),
    /// Brute-force Betti numbers or persistence pairs of the clique complex.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Graph JSON `{positions, out_degree}` or point set JSON `{a, points}`.
    #[arg(long, short)]
    pub input: PathBuf,
    /// Scale, required for point sets.
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long, value_enum, default_value_t = Convention::LessEq)]
    pub convention: Convention,
}

#[derive(Args, Debug)]
pub struct GeometryArgs {
    #[arg(long)]
    pub a: f64,
    /// Parameter of the query point (radians).
    #[arg(long)]
    pub t: Option<f64>,
    /// Parameter of the point whose inscribed triangle to report.
    #[arg(long)]
    pub triangle_at: Option<f64>,
    /// Scale for g_r, z-points and point classes.
    #[arg(long)]
    pub r: Option<f64>,
    /// Number of evenly spaced parameters for the s(t) profile (CSV format).
    #[arg(long, default_value_t = 360)]
    pub profile: usize,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[arg(long)]
    pub a: f64,
    /// Scale; defaults to (r1 + r2) / 2.
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long, default_value_t = 0.05)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Orbits per fast interval as `n,n'`; defaults to an even split.
    #[arg(long, value_parser = parse_split)]
    pub split: Option<(usize, usize)>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Emit a jittered uniform sample of this many points instead.
    #[arg(long)]
    pub uniform: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BarcodeArgs {
    /// Closed-form barcode of the whole ellipse.
    #[arg(long, conflicts_with = "input")]
    pub ellipse: bool,
    #[arg(long)]
    pub a: Option<f64>,
    /// Point set JSON.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Convention::LessEq)]
    pub convention: Convention,
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
    #[arg(long, default_value_t = vr::DEFAULT_BARCODE_CAP)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub r_min: f64,
    #[arg(long)]
    pub r_max: f64,
    #[arg(long, default_value_t = 50)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Convention::LessEq)]
    pub convention: Convention,
    /// Uniform sample size.
    #[arg(long, default_value_t = 2000)]
    pub points: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sweep an adversarial sample with this many orbits instead.
    #[arg(long)]
    pub adversarial_k: Option<usize>,
    #[arg(long, default_value_t = 0.05)]
    pub epsilon: f64,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
    /// Persistence pairs of the VR filtration of a point set instead of Betti numbers.
    #[arg(long)]
    pub pairs: bool,
}

fn parse_split(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected n,n'")?;
    Ok((
        a.trim().parse().map_err(|e| format!("{e}"))?,
        b.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

/// A point given by its parameter or by coordinates.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PointRecord {
    #[serde(default)]
    pub t: Option<f64>,
    #[serde(default)]
    pub x: Option<f64>,
    #[serde(default)]
    pub y: Option<f64>,
}

/// Point set file format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointSet {
    pub a: f64,
    pub points: Vec<PointRecord>,
}

impl PointSet {
    pub fn from_points(m: &EllipseModel, points: &[EllipsePoint]) -> Self {
        PointSet {
            a: m.a(),
            points: points
                .iter()
                .map(|p| PointRecord {
                    t: Some(p.t()),
                    x: Some(p.x()),
                    y: Some(p.y()),
                })
                .collect(),
        }
    }

    pub fn resolve(&self) -> Result<(EllipseModel, Vec<EllipsePoint>), CliError> {
        let m = EllipseModel::new(self.a)?;
        let pts = self
            .points
            .iter()
            .map(|p| match (p.t, p.x, p.y) {
                (Some(t), _, _) => Ok(m.point(t)),
                (None, Some(x), Some(y)) => Ok(m.point_from_coords(x, y)),
                _ => Err(CliError::Input("point needs `t` or both `x` and `y`".into())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((m, pts))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum InputDoc {
    Graph {
        positions: Vec<f64>,
        out_degree: Vec<usize>,
    },
    Points(PointSet),
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(s) => write!(f, "malformed input: {s}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Lib(Error::Parameter(_)) => 2,
            CliError::Lib(Error::Verification { .. }) => 3,
            _ => 1,
        }
    }
}

enum Loaded {
    Graph(CyclicGraph),
    Sample(EllipseModel, Vec<EllipsePoint>),
}

fn load(path: &PathBuf) -> Result<Loaded, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let doc: InputDoc = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    match doc {
        InputDoc::Graph { positions, out_degree } => {
            let positions = positions.into_iter().map(Into::into).collect();
            Ok(Loaded::Graph(CyclicGraph::new(positions, out_degree)?))
        }
        InputDoc::Points(ps) => {
            let (m, pts) = ps.resolve()?;
            Ok(Loaded::Sample(m, pts))
        }
    }
}

fn load_graph(args: &InputArgs) -> Result<CyclicGraph, CliError> {
    match load(&args.input)? {
        Loaded::Graph(g) => Ok(g),
        Loaded::Sample(m, pts) => {
            let r = args
                .r
                .ok_or_else(|| CliError::Input("point sets need --r".into()))?;
            Ok(vr::vr_graph(&m, &pts, r, args.convention)?)
        }
    }
}

fn graph_summary(g: &CyclicGraph) -> Result<Map<String, Value>, CliError> {
    let wf = g.winding_fraction()?;
    let h = g.homotopy_type()?;
    let orbits = dynamics::periodic_orbits(g)?;
    let mut out = Map::new();
    out.insert("wf".into(), json!(wf.to_string()));
    if let Value::Object(hm) = serde_json::to_value(h).expect("serializable") {
        out.extend(hm);
    }
    out.insert("orbits".into(), serde_json::to_value(orbits).expect("serializable"));
    Ok(out)
}

fn cmd_classify(args: &InputArgs) -> Result<Value, CliError> {
    Ok(Value::Object(graph_summary(&load_graph(args)?)?))
}

fn cmd_dismantle(args: &InputArgs) -> Result<Value, CliError> {
    let g = load_graph(args)?;
    let d = g.dismantle()?;
    Ok(json!({
        "wf": d.winding_fraction().to_string(),
        "rounds": d.rounds,
        "core_vertices": d.core_vertices,
        "core": d.core,
    }))
}

fn cmd_dynamics(args: &InputArgs) -> Result<Value, CliError> {
    let g = load_graph(args)?;
    let orbits = dynamics::periodic_orbits(&g)?;
    let classes = dynamics::classify_vertices(&g)?;
    let wf = orbits.winding_fraction()?;
    let images: Vec<usize> = (0..g.len()).map(|v| dynamics::step(&g, v)).collect();
    Ok(json!({
        "wf": wf.to_string(),
        "orbits": orbits,
        "classes": classes,
        "f": images,
    }))
}

fn cmd_geometry(args: &GeometryArgs, format: Format) -> Result<Output, CliError> {
    let m = EllipseModel::new(args.a)?;
    if format == Format::Csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["t", "s"]).map_err(csv_err)?;
        for (t, s) in m.side_profile(args.profile.max(1)) {
            w.write_record([t.to_string(), s.to_string()]).map_err(csv_err)?;
        }
        return Ok(Output::Text(String::from_utf8(w.into_inner().map_err(|e| CliError::Input(e.to_string()))?).expect("utf8")));
    }
    let (r1, r2) = m.critical_radii();
    let mut out = Map::new();
    out.insert("a".into(), json!(m.a()));
    out.insert("r1".into(), json!(r1));
    out.insert("r2".into(), json!(r2));
    if let Some(t) = args.t {
        let p = m.point(t);
        let mut q = Map::new();
        q.insert("point".into(), json!(p));
        q.insert("h".into(), json!(m.antipodal_normal(&p)));
        q.insert("h_inverse".into(), json!(m.inverse_antipodal_normal(&p)));
        q.insert("s".into(), json!(m.triangle_side(&p)));
        if let Some(r) = args.r {
            q.insert("g_r".into(), json!(m.advance(&p, r)?));
            if r > r1 && r < r2 {
                let class = m.point_class(r, &p)?;
                q.insert("class".into(), json!(class));
            }
        }
        out.insert("query".into(), Value::Object(q));
    }
    if let Some(t) = args.triangle_at {
        out.insert("triangle".into(), json!(m.inscribed_triangle(&m.point(t))?));
    }
    if let Some(r) = args.r {
        if r > r1 && r < r2 {
            let z = m.z_points(r)?;
            out.insert("z_points".into(), json!(z.points));
        }
    }
    Ok(Output::Json(Value::Object(out)))
}

fn cmd_sample(args: &SampleArgs, format: Format) -> Result<Output, CliError> {
    let m = EllipseModel::new(args.a)?;
    let (points, report) = if let Some(n) = args.uniform {
        let s = sampler::uniform_sample(&m, n, Some(args.seed))?;
        (s.points, json!({ "epsilon": s.epsilon }))
    } else {
        let mut spec = SamplerSpec::midpoint(args.a, args.epsilon, args.k, args.seed)?;
        if let Some(r) = args.r {
            spec.r = r;
        }
        if let Some(split) = args.split {
            spec.split = split;
        }
        let s = sampler::adversarial_sample(&spec)?;
        (s.points, json!(s.report))
    };
    if format == Format::Csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["t", "x", "y"]).map_err(csv_err)?;
        for p in &points {
            w.write_record([p.t().to_string(), p.x().to_string(), p.y().to_string()])
                .map_err(csv_err)?;
        }
        return Ok(Output::Text(String::from_utf8(w.into_inner().map_err(|e| CliError::Input(e.to_string()))?).expect("utf8")));
    }
    let mut doc = serde_json::to_value(PointSet::from_points(&m, &points)).expect("serializable");
    doc["report"] = report;
    Ok(Output::Json(doc))
}

fn cmd_barcode(args: &BarcodeArgs, format: Format) -> Result<Output, CliError> {
    let barcode = if args.ellipse {
        let a = args.a.ok_or_else(|| CliError::Input("--ellipse needs --a".into()))?;
        vr::ellipse_barcode(&EllipseModel::new(a)?, args.convention)
    } else {
        let path = args
            .input
            .as_ref()
            .ok_or_else(|| CliError::Input("need --ellipse or --input".into()))?;
        match load(path)? {
            Loaded::Sample(_, pts) => vr::sample_barcode(&pts, args.convention, args.max_dim, args.cap)?,
            Loaded::Graph(_) => return Err(CliError::Input("barcode needs a point set".into())),
        }
    };
    if format == Format::Csv {
        let mut buf = Vec::new();
        barcode.write_csv(&mut buf)?;
        return Ok(Output::Text(String::from_utf8(buf).expect("utf8")));
    }
    Ok(Output::Json(serde_json::to_value(barcode).expect("serializable")))
}

/// One row of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub r: f64,
    pub wf: String,
    #[serde(rename = "type")]
    pub homotopy: String,
    pub orbits: usize,
}

pub fn sweep_rows(
    m: &EllipseModel,
    points: &[EllipsePoint],
    grid: &[f64],
    c: Convention,
) -> Result<Vec<SweepRow>, Error> {
    grid.par_iter()
        .map(|&r| {
            let g = vr::vr_graph(m, points, r, c)?;
            let orbits = dynamics::periodic_orbits(&g)?;
            Ok(SweepRow {
                r,
                wf: g.winding_fraction()?.to_string(),
                homotopy: g.homotopy_type()?.to_string(),
                orbits: orbits.count,
            })
        })
        .collect()
}

fn cmd_sweep(args: &SweepArgs, format: Format) -> Result<Output, CliError> {
    let m = EllipseModel::new(args.a)?;
    if !(args.r_min > 0.0 && args.r_max < 2.0 && args.r_min <= args.r_max) || args.steps == 0 {
        return Err(Error::Parameter(format!(
            "sweep grid [{}, {}] must lie in (0, 2) with at least one step",
            args.r_min, args.r_max
        ))
        .into());
    }
    let grid: Vec<f64> = (0..args.steps)
        .map(|i| {
            if args.steps == 1 {
                args.r_min
            } else {
                args.r_min + (args.r_max - args.r_min) * i as f64 / (args.steps - 1) as f64
            }
        })
        .collect();
    let points = match args.adversarial_k {
        Some(k) => sampler::adversarial_sample(&SamplerSpec::midpoint(args.a, args.epsilon, k, args.seed)?)?.points,
        None => sampler::uniform_sample(&m, args.points, Some(args.seed))?.points,
    };
    let rows = sweep_rows(&m, &points, &grid, args.convention)?;
    if format == Format::Csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &rows {
            w.serialize(row).map_err(csv_err)?;
        }
        return Ok(Output::Text(String::from_utf8(w.into_inner().map_err(|e| CliError::Input(e.to_string()))?).expect("utf8")));
    }
    Ok(Output::Json(serde_json::to_value(rows).expect("serializable")))
}

fn cmd_oracle(args: &OracleArgs) -> Result<Value, CliError> {
    let max_dim = args.max_dim;
    if args.pairs {
        let Loaded::Sample(_, pts) = load(&args.input.input)? else {
            return Err(CliError::Input("--pairs needs a point set".into()));
        };
        let pts = vr::sorted_sample(&pts)?;
        let d: Vec<Vec<f64>> = pts
            .iter()
            .map(|p| pts.iter().map(|q| crate::ellipse::dist(p, q)).collect())
            .collect();
        let c = oracle::rips_filtration(&d, max_dim + 1, oracle::DEFAULT_SIMPLEX_CAP)?;
        return Ok(serde_json::to_value(oracle::persistent_pairs(&c, max_dim)).expect("serializable"));
    }
    let g = load_graph(&args.input)?;
    let c = oracle::clique_complex(&g.undirected_adjacency(), max_dim + 1, oracle::DEFAULT_SIMPLEX_CAP)?;
    Ok(json!({
        "betti": oracle::betti_numbers(&c, max_dim),
        "counts": c.counts(),
        "predicted": g.homotopy_type()?.betti(max_dim),
    }))
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Input(format!("csv: {e}"))
}

enum Output {
    Json(Value),
    Text(String),
}

/// Runs one command and returns its rendered output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let out = match &cli.command {
        Command::Classify(a) => Output::Json(cmd_classify(a)?),
        Command::Dismantle(a) => Output::Json(cmd_dismantle(a)?),
        Command::Dynamics(a) => Output::Json(cmd_dynamics(a)?),
        Command::Geometry(a) => cmd_geometry(a, cli.format)?,
        Command::Sample(a) => cmd_sample(a, cli.format)?,
        Command::Barcode(a) => cmd_barcode(a, cli.format)?,
        Command::Sweep(a) => cmd_sweep(a, cli.format)?,
        Command::Oracle(a) => Output::Json(cmd_oracle(a)?),
    };
    Ok(match out {
        Output::Json(v) => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
        Output::Text(s) => s,
    })
}

/// Parses `args`, runs the command and writes its output.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        // only fails if a global pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let result = execute(&cli).and_then(|text| {
        match &cli.output {
            Some(path) => fs::write(path, text)?,
            None => io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
