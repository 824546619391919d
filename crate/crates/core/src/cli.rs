//! Command-line front end.
//!
//! Every command produces a [`Table`] with run metadata and writes it as CSV
//! or JSON. Exit codes: 0 on success, 2 when some rows are flagged (solver
//! failure or error estimate above `--tol`), 1 on a hard failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::boundary::JordanBoundary;
use crate::bounds::{qc_diameter_bound, BoundsReport};
use crate::capacity::{CapacityResult, CapacitySolver, Condenser};
use crate::conformal::{hyp_diameter, hyp_field, riemann_map};
use crate::error::{domain, Result};
use crate::experiments::{self, REULEAUX_NODES, REULEAUX_RADII, SQUARE_DIAMETER_SAMPLES, SQUARE_HALF_SIDES};
use crate::hyperbolic::{hyp_ball, hyp_diameter_points};
use crate::io::{read_boundary_file, CapacityRecord, Cell, Format, Meta, Table};
use crate::{shapes, Error, Point};

/// Default relative error-estimate threshold above which rows are flagged.
pub const DEFAULT_TOL: f64 = 1e-3;

/// Samples used to measure the hyperbolic diameter of a user shape in the
/// unit disk.
const DIAMETER_SAMPLES: usize = 1024;

/// Exit status of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    HardFailure = 1,
    Partial = 2,
}

/// Parsed command line.
#[derive(Debug, Clone, Parser)]
#[command(name = "hypcap", version, about = "Hyperbolic diameters and condenser capacities")]
pub struct RunConfig {
    /// Boundary nodes per boundary component (command-specific default).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Relative error-estimate threshold above which rows are flagged.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Output file (standard output when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Capacities of Reuleaux triangles, disks and segments against the
    /// hyperbolic diameter, by circumradius.
    Table2 {
        /// Comma-separated circumradii in (0, 1); an empty list gives a
        /// header-only table.
        #[arg(long, value_parser = parse_list)]
        r: Option<ValueList>,
    },
    /// Hyperbolic diameter and capacity of centred squares in the notched
    /// rectangle.
    Table1 {
        /// Comma-separated half sides in (0, 0.5).
        #[arg(long, value_parser = parse_list)]
        h: Option<ValueList>,
        /// Boundary samples per square for the diameter.
        #[arg(long, default_value_t = SQUARE_DIAMETER_SAMPLES)]
        samples: usize,
    },
    /// Capacities divided by the disk capacity on a grid of diameters.
    Quotients {
        #[arg(long, default_value_t = 0.1)]
        t_min: f64,
        #[arg(long, default_value_t = 8.0)]
        t_max: f64,
        #[arg(long, default_value_t = 40)]
        steps: usize,
        /// Skip the capacity solves and emit only the closed-form columns.
        #[arg(long)]
        closed_form_only: bool,
    },
    /// Closed-form capacity bounds for hyperbolic diameter `t`.
    Bounds {
        #[arg(long)]
        t: f64,
        /// Dimensions for the Jung radius and upper capacity bound.
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        dims: Vec<u32>,
    },
    /// Capacity of a condenser.
    Cap {
        #[command(flatten)]
        domain: DomainArgs,
        #[command(flatten)]
        set: ShapeArgs,
        /// Auxiliary point `x,y` in the ring domain.
        #[arg(long, value_parser = parse_point)]
        alpha: Option<Point>,
        /// Auxiliary point `x,y` inside the compact set.
        #[arg(long, value_parser = parse_point)]
        z2: Option<Point>,
    },
    /// Hyperbolic diameter of a set in a domain.
    Hypdiam {
        #[command(flatten)]
        domain: DomainArgs,
        #[command(flatten)]
        set: ShapeArgs,
        /// Base point `x,y` of the Riemann map.
        #[arg(long, value_parser = parse_point)]
        alpha: Option<Point>,
        /// Boundary samples of the set.
        #[arg(long, default_value_t = DIAMETER_SAMPLES)]
        samples: usize,
    },
    /// Boundary points of a shape in the boundary CSV format.
    Shape {
        #[command(flatten)]
        set: ShapeArgs,
        #[arg(long, default_value_t = 300)]
        points: usize,
    },
    /// Grid of hyperbolic distances from the base point.
    Hypfield {
        #[command(flatten)]
        domain: DomainArgs,
        /// Base point `x,y` of the Riemann map.
        #[arg(long, value_parser = parse_point)]
        alpha: Option<Point>,
        #[arg(long, default_value_t = 61)]
        nx: usize,
        #[arg(long, default_value_t = 21)]
        ny: usize,
        /// `min,max` of the x range (default: bounding box of the domain).
        #[arg(long, value_parser = parse_point)]
        x_range: Option<Point>,
        /// `min,max` of the y range (default: bounding box of the domain).
        #[arg(long, value_parser = parse_point)]
        y_range: Option<Point>,
    },
    /// Distortion bound for the hyperbolic diameter under K-quasiconformal maps.
    QcBound {
        #[arg(long = "K", alias = "k")]
        k: f64,
        #[arg(long)]
        t: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainKind {
    UnitDisk,
    Notched,
    File,
}

/// The simply connected domain `G`.
#[derive(Debug, Clone, Args)]
pub struct DomainArgs {
    #[arg(long, value_enum, default_value_t = DomainKind::UnitDisk)]
    pub domain: DomainKind,
    /// Boundary CSV of the domain (with `--domain file`).
    #[arg(long)]
    pub domain_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeKind {
    HypReuleaux,
    EucReuleaux,
    HypDisk,
    Circle,
    Square,
    Notched,
    File,
}

/// A compact set or test body.
#[derive(Debug, Clone, Args)]
pub struct ShapeArgs {
    #[arg(long = "type", alias = "shape", value_enum, default_value_t = ShapeKind::HypReuleaux)]
    pub kind: ShapeKind,
    /// Circumradius of a Reuleaux triangle.
    #[arg(long)]
    pub r: Option<f64>,
    /// Hyperbolic diameter.
    #[arg(long)]
    pub t: Option<f64>,
    /// Centre `x,y` (hyperbolic centre for `hyp-disk`).
    #[arg(long, value_parser = parse_point)]
    pub center: Option<Point>,
    /// Euclidean radius of a circle.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Half side of a square.
    #[arg(long)]
    pub half_side: Option<f64>,
    /// Boundary CSV of the set (with `--type file`).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// Parses `x,y` into a point.
pub fn parse_point(s: &str) -> std::result::Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    let x: f64 = x.trim().parse().map_err(|e| format!("bad x in `{s}`: {e}"))?;
    let y: f64 = y.trim().parse().map_err(|e| format!("bad y in `{s}`: {e}"))?;
    Ok(Point::new(x, y))
}

/// A comma-separated list of numbers, possibly empty.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueList(pub Vec<f64>);

/// Parses `a,b,c` into a list; the empty string gives an empty list.
pub fn parse_list(s: &str) -> std::result::Result<ValueList, String> {
    if s.trim().is_empty() {
        return Ok(ValueList(Vec::new()));
    }
    s.split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|e| format!("bad number `{v}`: {e}")))
        .collect::<std::result::Result<_, _>>()
        .map(ValueList)
}

/// A finished command: the table and the number of flagged rows.
#[derive(Debug, Clone)]
pub struct Report {
    pub table: Table,
    pub flagged: usize,
}

/// A built shape with its description.
struct BuiltShape {
    name: String,
    params: BTreeMap<String, f64>,
    boundary: JordanBoundary,
    /// Hyperbolic diameter in the unit disk, when known in closed form.
    t: Option<f64>,
}

fn need(v: Option<f64>, flag: &str, kind: &str) -> Result<f64> {
    v.ok_or_else(|| Error::Parse(format!("--{flag} is required for {kind}")))
}

fn build_shape(a: &ShapeArgs) -> Result<BuiltShape> {
    let mut params = BTreeMap::new();
    let (name, boundary, t) = match a.kind {
        ShapeKind::HypReuleaux => {
            let r = match (a.r, a.t) {
                (Some(r), _) => r,
                (None, Some(t)) => shapes::reuleaux_radius_for_diameter(t)?,
                (None, None) => return Err(Error::Parse("hyp-reuleaux needs --r or --t".into())),
            };
            let tri = shapes::hyp_reuleaux(r)?;
            params.insert("r".into(), r);
            ("hyp-reuleaux", tri.boundary, Some(tri.vertex_distance))
        }
        ShapeKind::EucReuleaux => {
            let t = match (a.t, a.r) {
                (Some(t), _) => t,
                (None, Some(r)) => shapes::reuleaux_vertex_distance(r),
                (None, None) => return Err(Error::Parse("euc-reuleaux needs --t or --r".into())),
            };
            let tri = shapes::euc_reuleaux_with_hyp_diameter(t)?;
            params.insert("circumradius".into(), tri.circumradius);
            ("euc-reuleaux", tri.boundary, Some(t))
        }
        ShapeKind::HypDisk => {
            let t = need(a.t, "t", "hyp-disk")?;
            let q = a.center.unwrap_or(Point::new(0.0, 0.0));
            let ball = hyp_ball(q, t / 2.0)?;
            params.insert("center_x".into(), q.re);
            params.insert("center_y".into(), q.im);
            params.insert("t".into(), t);
            let b = shapes::circle(ball.euclid_center, ball.euclid_radius)?;
            ("hyp-disk", b, Some(t))
        }
        ShapeKind::Circle => {
            let radius = need(a.radius, "radius", "circle")?;
            let c = a.center.unwrap_or(Point::new(0.0, 0.0));
            params.insert("center_x".into(), c.re);
            params.insert("center_y".into(), c.im);
            params.insert("radius".into(), radius);
            ("circle", shapes::circle(c, radius)?, None)
        }
        ShapeKind::Square => {
            let h = need(a.half_side, "half-side", "square")?;
            let c = a.center.unwrap_or(experiments::NOTCHED_CENTER);
            params.insert("center_x".into(), c.re);
            params.insert("center_y".into(), c.im);
            params.insert("half_side".into(), h);
            ("square", shapes::square(c, h)?, None)
        }
        ShapeKind::Notched => ("notched", shapes::notched_rectangle(), None),
        ShapeKind::File => {
            let path = a
                .file
                .as_ref()
                .ok_or_else(|| Error::Parse("--file is required for --type file".into()))?;
            ("file", read_boundary_file(path)?, None)
        }
    };
    Ok(BuiltShape {
        name: name.into(),
        params,
        boundary,
        t,
    })
}

fn build_domain(a: &DomainArgs) -> Result<JordanBoundary> {
    match a.domain {
        DomainKind::UnitDisk => Ok(shapes::unit_circle()),
        DomainKind::Notched => Ok(shapes::notched_rectangle()),
        DomainKind::File => {
            let path = a
                .domain_file
                .as_ref()
                .ok_or_else(|| Error::Parse("--domain-file is required for --domain file".into()))?;
            read_boundary_file(path)
        }
    }
}

fn domain_name(a: &DomainArgs) -> &'static str {
    match a.domain {
        DomainKind::UnitDisk => "unit-disk",
        DomainKind::Notched => "notched",
        DomainKind::File => "file",
    }
}

/// Default base point of a domain: the origin for the unit disk, the
/// square centre for the notched rectangle, the centroid otherwise.
fn default_base_point(a: &DomainArgs, g: &JordanBoundary) -> Point {
    match a.domain {
        DomainKind::UnitDisk => Point::new(0.0, 0.0),
        DomainKind::Notched => experiments::NOTCHED_CENTER,
        DomainKind::File => g.centroid(),
    }
}

/// Status cell and flag for a capacity result.
fn capacity_status(r: &Result<CapacityResult>, tol: f64) -> (String, bool) {
    match r {
        Ok(c) if c.relative_error() > tol => (
            format!(
                "under-resolved (relative error estimate {:.1e}); rerun with larger --n",
                c.relative_error()
            ),
            true,
        ),
        Ok(_) => ("ok".into(), false),
        Err(e) => (format!("error: {e}"), true),
    }
}

fn join_status(parts: Vec<(String, bool)>) -> (Cell, bool) {
    let flagged = parts.iter().any(|p| p.1);
    let text: Vec<String> = parts.into_iter().filter(|p| p.1).map(|p| p.0).collect();
    if text.is_empty() {
        ("ok".into(), false)
    } else {
        (text.join("; ").into(), flagged)
    }
}

fn value_cell(r: &Result<CapacityResult>) -> Cell {
    r.as_ref().ok().map(|c| c.value).into()
}

fn err_cell(r: &Result<CapacityResult>) -> Cell {
    r.as_ref().ok().map(|c| c.error_estimate).into()
}

fn cmd_table2(cfg: &RunConfig, r_list: &[f64]) -> Result<Report> {
    let n = cfg.n.unwrap_or(REULEAUX_NODES);
    let meta = Meta::new("table2", Some(n), cfg.tol).with("grading_order", crate::mesh::DEFAULT_GRADING_ORDER);
    let mut table = Table::new(
        meta,
        &[
            "r",
            "h_diam",
            "cap_seg",
            "cap_er_tri",
            "cap_disk",
            "cap_hr_tri",
            "cap_jung",
            "err_er_tri",
            "err_hr_tri",
            "status",
        ],
    );
    let mut flagged = 0;
    for row in experiments::reuleaux_table(r_list, n)? {
        let (status, bad) = join_status(vec![
            capacity_status(&row.cap_euc_reuleaux, cfg.tol),
            capacity_status(&row.cap_hyp_reuleaux, cfg.tol),
        ]);
        flagged += usize::from(bad);
        table.push(vec![
            row.r.into(),
            row.t.into(),
            row.cap_seg.into(),
            value_cell(&row.cap_euc_reuleaux),
            row.cap_disk.into(),
            value_cell(&row.cap_hyp_reuleaux),
            row.cap_jung.into(),
            err_cell(&row.cap_euc_reuleaux),
            err_cell(&row.cap_hyp_reuleaux),
            status,
        ]);
    }
    Ok(Report { table, flagged })
}

fn cmd_table1(cfg: &RunConfig, h_list: &[f64], samples: usize) -> Result<Report> {
    let n = cfg.n.unwrap_or(experiments::NOTCHED_NODES);
    let meta = Meta::new("table1", Some(n), cfg.tol)
        .with("diameter_samples", samples)
        .with("map_base_point", "0.5,0.5")
        .with("aux_point", "1.5,0.1");
    let mut table = Table::new(meta, &["h", "rho_diam", "cap", "err_est", "status"]);
    let mut flagged = 0;
    let rows = if samples == SQUARE_DIAMETER_SAMPLES {
        experiments::square_table(h_list, n)?
    } else {
        for &h in h_list {
            experiments::centered_square(h)?;
        }
        let map = if h_list.is_empty() {
            None
        } else {
            Some(experiments::notched_map(n)?)
        };
        h_list
            .iter()
            .map(|&h| experiments::SquareRow {
                h,
                hyp_diameter: experiments::centered_square(h)
                    .and_then(|e| hyp_diameter(map.as_ref().expect("map built for non-empty list"), &e, samples)),
                capacity: experiments::notched_capacity(h, n),
            })
            .collect()
    };
    for row in rows {
        let diam_status = match &row.hyp_diameter {
            Ok(_) => ("ok".to_string(), false),
            Err(e) => (format!("error: {e}"), true),
        };
        let (status, bad) = join_status(vec![diam_status, capacity_status(&row.capacity, cfg.tol)]);
        flagged += usize::from(bad);
        table.push(vec![
            row.h.into(),
            row.hyp_diameter.as_ref().ok().copied().into(),
            value_cell(&row.capacity),
            err_cell(&row.capacity),
            status,
        ]);
    }
    Ok(Report { table, flagged })
}

fn cmd_quotients(cfg: &RunConfig, t_min: f64, t_max: f64, steps: usize, closed_form_only: bool) -> Result<Report> {
    let n = cfg.n.unwrap_or(REULEAUX_NODES);
    let solve_n = (!closed_form_only).then_some(n);
    let meta = Meta::new("quotients", solve_n, cfg.tol)
        .with("t_min", t_min)
        .with("t_max", t_max)
        .with("steps", steps);
    let mut table = Table::new(
        meta,
        &[
            "t",
            "b2_over_b1",
            "cap_hr_tri_over_b1",
            "one",
            "cap_er_tri_over_b1",
            "two_over_sqrt3",
            "status",
        ],
    );
    let mut flagged = 0;
    for row in experiments::quotients(t_min, t_max, steps, solve_n)? {
        let status = |r: &Result<f64>| match r {
            Err(e) if !closed_form_only => (format!("error: {e}"), true),
            _ => ("ok".to_string(), false),
        };
        let (cell, bad) = join_status(vec![
            status(&row.hyp_reuleaux_over_disk),
            status(&row.euc_reuleaux_over_disk),
        ]);
        flagged += usize::from(bad);
        table.push(vec![
            row.t.into(),
            row.jung_over_disk.into(),
            row.hyp_reuleaux_over_disk.as_ref().ok().copied().into(),
            1.0.into(),
            row.euc_reuleaux_over_disk.as_ref().ok().copied().into(),
            experiments::jung_quotient_limit().into(),
            cell,
        ]);
    }
    Ok(Report { table, flagged })
}

fn cmd_bounds(cfg: &RunConfig, t: f64, dims: &[u32]) -> Result<Report> {
    let rep = BoundsReport::new(t, dims)?;
    let meta = Meta::new("bounds", None, cfg.tol)
        .with("dims", dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","));
    let mut cols: Vec<String> = ["t", "cap_seg", "b1", "b2", "jung_radius_2d"]
        .map(String::from)
        .to_vec();
    let mut row: Vec<Cell> = vec![
        rep.t.into(),
        rep.cap_seg.into(),
        rep.b1.into(),
        rep.b2.into(),
        rep.jung_radius_2d.into(),
    ];
    for d in &rep.dimensions {
        cols.push(format!("jung_radius_n{}", d.n));
        cols.push(format!("cap_upper_n{}", d.n));
        row.push(d.jung_radius.into());
        row.push(d.cap_upper.into());
    }
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut table = Table::new(meta, &col_refs);
    table.push(row);
    Ok(Report { table, flagged: 0 })
}

fn cmd_cap(cfg: &RunConfig, d: &DomainArgs, s: &ShapeArgs, alpha: Option<Point>, z2: Option<Point>) -> Result<Report> {
    let n = cfg.n.unwrap_or(REULEAUX_NODES);
    let g = build_domain(d)?;
    let shape = build_shape(s)?;
    let c = match (alpha, z2) {
        (None, None) => Condenser::new(g, shape.boundary.clone())?,
        (a, z) => {
            let base = Condenser::new(g.clone(), shape.boundary.clone());
            let (da, dz) = match &base {
                Ok(c) => (c.aux_domain_point(), c.aux_inner_point()),
                Err(_) => (Point::new(0.0, 0.0), shape.boundary.centroid()),
            };
            Condenser::with_aux_points(g, shape.boundary.clone(), a.unwrap_or(da), z.unwrap_or(dz))?
        }
    };
    let t = match (d.domain, shape.t) {
        (DomainKind::UnitDisk, Some(t)) => Some(t),
        (DomainKind::UnitDisk, None) => Some(hyp_diameter_points(&shape.boundary.sample(DIAMETER_SAMPLES))?),
        _ => None,
    };
    let result = CapacitySolver::default().estimate(&c, n);
    let (status, bad) = capacity_status(&result, cfg.tol);
    let record = CapacityRecord {
        shape: shape.name.clone(),
        params: shape.params.clone(),
        t,
        cap: result.as_ref().ok().map(|r| r.value),
        err_est: result.as_ref().ok().map(|r| r.error_estimate),
        n_nodes: n,
    };
    let meta = Meta::new("cap", Some(n), cfg.tol)
        .with("domain", domain_name(d))
        .with("alpha", fmt_point(c.aux_domain_point()))
        .with("z2", fmt_point(c.aux_inner_point()));
    let mut table = Table::new(meta, &["shape", "params", "t", "cap", "err_est", "n_nodes", "status"]);
    table.push(vec![
        record.shape.clone().into(),
        Cell::Json(serde_json::to_value(&record.params)?),
        record.t.into(),
        record.cap.into(),
        record.err_est.into(),
        record.n_nodes.into(),
        status.into(),
    ]);
    if let Err(e) = &result {
        if !matches!(e, Error::UnderResolved { .. }) {
            return Err(result.unwrap_err());
        }
    }
    Ok(Report {
        table,
        flagged: usize::from(bad),
    })
}

fn fmt_point(z: Point) -> String {
    format!("{},{}", z.re, z.im)
}

fn cmd_hypdiam(cfg: &RunConfig, d: &DomainArgs, s: &ShapeArgs, alpha: Option<Point>, samples: usize) -> Result<Report> {
    let g = build_domain(d)?;
    let shape = build_shape(s)?;
    let base = alpha.unwrap_or_else(|| default_base_point(d, &g));
    let (value, n) = match d.domain {
        // the unit disk needs no numerical map
        DomainKind::UnitDisk => {
            let pts = shape.boundary.sample(samples);
            if samples < crate::conformal::MIN_DIAMETER_SAMPLES {
                return Err(domain(format!(
                    "need at least {} samples",
                    crate::conformal::MIN_DIAMETER_SAMPLES
                )));
            }
            (hyp_diameter_points(&pts)?, None)
        }
        _ => {
            let n = cfg.n.unwrap_or(experiments::NOTCHED_NODES);
            let map = riemann_map(&g, base, n)?;
            (hyp_diameter(&map, &shape.boundary, samples)?, Some(n))
        }
    };
    let meta = Meta::new("hypdiam", n, cfg.tol)
        .with("domain", domain_name(d))
        .with("base_point", fmt_point(base))
        .with("samples", samples);
    let mut table = Table::new(meta, &["shape", "params", "rho_diam"]);
    table.push(vec![
        shape.name.into(),
        Cell::Json(serde_json::to_value(&shape.params)?),
        value.into(),
    ]);
    Ok(Report { table, flagged: 0 })
}

fn cmd_shape(cfg: &RunConfig, s: &ShapeArgs, points: usize) -> Result<Report> {
    let shape = build_shape(s)?;
    let b = &shape.boundary;
    let mut meta = Meta::new("shape", None, cfg.tol)
        .with("type", &shape.name)
        .with("points", points);
    for (k, v) in &shape.params {
        meta = meta.with(k, v);
    }
    if let Some(t) = shape.t {
        meta = meta.with("hyp_diameter", t);
    }
    let arcs = b.arcs();
    if points < arcs.len() {
        return Err(domain(format!("need at least one point per arc ({} arcs)", arcs.len())));
    }
    let mut table = Table::new(meta, &["arc_index", "t_param", "x", "y"]);
    let base = points / arcs.len();
    let extra = points % arcs.len();
    for (k, a) in arcs.iter().enumerate() {
        let m = base + usize::from(k < extra);
        for j in 0..m {
            let u = j as f64 / m as f64;
            let z = a.curve.point(u);
            table.push(vec![k.into(), u.into(), z.re.into(), z.im.into()]);
        }
    }
    Ok(Report { table, flagged: 0 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_hypfield(
    cfg: &RunConfig,
    d: &DomainArgs,
    alpha: Option<Point>,
    nx: usize,
    ny: usize,
    x_range: Option<Point>,
    y_range: Option<Point>,
) -> Result<Report> {
    let g = build_domain(d)?;
    let base = alpha.unwrap_or_else(|| default_base_point(d, &g));
    let n = cfg.n.unwrap_or(experiments::NOTCHED_NODES);
    let map = riemann_map(&g, base, n)?;
    let poly = g.polyline();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for z in poly {
        x0 = x0.min(z.re);
        x1 = x1.max(z.re);
        y0 = y0.min(z.im);
        y1 = y1.max(z.im);
    }
    let xr = x_range.map_or((x0, x1), |p| (p.re, p.im));
    let yr = y_range.map_or((y0, y1), |p| (p.re, p.im));
    let field = hyp_field(&map, xr, yr, nx, ny)?;
    let meta = Meta::new("hypfield", Some(n), cfg.tol)
        .with("domain", domain_name(d))
        .with("base_point", fmt_point(base))
        .with("nx", nx)
        .with("ny", ny);
    let mut table = Table::new(meta, &["x", "y", "rho"]);
    for f in field {
        table.push(vec![f.x.into(), f.y.into(), f.rho.into()]);
    }
    Ok(Report { table, flagged: 0 })
}

fn cmd_qc_bound(cfg: &RunConfig, k: f64, t: f64) -> Result<Report> {
    let b = qc_diameter_bound(k, t)?;
    let meta = Meta::new("qc-bound", None, cfg.tol);
    let mut table = Table::new(meta, &["K", "t", "bound", "vacuous"]);
    table.push(vec![k.into(), t.into(), b.value.into(), b.vacuous.to_string().into()]);
    Ok(Report { table, flagged: 0 })
}

/// Validates the configuration before any computation.
pub fn validate(cfg: &RunConfig) -> Result<()> {
    if !(cfg.tol > 0.0 && cfg.tol.is_finite()) {
        return Err(domain(format!("--tol must be positive, got {}", cfg.tol)));
    }
    if let Some(n) = cfg.n {
        if n % 2 != 0 || n < 2 * crate::mesh::MIN_NODES {
            return Err(domain(format!(
                "--n must be even and at least {}, got {n}",
                2 * crate::mesh::MIN_NODES
            )));
        }
    }
    Ok(())
}

/// Executes a parsed configuration.
pub fn execute(cfg: &RunConfig) -> Result<Report> {
    validate(cfg)?;
    match &cfg.command {
        Command::Table2 { r } => cmd_table2(cfg, r.as_ref().map_or(&REULEAUX_RADII[..], |l| &l.0)),
        Command::Table1 { h, samples } => {
            cmd_table1(cfg, h.as_ref().map_or(&SQUARE_HALF_SIDES[..], |l| &l.0), *samples)
        }
        Command::Quotients {
            t_min,
            t_max,
            steps,
            closed_form_only,
        } => cmd_quotients(cfg, *t_min, *t_max, *steps, *closed_form_only),
        Command::Bounds { t, dims } => cmd_bounds(cfg, *t, dims),
        Command::Cap { domain, set, alpha, z2 } => cmd_cap(cfg, domain, set, *alpha, *z2),
        Command::Hypdiam {
            domain,
            set,
            alpha,
            samples,
        } => cmd_hypdiam(cfg, domain, set, *alpha, *samples),
        Command::Shape { set, points } => cmd_shape(cfg, set, *points),
        Command::Hypfield {
            domain,
            alpha,
            nx,
            ny,
            x_range,
            y_range,
        } => cmd_hypfield(cfg, domain, *alpha, *nx, *ny, *x_range, *y_range),
        Command::QcBound { k, t } => cmd_qc_bound(cfg, *k, *t),
    }
}

/// Parses `args`, runs the command and writes the table to `--out` or
/// `stdout`. Diagnostics go to `stderr`. Returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() {
                ExitStatus::HardFailure
            } else {
                let _ = write!(stdout, "{e}");
                ExitStatus::Success
            };
        }
    };
    let report = match execute(&cfg) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return ExitStatus::HardFailure;
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::File::create(path)
            .map_err(Error::from)
            .and_then(|f| report.table.write(cfg.format, std::io::BufWriter::new(f))),
        None => report.table.write(cfg.format, &mut *stdout),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return ExitStatus::HardFailure;
    }
    if report.flagged > 0 {
        let _ = writeln!(stderr, "{} row(s) flagged; see the status column", report.flagged);
        ExitStatus::Partial
    } else {
        ExitStatus::Success
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (ExitStatus, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hypcap").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn point_parsing() {
        assert_eq!(parse_point("0.5, -1").unwrap(), Point::new(0.5, -1.0));
        assert!(parse_point("0.5").is_err());
        assert!(parse_point("a,1").is_err());
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("").unwrap(), ValueList(vec![]));
        assert_eq!(parse_list("0.1, 0.2").unwrap(), ValueList(vec![0.1, 0.2]));
        assert!(parse_list("0.1,,0.2").is_err());
    }

    #[test]
    fn bad_flags_are_hard_failures() {
        let (code, _, err) = run_str(&["bounds"]);
        assert_eq!(code, ExitStatus::HardFailure);
        assert!(err.contains("--t"));
        let (code, _, _) = run_str(&["bounds", "--t", "-1"]);
        assert_eq!(code, ExitStatus::HardFailure);
        let (code, _, _) = run_str(&["table2", "--n", "7"]);
        assert_eq!(code, ExitStatus::HardFailure);
        let (code, _, _) = run_str(&["nonsense"]);
        assert_eq!(code, ExitStatus::HardFailure);
    }

    #[test]
    fn help_succeeds() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, ExitStatus::Success);
        assert!(out.contains("table2"));
    }

    #[test]
    fn qc_bound_row() {
        let (code, out, _) = run_str(&["qc-bound", "--K", "1", "--t", "1e-6"]);
        assert_eq!(code, ExitStatus::Success);
        let last = out.lines().last().unwrap();
        assert!(last.ends_with(",false"), "{last}");
    }
}
