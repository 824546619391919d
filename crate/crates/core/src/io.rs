//! Boundary CSV files and tabular CSV/JSON output.
//!
//! Boundary files have the header `arc_index,t_param,x,y`. Rows with the same
//! `arc_index` belong to one arc and are ordered by `t_param`; an arc runs from
//! its first point to the first point of the next arc. An arc with one point
//! is a polygon vertex (straight edge to the next arc); with more points it is
//! an interpolating cubic spline. A file with a single arc of at least three
//! points describes a smooth closed curve (periodic spline).

use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::boundary::{CubicSpline, Curve, JordanBoundary};
use crate::error::{geometry, Result};
use crate::{Error, Point, VERSION};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct BoundaryRow {
    arc_index: usize,
    t_param: f64,
    x: f64,
    y: f64,
}

/// Writes `points` samples of `b` (no header line), distributed over the arcs as evenly as
/// possible, each arc sampled at `u = j/m` for `j < m` so that arc start
/// points (and hence corners) are always included.
pub fn write_boundary_csv<W: Write>(b: &JordanBoundary, points: usize, out: W) -> Result<()> {
    let arcs = b.arcs();
    if points < arcs.len() {
        return Err(geometry(format!(
            "need at least one point per arc ({} arcs), got {points}",
            arcs.len()
        )));
    }
    let mut w = csv::Writer::from_writer(out);
    let base = points / arcs.len();
    let extra = points % arcs.len();
    for (k, a) in arcs.iter().enumerate() {
        let m = base + usize::from(k < extra);
        for j in 0..m {
            let u = j as f64 / m as f64;
            let z = a.curve.point(u);
            w.write_record([k.to_string(), fmt_num(u), fmt_num(z.re), fmt_num(z.im)])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Writes the header line followed by [`write_boundary_csv`].
pub fn write_boundary_csv_with_header<W: Write>(b: &JordanBoundary, points: usize, mut out: W) -> Result<()> {
    writeln!(out, "arc_index,t_param,x,y")?;
    write_boundary_csv(b, points, out)
}

/// Reads a boundary from CSV (see the module documentation).
pub fn read_boundary_csv<R: Read>(input: R) -> Result<JordanBoundary> {
    let mut rd = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut groups: Vec<(usize, Vec<(f64, Point)>)> = Vec::new();
    for row in rd.deserialize() {
        let row: BoundaryRow = row?;
        if !(row.x.is_finite() && row.y.is_finite() && row.t_param.is_finite()) {
            return Err(Error::Parse(format!("non-finite value in arc {}", row.arc_index)));
        }
        let z = Point::new(row.x, row.y);
        match groups.iter_mut().find(|(k, _)| *k == row.arc_index) {
            Some((_, pts)) => pts.push((row.t_param, z)),
            None => groups.push((row.arc_index, vec![(row.t_param, z)])),
        }
    }
    if groups.is_empty() {
        return Err(Error::Parse("boundary file has no rows".into()));
    }
    groups.sort_by_key(|(k, _)| *k);
    let arcs: Vec<Vec<Point>> = groups
        .into_iter()
        .map(|(_, mut pts)| {
            pts.sort_by(|a, b| a.0.total_cmp(&b.0));
            pts.into_iter().map(|(_, z)| z).collect()
        })
        .collect();

    if arcs.len() == 1 {
        let pts = &arcs[0];
        if pts.len() < 3 {
            return Err(geometry("a closed boundary needs at least 3 points"));
        }
        let spline = CubicSpline::periodic(pts)?;
        return JordanBoundary::new(vec![(Curve::Spline(spline), 1.0)]);
    }
    let m = arcs.len();
    let mut curves = Vec::with_capacity(m);
    for k in 0..m {
        let mut pts = arcs[k].clone();
        pts.push(arcs[(k + 1) % m][0]);
        let length: f64 = pts.windows(2).map(|w| (w[1] - w[0]).norm()).sum();
        let curve = if pts.len() == 2 {
            Curve::Segment {
                start: pts[0],
                end: pts[1],
            }
        } else {
            Curve::Spline(CubicSpline::open(&pts)?)
        };
        curves.push((curve, length));
    }
    JordanBoundary::new(curves)
}

/// Reads a boundary from a CSV file.
pub fn read_boundary_file(path: &std::path::Path) -> Result<JordanBoundary> {
    read_boundary_csv(std::fs::File::open(path)?)
}

/// Full-precision (17 significant digit) rendering used in CSV output.
pub fn fmt_num(v: f64) -> String {
    if v.is_nan() {
        String::new()
    } else if v == 0.0 {
        // avoid "-0.0000000000000000e0"
        format!("{:.16e}", 0.0)
    } else {
        format!("{v:.16e}")
    }
}

/// Record of a single capacity computation.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CapacityRecord {
    pub shape: String,
    pub params: BTreeMap<String, f64>,
    /// Hyperbolic diameter of the inner set, when known.
    pub t: Option<f64>,
    pub cap: Option<f64>,
    pub err_est: Option<f64>,
    pub n_nodes: usize,
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Run metadata attached to every output.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Meta {
    pub command: String,
    pub version: String,
    pub n: Option<usize>,
    pub tol: f64,
    /// Further settings, sorted by key.
    pub settings: BTreeMap<String, String>,
}

impl Meta {
    pub fn new(command: &str, n: Option<usize>, tol: f64) -> Self {
        Self {
            command: command.to_string(),
            version: VERSION.to_string(),
            n,
            tol,
            settings: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.settings.insert(key.to_string(), value.to_string());
        self
    }
}

/// A table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    /// Structured value, rendered compactly in CSV.
    Json(serde_json::Value),
    Missing,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Num)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => fmt_num(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Json(v) => v.to_string(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Num(v) if v.is_finite() => serde_json::json!(v),
            Cell::Int(v) => serde_json::json!(v),
            Cell::Text(s) => serde_json::json!(s),
            Cell::Json(v) => v.clone(),
            _ => serde_json::Value::Null,
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Num(v) => Some(*v),
            Cell::Int(v) => Some(*v as f64),
            _ => None,
        }
    }
}

/// A result table with metadata, emitted as CSV (metadata in `#` comment
/// lines) or JSON (`{"meta": …, "records": […]}`).
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub meta: Meta,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(meta: Meta, columns: &[&str]) -> Self {
        Self {
            meta,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Numeric value at `(row, column name)`.
    pub fn value(&self, row: usize, name: &str) -> Option<f64> {
        self.rows.get(row)?.get(self.column(name)?)?.as_f64()
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        let m = &self.meta;
        writeln!(out, "# command={}", m.command)?;
        writeln!(out, "# version={}", m.version)?;
        match m.n {
            Some(n) => writeln!(out, "# n={n}")?,
            // closed-form commands solve nothing
            None => writeln!(out, "# n=none")?,
        }
        writeln!(out, "# tol={}", fmt_num(m.tol))?;
        for (k, v) in &m.settings {
            writeln!(out, "# {k}={v}")?;
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        let records: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> =
                    self.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({ "meta": self.meta, "records": records });
        serde_json::to_writer_pretty(&mut out, &doc)?;
        writeln!(out)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn fmt_has_seventeen_digits() {
        assert_eq!(fmt_num(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_num(-0.0), "0.0000000000000000e0");
        assert_eq!(fmt_num(f64::NAN), "");
        let v = 1.0 / 3.0;
        assert_eq!(fmt_num(v).parse::<f64>().unwrap(), v);
    }

    #[test]
    fn polygon_round_trip() {
        let b = shapes::notched_rectangle();
        let mut buf = Vec::new();
        write_boundary_csv_with_header(&b, 8, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().count(), 9);
        let back = read_boundary_csv(&buf[..]).unwrap();
        assert_eq!(back.arcs().len(), 8);
        for (a, c) in back.arcs().iter().zip(b.arcs()) {
            assert!((a.curve.start() - c.curve.start()).norm() < 1e-15);
            assert!((a.weight - c.weight).abs() < 1e-14);
        }
    }

    #[test]
    fn reuleaux_round_trip_is_close() {
        let t = shapes::hyp_reuleaux(0.5).unwrap();
        let mut buf = Vec::new();
        write_boundary_csv_with_header(&t.boundary, 300, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap().lines().count(), 301);
        let back = read_boundary_csv(&buf[..]).unwrap();
        assert_eq!(back.arcs().len(), 3);
        assert_eq!(back.corners().len(), 3);
        let on_arcs = |z: Point| {
            t.disk_centers()
                .iter()
                .map(|&c| ((z - c).norm() - t.disk_radius).abs())
                .fold(f64::INFINITY, f64::min)
        };
        let worst = back.sample(97).iter().map(|&z| on_arcs(z)).fold(0.0, f64::max);
        assert!(worst < 1e-6, "{worst}");
    }

    #[test]
    fn single_arc_is_periodic() {
        let text = (0..40)
            .map(|k| {
                let z = Point::from_polar(0.5, std::f64::consts::TAU * k as f64 / 40.0);
                format!("0,{k},{},{}", z.re, z.im)
            })
            .collect::<Vec<_>>()
            .join("\n");
        let b = read_boundary_csv(format!("arc_index,t_param,x,y\n{text}\n").as_bytes()).unwrap();
        assert!(!b.has_corners());
        assert!((b.signed_area() - std::f64::consts::PI * 0.25).abs() < 1e-5);
    }

    #[test]
    fn malformed_input() {
        assert!(read_boundary_csv("arc_index,t_param,x,y\n".as_bytes()).is_err());
        assert!(read_boundary_csv("arc_index,t_param,x,y\n0,0,a,1\n".as_bytes()).is_err());
        assert!(read_boundary_csv("arc_index,t_param,x,y\n0,0,0,0\n1,0,1,0\n".as_bytes()).is_err());
    }

    #[test]
    fn table_formats() {
        let mut t = Table::new(
            Meta::new("demo", Some(64), 1e-3).with("shape", "disk"),
            &["r", "cap", "status"],
        );
        t.push(vec![0.5.into(), Cell::Missing, "ok".into()]);
        let mut csv = Vec::new();
        t.write_csv(&mut csv).unwrap();
        let csv = String::from_utf8(csv).unwrap();
        assert!(csv.starts_with("# command=demo\n# version="));
        assert!(csv.contains("# n=64\n"));
        assert!(csv.contains("# shape=disk\n"));
        assert!(csv.ends_with("r,cap,status\n5.0000000000000000e-1,,ok\n"));
        let mut js = Vec::new();
        t.write_json(&mut js).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&js).unwrap();
        assert_eq!(v["meta"]["n"], 64);
        assert_eq!(v["records"][0]["r"], 0.5);
        assert!(v["records"][0]["cap"].is_null());
        assert_eq!(t.value(0, "r"), Some(0.5));
    }
}
