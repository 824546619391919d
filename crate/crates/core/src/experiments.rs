//! Parameter sweeps behind the comparison tables: capacities of Reuleaux
//! triangles, disks and segments in the unit disk against their hyperbolic
//! diameter, and the hyperbolic diameter and capacity of squares in a notched
//! rectangle.
//!
//! Rows are computed in parallel and returned in input order. Per-row solver
//! failures are kept in the row.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::bounds::{b1, b2, cap_seg};
use crate::capacity::{CapacityResult, CapacitySolver, Condenser};
use crate::conformal::{hyp_diameter, riemann_map, RiemannMap};
use crate::error::{domain, Result};
use crate::shapes::{
    self, euc_reuleaux_with_hyp_diameter, hyp_reuleaux, reuleaux_radius_for_diameter, reuleaux_vertex_distance,
};
use crate::Point;

/// Circumradii of the Reuleaux comparison table.
pub const REULEAUX_RADII: [f64; 10] = [0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95];

/// Half sides of the squares in the notched-rectangle table.
pub const SQUARE_HALF_SIDES: [f64; 5] = [0.1, 0.2, 0.3, 0.4, 0.45];

/// Nodes per boundary for Reuleaux condensers (a multiple of 3 so that each
/// arc gets the same number of nodes).
pub const REULEAUX_NODES: usize = 3 * 256;

/// Nodes for the notched-rectangle computations.
pub const NOTCHED_NODES: usize = 2048;

/// Boundary samples per square for the hyperbolic diameter.
pub const SQUARE_DIAMETER_SAMPLES: usize = 1024;

/// Centre of the squares and base point of the Riemann map of the notched
/// rectangle.
pub const NOTCHED_CENTER: Point = Point::new(0.5, 0.5);

/// Auxiliary point in the ring domain for the notched-rectangle condensers.
pub const NOTCHED_AUX_POINT: Point = Point::new(1.5, 0.1);

fn check_unit_interval(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0 && v < 1.0) {
        return Err(domain(format!("{name} must lie in (0, 1), got {v}")));
    }
    Ok(())
}

/// Capacity of `(𝔹², E)` for an inner boundary `e` with `z₂ = 0`, using the
/// auxiliary point `0.4 + 0.6r` when it lies in the ring domain.
fn disk_condenser(e: &crate::boundary::JordanBoundary, r: f64) -> Result<Condenser> {
    let outer = shapes::unit_circle();
    Condenser::with_aux_points(
        outer.clone(),
        e.clone(),
        Point::new(0.4 + 0.6 * r, 0.0),
        Point::new(0.0, 0.0),
    )
    .or_else(|_| Condenser::new(outer, e.clone()))
}

/// Capacity of `(𝔹², T)` for the hyperbolic Reuleaux triangle with
/// circumradius `r`.
pub fn cap_hyp_reuleaux(r: f64, n: usize) -> Result<CapacityResult> {
    let t = hyp_reuleaux(r)?;
    CapacitySolver::default().estimate(&disk_condenser(&t.boundary, r)?, n)
}

/// Capacity of `(𝔹², T)` for the centred Euclidean Reuleaux triangle of
/// hyperbolic diameter `t`.
pub fn cap_euc_reuleaux(t: f64, n: usize) -> Result<CapacityResult> {
    let e = euc_reuleaux_with_hyp_diameter(t)?;
    CapacitySolver::default().estimate(&disk_condenser(&e.boundary, e.circumradius)?, n)
}

/// One row of the Reuleaux comparison table.
#[derive(Debug)]
pub struct ReuleauxRow {
    pub r: f64,
    /// Hyperbolic diameter of the Reuleaux triangle.
    pub t: f64,
    pub cap_seg: f64,
    pub cap_euc_reuleaux: Result<CapacityResult>,
    /// Capacity of the hyperbolic disk of diameter `t`, which is the lower
    /// bound `b₁(t)`.
    pub cap_disk: f64,
    pub cap_hyp_reuleaux: Result<CapacityResult>,
    /// Upper bound `b₂(t)` from the Jung radius.
    pub cap_jung: f64,
}

/// Reuleaux comparison table for the circumradii `r_list`.
pub fn reuleaux_table(r_list: &[f64], n: usize) -> Result<Vec<ReuleauxRow>> {
    for &r in r_list {
        check_unit_interval("r", r)?;
    }
    r_list
        .par_iter()
        .map(|&r| {
            let t = reuleaux_vertex_distance(r);
            Ok(ReuleauxRow {
                r,
                t,
                cap_seg: cap_seg(t)?,
                cap_euc_reuleaux: cap_euc_reuleaux(t, n),
                cap_disk: b1(t)?,
                cap_hyp_reuleaux: cap_hyp_reuleaux(r, n),
                cap_jung: b2(t)?,
            })
        })
        .collect()
}

/// One row of the notched-rectangle table.
#[derive(Debug)]
pub struct SquareRow {
    pub h: f64,
    pub hyp_diameter: Result<f64>,
    pub capacity: Result<CapacityResult>,
}

/// The square with vertices `0.5 ± h + (0.5 ± h)i`.
pub fn centered_square(h: f64) -> Result<crate::boundary::JordanBoundary> {
    if !(h > 0.0 && h < 0.5) {
        return Err(domain(format!("h must lie in (0, 0.5), got {h}")));
    }
    shapes::square(NOTCHED_CENTER, h)
}

/// Riemann map of the notched rectangle with base point `0.5 + 0.5i`.
pub fn notched_map(n: usize) -> Result<RiemannMap> {
    riemann_map(&shapes::notched_rectangle(), NOTCHED_CENTER, n)
}

/// Capacity of `(G, E_h)` for the notched rectangle `G` and the square `E_h`.
pub fn notched_capacity(h: f64, n: usize) -> Result<CapacityResult> {
    let c = Condenser::with_aux_points(
        shapes::notched_rectangle(),
        centered_square(h)?,
        NOTCHED_AUX_POINT,
        NOTCHED_CENTER,
    )?;
    CapacitySolver::default().estimate(&c, n)
}

/// Hyperbolic diameter and capacity of the squares `E_h` in the notched
/// rectangle.
pub fn square_table(h_list: &[f64], n: usize) -> Result<Vec<SquareRow>> {
    for &h in h_list {
        centered_square(h)?;
    }
    if h_list.is_empty() {
        return Ok(Vec::new());
    }
    let map = notched_map(n)?;
    Ok(h_list
        .par_iter()
        .map(|&h| SquareRow {
            h,
            hyp_diameter: centered_square(h).and_then(|e| hyp_diameter(&map, &e, SQUARE_DIAMETER_SAMPLES)),
            capacity: notched_capacity(h, n),
        })
        .collect())
}

/// One row of the quotient sweep: capacities in units of `b₁(t)`.
#[derive(Debug)]
pub struct QuotientRow {
    pub t: f64,
    /// `b₂(t)/b₁(t)`.
    pub jung_over_disk: f64,
    /// `cap(𝔹², hyperbolic Reuleaux)/b₁(t)`.
    pub hyp_reuleaux_over_disk: Result<f64>,
    /// `cap(𝔹², Euclidean Reuleaux)/b₁(t)`.
    pub euc_reuleaux_over_disk: Result<f64>,
}

/// Limit of `b₂(t)/b₁(t)` as `t → ∞`.
pub fn jung_quotient_limit() -> f64 {
    2.0 / 3f64.sqrt()
}

/// Equally spaced grid of `steps` points from `t_min` to `t_max`
/// (`steps = 1` gives `t_min` alone).
pub fn t_grid(t_min: f64, t_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(t_min > 0.0 && t_max > t_min && t_max.is_finite()) {
        return Err(domain(format!("need 0 < t_min < t_max, got [{t_min}, {t_max}]")));
    }
    if steps == 0 {
        return Err(domain("steps must be positive"));
    }
    if steps == 1 {
        return Ok(vec![t_min]);
    }
    Ok((0..steps)
        .map(|k| t_min + (t_max - t_min) * k as f64 / (steps - 1) as f64)
        .collect())
}

/// Quotients of the capacities by `b₁(t)` on a grid of hyperbolic diameters.
/// When `n` is `None` only the closed-form quotient is computed.
pub fn quotients(t_min: f64, t_max: f64, steps: usize, n: Option<usize>) -> Result<Vec<QuotientRow>> {
    let grid = t_grid(t_min, t_max, steps)?;
    grid.par_iter()
        .map(|&t| {
            let low = b1(t)?;
            let (hr, er) = match n {
                Some(n) => (
                    reuleaux_radius_for_diameter(t)
                        .and_then(|r| cap_hyp_reuleaux(r, n))
                        .map(|c| c.value / low),
                    cap_euc_reuleaux(t, n).map(|c| c.value / low),
                ),
                None => {
                    let skipped = || Err(domain("capacity not requested"));
                    (skipped(), skipped())
                }
            };
            Ok(QuotientRow {
                t,
                jung_over_disk: b2(t)? / low,
                hyp_reuleaux_over_disk: hr,
                euc_reuleaux_over_disk: er,
            })
        })
        .collect()
}

/// Exact capacity `2π / log(1/th(R/2))` of a hyperbolic disk of radius `R`
/// in the unit disk.
pub fn hyp_disk_capacity(radius: f64) -> Result<f64> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(domain(format!("radius must be positive, got {radius}")));
    }
    Ok(TAU / (1.0 / (radius / 2.0).tanh()).ln())
}
