//! Capacity of a condenser `(G, E)` whose ring domain `D = G ∖ E` is bounded
//! by two piecewise smooth Jordan curves.
//!
//! The potential `u` (0 on the outer curve `Γ₁`, 1 on the inner curve `Γ₂`)
//! is written as
//!
//! ```text
//! u(z) = Re F(z) + A·log|z − z₂|,   F(z) = (1/2πi) ∮_{∂D} μ(ζ) dζ / (ζ − z),
//! ```
//!
//! with a real density `μ` and `z₂` inside `E`. `Re F` is the double-layer
//! potential of `μ`, so the boundary conditions give a second-kind equation
//! `½μ + Kμ + A·log|ζ − z₂| = g`. The constant density on `Γ₂` spans the null
//! space of `½I + K`; it is removed by requiring `∫_{Γ₂} μ ds = 0`. `Re F`
//! carries no flux, so the flux of `u` through any curve separating the
//! boundary components is that of the logarithm and
//! `cap(G, E) = ∫_D |∇u|² = −2πA`.
//!
//! The equation is discretised by the trapezoidal Nyström method on graded
//! nodes and solved by dense LU factorisation.

use std::f64::consts::TAU;

use faer::prelude::*;
use faer::Mat;
use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::JordanBoundary;
use crate::error::{domain, geometry, Result};
use crate::mesh::{discretize_with, DiscretizedBoundary, DEFAULT_GRADING_ORDER, MIN_NODES};
use crate::{Error, Point};

/// Relative error estimate above which a result is rejected as under-resolved.
pub const MAX_RELATIVE_ERROR: f64 = 0.1;

/// A condenser `(G, E)`: the outer boundary `∂G` (counterclockwise), the inner
/// boundary `∂E` (clockwise) and two auxiliary points.
#[derive(Debug, Clone)]
pub struct Condenser {
    outer: JordanBoundary,
    inner: JordanBoundary,
    aux_domain_point: Point,
    aux_inner_point: Point,
}

impl Condenser {
    /// Builds a condenser with default auxiliary points: `z₂` is
    /// [`JordanBoundary::interior_point`] of `E` (the centroid for convex
    /// sets) and `α` lies halfway between `∂E` and `∂G` on the horizontal ray
    /// from `z₂`. Orientations are normalised.
    pub fn new(outer: JordanBoundary, inner: JordanBoundary) -> Result<Self> {
        let inner_cw = inner.oriented(false);
        let z2 = inner_cw.interior_point();
        let outer_ccw = outer.oriented(true);
        let alpha = default_domain_point(&outer_ccw, &inner_cw, z2)?;
        Self::with_aux_points(outer_ccw, inner_cw, alpha, z2)
    }

    /// Builds a condenser with explicit auxiliary points `α ∈ D` and `z₂ ∈ E`.
    pub fn with_aux_points(outer: JordanBoundary, inner: JordanBoundary, alpha: Point, z2: Point) -> Result<Self> {
        let outer = outer.oriented(true);
        let inner = inner.oriented(false);
        if let Some(p) = inner.polyline().iter().find(|&&p| !outer.encloses(p)) {
            return Err(geometry(format!(
                "inner boundary point {p} is not inside the outer boundary"
            )));
        }
        if let Some(p) = outer.polyline().iter().find(|&&p| inner.encloses(p)) {
            return Err(geometry(format!(
                "outer boundary point {p} lies inside the inner boundary"
            )));
        }
        if !inner.encloses(z2) {
            return Err(geometry(format!("auxiliary point z2 = {z2} is not inside E")));
        }
        if !outer.encloses(alpha) || inner.encloses(alpha) {
            return Err(geometry(format!(
                "auxiliary point alpha = {alpha} is not in the ring domain"
            )));
        }
        Ok(Self {
            outer,
            inner,
            aux_domain_point: alpha,
            aux_inner_point: z2,
        })
    }

    pub fn outer(&self) -> &JordanBoundary {
        &self.outer
    }

    pub fn inner(&self) -> &JordanBoundary {
        &self.inner
    }

    pub fn aux_domain_point(&self) -> Point {
        self.aux_domain_point
    }

    pub fn aux_inner_point(&self) -> Point {
        self.aux_inner_point
    }
}

fn ray_crossings(b: &JordanBoundary, from: Point) -> Vec<f64> {
    let p = b.polyline();
    let n = p.len();
    let mut xs = Vec::new();
    for i in 0..n {
        let (a, c) = (p[i], p[(i + 1) % n]);
        if (a.im > from.im) != (c.im > from.im) {
            let x = a.re + (from.im - a.im) * (c.re - a.re) / (c.im - a.im);
            if x > from.re {
                xs.push(x);
            }
        }
    }
    xs
}

fn default_domain_point(outer: &JordanBoundary, inner: &JordanBoundary, z2: Point) -> Result<Point> {
    let exit = ray_crossings(inner, z2).into_iter().fold(f64::NEG_INFINITY, f64::max);
    let hit = ray_crossings(outer, z2)
        .into_iter()
        .filter(|&x| x > exit)
        .fold(f64::INFINITY, f64::min);
    if !(exit.is_finite() && hit.is_finite()) {
        return Err(geometry("could not place a default auxiliary point; supply one"));
    }
    Ok(Point::new(0.5 * (exit + hit), z2.im))
}

/// A computed capacity with its a-posteriori error estimate
/// `|cap(n) − cap(n/2)|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CapacityResult {
    pub value: f64,
    pub error_estimate: f64,
    /// Nodes per boundary component.
    pub n_nodes: usize,
}

impl CapacityResult {
    pub fn relative_error(&self) -> f64 {
        self.error_estimate / self.value
    }
}

/// Solver settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacitySolver {
    pub grading_order: u32,
}

impl Default for CapacitySolver {
    fn default() -> Self {
        Self {
            grading_order: DEFAULT_GRADING_ORDER,
        }
    }
}

impl CapacitySolver {
    /// One Nyström solve with `n` nodes on each boundary component.
    pub fn solve(&self, c: &Condenser, n: usize) -> Result<f64> {
        let outer = discretize_with(&c.outer, n, self.grading_order)?;
        let inner = discretize_with(&c.inner, n, self.grading_order)?;
        solve_ring(&outer, &inner, c.aux_inner_point)
    }

    /// Capacity at `n` with the error estimate from a solve at `n/2`.
    /// Fails with [`Error::UnderResolved`] when the estimate exceeds
    /// [`MAX_RELATIVE_ERROR`] of the value.
    pub fn capacity(&self, c: &Condenser, n: usize) -> Result<CapacityResult> {
        let result = self.estimate(c, n)?;
        if result.relative_error() > MAX_RELATIVE_ERROR {
            return Err(Error::UnderResolved {
                value: result.value,
                error_estimate: result.error_estimate,
                n,
            });
        }
        Ok(result)
    }

    /// Like [`capacity`](Self::capacity) but never rejects the result.
    pub fn estimate(&self, c: &Condenser, n: usize) -> Result<CapacityResult> {
        let coarse = coarse_count(n)?;
        let value = self.solve(c, n)?;
        let rough = self.solve(c, coarse)?;
        Ok(CapacityResult {
            value,
            error_estimate: (value - rough).abs(),
            n_nodes: n,
        })
    }

    /// Doubles `n` (starting from `n0`) until the relative error estimate is
    /// at most `rel_tol` or `n_max` is exceeded.
    pub fn capacity_adaptive(&self, c: &Condenser, n0: usize, rel_tol: f64, n_max: usize) -> Result<CapacityResult> {
        let mut n = n0;
        let mut rough = self.solve(c, coarse_count(n)?)?;
        loop {
            let value = self.solve(c, n)?;
            let result = CapacityResult {
                value,
                error_estimate: (value - rough).abs(),
                n_nodes: n,
            };
            if result.relative_error() <= rel_tol {
                return Ok(result);
            }
            if 2 * n > n_max {
                return Err(Error::UnderResolved {
                    value,
                    error_estimate: result.error_estimate,
                    n,
                });
            }
            rough = value;
            n *= 2;
        }
    }
}

fn coarse_count(n: usize) -> Result<usize> {
    let half = n / 2;
    let coarse = half + half % 2;
    if coarse < MIN_NODES {
        return Err(domain(format!(
            "n = {n} is too small for an error estimate; need n/2 >= {MIN_NODES}"
        )));
    }
    Ok(coarse)
}

/// Capacity with the default solver settings.
pub fn capacity(c: &Condenser, n: usize) -> Result<CapacityResult> {
    CapacitySolver::default().capacity(c, n)
}

/// Independent capacity computations for a parametrised family of condensers,
/// run in parallel; results are returned in input order and failures do not
/// stop the sweep.
pub fn capacity_sweep<F>(family: F, params: &[f64], n: usize) -> Vec<Result<CapacityResult>>
where
    F: Fn(f64) -> Result<Condenser> + Sync,
{
    params
        .par_iter()
        .map(|&p| family(p).and_then(|c| capacity(&c, n)))
        .collect()
}

fn solve_ring(outer: &DiscretizedBoundary, inner: &DiscretizedBoundary, z2: Point) -> Result<f64> {
    let n1 = outer.n;
    let n2 = inner.n;
    let m = n1 + n2;
    let h1 = outer.weight();
    let h2 = inner.weight();

    let node = |i: usize| if i < n1 { outer.nodes[i] } else { inner.nodes[i - n1] };
    let deriv = |j: usize| if j < n1 { outer.derivs[j] } else { inner.derivs[j - n1] };
    let weight = |j: usize| if j < n1 { h1 } else { h2 };

    let a = Mat::<f64>::from_fn(m + 1, m + 1, |i, j| {
        if i == m {
            // ∫_{Γ₂} μ ds = 0
            if j >= n1 && j < m {
                h2 * inner.derivs[j - n1].norm()
            } else {
                0.0
            }
        } else if j == m {
            (node(i) - z2).norm().ln()
        } else if i == j {
            let diag = if i < n1 {
                outer.kernel(i, i)
            } else {
                inner.kernel(i - n1, i - n1)
            };
            0.5 + weight(j) * diag
        } else {
            let d = deriv(j);
            if d.re == 0.0 && d.im == 0.0 {
                0.0
            } else {
                weight(j) * (d / (node(j) - node(i))).im / TAU
            }
        }
    });
    let rhs = Mat::<f64>::from_fn(m + 1, 1, |i, _| if i >= n1 && i < m { 1.0 } else { 0.0 });
    let sol = a.partial_piv_lu().solve(&rhs);
    let coef = sol[(m, 0)];
    let cap = -TAU * coef;
    if !cap.is_finite() || (0..m).any(|i| !sol[(i, 0)].is_finite()) {
        return Err(Error::Solver(
            "non-finite solution of the boundary integral system".into(),
        ));
    }
    if cap <= 0.0 {
        return Err(Error::Solver(format!(
            "non-positive capacity {cap}; discretisation is unreliable"
        )));
    }
    Ok(cap)
}
