//! Corner-graded periodic discretisation of a [`JordanBoundary`].
//!
//! Nodes are the equispaced parameters `s_k = 2π(k−1)/n`. On a smooth
//! boundary they are used as they are. When the boundary has corners every
//! arc is reparametrised by a sigmoidal map of grading order `p`, whose first
//! `p − 1` derivatives vanish at both arc ends, so nodes cluster at corners
//! with density growing like `distance^{-(p−1)/p}`.

use std::f64::consts::{PI, TAU};

use crate::boundary::JordanBoundary;
use crate::error::{domain, Result};
use crate::Point;

/// Default grading order.
pub const DEFAULT_GRADING_ORDER: u32 = 3;

/// Smallest admissible node count.
pub const MIN_NODES: usize = 16;

/// Sigmoidal grading map `w : [0, 2π] → [0, 2π]` of order `p`,
/// `w(s) = 2π v(s)^p / (v(s)^p + v(2π−s)^p)` with
/// `v(s) = (1/p − 1/2)((π−s)/π)³ + (1/p)(s−π)/π + 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grading {
    pub order: u32,
}

impl Grading {
    pub fn new(order: u32) -> Result<Self> {
        if order < 2 {
            return Err(domain(format!("grading order must be at least 2, got {order}")));
        }
        Ok(Self { order })
    }

    fn v(&self, s: f64) -> f64 {
        let p = self.order as f64;
        let x = (PI - s) / PI;
        (1.0 / p - 0.5) * x * x * x + (1.0 / p) * (s - PI) / PI + 0.5
    }

    fn dv(&self, s: f64) -> f64 {
        let p = self.order as f64;
        let x = (PI - s) / PI;
        -3.0 * (1.0 / p - 0.5) * x * x / PI + 1.0 / (p * PI)
    }

    /// `(w(s), w'(s))` for `s ∈ [0, 2π]`.
    pub fn eval(&self, s: f64) -> (f64, f64) {
        let p = self.order as i32;
        let (va, vb) = (self.v(s), self.v(TAU - s));
        let (a, b) = (va.powi(p), vb.powi(p));
        let da = p as f64 * va.powi(p - 1) * self.dv(s);
        let db = -(p as f64) * vb.powi(p - 1) * self.dv(TAU - s);
        let sum = a + b;
        (TAU * a / sum, TAU * (da * b - a * db) / (sum * sum))
    }
}

/// Boundary nodes with derivatives taken with respect to the global
/// parameter, ready for trapezoidal (Nyström) quadrature with weight `2π/n`.
#[derive(Debug, Clone)]
pub struct DiscretizedBoundary {
    pub n: usize,
    /// The equispaced parameters `s_k`.
    pub params: Vec<f64>,
    /// `ζ_k = η(δ(s_k))`.
    pub nodes: Vec<Point>,
    /// `ζ'_k = η'(δ(s_k)) δ'(s_k)`.
    pub derivs: Vec<Point>,
    /// `Im(ζ''_k / ζ'_k)`, the only part of the second derivative the
    /// double-layer kernel needs on its diagonal (zero where `ζ'_k = 0`).
    pub turning: Vec<f64>,
    /// Grading applied, `None` on smooth boundaries.
    pub grading: Option<Grading>,
}

impl DiscretizedBoundary {
    /// Trapezoidal weight `2π/n`.
    pub fn weight(&self) -> f64 {
        TAU / self.n as f64
    }

    /// Double-layer kernel `Im(ζ'_j / (ζ_j − ζ_i)) / (2π)`, with the smooth
    /// limit `Im(ζ''_i/ζ'_i) / (4π)` on the diagonal.
    #[inline]
    pub fn kernel(&self, i: usize, j: usize) -> f64 {
        if i == j {
            self.turning[i] / (4.0 * PI)
        } else {
            (self.derivs[j] / (self.nodes[j] - self.nodes[i])).im / (2.0 * PI)
        }
    }
}

pub fn discretize(b: &JordanBoundary, n: usize) -> Result<DiscretizedBoundary> {
    discretize_with(b, n, DEFAULT_GRADING_ORDER)
}

/// Discretises `b` with `n` nodes; arcs are graded with order `grading_order`
/// when the boundary has corners.
pub fn discretize_with(b: &JordanBoundary, n: usize, grading_order: u32) -> Result<DiscretizedBoundary> {
    if n < MIN_NODES || !n.is_multiple_of(2) {
        return Err(domain(format!(
            "node count must be even and at least {MIN_NODES}, got {n}"
        )));
    }
    let grading = if b.has_corners() {
        Some(Grading::new(grading_order)?)
    } else {
        None
    };
    let breaks = b.breaks();
    let mut out = DiscretizedBoundary {
        n,
        params: Vec::with_capacity(n),
        nodes: Vec::with_capacity(n),
        derivs: Vec::with_capacity(n),
        turning: Vec::with_capacity(n),
        grading,
    };
    for k in 0..n {
        let s = TAU * k as f64 / n as f64;
        let (arc, u_lin) = b.locate(s);
        let span = breaks[arc + 1] - breaks[arc];
        let (u, du) = match grading {
            Some(g) => {
                let (w, dw) = g.eval(TAU * u_lin);
                (w / TAU, dw / span)
            }
            None => (u_lin, 1.0 / span),
        };
        let (z, dz, ddz) = b.arcs()[arc].curve.eval(u);
        out.params.push(s);
        out.nodes.push(z);
        out.derivs.push(dz * du);
        out.turning.push(if du == 0.0 { 0.0 } else { (ddz / dz).im * du });
    }
    Ok(out)
}
