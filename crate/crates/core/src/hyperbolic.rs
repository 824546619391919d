//! Closed-form hyperbolic geometry of the Poincaré unit disk.
//!
//! The metric is `sh²(ρ(x,y)/2) = |x−y|² / ((1−|x|²)(1−|y|²))`. Factors
//! `1−|x|²` are always evaluated as `(1−|x|)(1+|x|)` so that distances stay
//! accurate for points close to the unit circle.

use crate::error::{domain, Result};
use crate::Point;

/// `1 − |z|²` without cancellation near the unit circle.
#[inline]
pub fn one_minus_abs2(z: Point) -> f64 {
    let a = z.norm();
    (1.0 - a) * (1.0 + a)
}

fn check_in_disk(z: Point, what: &str) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain(format!("{what} = {z} is not finite")));
    }
    if z.norm() >= 1.0 {
        return Err(domain(format!("{what} = {z} is not inside the unit disk")));
    }
    Ok(())
}

/// Hyperbolic distance `ρ_{𝔹²}(x, y)` in the unit disk.
pub fn rho_disk(x: Point, y: Point) -> Result<f64> {
    check_in_disk(x, "x")?;
    check_in_disk(y, "y")?;
    Ok(rho_disk_unchecked(x, y))
}

#[inline]
pub(crate) fn rho_disk_unchecked(x: Point, y: Point) -> f64 {
    rho_from_parts(x, one_minus_abs2(x), y, one_minus_abs2(y))
}

/// Distance from precomputed `1 − |·|²` factors; used by the diameter scans.
#[inline]
pub(crate) fn rho_from_parts(x: Point, ox: f64, y: Point, oy: f64) -> f64 {
    2.0 * ((x - y).norm() / (ox * oy).sqrt()).asinh()
}

/// The disk automorphism `T_a(z) = (z − a) / (1 − ā z)`, mapping `a` to 0.
#[inline]
pub fn mobius(a: Point, z: Point) -> Point {
    (z - a) / (1.0 - a.conj() * z)
}

/// Inverse of [`mobius`]: `T_a⁻¹(w) = (w + a) / (1 + ā w)`.
#[inline]
pub fn mobius_inv(a: Point, w: Point) -> Point {
    (w + a) / (1.0 + a.conj() * w)
}

/// A hyperbolic disk `B_ρ(q, R)` together with its Euclidean description `B(j, h)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypBall {
    pub center: Point,
    pub radius: f64,
    pub euclid_center: Point,
    pub euclid_radius: f64,
}

impl HypBall {
    /// Whether `z` lies in the closed ball.
    pub fn contains(&self, z: Point) -> bool {
        (z - self.euclid_center).norm() <= self.euclid_radius
    }
}

/// The hyperbolic ball `B_ρ(q, R)`, which is the Euclidean disk with
/// `t = th(R/2)`, `j = q(1−t²)/(1−|q|²t²)` and `h = (1−|q|²)t/(1−|q|²t²)`.
pub fn hyp_ball(q: Point, radius: f64) -> Result<HypBall> {
    check_in_disk(q, "center")?;
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(domain(format!("hyperbolic radius must be positive, got {radius}")));
    }
    let t = (radius / 2.0).tanh();
    let q2 = q.norm_sqr();
    let denom = 1.0 - q2 * t * t;
    Ok(HypBall {
        center: q,
        radius,
        euclid_center: q * ((1.0 - t) * (1.0 + t) / denom),
        euclid_radius: one_minus_abs2(q) * t / denom,
    })
}

/// `m` points on the hyperbolic geodesic `J[x, y]`, endpoints included, at
/// equal hyperbolic spacing.
pub fn geodesic_segment(x: Point, y: Point, m: usize) -> Result<Vec<Point>> {
    check_in_disk(x, "x")?;
    check_in_disk(y, "y")?;
    if x == y {
        return Err(domain("geodesic endpoints coincide"));
    }
    if m < 2 {
        return Err(domain(format!("need at least two samples, got {m}")));
    }
    // Move x to the origin, where the geodesic is a radius.
    let w = mobius(x, y);
    let dir = w / w.norm();
    let len = rho_disk_unchecked(x, y);
    let mut out = Vec::with_capacity(m);
    out.push(x);
    for k in 1..m - 1 {
        let d = len * k as f64 / (m - 1) as f64;
        out.push(mobius_inv(x, dir * (d / 2.0).tanh()));
    }
    out.push(y);
    Ok(out)
}

/// Hyperbolic diameter `max ρ(x, y)` of a finite point set of the disk, by a
/// full pairwise scan.
pub fn hyp_diameter_points(points: &[Point]) -> Result<f64> {
    if points.is_empty() {
        return Err(domain("hyperbolic diameter of an empty point set"));
    }
    for (i, &p) in points.iter().enumerate() {
        check_in_disk(p, &format!("points[{i}]"))?;
    }
    let factors: Vec<f64> = points.iter().map(|&p| one_minus_abs2(p)).collect();
    Ok(pairwise_max(points, &factors))
}

pub(crate) fn pairwise_max(points: &[Point], factors: &[f64]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = rho_from_parts(points[i], factors[i], points[j], factors[j]);
            if d > best {
                best = d;
            }
        }
    }
    best
}
