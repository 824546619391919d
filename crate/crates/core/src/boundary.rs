//! Piecewise smooth Jordan curves.
//!
//! A [`JordanBoundary`] is a closed chain of smooth [`Curve`]s. Each curve is
//! parametrised over `u ∈ [0, 1]`, and the boundary as a whole over the global
//! parameter `s ∈ [0, 2π)`: arc `k` occupies `[S_k, S_{k+1})` with length
//! proportional to its weight. Junctions where the tangent direction jumps
//! are recorded as corners.

use std::f64::consts::{PI, TAU};

use faer::prelude::*;
use faer::Mat;

use crate::error::{geometry, Result};
use crate::Point;

/// Tangent-direction jump (radians) above which a junction counts as a corner.
pub const CORNER_ANGLE_TOL: f64 = 1e-7;

/// A smooth parametric arc over `u ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub enum Curve {
    Segment {
        start: Point,
        end: Point,
    },
    /// `center + radius·e^{i(start_angle + u·sweep)}`; negative sweep runs clockwise.
    CircularArc {
        center: Point,
        radius: f64,
        start_angle: f64,
        sweep: f64,
    },
    /// `center + e^{i·rotation}(semi_x cos θ + i semi_y sin θ)`, `θ = start_angle + u·sweep`.
    EllipticArc {
        center: Point,
        semi_x: f64,
        semi_y: f64,
        rotation: f64,
        start_angle: f64,
        sweep: f64,
    },
    Spline(CubicSpline),
}

impl Curve {
    pub fn circle(center: Point, radius: f64) -> Self {
        Curve::CircularArc {
            center,
            radius,
            start_angle: 0.0,
            sweep: TAU,
        }
    }

    pub fn point(&self, u: f64) -> Point {
        self.eval(u).0
    }

    /// Position, first and second derivative with respect to `u`.
    pub fn eval(&self, u: f64) -> (Point, Point, Point) {
        match *self {
            Curve::Segment { start, end } => (start + (end - start) * u, end - start, Point::new(0.0, 0.0)),
            Curve::CircularArc {
                center,
                radius,
                start_angle,
                sweep,
            } => {
                let e = Point::from_polar(radius, start_angle + u * sweep);
                (center + e, Point::i() * e * sweep, -e * (sweep * sweep))
            }
            Curve::EllipticArc {
                center,
                semi_x,
                semi_y,
                rotation,
                start_angle,
                sweep,
            } => {
                let th = start_angle + u * sweep;
                let rot = Point::from_polar(1.0, rotation);
                let (s, c) = th.sin_cos();
                let p = Point::new(semi_x * c, semi_y * s);
                let d = Point::new(-semi_x * s, semi_y * c) * sweep;
                (center + rot * p, rot * d, -rot * p * (sweep * sweep))
            }
            Curve::Spline(ref sp) => sp.eval(u),
        }
    }

    pub fn start(&self) -> Point {
        self.point(0.0)
    }

    pub fn end(&self) -> Point {
        self.point(1.0)
    }

    /// The same arc traversed backwards.
    pub fn reversed(&self) -> Self {
        match self.clone() {
            Curve::Segment { start, end } => Curve::Segment { start: end, end: start },
            Curve::CircularArc {
                center,
                radius,
                start_angle,
                sweep,
            } => Curve::CircularArc {
                center,
                radius,
                start_angle: start_angle + sweep,
                sweep: -sweep,
            },
            Curve::EllipticArc {
                center,
                semi_x,
                semi_y,
                rotation,
                start_angle,
                sweep,
            } => Curve::EllipticArc {
                center,
                semi_x,
                semi_y,
                rotation,
                start_angle: start_angle + sweep,
                sweep: -sweep,
            },
            Curve::Spline(mut sp) => {
                sp.flipped = !sp.flipped;
                Curve::Spline(sp)
            }
        }
    }

    /// Image under the similarity `z ↦ a·z + b`.
    pub fn similarity(&self, a: Point, b: Point) -> Self {
        let (scale, angle) = a.to_polar();
        match self.clone() {
            Curve::Segment { start, end } => Curve::Segment {
                start: a * start + b,
                end: a * end + b,
            },
            Curve::CircularArc {
                center,
                radius,
                start_angle,
                sweep,
            } => Curve::CircularArc {
                center: a * center + b,
                radius: radius * scale,
                start_angle: start_angle + angle,
                sweep,
            },
            Curve::EllipticArc {
                center,
                semi_x,
                semi_y,
                rotation,
                start_angle,
                sweep,
            } => Curve::EllipticArc {
                center: a * center + b,
                semi_x: semi_x * scale,
                semi_y: semi_y * scale,
                rotation: rotation + angle,
                start_angle,
                sweep,
            },
            Curve::Spline(mut sp) => {
                for p in sp.values.iter_mut() {
                    *p = a * *p + b;
                }
                for m in sp.second.iter_mut() {
                    *m *= a;
                }
                Curve::Spline(sp)
            }
        }
    }

    /// Number of chords used when this arc is approximated by a polyline.
    fn polyline_pieces(&self) -> usize {
        match self {
            Curve::Segment { .. } => 1,
            Curve::CircularArc { sweep, .. } | Curve::EllipticArc { sweep, .. } => {
                ((sweep.abs() / TAU * 1024.0).ceil() as usize).max(32)
            }
            Curve::Spline(sp) => (8 * (sp.knots.len() - 1)).max(32),
        }
    }
}

/// Interpolating cubic spline through points, parametrised by normalised
/// chord length. Closed (periodic) or open with not-a-knot end conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicSpline {
    knots: Vec<f64>,
    values: Vec<Point>,
    second: Vec<Point>,
    flipped: bool,
}

impl CubicSpline {
    /// Open spline through `points` (at least 3 distinct consecutive points).
    pub fn open(points: &[Point]) -> Result<Self> {
        if points.len() < 3 {
            return Err(geometry("an open spline needs at least 3 points"));
        }
        let knots = chord_knots(points)?;
        let m = points.len() - 1;
        let h: Vec<f64> = knots.windows(2).map(|w| w[1] - w[0]).collect();
        let mut a = Mat::<f64>::zeros(m + 1, m + 1);
        let mut rhs = Mat::<f64>::zeros(m + 1, 2);
        for i in 1..m {
            a[(i, i - 1)] = h[i - 1];
            a[(i, i)] = 2.0 * (h[i - 1] + h[i]);
            a[(i, i + 1)] = h[i];
            let r = 6.0 * ((points[i + 1] - points[i]) / h[i] - (points[i] - points[i - 1]) / h[i - 1]);
            rhs[(i, 0)] = r.re;
            rhs[(i, 1)] = r.im;
        }
        if m >= 3 {
            // not-a-knot: third derivative continuous at the first and last interior knots
            a[(0, 0)] = h[1];
            a[(0, 1)] = -(h[0] + h[1]);
            a[(0, 2)] = h[0];
            a[(m, m - 2)] = h[m - 1];
            a[(m, m - 1)] = -(h[m - 2] + h[m - 1]);
            a[(m, m)] = h[m - 2];
        } else {
            a[(0, 0)] = 1.0;
            a[(m, m)] = 1.0;
        }
        let sol = a.partial_piv_lu().solve(&rhs);
        let second = (0..=m).map(|i| Point::new(sol[(i, 0)], sol[(i, 1)])).collect();
        Ok(Self {
            knots,
            values: points.to_vec(),
            second,
            flipped: false,
        })
    }

    /// Closed periodic spline through `points`; the first point is not repeated.
    pub fn periodic(points: &[Point]) -> Result<Self> {
        if points.len() < 3 {
            return Err(geometry("a periodic spline needs at least 3 points"));
        }
        let mut closed = points.to_vec();
        closed.push(points[0]);
        let knots = chord_knots(&closed)?;
        let m = points.len();
        let h: Vec<f64> = knots.windows(2).map(|w| w[1] - w[0]).collect();
        let mut a = Mat::<f64>::zeros(m, m);
        let mut rhs = Mat::<f64>::zeros(m, 2);
        for i in 0..m {
            let im = (i + m - 1) % m;
            let ip = (i + 1) % m;
            a[(i, im)] += h[im];
            a[(i, i)] += 2.0 * (h[im] + h[i]);
            a[(i, ip)] += h[i];
            let r = 6.0 * ((closed[i + 1] - closed[i]) / h[i] - (points[i] - points[im]) / h[im]);
            rhs[(i, 0)] = r.re;
            rhs[(i, 1)] = r.im;
        }
        let sol = a.partial_piv_lu().solve(&rhs);
        let mut second: Vec<Point> = (0..m).map(|i| Point::new(sol[(i, 0)], sol[(i, 1)])).collect();
        second.push(second[0]);
        Ok(Self {
            knots,
            values: closed,
            second,
            flipped: false,
        })
    }

    fn eval(&self, u: f64) -> (Point, Point, Point) {
        let (u, sign) = if self.flipped { (1.0 - u, -1.0) } else { (u, 1.0) };
        let m = self.knots.len() - 1;
        let i = match self.knots.binary_search_by(|k| k.partial_cmp(&u).unwrap()) {
            Ok(i) => i.min(m - 1),
            Err(i) => i.clamp(1, m) - 1,
        };
        let h = self.knots[i + 1] - self.knots[i];
        let a = (self.knots[i + 1] - u) / h;
        let b = (u - self.knots[i]) / h;
        let (p0, p1, m0, m1) = (self.values[i], self.values[i + 1], self.second[i], self.second[i + 1]);
        let p = p0 * a + p1 * b + (m0 * (a * a * a - a) + m1 * (b * b * b - b)) * (h * h / 6.0);
        let d = (p1 - p0) / h - m0 * ((3.0 * a * a - 1.0) * h / 6.0) + m1 * ((3.0 * b * b - 1.0) * h / 6.0);
        let dd = m0 * a + m1 * b;
        (p, d * sign, dd)
    }
}

fn chord_knots(points: &[Point]) -> Result<Vec<f64>> {
    let mut knots = Vec::with_capacity(points.len());
    let mut acc = 0.0;
    knots.push(0.0);
    for w in points.windows(2) {
        let d = (w[1] - w[0]).norm();
        if d == 0.0 {
            return Err(geometry("repeated consecutive spline points"));
        }
        acc += d;
        knots.push(acc);
    }
    for k in knots.iter_mut() {
        *k /= acc;
    }
    Ok(knots)
}

/// One arc of a boundary and its share of the global parameter interval.
#[derive(Debug, Clone, PartialEq)]
pub struct Arc {
    pub curve: Curve,
    pub weight: f64,
}

/// A closed, simple, piecewise smooth curve.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanBoundary {
    arcs: Vec<Arc>,
    breaks: Vec<f64>,
    corner_at_start: Vec<bool>,
    polyline: Vec<Point>,
}

impl JordanBoundary {
    /// Builds and validates a boundary from `(curve, weight)` pairs.
    pub fn new(arcs: Vec<(Curve, f64)>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(geometry("a boundary needs at least one arc"));
        }
        if arcs.iter().any(|(_, w)| !(*w > 0.0 && w.is_finite())) {
            return Err(geometry("arc weights must be positive"));
        }
        let arcs: Vec<Arc> = arcs.into_iter().map(|(curve, weight)| Arc { curve, weight }).collect();
        let total: f64 = arcs.iter().map(|a| a.weight).sum();
        let mut breaks = Vec::with_capacity(arcs.len() + 1);
        let mut acc = 0.0;
        breaks.push(0.0);
        for a in &arcs {
            acc += a.weight;
            breaks.push(TAU * acc / total);
        }
        *breaks.last_mut().unwrap() = TAU;

        let scale = arcs
            .iter()
            .flat_map(|a| [a.curve.start(), a.curve.end()])
            .map(|p| p.norm())
            .fold(1.0f64, f64::max);
        let m = arcs.len();
        let mut corner_at_start = vec![false; m];
        for k in 0..m {
            let prev = &arcs[(k + m - 1) % m].curve;
            let cur = &arcs[k].curve;
            if (prev.end() - cur.start()).norm() > 1e-9 * scale {
                return Err(geometry(format!(
                    "arc {} ends at {} but arc {} starts at {}",
                    (k + m - 1) % m,
                    prev.end(),
                    k,
                    cur.start()
                )));
            }
            let t_in = prev.eval(1.0).1;
            let t_out = cur.eval(0.0).1;
            if t_in.norm() == 0.0 || t_out.norm() == 0.0 {
                return Err(geometry(format!("degenerate tangent at the start of arc {k}")));
            }
            let turn = (t_out / t_in).arg();
            if turn.abs() > PI - 1e-6 {
                return Err(geometry(format!("cusp at the start of arc {k}")));
            }
            corner_at_start[k] = turn.abs() > CORNER_ANGLE_TOL;
        }
        for (k, a) in arcs.iter().enumerate() {
            for j in 0..=16 {
                if a.curve.eval(j as f64 / 16.0).1.norm() == 0.0 {
                    return Err(geometry(format!("vanishing derivative on arc {k}")));
                }
            }
        }

        let mut polyline = Vec::new();
        for a in &arcs {
            let pieces = a.curve.polyline_pieces();
            for j in 0..pieces {
                polyline.push(a.curve.point(j as f64 / pieces as f64));
            }
        }
        let b = Self {
            arcs,
            breaks,
            corner_at_start,
            polyline,
        };
        b.check_simple()?;
        Ok(b)
    }

    fn check_simple(&self) -> Result<()> {
        let p = &self.polyline;
        let n = p.len();
        if n < 3 {
            return Err(geometry("boundary polyline has fewer than 3 vertices"));
        }
        for i in 0..n {
            let (a, b) = (p[i], p[(i + 1) % n]);
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (c, d) = (p[j], p[(j + 1) % n]);
                if segments_intersect(a, b, c, d) {
                    return Err(geometry(format!("boundary is self-intersecting near {a}")));
                }
            }
        }
        Ok(())
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Global parameter values `S_0 = 0 < S_1 < … < S_m = 2π` of the arc junctions.
    pub fn breaks(&self) -> &[f64] {
        &self.breaks
    }

    /// Global parameters of the junctions where the tangent is discontinuous.
    pub fn corners(&self) -> Vec<f64> {
        (0..self.arcs.len())
            .filter(|&k| self.corner_at_start[k])
            .map(|k| self.breaks[k])
            .collect()
    }

    pub fn has_corners(&self) -> bool {
        self.corner_at_start.iter().any(|&c| c)
    }

    /// Arc index and local parameter for a global parameter `s`.
    pub fn locate(&self, s: f64) -> (usize, f64) {
        let s = s.rem_euclid(TAU);
        let k = match self.breaks.binary_search_by(|b| b.partial_cmp(&s).unwrap()) {
            Ok(k) => k.min(self.arcs.len() - 1),
            Err(k) => k - 1,
        };
        let u = (s - self.breaks[k]) / (self.breaks[k + 1] - self.breaks[k]);
        (k, u.clamp(0.0, 1.0))
    }

    /// Position at the global parameter `s` (arcs mapped linearly).
    pub fn point(&self, s: f64) -> Point {
        let (k, u) = self.locate(s);
        self.arcs[k].curve.point(u)
    }

    /// `k` points at equally spaced global parameters `2πj/k`. When the arc
    /// weights are equal and `k` is a multiple of the arc count, every
    /// junction is among the samples, and doubling `k` keeps earlier samples.
    pub fn sample(&self, k: usize) -> Vec<Point> {
        (0..k).map(|j| self.point(TAU * j as f64 / k as f64)).collect()
    }

    /// `per_arc` samples on every arc at `u = j/(per_arc − 1)`, endpoints included.
    pub fn sample_arcs(&self, per_arc: usize) -> Vec<(usize, f64, Point)> {
        let mut out = Vec::new();
        for (k, a) in self.arcs.iter().enumerate() {
            for j in 0..per_arc {
                let u = if per_arc == 1 {
                    0.0
                } else {
                    j as f64 / (per_arc - 1) as f64
                };
                out.push((k, u, a.curve.point(u)));
            }
        }
        out
    }

    /// Polyline approximation used for orientation and point location.
    pub fn polyline(&self) -> &[Point] {
        &self.polyline
    }

    /// Enclosed signed area (positive for counterclockwise orientation).
    pub fn signed_area(&self) -> f64 {
        // ½∮ Im(z̄ dz), composite Simpson on each arc
        let mut area = 0.0;
        for a in &self.arcs {
            let m = 256;
            let f = |u: f64| {
                let (z, dz, _) = a.curve.eval(u);
                (z.conj() * dz).im
            };
            let h = 1.0 / m as f64;
            let mut acc = f(0.0) + f(1.0);
            for j in 1..m {
                acc += if j % 2 == 1 { 4.0 } else { 2.0 } * f(j as f64 * h);
            }
            area += acc * h / 3.0;
        }
        0.5 * area
    }

    pub fn is_counterclockwise(&self) -> bool {
        self.signed_area() > 0.0
    }

    /// Winding number of the boundary around `z`.
    pub fn winding_number(&self, z: Point) -> i32 {
        let p = &self.polyline;
        let n = p.len();
        let mut total = 0.0;
        for i in 0..n {
            let a = p[i] - z;
            let b = p[(i + 1) % n] - z;
            total += (b / a).arg();
        }
        (total / TAU).round() as i32
    }

    /// Whether `z` lies in the bounded component of the complement.
    pub fn encloses(&self, z: Point) -> bool {
        self.winding_number(z) != 0
    }

    /// Euclidean distance from `z` to the (polyline approximation of the) curve.
    pub fn distance_to(&self, z: Point) -> f64 {
        let p = &self.polyline;
        let n = p.len();
        (0..n)
            .map(|i| point_segment_distance(z, p[i], p[(i + 1) % n]))
            .fold(f64::INFINITY, f64::min)
    }

    /// Centroid of the enclosed region.
    pub fn centroid(&self) -> Point {
        // polygon centroid of the polyline
        let p = &self.polyline;
        let n = p.len();
        let (mut a, mut c) = (0.0, Point::new(0.0, 0.0));
        for i in 0..n {
            let (u, v) = (p[i], p[(i + 1) % n]);
            let cross = u.re * v.im - v.re * u.im;
            a += cross;
            c += (u + v) * cross;
        }
        c / (3.0 * a)
    }

    /// A point well inside the enclosed region: the centroid when it is
    /// enclosed, otherwise the point of a grid over the bounding box that is
    /// farthest from the curve.
    pub fn interior_point(&self) -> Point {
        let c = self.centroid();
        if self.encloses(c) {
            return c;
        }
        const GRID: usize = 48;
        let (mut lo, mut hi) = (self.polyline[0], self.polyline[0]);
        for z in &self.polyline {
            lo = Point::new(lo.re.min(z.re), lo.im.min(z.im));
            hi = Point::new(hi.re.max(z.re), hi.im.max(z.im));
        }
        let mut best = (c, f64::NEG_INFINITY);
        for i in 0..GRID {
            for j in 0..GRID {
                let z = Point::new(
                    lo.re + (hi.re - lo.re) * (i as f64 + 0.5) / GRID as f64,
                    lo.im + (hi.im - lo.im) * (j as f64 + 0.5) / GRID as f64,
                );
                if self.encloses(z) {
                    let d = self.distance_to(z);
                    if d > best.1 {
                        best = (z, d);
                    }
                }
            }
        }
        best.0
    }

    /// The same curve with opposite orientation.
    pub fn reversed(&self) -> Self {
        let arcs: Vec<(Curve, f64)> = self.arcs.iter().rev().map(|a| (a.curve.reversed(), a.weight)).collect();
        Self::new(arcs).expect("reversal preserves validity")
    }

    /// Image under the similarity `z ↦ a·z + b`.
    pub fn similarity(&self, a: Point, b: Point) -> Result<Self> {
        Self::new(
            self.arcs
                .iter()
                .map(|arc| (arc.curve.similarity(a, b), arc.weight))
                .collect(),
        )
    }

    /// The curve with the requested orientation.
    pub fn oriented(&self, counterclockwise: bool) -> Self {
        if self.is_counterclockwise() == counterclockwise {
            self.clone()
        } else {
            self.reversed()
        }
    }
}

fn cross(a: Point, b: Point) -> f64 {
    a.re * b.im - a.im * b.re
}

fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = cross(b - a, c - a);
    let d2 = cross(b - a, d - a);
    let d3 = cross(d - c, a - c);
    let d4 = cross(d - c, b - c);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    let touches = |p: Point, q: Point, r: Point, o: f64| {
        o == 0.0 && r.re >= p.re.min(q.re) && r.re <= p.re.max(q.re) && r.im >= p.im.min(q.im) && r.im <= p.im.max(q.im)
    };
    touches(a, b, c, d1) || touches(a, b, d, d2) || touches(c, d, a, d3) || touches(c, d, b, d4)
}

pub(crate) fn point_segment_distance(z: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (((z - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(re: f64, im: f64) -> Point {
        Point::new(re, im)
    }

    fn square() -> JordanBoundary {
        let v = [p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)];
        JordanBoundary::new(
            (0..4)
                .map(|k| {
                    (
                        Curve::Segment {
                            start: v[k],
                            end: v[(k + 1) % 4],
                        },
                        1.0,
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn square_basics() {
        let s = square();
        assert_eq!(s.arcs().len(), 4);
        assert_eq!(s.corners().len(), 4);
        assert!((s.signed_area() - 1.0).abs() < 1e-12);
        assert!(s.is_counterclockwise());
        assert_eq!(s.winding_number(p(0.5, 0.5)), 1);
        assert_eq!(s.winding_number(p(1.5, 0.5)), 0);
        assert!((s.centroid() - p(0.5, 0.5)).norm() < 1e-12);
        assert!((s.distance_to(p(0.5, 0.4)) - 0.4).abs() < 1e-12);
        let r = s.reversed();
        assert!(!r.is_counterclockwise());
        assert_eq!(r.winding_number(p(0.5, 0.5)), -1);
    }

    #[test]
    fn circle_is_smooth() {
        let c = JordanBoundary::new(vec![(Curve::circle(p(0.2, 0.1), 0.5), 1.0)]).unwrap();
        assert!(!c.has_corners());
        assert!((c.signed_area() - PI * 0.25).abs() < 1e-12);
        assert!((c.point(PI) - p(-0.3, 0.1)).norm() < 1e-15);
    }

    #[test]
    fn rejects_open_chain() {
        let r = JordanBoundary::new(vec![
            (
                Curve::Segment {
                    start: p(0.0, 0.0),
                    end: p(1.0, 0.0),
                },
                1.0,
            ),
            (
                Curve::Segment {
                    start: p(1.0, 0.0),
                    end: p(0.0, 1.0),
                },
                1.0,
            ),
        ]);
        assert!(r.is_err());
    }

    #[test]
    fn rejects_self_intersection() {
        let v = [p(0.0, 0.0), p(1.0, 1.0), p(1.0, 0.0), p(0.0, 1.0)];
        let bow = JordanBoundary::new(
            (0..4)
                .map(|k| {
                    (
                        Curve::Segment {
                            start: v[k],
                            end: v[(k + 1) % 4],
                        },
                        1.0,
                    )
                })
                .collect(),
        );
        assert!(matches!(bow, Err(crate::Error::Geometry(_))));
    }

    #[test]
    fn rejects_cusp() {
        let v = [p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.0)];
        let r = JordanBoundary::new(
            (0..3)
                .map(|k| {
                    (
                        Curve::Segment {
                            start: v[k],
                            end: v[(k + 1) % 3],
                        },
                        1.0,
                    )
                })
                .collect(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let curves = [
            Curve::CircularArc {
                center: p(0.1, 0.2),
                radius: 0.7,
                start_angle: 0.3,
                sweep: -2.0,
            },
            Curve::EllipticArc {
                center: p(0.0, 0.1),
                semi_x: 2.0,
                semi_y: 0.5,
                rotation: 0.4,
                start_angle: 0.0,
                sweep: 3.0,
            },
            Curve::Spline(
                CubicSpline::open(&[p(0.0, 0.0), p(1.0, 0.5), p(2.0, 0.2), p(3.0, 1.0), p(3.5, 2.0)]).unwrap(),
            ),
        ];
        let h = 1e-5;
        for c in &curves {
            for u in [0.2, 0.45, 0.8] {
                let (_, d, dd) = c.eval(u);
                let fd = (c.point(u + h) - c.point(u - h)) / (2.0 * h);
                let fdd = (c.eval(u + h).1 - c.eval(u - h).1) / (2.0 * h);
                assert!((d - fd).norm() < 1e-7 * (1.0 + d.norm()));
                assert!((dd - fdd).norm() < 1e-5 * (1.0 + dd.norm()));
            }
            let r = c.reversed();
            assert!((r.point(0.3) - c.point(0.7)).norm() < 1e-14);
            assert!((r.eval(0.3).1 + c.eval(0.7).1).norm() < 1e-12);
        }
    }

    #[test]
    fn periodic_spline_reproduces_circle() {
        let pts: Vec<Point> = (0..200)
            .map(|k| Point::from_polar(1.0, TAU * k as f64 / 200.0))
            .collect();
        let sp = CubicSpline::periodic(&pts).unwrap();
        for j in 0..97 {
            let z = sp.eval(j as f64 / 97.0).0;
            assert!((z.norm() - 1.0).abs() < 1e-7);
        }
    }

    #[test]
    fn similarity_moves_arcs() {
        let s = square();
        let a = Point::from_polar(2.0, 0.3);
        let t = s.similarity(a, p(1.0, -1.0)).unwrap();
        for j in 0..16 {
            let u = TAU * j as f64 / 16.0;
            assert!((t.point(u) - (a * s.point(u) + p(1.0, -1.0))).norm() < 1e-14);
        }
    }
}
