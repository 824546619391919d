//! Test bodies: hyperbolic disks, Euclidean and hyperbolic Reuleaux
//! triangles, and polygons.
//!
//! Shapes meant as the compact set `E` of a condenser (disks, Reuleaux
//! triangles) are returned clockwise; domains (circles, polygons) are
//! counterclockwise.

use std::f64::consts::TAU;

use crate::boundary::{Curve, JordanBoundary};
use crate::error::{domain, geometry, Result};
use crate::hyperbolic::hyp_diameter_points;
use crate::{Error, Point};

const SQRT3: f64 = 1.732_050_807_568_877_2;

fn rot(k: usize) -> Point {
    Point::from_polar(1.0, TAU * k as f64 / 3.0)
}

/// Three circular arcs through the vertices `r·e^{2πik/3}`, arc `k` centred at
/// `center_dist·e^{2πik/3}` and joining the two other vertices, traversed
/// counterclockwise around the body.
fn reuleaux_boundary(r: f64, center_dist: f64, radius: f64) -> Result<JordanBoundary> {
    let c0 = Point::new(center_dist, 0.0);
    let v1 = Point::from_polar(r, TAU / 3.0);
    let theta = (v1 - c0).arg();
    let sweep = TAU - 2.0 * theta;
    // counterclockwise body order: v0→v1 (centre 2), v1→v2 (centre 0), v2→v0 (centre 1)
    let arcs = [2usize, 0, 1]
        .iter()
        .map(|&k| {
            (
                Curve::CircularArc {
                    center: c0 * rot(k),
                    radius,
                    start_angle: theta + TAU * k as f64 / 3.0,
                    sweep,
                },
                1.0,
            )
        })
        .collect();
    JordanBoundary::new(arcs)
}

/// Hyperbolic Reuleaux triangle with vertices `r`, `r·e^{2πi/3}`, `r·e^{4πi/3}`:
/// the intersection of the three hyperbolic disks of radius `M` centred at
/// the vertices, `M` being the hyperbolic distance between vertices.
#[derive(Debug, Clone)]
pub struct HypReuleauxTriangle {
    pub r: f64,
    pub vertices: [Point; 3],
    /// Hyperbolic distance between two vertices, which is also the diameter.
    pub vertex_distance: f64,
    /// Distance from the origin to the Euclidean centre of each defining disk.
    pub disk_center_distance: f64,
    /// Euclidean radius of the defining disks.
    pub disk_radius: f64,
    /// Clockwise boundary made of three circular arcs.
    pub boundary: JordanBoundary,
}

impl HypReuleauxTriangle {
    pub fn disk_centers(&self) -> [Point; 3] {
        [0, 1, 2].map(|k| rot(k) * self.disk_center_distance)
    }

    /// Whether `z` belongs to the (closed) triangle.
    pub fn contains(&self, z: Point) -> bool {
        self.disk_centers()
            .iter()
            .all(|&c| (z - c).norm() <= self.disk_radius * (1.0 + 1e-12))
    }
}

/// Vertex hyperbolic distance `2·arsh(r√3/(1−r²))` of the Reuleaux triangle
/// with circumradius `r`.
pub fn reuleaux_vertex_distance(r: f64) -> f64 {
    2.0 * (r * SQRT3 / ((1.0 - r) * (1.0 + r))).asinh()
}

/// Circumradius `r` for which the hyperbolic Reuleaux triangle has diameter `t`.
pub fn reuleaux_radius_for_diameter(t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(domain(format!("hyperbolic diameter must be positive, got {t}")));
    }
    // s r² + √3 r − s = 0 with s = sh(t/2); rationalised positive root
    let s = (t / 2.0).sinh();
    Ok(2.0 * s / (SQRT3 + (3.0 + 4.0 * s * s).sqrt()))
}

pub fn hyp_reuleaux(r: f64) -> Result<HypReuleauxTriangle> {
    if !(r > 0.0 && r < 1.0) {
        return Err(domain(format!("Reuleaux parameter must lie in (0, 1), got {r}")));
    }
    let a = r * SQRT3 / ((1.0 - r) * (1.0 + r));
    let t = a.asinh().tanh();
    let denom = 1.0 - r * r * t * t;
    let y = (1.0 - t) * (1.0 + t) * r / denom;
    let h = (1.0 - r) * (1.0 + r) * t / denom;
    let boundary = reuleaux_boundary(r, y, h)?.reversed();
    Ok(HypReuleauxTriangle {
        r,
        vertices: [0, 1, 2].map(|k| rot(k) * r),
        vertex_distance: 2.0 * a.asinh(),
        disk_center_distance: y,
        disk_radius: h,
        boundary,
    })
}

/// Euclidean Reuleaux triangle centred at the origin with a vertex on the
/// positive real axis.
#[derive(Debug, Clone)]
pub struct EucReuleauxTriangle {
    /// Euclidean width (= Euclidean diameter = side of the vertex triangle).
    pub width: f64,
    pub center: Point,
    pub circumradius: f64,
    pub vertices: [Point; 3],
    /// Clockwise boundary made of three circular arcs of radius `width`.
    pub boundary: JordanBoundary,
}

impl EucReuleauxTriangle {
    pub fn contains(&self, z: Point) -> bool {
        self.vertices
            .iter()
            .all(|&v| (z - v).norm() <= self.width * (1.0 + 1e-12))
    }
}

/// Euclidean Reuleaux triangle with vertices `r·e^{2πik/3}`.
pub fn euc_reuleaux(circumradius: f64) -> Result<EucReuleauxTriangle> {
    if !(circumradius > 0.0 && circumradius.is_finite()) {
        return Err(domain(format!("circumradius must be positive, got {circumradius}")));
    }
    let r = circumradius;
    let width = r * SQRT3;
    Ok(EucReuleauxTriangle {
        width,
        center: Point::new(0.0, 0.0),
        circumradius: r,
        vertices: [0, 1, 2].map(|k| rot(k) * r),
        boundary: reuleaux_boundary(r, r, width)?.reversed(),
    })
}

/// Boundary samples used when measuring the hyperbolic diameter of a
/// Euclidean Reuleaux triangle (a multiple of 3, so vertices are sampled).
pub const EUC_REULEAUX_SAMPLES: usize = 3 * 128;

/// Euclidean Reuleaux triangle (placed as in [`euc_reuleaux`]) whose
/// hyperbolic diameter, measured over boundary samples, equals `t`.
pub fn euc_reuleaux_with_hyp_diameter(t: f64) -> Result<EucReuleauxTriangle> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(domain(format!("hyperbolic diameter must be positive, got {t}")));
    }
    let diam = |r: f64| -> Result<f64> {
        let e = euc_reuleaux(r)?;
        hyp_diameter_points(&e.boundary.sample(EUC_REULEAUX_SAMPLES))
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f = diam(mid)? - t;
        if f.abs() <= 1e-13 * t.max(1.0) {
            return euc_reuleaux(mid);
        }
        if f < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r = 0.5 * (lo + hi);
    let got = diam(r)?;
    if (got - t).abs() > 1e-10 * t.max(1.0) {
        return Err(Error::Convergence(format!(
            "bisection for the Euclidean Reuleaux radius stalled at diameter {got} (target {t})"
        )));
    }
    euc_reuleaux(r)
}

/// Counterclockwise circle.
pub fn circle(center: Point, radius: f64) -> Result<JordanBoundary> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(domain(format!("radius must be positive, got {radius}")));
    }
    JordanBoundary::new(vec![(Curve::circle(center, radius), 1.0)])
}

pub fn unit_circle() -> JordanBoundary {
    circle(Point::new(0.0, 0.0), 1.0).expect("unit circle is valid")
}

/// Clockwise circle `|z| = th(t/4)`: the hyperbolic disk of diameter `t`
/// centred at the origin.
pub fn hyp_disk_shape(t: f64) -> Result<JordanBoundary> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(domain(format!("hyperbolic diameter must be positive, got {t}")));
    }
    let rho = (t / 4.0).tanh();
    if rho >= 1.0 {
        return Err(domain(format!("disk of diameter {t} is not representable")));
    }
    Ok(circle(Point::new(0.0, 0.0), rho)?.reversed())
}

/// Polygon with the given counterclockwise vertices. Arc weights are
/// proportional to edge lengths.
pub fn polygon(vertices: &[Point]) -> Result<JordanBoundary> {
    if vertices.len() < 3 {
        return Err(geometry("a polygon needs at least 3 vertices"));
    }
    let n = vertices.len();
    let arcs = (0..n)
        .map(|k| {
            let (a, b) = (vertices[k], vertices[(k + 1) % n]);
            (Curve::Segment { start: a, end: b }, (b - a).norm())
        })
        .collect();
    let b = JordanBoundary::new(arcs)?;
    if !b.is_counterclockwise() {
        return Err(geometry("polygon vertices must be listed counterclockwise"));
    }
    Ok(b)
}

/// Rectangle `[0,3]×[0,1]` with the notch `[1,2]×[0.2,1]` removed; vertices
/// `0, 3, 3+i, 2+i, 2+0.2i, 1+0.2i, 1+i, i`.
pub fn notched_rectangle() -> JordanBoundary {
    let v = [
        (0.0, 0.0),
        (3.0, 0.0),
        (3.0, 1.0),
        (2.0, 1.0),
        (2.0, 0.2),
        (1.0, 0.2),
        (1.0, 1.0),
        (0.0, 1.0),
    ]
    .map(|(x, y)| Point::new(x, y));
    polygon(&v).expect("notched rectangle is a valid polygon")
}

/// Counterclockwise axis-parallel square with the given centre and half side.
pub fn square(center: Point, half_side: f64) -> Result<JordanBoundary> {
    if !(half_side > 0.0 && half_side.is_finite()) {
        return Err(domain(format!("half side must be positive, got {half_side}")));
    }
    let h = half_side;
    let v = [(-h, -h), (h, -h), (h, h), (-h, h)].map(|(x, y)| center + Point::new(x, y));
    polygon(&v)
}

/// Maximum hyperbolic distance from a boundary point of the triangle to the
/// rest of the body, sampled; used to check the constant-width property.
pub fn sampled_width_at(body_samples: &[Point], z: Point) -> f64 {
    body_samples
        .iter()
        .map(|&w| crate::hyperbolic::rho_disk_unchecked(z, w))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolic::rho_disk;

    #[test]
    fn hyp_reuleaux_table_value() {
        let t = hyp_reuleaux(0.25).unwrap();
        assert!((t.vertex_distance - 0.8937).abs() < 5e-5);
        let d = rho_disk(t.vertices[0], t.vertices[1]).unwrap();
        assert!((d - t.vertex_distance).abs() < 1e-13);
        assert!(!t.boundary.is_counterclockwise());
        assert_eq!(t.boundary.corners().len(), 3);
        assert!(hyp_reuleaux(1.0).is_err());
        assert!(hyp_reuleaux(0.0).is_err());
    }

    #[test]
    fn defining_circles_pass_through_vertices() {
        for r in [0.1, 0.5, 0.95] {
            let t = hyp_reuleaux(r).unwrap();
            let c = t.disk_centers();
            for (k, &centre) in c.iter().enumerate() {
                for j in 0..3 {
                    if j != k {
                        let d = (t.vertices[j] - centre).norm();
                        assert!((d - t.disk_radius).abs() < 1e-12, "r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn boundary_arcs_lie_on_defining_circles() {
        let t = hyp_reuleaux(0.5).unwrap();
        let centers = t.disk_centers();
        for arc in t.boundary.arcs() {
            let pts: Vec<Point> = (0..9).map(|j| arc.curve.point(j as f64 / 8.0)).collect();
            let on_some = centers
                .iter()
                .any(|&c| pts.iter().all(|&z| ((z - c).norm() - t.disk_radius).abs() < 1e-13));
            assert!(on_some);
        }
    }

    #[test]
    fn rotational_symmetry() {
        let t = hyp_reuleaux(0.4).unwrap();
        let rotated = t.boundary.similarity(rot(1), Point::new(0.0, 0.0)).unwrap();
        for j in 0..30 {
            let s = TAU * j as f64 / 30.0;
            // the boundary is clockwise, so a rotation by 2π/3 shifts it back by one arc
            let a = rotated.point(s);
            let b = t.boundary.point(s - TAU / 3.0);
            assert!((a - b).norm() < 1e-14, "{a} vs {b}");
        }
    }

    #[test]
    fn radius_for_diameter_inverts_vertex_distance() {
        for r in [0.05, 0.3, 0.75, 0.99] {
            let t = reuleaux_vertex_distance(r);
            assert!((reuleaux_radius_for_diameter(t).unwrap() - r).abs() < 1e-14);
        }
    }

    #[test]
    fn euclidean_reuleaux_geometry() {
        let e = euc_reuleaux(0.5).unwrap();
        for k in 0..3 {
            let d = (e.vertices[k] - e.vertices[(k + 1) % 3]).norm();
            assert!((d - e.width).abs() < 1e-14);
        }
        assert!(!e.boundary.is_counterclockwise());
        assert!(e.contains(Point::new(0.0, 0.0)));
    }

    #[test]
    fn euclidean_reuleaux_root_finder() {
        for t in [0.1734, 0.8937, 3.6173] {
            let e = euc_reuleaux_with_hyp_diameter(t).unwrap();
            let d = hyp_diameter_points(&e.boundary.sample(EUC_REULEAUX_SAMPLES)).unwrap();
            assert!((d - t).abs() < 1e-8);
        }
    }

    #[test]
    fn hyp_disk_examples() {
        let d = hyp_disk_shape(0.8937).unwrap();
        let z = d.point(0.0);
        assert!((z.norm() - 0.219_78).abs() < 1e-5);
        assert!(!d.is_counterclockwise());
        let diam = rho_disk(z, -z).unwrap();
        assert!((diam - 0.8937).abs() < 1e-10);
        let d = hyp_disk_shape(4.0 * 0.5f64.atanh()).unwrap();
        assert!((d.point(1.0).norm() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn polygons() {
        let s = square(Point::new(0.5, 0.5), 0.5).unwrap();
        assert_eq!(s.arcs().len(), 4);
        assert_eq!(s.corners().len(), 4);
        let g = notched_rectangle();
        assert_eq!(g.arcs().len(), 8);
        assert_eq!(g.corners().len(), 8);
        assert!((g.signed_area() - 2.2).abs() < 1e-12);
        assert!(!g.encloses(Point::new(1.5, 0.5)));
        assert!(g.encloses(Point::new(1.5, 0.1)));
        let cw = [(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)].map(|(x, y)| Point::new(x, y));
        assert!(polygon(&cw).is_err());
        let bow = [(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)].map(|(x, y)| Point::new(x, y));
        assert!(polygon(&bow).is_err());
    }
}
