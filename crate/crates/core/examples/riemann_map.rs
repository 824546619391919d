//! Numerical Riemann map of the upper half disk, checked against the
//! closed-form hyperbolic distance of the half disk.
use std::f64::consts::PI;

use hypcap::boundary::{Curve, JordanBoundary};
use hypcap::conformal::{rho_g, riemann_map};
use hypcap::Point;

/// Hyperbolic distance in the upper half disk through `z ↦ ((1+z)/(1−z))²`,
/// which maps it onto the upper half plane.
fn half_disk_rho(x: Point, y: Point) -> f64 {
    let to_plane = |z: Point| ((1.0 + z) / (1.0 - z)).powi(2);
    let (u, v) = (to_plane(x), to_plane(y));
    2.0 * ((u - v).norm() / (u - v.conj()).norm()).atanh()
}

fn main() -> hypcap::Result<()> {
    let one = Point::new(1.0, 0.0);
    let half_disk = JordanBoundary::new(vec![
        (Curve::Segment { start: -one, end: one }, 2.0),
        (
            Curve::CircularArc {
                center: Point::new(0.0, 0.0),
                radius: 1.0,
                start_angle: 0.0,
                sweep: PI,
            },
            PI,
        ),
    ])?;
    let map = riemann_map(&half_disk, Point::new(0.0, 0.5), 512)?;
    let pairs = [
        (Point::new(0.0, 0.5), Point::new(0.3, 0.2)),
        (Point::new(-0.6, 0.1), Point::new(0.6, 0.1)),
        (Point::new(0.1, 0.9), Point::new(0.05, 0.02)),
    ];
    for (x, y) in pairs {
        let numeric = rho_g(&map, x, y)?;
        let exact = half_disk_rho(x, y);
        println!(
            "rho({x}, {y}) = {numeric:.12}  exact {exact:.12}  diff {:.1e}",
            (numeric - exact).abs()
        );
    }
    let corr = map.boundary_correspondence();
    println!(
        "boundary modulus defect {:.1e}, monotone: {}",
        corr.modulus_defect,
        corr.is_monotone_within(1e-4)
    );
    Ok(())
}
