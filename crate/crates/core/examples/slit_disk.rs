//! The slit disk `𝔹² ∖ [0, 1)`: two points straddling the slit keep the
//! ratio `d(E)/d(E, ∂G) = 2` while their hyperbolic distance blows up, so no
//! bound on the hyperbolic Jung radius follows from that ratio alone.
use std::f64::consts::TAU;

use hypcap::bounds::jung_h;
use hypcap::Point;

/// The square root with argument in `(0, 2π)` maps the slit disk onto the
/// upper half disk, and `s ↦ ((1+s)/(1−s))²` maps that onto the upper half
/// plane, where the distance is explicit.
fn slit_disk_rho(x: Point, y: Point) -> f64 {
    let to_plane = |z: Point| {
        let s = Point::from_polar(z.norm().sqrt(), z.im.atan2(z.re).rem_euclid(TAU) / 2.0);
        ((1.0 + s) / (1.0 - s)).powi(2)
    };
    let (u, v) = (to_plane(x), to_plane(y));
    2.0 * ((u - v).norm() / (u - v.conj()).norm()).atanh()
}

fn main() -> hypcap::Result<()> {
    println!(
        "{:>8} {:>14} {:>14} {:>16}",
        "t", "d(E)/d(E,bd)", "rho_G(x, y)", "Jung radius <="
    );
    for t in [0.2, 0.1, 0.01, 0.001, 1e-4] {
        let (x, y) = (Point::new(0.5, t), Point::new(0.5, -t));
        let ratio = (x - y).norm() / t.min(1.0 - x.norm());
        let rho = slit_disk_rho(x, y);
        println!("{t:>8} {ratio:>14.6} {rho:>14.6} {:>16.6}", jung_h(2, rho)?);
    }
    Ok(())
}
