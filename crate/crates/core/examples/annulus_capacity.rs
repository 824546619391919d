//! Capacity solver on condensers with closed-form capacities: a concentric
//! annulus, an eccentric disk and a hyperbolic disk.
use std::f64::consts::TAU;

use hypcap::capacity::{CapacitySolver, Condenser};
use hypcap::experiments::hyp_disk_capacity;
use hypcap::hyperbolic::{hyp_ball, mobius};
use hypcap::shapes::{circle, unit_circle};
use hypcap::Point;

fn main() -> hypcap::Result<()> {
    let solver = CapacitySolver::default();

    let annulus = Condenser::new(unit_circle(), circle(Point::new(0.0, 0.0), 0.3)?.reversed())?;
    let exact = TAU / (1.0 / 0.3f64).ln();
    println!("annulus 0.3 < |z| < 1, exact {exact:.15}");
    for n in [32, 64, 128] {
        let c = solver.capacity(&annulus, n)?;
        println!("  n = {n:>4}: {:.15}  err est {:.1e}", c.value, c.error_estimate);
    }

    // the hyperbolic disk B_rho(q, R) has capacity 2π/log(1/th(R/2)) wherever q is
    let (q, radius) = (Point::new(0.4, 0.3), 1.2);
    let ball = hyp_ball(q, radius)?;
    let disk = Condenser::new(
        unit_circle(),
        circle(ball.euclid_center, ball.euclid_radius)?.reversed(),
    )?;
    let exact = hyp_disk_capacity(radius)?;
    println!("hyperbolic disk centre {q}, radius {radius}, exact {exact:.15}");
    for n in [64, 128, 256] {
        let c = solver.capacity(&disk, n)?;
        println!("  n = {n:>4}: {:.15}  err est {:.1e}", c.value, c.error_estimate);
    }
    // sanity: the Möbius map sending q to 0 carries the ball to a centred disk
    println!(
        "  |T_q(edge)| = {:.15}, th(R/2) = {:.15}",
        mobius(q, ball.euclid_center + ball.euclid_radius).norm(),
        (radius / 2.0).tanh()
    );
    Ok(())
}
