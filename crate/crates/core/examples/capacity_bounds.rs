//! Closed-form capacity bounds in terms of the hyperbolic diameter, and the
//! quasiconformal distortion bound.
use hypcap::bounds::{qc_diameter_bound, BoundsReport};

fn main() -> hypcap::Result<()> {
    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "t", "cap_seg", "b1", "b2", "h(2,t)", "upper n=3"
    );
    for t in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0] {
        let r = BoundsReport::new(t, &[3])?;
        println!(
            "{t:>8} {:>12.6} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            r.cap_seg, r.b1, r.b2, r.jung_radius_2d, r.dimensions[0].cap_upper
        );
    }

    println!("\nquasiconformal bound on th(rho(f(E))/2) for t = 0.5:");
    for k in [1.0, 2.0, 4.0] {
        let b = qc_diameter_bound(k, 0.5)?;
        println!("  K = {k}: {:.6}{}", b.value, if b.vacuous { " (vacuous)" } else { "" });
    }
    Ok(())
}
