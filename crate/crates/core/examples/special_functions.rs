//! Complete elliptic integral, Grötzsch modulus and the Grötzsch and
//! Teichmüller capacities.
use hypcap::special::{ellip_k, gamma2, mu, mu_eval, tau2};

fn main() -> hypcap::Result<()> {
    println!("{:>8} {:>20} {:>20}", "r", "K(r)", "mu(r)");
    for r in [1e-6, 0.1, 0.5, 1.0 / 2f64.sqrt(), 0.9, 0.999999] {
        println!("{r:>8.6} {:>20.15} {:>20.15}", ellip_k(r)?, mu(r)?);
    }
    // μ(1/√2) = π/2 is the self-dual point
    println!(
        "mu(1/sqrt 2) - pi/2 = {:.2e}",
        mu(1.0 / 2f64.sqrt())? - std::f64::consts::FRAC_PI_2
    );
    println!("below validated range: {}", mu_eval(1e-9)?.below_range);

    println!("\n{:>8} {:>20} {:>20}", "s", "gamma2(s)", "tau2(s)");
    for s in [1.5, 2.0, 5.0, 50.0] {
        println!("{s:>8} {:>20.15} {:>20.15}", gamma2(s)?, tau2(s)?);
    }
    // τ₂(s) = γ₂(√(s+1))/2
    println!("tau2(3) - gamma2(2)/2 = {:.2e}", tau2(3.0)? - gamma2(2.0)? / 2.0);
    Ok(())
}
