//! Capacities in units of the disk capacity `b₁(t)` on a grid of hyperbolic
//! diameters.
use hypcap::experiments::{jung_quotient_limit, quotients, REULEAUX_NODES};

fn main() -> hypcap::Result<()> {
    println!("b2/b1 tends to 2/sqrt 3 = {:.6}", jung_quotient_limit());
    println!("{:>6} {:>9} {:>9} {:>9}", "t", "b2/b1", "HR/b1", "ER/b1");
    for row in quotients(0.25, 8.0, 32, Some(REULEAUX_NODES))? {
        let f = |r: &hypcap::Result<f64>| r.as_ref().map_or("-".to_string(), |v| format!("{v:.5}"));
        println!(
            "{:>6.3} {:>9.5} {:>9} {:>9}",
            row.t,
            row.jung_over_disk,
            f(&row.hyp_reuleaux_over_disk),
            f(&row.euc_reuleaux_over_disk)
        );
    }
    Ok(())
}
