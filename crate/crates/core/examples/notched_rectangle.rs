//! Hyperbolic diameter and capacity of centred squares in a rectangle with a
//! notch, via a numerical Riemann map.
use std::time::Instant;

use hypcap::experiments::{square_table, NOTCHED_NODES, SQUARE_HALF_SIDES};

fn main() -> hypcap::Result<()> {
    let n = std::env::args()
        .nth(1)
        .map_or(NOTCHED_NODES, |s| s.parse().expect("node count"));
    let start = Instant::now();
    let rows = square_table(&SQUARE_HALF_SIDES, n)?;
    println!("{:>5} {:>10} {:>11} {:>9}", "h", "rho_G(E)", "cap(G,E)", "err est");
    for row in rows {
        let diam = row.hyp_diameter.map_or_else(|e| e.to_string(), |d| format!("{d:.4}"));
        match row.capacity {
            Ok(c) => println!("{:>5} {:>10} {:>11.4} {:>9.1e}", row.h, diam, c.value, c.error_estimate),
            Err(e) => println!("{:>5} {:>10} {e}", row.h, diam),
        }
    }
    eprintln!("n = {n}, {:.1} s", start.elapsed().as_secs_f64());
    Ok(())
}
