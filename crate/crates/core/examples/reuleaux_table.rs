//! Capacities of hyperbolic and Euclidean Reuleaux triangles in the unit
//! disk against the disk and Jung bounds, by circumradius.
use hypcap::experiments::{reuleaux_table, REULEAUX_NODES, REULEAUX_RADII};

fn main() -> hypcap::Result<()> {
    let n = std::env::args()
        .nth(1)
        .map_or(REULEAUX_NODES, |s| s.parse().expect("node count"));
    println!(
        "{:>5} {:>9} {:>9} {:>10} {:>10} {:>10} {:>10}",
        "r", "h-diam", "capSeg", "capERtri", "capDisk", "capHRtri", "capJung"
    );
    for row in reuleaux_table(&REULEAUX_RADII, n)? {
        let show = |c: &hypcap::Result<hypcap::capacity::CapacityResult>| match c {
            Ok(c) => format!("{:>10.5}", c.value),
            Err(e) => format!("{:>10}", format!("[{e}]")),
        };
        println!(
            "{:>5} {:>9.5} {:>9.5} {} {:>10.5} {} {:>10.5}",
            row.r,
            row.t,
            row.cap_seg,
            show(&row.cap_euc_reuleaux),
            row.cap_disk,
            show(&row.cap_hyp_reuleaux),
            row.cap_jung
        );
    }
    Ok(())
}
