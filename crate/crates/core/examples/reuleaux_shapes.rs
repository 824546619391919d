//! Hyperbolic and Euclidean Reuleaux triangles of equal hyperbolic diameter.
//! Prints a summary to stderr and the boundary of the hyperbolic triangle
//! as CSV (`arc_index,t_param,x,y`) to stdout.
use hypcap::hyperbolic::hyp_diameter_points;
use hypcap::io::write_boundary_csv_with_header;
use hypcap::shapes::{euc_reuleaux_with_hyp_diameter, hyp_reuleaux};

fn main() -> hypcap::Result<()> {
    let r: f64 = std::env::args()
        .nth(1)
        .map_or(Ok(0.5), |s| s.parse())
        .expect("circumradius");
    let hr = hyp_reuleaux(r)?;
    let t = hr.vertex_distance;
    eprintln!("hyperbolic Reuleaux triangle, r = {r}");
    eprintln!("  vertex distance t     = {t:.12}");
    eprintln!(
        "  sampled diameter      = {:.12}",
        hyp_diameter_points(&hr.boundary.sample(3000))?
    );
    eprintln!(
        "  defining disks: centre distance {:.6}, radius {:.6}",
        hr.disk_center_distance, hr.disk_radius
    );

    let er = euc_reuleaux_with_hyp_diameter(t)?;
    eprintln!("Euclidean Reuleaux triangle with the same hyperbolic diameter");
    eprintln!("  circumradius {:.12}, width {:.12}", er.circumradius, er.width);
    eprintln!(
        "  sampled diameter      = {:.12}",
        hyp_diameter_points(&er.boundary.sample(3000))?
    );

    write_boundary_csv_with_header(&hr.boundary, 300, std::io::stdout().lock())
}
