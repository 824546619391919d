//! Hyperbolic distances, balls and geodesics in the unit disk.
use hypcap::hyperbolic::{geodesic_segment, hyp_ball, hyp_diameter_points, rho_disk};
use hypcap::Point;

fn main() -> hypcap::Result<()> {
    let x = Point::new(0.3, 0.1);
    let y = Point::new(-0.5, 0.6);
    let d = rho_disk(x, y)?;
    println!("rho({x}, {y}) = {d:.12}");

    // geodesic points are equally spaced in the hyperbolic metric
    let pts = geodesic_segment(x, y, 5)?;
    for w in pts.windows(2) {
        println!("  step {:.12}", rho_disk(w[0], w[1])?);
    }

    let ball = hyp_ball(x, 1.0)?;
    println!(
        "B_rho({x}, 1) = Euclidean disk centre {:.6}, radius {:.6}",
        ball.euclid_center, ball.euclid_radius
    );
    // the boundary circle is at hyperbolic distance 1 from the centre
    let edge = ball.euclid_center + ball.euclid_radius;
    println!("  distance to edge point {:.12}", rho_disk(x, edge)?);

    let square = [
        Point::new(0.5, 0.5),
        Point::new(-0.5, 0.5),
        Point::new(-0.5, -0.5),
        Point::new(0.5, -0.5),
    ];
    println!(
        "diameter of the square's vertices {:.12}",
        hyp_diameter_points(&square)?
    );
    Ok(())
}
