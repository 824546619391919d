//! Hyperbolic distance from the base point over a grid covering the notched
//! rectangle, printed as a coarse character map. Blanks are points outside
//! the domain, and points deep in the right chamber where the map crowds
//! too much against the unit circle to give a reliable distance.
use hypcap::conformal::hyp_field;
use hypcap::experiments::notched_map;

fn main() -> hypcap::Result<()> {
    let map = notched_map(1024)?;
    let (nx, ny) = (61, 21);
    let field = hyp_field(&map, (0.0, 3.0), (0.0, 1.0), nx, ny)?;
    let shades = b".,:-=+*#%@";
    for j in (0..ny).rev() {
        let line: String = (0..nx)
            .map(|i| match field[j * nx + i].rho {
                Some(r) => shades[((r / 1.5) as usize).min(shades.len() - 1)] as char,
                None => ' ', // outside the domain
            })
            .collect();
        println!("|{line}|");
    }
    let max = field.iter().filter_map(|s| s.rho).fold(0.0, f64::max);
    println!("largest sampled distance {max:.3}; one shade per 1.5 units");
    Ok(())
}
