//! Certified A_α spectral radius of a digraph read from text.
//!
//!     cargo run --example radius

use digraph_alpha::digraph::parse_digraph;
use digraph_alpha::spectral::{spectral_radius, spectral_radius_general, PowerOptions};

fn main() -> digraph_alpha::Result<()> {
    // a 4-cycle with one chord
    let g = parse_digraph("n 4\n0 1\n1 2\n2 3\n3 0\n0 2\n")?;
    for alpha in [0.0, 0.3, 0.6, 0.9] {
        let r = spectral_radius(&g, alpha, &PowerOptions::default())?;
        println!(
            "alpha={alpha:.1}  radius={:.12}  certificate=[{:.12}, {:.12}]  iterations={}",
            r.radius, r.certificate_lo, r.certificate_hi, r.iterations
        );
    }

    // not strongly connected: only the component-wise radius is defined
    let path = parse_digraph("n 3\n0 1\n1 2\n")?;
    println!("perron data on a path: {}", spectral_radius(&path, 0.5, &PowerOptions::default()).unwrap_err());
    println!("component radius of the path: {}", spectral_radius_general(&path, 0.5, &PowerOptions::default())?.radius);
    Ok(())
}
