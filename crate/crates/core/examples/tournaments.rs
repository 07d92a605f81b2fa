//! Extremal tournaments: brute force against the rotational and
//! Brualdi-Li generators.
//!
//!     cargo run --release --example tournaments

use digraph_alpha::digraph::is_isomorphic;
use digraph_alpha::families::{brualdi_li_tournament, extremal_tournament, rotational_tournament};
use digraph_alpha::spectral::{spectral_radius, PowerOptions};

fn main() -> digraph_alpha::Result<()> {
    let opts = PowerOptions::default();
    for n in 3..=6 {
        let best = extremal_tournament(n, 0.0, &opts)?;
        let generator = if n % 2 == 1 { rotational_tournament(n)? } else { brualdi_li_tournament(n)? };
        let lam = spectral_radius(&generator, 0.0, &opts)?.radius;
        println!(
            "n={n}: brute force {:.12}  generator {:.12}  isomorphic: {}",
            best.radius,
            lam,
            is_isomorphic(&best.digraph, &generator)
        );
    }
    // for alpha > 0 the maximizer is found only by search
    for alpha in [0.25, 0.5, 0.75] {
        let t = extremal_tournament(5, alpha, &opts)?;
        println!("n=5 alpha={alpha}: radius {:.10}, code {}", t.radius, t.code);
    }
    Ok(())
}
