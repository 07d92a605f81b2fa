//! Closed forms for K(n,k,m) checked against the certified radius.
//!
//!     cargo run --example formulas

use digraph_alpha::families::k_nkm;
use digraph_alpha::formulas::{compare_m_extremes, lambda_knkm, max_radius_vertex_connectivity, second_max_radius};
use digraph_alpha::spectral::{spectral_radius, PowerOptions};

fn main() -> digraph_alpha::Result<()> {
    let (n, alpha) = (7, 0.4);
    for k in 1..=n - 2 {
        for m in 1..n - k {
            let formula = lambda_knkm(n, k, m, alpha)?;
            let numeric = spectral_radius(&k_nkm(n, k, m)?, alpha, &PowerOptions::default())?.radius;
            println!("K({n},{k},{m})  formula={formula:.12}  power={numeric:.12}  err={:.1e}", (formula - numeric).abs());
        }
    }
    for alpha in [0.0, 0.5] {
        println!("\nalpha={alpha}: second maximum on 6 vertices = {:.12}", second_max_radius(6, alpha)?);
        for k in 1..=4 {
            let c = compare_m_extremes(6, k, alpha)?;
            println!(
                "  k={k}: {:?}  m=1 -> {:.10}  m=n-k-1 -> {:.10}  max over kappa=k -> {:.10}",
                c.verdict,
                c.at_m_one,
                c.at_m_max,
                max_radius_vertex_connectivity(6, k, alpha)?
            );
        }
    }
    Ok(())
}
