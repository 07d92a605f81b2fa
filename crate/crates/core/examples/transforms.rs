//! Redirecting in-arcs towards a heavier Perron entry, and subdividing arcs.
//!
//!     cargo run --example transforms

use digraph_alpha::families::{b_nd, c_ng};
use digraph_alpha::spectral::{spectral_radius, spectral_radius_general, PowerOptions};
use digraph_alpha::transforms::{redirect_in_arcs, subdivide_arc};

fn main() -> digraph_alpha::Result<()> {
    let opts = PowerOptions::default();
    let alpha = 0.5;

    // C'(6,3) is C(6,3) with the in-arc of 0 from 5 moved to 2
    let g = c_ng(6, 3, false)?;
    let x = spectral_radius(&g, alpha, &opts)?.perron_vector;
    let rec = redirect_in_arcs(&g, 0, 2, &[5])?;
    println!("x_0={:.6} x_2={:.6}", x[0], x[2]);
    println!(
        "radius {:.10} -> {:.10}",
        spectral_radius(&rec.before, alpha, &opts)?.radius,
        spectral_radius_general(&rec.after, alpha, &opts)?.radius
    );

    // subdividing never increases the radius
    let b = b_nd(5, 3, false)?;
    let before = spectral_radius(&b, alpha, &opts)?.radius;
    for arc in b.arcs() {
        let after = subdivide_arc(&b, arc)?.after;
        println!("subdivide {arc:?}: {before:.10} -> {:.10}", spectral_radius(&after, alpha, &opts)?.radius);
    }
    Ok(())
}
