//! The named families and their parameters.
//!
//!     cargo run --example families

use digraph_alpha::digraph::{arc_connectivity, clique_number, girth, vertex_connectivity, write_digraph};
use digraph_alpha::families::{b_nd, c_ng, circulant, h4, k_nkm, FamilySpec};
use digraph_alpha::spectral::{spectral_radius, PowerOptions};

fn main() -> digraph_alpha::Result<()> {
    let members = [
        ("C(6,3)", c_ng(6, 3, false)?),
        ("C'(6,3)", c_ng(6, 3, true)?),
        ("B(6,3)", b_nd(6, 3, false)?),
        ("B'(6,3)", b_nd(6, 3, true)?),
        ("K(6,2,3)", k_nkm(6, 2, 3)?),
        ("H4(8,2,4)", h4(8, 2, 4)?),
        ("circulant(7,{1,2})", circulant(7, &[1, 2])?),
        ("K(5) from a spec", FamilySpec::Complete { n: 5 }.build()?),
    ];
    println!("{:<20} {:>4} {:>5} {:>6} {:>5} {:>5} {:>14}", "digraph", "arcs", "girth", "clique", "kappa", "arc-k", "radius a=0.5");
    for (name, g) in &members {
        println!(
            "{:<20} {:>4} {:>5} {:>6} {:>5} {:>5} {:>14.10}",
            name,
            g.arc_count(),
            girth(g).unwrap(),
            clique_number(g),
            vertex_connectivity(g)?,
            arc_connectivity(g)?,
            spectral_radius(g, 0.5, &PowerOptions::default())?.radius
        );
    }
    print!("\nB(6,3) in text form:\n{}", write_digraph(&members[2].1));
    Ok(())
}
