//! Per-parameter extrema over every strongly connected digraph on 4 vertices.
//!
//!     cargo run --release --example extremal_scan

use digraph_alpha::digraph::write_digraph;
use digraph_alpha::oracle::{extremal_scan, Mode, Parameter, ScanConfig};

fn main() -> digraph_alpha::Result<()> {
    let cfg = ScanConfig::default();
    for (param, mode) in [(Parameter::Girth, Mode::Min), (Parameter::Clique, Mode::Min), (Parameter::VertexConn, Mode::Max)] {
        let report = extremal_scan(4, 0.5, param, mode, &cfg)?;
        println!("{param:?} {mode:?}");
        for g in &report.groups {
            println!(
                "  value {}: {} digraphs, extremum {:.10}, {} class(es), runner-up gap {:?}",
                g.value,
                g.members,
                g.extremum,
                g.classes.len(),
                g.runner_up_gap
            );
        }
    }
    let girth = extremal_scan(4, 0.5, Parameter::Girth, Mode::Min, &cfg)?;
    print!("minimizer at girth 2:\n{}", write_digraph(&girth.group(2).unwrap().classes[0].representative));
    Ok(())
}
