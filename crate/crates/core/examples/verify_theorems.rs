//! Every theorem check at one order, sharing a single scan.
//!
//!     cargo run --release --example verify_theorems [n]

use digraph_alpha::oracle::{verify_on_survey, ScanConfig, Survey, TheoremId};

fn main() -> digraph_alpha::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let survey = Survey::build(n, &[0.0, 0.3, 0.5, 0.7], &ScanConfig::default())?;
    println!("{} strongly connected digraphs on {n} vertices", survey.strong_count);
    for id in TheoremId::ALL {
        let v = verify_on_survey(id, &survey)?;
        println!("{id}: {:?} ({} cases)", v.status, v.checks.len());
    }
    Ok(())
}
