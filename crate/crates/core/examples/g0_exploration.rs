//! G0 against the true maximum over clique number d. Exploratory only.
//!
//!     cargo run --release --example g0_exploration

use digraph_alpha::oracle::{explore_problem_4_1, ScanConfig};

fn main() -> digraph_alpha::Result<()> {
    for n in 3..=5 {
        let ds: Vec<usize> = (1..n).collect();
        let report = explore_problem_4_1(n, &ds, &[0.0, 0.25, 0.5, 0.75], &ScanConfig::default())?;
        println!("{report}");
    }
    Ok(())
}
