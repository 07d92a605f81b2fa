//! Drives the command-line harness in-process: a formula sweep and an
//! alpha sweep, both as CSV.
//!
//!     cargo run --example sweep

use digraph_alpha::harness::run;

fn main() {
    let mut out = Vec::new();
    let mut err = std::io::stderr();
    let code = run(["dgalpha", "sweep", "formula", "--n", "4..6", "--alpha", "0,0.5"], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit {code}\n");

    out.clear();
    let code = run(
        ["dgalpha", "sweep", "alpha", "--family", "knkm", "--n", "8", "--k", "3", "--m", "4", "--alpha", "0..0.9/0.1"],
        &mut out,
        &mut err,
    );
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit {code}");
}
