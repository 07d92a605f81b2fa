//! Equitable quotient of A_α(K(n,k,m)) and its characteristic polynomial.
//!
//!     cargo run --example quotient

use digraph_alpha::families::{k_nkm, k_nkm_partition};
use digraph_alpha::spectral::{alpha_matrix, characteristic_polynomial, poly_remainder, quotient_matrix, spectral_radius, PowerOptions};

fn main() -> digraph_alpha::Result<()> {
    let (n, k, m, alpha) = (7, 2, 3, 0.35);
    let g = k_nkm(n, k, m)?;
    let a = alpha_matrix(&g, alpha)?;
    let q = quotient_matrix(&a, &k_nkm_partition(n, k, m))?;
    for i in 0..3 {
        println!("[{:.4} {:.4} {:.4}]", q.get(i, 0), q.get(i, 1), q.get(i, 2));
    }
    let opts = PowerOptions::default();
    println!("rho(quotient) = {:.12}", q.spectral_radius(&opts)?.radius);
    println!("rho(A_alpha)  = {:.12}", spectral_radius(&g, alpha, &opts)?.radius);

    // the quotient polynomial divides the full one
    let full = characteristic_polynomial(n, a.entries());
    let small = characteristic_polynomial(3, &q.entries);
    let rem = poly_remainder(&full, &small);
    println!("largest remainder coefficient: {:.2e}", rem.iter().fold(0.0f64, |acc, c| acc.max(c.abs())));
    Ok(())
}
