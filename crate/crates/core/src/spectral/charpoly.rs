use num_complex::Complex64;

/// Coefficients `[c_0, c_1, ..., c_n]` (ascending, `c_n = 1`) of
/// `det(xI − M)` by the Faddeev–LeVerrier recurrence. Intended for the
/// small dimensions used here; the recurrence loses accuracy as `n` grows.
pub fn characteristic_polynomial(n: usize, m: &[f64]) -> Vec<f64> {
    assert_eq!(m.len(), n * n);
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    // M_k = M * M_{k-1} + c_{n-k+1} I, starting from M_0 = 0.
    let mut mk = vec![0.0; n * n];
    let mut prod = vec![0.0; n * n];
    for k in 1..=n {
        let c_prev = coeffs[n - k + 1];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0.0;
                for l in 0..n {
                    s += m[i * n + l] * mk[l * n + j];
                }
                prod[i * n + j] = s;
            }
            prod[i * n + i] += c_prev;
        }
        // c_{n-k} = -tr(M M_k) / k
        std::mem::swap(&mut mk, &mut prod);
        let mut trace = 0.0;
        for i in 0..n {
            for l in 0..n {
                trace += m[i * n + l] * mk[l * n + i];
            }
        }
        coeffs[n - k] = -trace / k as f64;
    }
    coeffs
}

/// Horner evaluation of an ascending-coefficient polynomial.
pub fn poly_eval(coeffs: &[f64], x: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
}

/// Remainder of `p / d` (ascending coefficients, `d` monic or not).
pub fn poly_remainder(p: &[f64], d: &[f64]) -> Vec<f64> {
    let mut r = p.to_vec();
    let dd = d.len() - 1;
    let lead = d[dd];
    while r.len() > dd {
        let top = r.len() - 1;
        let q = r[top] / lead;
        for (i, &c) in d.iter().enumerate() {
            r[top - dd + i] -= q * c;
        }
        r.pop();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_small_matrices() {
        // [[2, 1], [1, 2]] -> x^2 - 4x + 3
        assert_eq!(characteristic_polynomial(2, &[2.0, 1.0, 1.0, 2.0]), vec![3.0, -4.0, 1.0]);
        // adjacency of the directed 3-cycle -> x^3 - 1
        let c3 = [0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0];
        assert_eq!(characteristic_polynomial(3, &c3), vec![-1.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn division_remainder() {
        // (x^2 - 1)(x - 3) = x^3 - 3x^2 - x + 3
        let p = [3.0, -1.0, -3.0, 1.0];
        let r = poly_remainder(&p, &[-1.0, 0.0, 1.0]);
        assert!(r.iter().all(|c| c.abs() < 1e-12), "{r:?}");
        let r = poly_remainder(&p, &[-2.0, 1.0]);
        assert!((r[0] - poly_eval(&p, Complex64::new(2.0, 0.0)).re).abs() < 1e-12);
    }
}
