//! Closed forms for the radius of `K(n,k,m)`, the second-largest radius
//! over all strongly connected digraphs, and the maximum at fixed vertex
//! connectivity. Each formula is transcribed as displayed, without
//! algebraic simplification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::check_alpha;

/// Below this difference the two `m` extremes are reported as a tie.
pub const TIE_TOL: f64 = 1e-9;

/// Arguments of the `K(n,k,m)` closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KnkmFormulaInputs {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub alpha: f64,
}

impl KnkmFormulaInputs {
    pub fn new(n: usize, k: usize, m: usize, alpha: f64) -> Result<Self> {
        if !(k >= 1 && k + 2 <= n) {
            return Err(Error::Parameter(format!("need 1 <= k <= n-2, got n={n}, k={k}")));
        }
        if !(m >= 1 && m + k + 1 <= n) {
            return Err(Error::Parameter(format!(
                "need 1 <= m <= n-k-1, got n={n}, k={k}, m={m}"
            )));
        }
        check_alpha(alpha)?;
        Ok(KnkmFormulaInputs { n, k, m, alpha })
    }

    /// The radicand under the square root.
    fn discriminant(&self) -> f64 {
        let (n, k, m, a) = (self.n as f64, self.k as f64, self.m as f64, self.alpha);
        (1.0 - a).powi(2) * n * n
            + (6.0 * a - 2.0 * a * a - 4.0) * m * n
            + (2.0 - a).powi(2) * m * m
            + 4.0 * (1.0 - a) * k * m
    }

    /// `f(n,k,m) = 2 λα(K(n,k,m))`.
    fn f(&self) -> f64 {
        let (n, m, a) = (self.n as f64, self.m as f64, self.alpha);
        n - 2.0 - a * m + a * n + self.discriminant().sqrt()
    }

    pub fn lambda(&self) -> f64 {
        self.f() / 2.0
    }

    /// Coefficients `(b, c)` of the monic quadratic `x² − b x + c` whose
    /// largest root is the radius.
    pub fn quadratic(&self) -> (f64, f64) {
        let (n, k, m, a) = (self.n as f64, self.k as f64, self.m as f64, self.alpha);
        let b = a * n + n - a * m - 2.0;
        let c = a * n * n - a * n - 2.0 * a * n * m - m * m + a * k * m + a * m + a * m * m - n
            + m * n
            + 1.0
            - k * m;
        (b, c)
    }
}

/// λα(K(n,k,m)).
pub fn lambda_knkm(n: usize, k: usize, m: usize, alpha: f64) -> Result<f64> {
    Ok(KnkmFormulaInputs::new(n, k, m, alpha)?.lambda())
}

/// The second-largest λα over strongly connected digraphs on `n` vertices,
/// attained by `K(n, n-2, 1)`.
pub fn second_max_radius(n: usize, alpha: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::Parameter(format!("second maximum needs n >= 3, got {n}")));
    }
    check_alpha(alpha)?;
    let (nf, a) = (n as f64, alpha);
    let rad = (1.0 - a).powi(2) * nf * nf + 2.0 * a * (1.0 - a) * nf + a * a + 4.0 * a - 4.0;
    Ok((nf + a * nf - 2.0 - a + rad.sqrt()) / 2.0)
}

/// Maximum λα over strongly connected digraphs on `n` vertices with vertex
/// connectivity `k`, in the two closed forms for α = 0 and 0 < α < 1.
pub fn max_radius_vertex_connectivity(n: usize, k: usize, alpha: f64) -> Result<f64> {
    KnkmFormulaInputs::new(n, k, 1, alpha)?;
    let (nf, kf, a) = (n as f64, k as f64, alpha);
    if alpha == 0.0 {
        return Ok((nf - 2.0 + (nf * nf - 4.0 * nf + 4.0 * kf + 4.0).sqrt()) / 2.0);
    }
    let rad = nf * nf + (2.0 * a - 4.0 - 2.0 * a * kf) * nf + a * a + a * a * kf * kf - 4.0 * a
        + 2.0 * a * a * kf
        - 4.0 * a * kf
        + 4.0 * kf
        + 4.0;
    Ok((nf - 2.0 + a + a * kf + rad.sqrt()) / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MVerdict {
    /// `m = 1` is strictly larger.
    MOne,
    /// `m = n - k - 1` is strictly larger.
    MMax,
    Tie,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MComparison {
    pub verdict: MVerdict,
    pub at_m_one: f64,
    pub at_m_max: f64,
}

/// Compares λα(K(n,k,1)) with λα(K(n,k,n-k-1)).
pub fn compare_m_extremes(n: usize, k: usize, alpha: f64) -> Result<MComparison> {
    let at_m_one = lambda_knkm(n, k, 1, alpha)?;
    let at_m_max = lambda_knkm(n, k, n - k - 1, alpha)?;
    let verdict = if (at_m_one - at_m_max).abs() < TIE_TOL {
        MVerdict::Tie
    } else if at_m_max > at_m_one {
        MVerdict::MMax
    } else {
        MVerdict::MOne
    };
    Ok(MComparison {
        verdict,
        at_m_one,
        at_m_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knkm_specialization_at_alpha_zero() {
        let v = lambda_knkm(6, 2, 1, 0.0).unwrap();
        assert!((v - (4.0 + 24f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((v - 4.449489743).abs() < 1e-9);
        assert!((max_radius_vertex_connectivity(6, 2, 0.0).unwrap() - v).abs() < 1e-12);
    }

    #[test]
    fn second_max_agrees_with_knkm() {
        for n in 3..=12 {
            for i in 0..10 {
                let a = i as f64 / 10.0;
                let s = second_max_radius(n, a).unwrap();
                let k = lambda_knkm(n, n - 2, 1, a).unwrap();
                assert!((s - k).abs() < 1e-12, "n={n} a={a}");
            }
            let nf = n as f64;
            let at_zero = (nf - 2.0 + (nf * nf - 4.0).sqrt()) / 2.0;
            assert!((second_max_radius(n, 0.0).unwrap() - at_zero).abs() < 1e-12);
        }
        assert!(second_max_radius(2, 0.0).is_err());
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare_m_extremes(8, 3, 0.0).unwrap().verdict, MVerdict::Tie);
        let c = compare_m_extremes(8, 3, 0.5).unwrap();
        assert_eq!(c.verdict, MVerdict::MMax);
        assert!(c.at_m_max > c.at_m_one);
        assert_eq!(compare_m_extremes(5, 3, 0.7).unwrap().verdict, MVerdict::Tie);
    }

    #[test]
    fn closed_form_for_vertex_connectivity_matches_mmax() {
        for n in 4..=12 {
            for k in 1..=n - 2 {
                for i in 1..10 {
                    let a = i as f64 / 10.0;
                    let closed = max_radius_vertex_connectivity(n, k, a).unwrap();
                    let direct = lambda_knkm(n, k, n - k - 1, a).unwrap();
                    assert!((closed - direct).abs() < 1e-10, "n={n} k={k} a={a}");
                }
            }
        }
    }

    #[test]
    fn range_checks() {
        assert!(lambda_knkm(5, 4, 1, 0.0).is_err());
        assert!(lambda_knkm(5, 2, 3, 0.0).is_err());
        assert!(lambda_knkm(5, 2, 0, 0.0).is_err());
        assert!(lambda_knkm(5, 2, 1, 1.0).is_err());
    }
}
