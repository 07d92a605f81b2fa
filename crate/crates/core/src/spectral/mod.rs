//! The Aα matrix `αD + (1−α)A`, its Perron root and vector by shifted power
//! iteration with a Collatz–Wielandt enclosure, and equitable quotients.

mod charpoly;
mod quotient;

use serde::Serialize;

use crate::digraph::{is_strongly_connected, strong_components, Digraph};
use crate::error::{Error, Result};

pub use charpoly::{characteristic_polynomial, poly_eval, poly_remainder};
pub use quotient::{quotient_matrix, QuotientMatrix};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITERS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions {
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions {
            tol: DEFAULT_TOL,
            max_iters: DEFAULT_MAX_ITERS,
        }
    }
}

impl PowerOptions {
    pub fn with_tol(tol: f64) -> Self {
        PowerOptions {
            tol,
            ..Default::default()
        }
    }
}

/// Dense row-major `αD(G) + (1−α)A(G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaMatrix {
    n: usize,
    alpha: f64,
    entries: Vec<f64>,
}

pub fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

pub fn alpha_matrix(g: &Digraph, alpha: f64) -> Result<AlphaMatrix> {
    check_alpha(alpha)?;
    let n = g.order();
    let mut entries = vec![0.0; n * n];
    for i in 0..n {
        entries[i * n + i] = alpha * g.out_degree(i) as f64;
    }
    for (u, v) in g.arcs() {
        entries[u * n + v] = 1.0 - alpha;
    }
    Ok(AlphaMatrix { n, alpha, entries })
}

impl AlphaMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.entries[i * self.n..(i + 1) * self.n].iter().sum()
    }

    /// Principal submatrix on `rows` (in the given order).
    pub fn principal(&self, rows: &[usize]) -> Vec<f64> {
        rows.iter()
            .flat_map(|&i| rows.iter().map(move |&j| self.get(i, j)))
            .collect()
    }
}

/// Perron data with a Collatz–Wielandt enclosure of the spectral radius.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub radius: f64,
    /// Positive, unit 1-norm.
    pub perron_vector: Vec<f64>,
    pub certificate_lo: f64,
    pub certificate_hi: f64,
    pub iterations: usize,
}

impl SpectralResult {
    pub fn width(&self) -> f64 {
        self.certificate_hi - self.certificate_lo
    }
}

fn mul_vec(n: usize, m: &[f64], x: &[f64], y: &mut [f64]) {
    for (i, yi) in y.iter_mut().enumerate() {
        *yi = m[i * n..(i + 1) * n]
            .iter()
            .zip(x)
            .map(|(a, b)| a * b)
            .sum();
    }
}

/// Collatz–Wielandt quotients `(Mx)_i / x_i` reduced to their min and max.
/// For nonnegative `M` and positive `x` these bracket ρ(M).
pub fn collatz_wielandt(n: usize, m: &[f64], x: &[f64]) -> Result<(f64, f64)> {
    if m.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            got: m.len(),
        });
    }
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    if let Some((index, &value)) = x.iter().enumerate().find(|(_, &v)| !(v > 0.0)) {
        return Err(Error::NonPositiveVector { index, value });
    }
    let mut y = vec![0.0; n];
    mul_vec(n, m, x, &mut y);
    Ok(y.iter()
        .zip(x)
        .map(|(a, b)| a / b)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r), hi.max(r))
        }))
}

pub fn collatz_wielandt_bounds(m: &AlphaMatrix, x: &[f64]) -> Result<(f64, f64)> {
    collatz_wielandt(m.n, &m.entries, x)
}

/// Power iteration on `M + I` for a nonnegative square matrix. Stops once
/// the Collatz–Wielandt interval of the shifted matrix is no wider than
/// `opts.tol`, then undoes the shift.
///
/// The shift makes an irreducible `M` primitive, so periodic matrices
/// (directed cycles at α = 0) converge instead of oscillating.
pub fn perron_root(
    n: usize,
    m: &[f64],
    start: Option<&[f64]>,
    opts: &PowerOptions,
) -> Result<SpectralResult> {
    if !(opts.tol > 0.0) {
        return Err(Error::BadTolerance(opts.tol));
    }
    if m.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            got: m.len(),
        });
    }
    let mut x: Vec<f64> = match start {
        Some(s) => {
            if s.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: s.len(),
                });
            }
            if let Some((index, &value)) = s.iter().enumerate().find(|(_, &v)| !(v > 0.0)) {
                return Err(Error::NonPositiveVector { index, value });
            }
            s.to_vec()
        }
        None => vec![1.0; n],
    };
    let norm: f64 = x.iter().sum();
    x.iter_mut().for_each(|v| *v /= norm);

    let mut y = vec![0.0; n];
    let (mut lo, mut hi) = (f64::NAN, f64::NAN);
    for iter in 1..=opts.max_iters {
        mul_vec(n, m, &x, &mut y);
        lo = f64::INFINITY;
        hi = f64::NEG_INFINITY;
        let mut total = 0.0;
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += xi;
            let r = *yi / xi;
            lo = lo.min(r);
            hi = hi.max(r);
            total += *yi;
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / total;
        }
        if hi - lo <= opts.tol {
            return Ok(SpectralResult {
                radius: 0.5 * (lo + hi) - 1.0,
                perron_vector: x,
                certificate_lo: lo - 1.0,
                certificate_hi: hi - 1.0,
                iterations: iter,
            });
        }
    }
    Err(Error::NoConvergence {
        iterations: opts.max_iters,
        lo: lo - 1.0,
        hi: hi - 1.0,
    })
}

/// λα(G) for a strongly connected digraph.
pub fn spectral_radius(g: &Digraph, alpha: f64, opts: &PowerOptions) -> Result<SpectralResult> {
    spectral_radius_from(g, alpha, None, opts)
}

pub fn spectral_radius_from(
    g: &Digraph,
    alpha: f64,
    start: Option<&[f64]>,
    opts: &PowerOptions,
) -> Result<SpectralResult> {
    let m = alpha_matrix(g, alpha)?;
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected("Perron data undefined"));
    }
    perron_root(m.n, &m.entries, start, opts)
}

/// Enclosure of a spectral radius without Perron data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusBounds {
    pub radius: f64,
    pub lo: f64,
    pub hi: f64,
}

/// ρ(Aα(G)) for any digraph: the maximum over the principal submatrices of
/// the strong components. A singleton component contributes its diagonal
/// entry α·d⁺.
pub fn spectral_radius_general(
    g: &Digraph,
    alpha: f64,
    opts: &PowerOptions,
) -> Result<RadiusBounds> {
    let m = alpha_matrix(g, alpha)?;
    let mut best = RadiusBounds {
        radius: f64::NEG_INFINITY,
        lo: f64::NEG_INFINITY,
        hi: f64::NEG_INFINITY,
    };
    for comp in strong_components(g) {
        let b = if comp.len() == 1 {
            let d = m.get(comp[0], comp[0]);
            RadiusBounds {
                radius: d,
                lo: d,
                hi: d,
            }
        } else {
            let sub = m.principal(&comp);
            let r = perron_root(comp.len(), &sub, None, opts)?;
            RadiusBounds {
                radius: r.radius,
                lo: r.certificate_lo,
                hi: r.certificate_hi,
            }
        };
        if b.radius > best.radius {
            best.radius = b.radius;
        }
        best.lo = best.lo.max(b.lo);
        best.hi = best.hi.max(b.hi);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Digraph {
        Digraph::from_arcs(
            n,
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))),
        )
        .unwrap()
    }

    #[test]
    fn alpha_matrix_examples() {
        let m = alpha_matrix(&cycle(3), 0.5).unwrap();
        for i in 0..3 {
            assert_eq!(m.get(i, i), 0.5);
            assert_eq!(m.get(i, (i + 1) % 3), 0.5);
            assert_eq!(m.row_sum(i), 1.0);
        }
        let a = alpha_matrix(&complete(3), 0.0).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.get(i, j), if i == j { 0.0 } else { 1.0 });
            }
        }
        let q = alpha_matrix(&complete(3), 0.5).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q.get(i, j), if i == j { 1.0 } else { 0.5 });
            }
        }
    }

    #[test]
    fn alpha_out_of_range() {
        assert_eq!(
            alpha_matrix(&cycle(3), 1.0),
            Err(Error::AlphaOutOfRange(1.0))
        );
        assert!(alpha_matrix(&cycle(3), -0.1).is_err());
        assert!(alpha_matrix(&cycle(3), f64::NAN).is_err());
    }

    #[test]
    fn cycles_and_completes() {
        for &alpha in &[0.0, 0.3, 0.9] {
            let r = spectral_radius(&cycle(6), alpha, &PowerOptions::with_tol(1e-12)).unwrap();
            assert_eq!(r.radius, 1.0);
            assert_eq!(r.iterations, 1);
            let r = spectral_radius(&complete(5), alpha, &PowerOptions::with_tol(1e-12)).unwrap();
            assert!((r.radius - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn enclosure_contains_radius() {
        let g = complete(4).edit(&[(0, 1), (2, 3)], &[]).unwrap();
        let r = spectral_radius(&g, 0.25, &PowerOptions::default()).unwrap();
        assert!(r.certificate_lo <= r.radius && r.radius <= r.certificate_hi);
        assert!(r.width() <= 1e-10);
        assert!(r.perron_vector.iter().all(|&x| x > 0.0));
        assert!((r.perron_vector.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn not_strongly_connected_is_rejected() {
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            spectral_radius(&path, 0.5, &PowerOptions::default()),
            Err(Error::NotStronglyConnected(_))
        ));
    }

    #[test]
    fn non_convergence_reports_interval() {
        let g = complete(4).edit(&[(0, 1)], &[]).unwrap();
        let opts = PowerOptions {
            tol: 1e-14,
            max_iters: 2,
        };
        match spectral_radius(&g, 0.0, &opts) {
            Err(Error::NoConvergence { iterations, lo, hi }) => {
                assert_eq!(iterations, 2);
                assert!(lo < hi);
            }
            other => panic!("{other:?}"),
        }
        assert!(spectral_radius(&g, 0.0, &PowerOptions::with_tol(0.0)).is_err());
    }

    #[test]
    fn collatz_wielandt_examples() {
        let m = alpha_matrix(&cycle(4), 0.4).unwrap();
        assert_eq!(collatz_wielandt_bounds(&m, &[1.0; 4]).unwrap(), (1.0, 1.0));
        assert!(matches!(
            collatz_wielandt_bounds(&m, &[1.0, 0.0, 1.0, 1.0]),
            Err(Error::NonPositiveVector { index: 1, .. })
        ));
        let g = complete(4).edit(&[(0, 1)], &[]).unwrap();
        let m = alpha_matrix(&g, 0.3).unwrap();
        let r = spectral_radius(&g, 0.3, &PowerOptions::with_tol(1e-13)).unwrap();
        let (lo, hi) = collatz_wielandt_bounds(&m, &r.perron_vector).unwrap();
        assert!((lo - r.radius).abs() < 1e-12 && (hi - r.radius).abs() < 1e-12);
    }

    #[test]
    fn general_radius_of_reducible_digraphs() {
        // transitive tournament on 4 vertices: every component is a singleton
        let t = Digraph::from_arcs(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))).unwrap();
        let r = spectral_radius_general(&t, 0.5, &PowerOptions::default()).unwrap();
        assert_eq!(r.radius, 1.5);
        let r0 = spectral_radius_general(&t, 0.0, &PowerOptions::default()).unwrap();
        assert_eq!(r0.radius, 0.0);
        // a K3 feeding a 2-cycle: K3's principal block dominates
        let g = complete(3).union(&cycle(2)).edit(&[], &[(0, 3)]).unwrap();
        let r = spectral_radius_general(&g, 0.0, &PowerOptions::default()).unwrap();
        assert!((r.radius - 2.0).abs() < 1e-10);
    }
}
