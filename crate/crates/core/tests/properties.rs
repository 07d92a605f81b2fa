use digraph_alpha::digraph::{
    arc_connectivity, clique_number, girth, is_isomorphic, is_strongly_connected, parse_digraph,
    permute, vertex_connectivity, write_digraph,
};
use digraph_alpha::spectral::{
    alpha_matrix, characteristic_polynomial, collatz_wielandt_bounds, poly_eval, spectral_radius,
    spectral_radius_from, PowerOptions,
};
use digraph_alpha::Digraph;
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

/// A strongly connected digraph: a Hamiltonian cycle in the order given by
/// `perm` plus arbitrary extra arcs.
fn strong_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), n * (n - 1)),
            )
        })
        .prop_map(|(n, perm, extra)| {
            let mut arcs: Vec<(usize, usize)> = (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
            let mut bits = extra.into_iter();
            for u in 0..n {
                for v in 0..n {
                    if u != v && bits.next().unwrap() && !arcs.contains(&(u, v)) {
                        arcs.push((u, v));
                    }
                }
            }
            Digraph::from_arcs(n, arcs).unwrap()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn tight() -> PowerOptions {
    PowerOptions::with_tol(1e-12)
}

fn min_semi_degree(g: &Digraph) -> usize {
    (0..g.order()).map(|v| g.out_degree(v).min(g.in_degree(v))).min().unwrap()
}

fn subsets(items: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, items: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items {
            cur.push(i);
            go(i + 1, items, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, items, size, &mut Vec::new(), &mut out);
    out
}

/// Fewest arcs whose removal leaves a digraph that is not strongly connected.
fn brute_arc_connectivity(g: &Digraph) -> usize {
    let arcs: Vec<_> = g.arcs().collect();
    (0..=arcs.len())
        .find(|&s| {
            subsets(arcs.len(), s).iter().any(|cut| {
                let removed: Vec<_> = cut.iter().map(|&i| arcs[i]).collect();
                !is_strongly_connected(&g.edit(&removed, &[]).unwrap())
            })
        })
        .unwrap()
}

/// Fewest vertices whose removal leaves at least two vertices that are not
/// strongly connected; `n - 1` if there is no such set.
fn brute_vertex_connectivity(g: &Digraph) -> usize {
    let n = g.order();
    (0..n.saturating_sub(1))
        .find(|&s| {
            subsets(n, s).iter().any(|cut| {
                let keep: Vec<usize> = (0..n).filter(|v| !cut.contains(v)).collect();
                !is_strongly_connected(&g.induced(&keep).unwrap())
            })
        })
        .unwrap_or(n - 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_round_trip(g in strong_digraph(8)) {
        let back = parse_digraph(&write_digraph(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn degree_sums(g in strong_digraph(8)) {
        let n = g.order();
        let out: usize = (0..n).map(|v| g.out_degree(v)).sum();
        let inn: usize = (0..n).map(|v| g.in_degree(v)).sum();
        prop_assert_eq!(out, g.arc_count());
        prop_assert_eq!(inn, g.arc_count());
    }

    #[test]
    fn connectivity_against_brute_force(g in strong_digraph(5)) {
        let kappa = vertex_connectivity(&g).unwrap();
        let lambda = arc_connectivity(&g).unwrap();
        prop_assert!(kappa <= lambda);
        prop_assert!(lambda <= min_semi_degree(&g));
        prop_assert_eq!(lambda, brute_arc_connectivity(&g));
        prop_assert_eq!(kappa, brute_vertex_connectivity(&g));
    }

    #[test]
    fn relabeling_preserves_everything(
        (g, perm) in strong_digraph(7).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) }),
        alpha in 0.0..0.99f64,
    ) {
        let h = permute(&g, &perm);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(girth(&g), girth(&h));
        prop_assert_eq!(clique_number(&g), clique_number(&h));
        prop_assert_eq!(vertex_connectivity(&g).unwrap(), vertex_connectivity(&h).unwrap());
        prop_assert_eq!(arc_connectivity(&g).unwrap(), arc_connectivity(&h).unwrap());
        let a = spectral_radius(&g, alpha, &tight()).unwrap();
        let b = spectral_radius(&h, alpha, &tight()).unwrap();
        prop_assert!((a.radius - b.radius).abs() <= 2e-12 * a.radius.max(1.0));
        for (i, &p) in perm.iter().enumerate() {
            prop_assert!((a.perron_vector[i] - b.perron_vector[p]).abs() < 1e-6);
        }
    }

    #[test]
    fn adding_an_arc_never_lowers_the_radius(
        g in strong_digraph(7),
        pick in any::<prop::sample::Index>(),
        alpha in 0.0..0.99f64,
    ) {
        let n = g.order();
        let missing: Vec<_> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && !g.has_arc(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let h = g.edit(&[], &[missing[pick.index(missing.len())]]).unwrap();
        let before = spectral_radius(&g, alpha, &tight()).unwrap();
        let after = spectral_radius(&h, alpha, &tight()).unwrap();
        prop_assert!(after.certificate_hi >= before.certificate_lo);
        prop_assert!(after.radius >= before.radius - 1e-11);
    }

    #[test]
    fn start_vector_does_not_matter(
        g in strong_digraph(7),
        seed in proptest::collection::vec(0.01..10.0f64, 7),
        alpha in 0.0..0.99f64,
    ) {
        let n = g.order();
        let a = spectral_radius(&g, alpha, &tight()).unwrap();
        let b = spectral_radius_from(&g, alpha, Some(&seed[..n]), &tight()).unwrap();
        prop_assert!((a.radius - b.radius).abs() <= 2e-12 * a.radius.max(1.0));
        prop_assert!((a.perron_vector.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        for (x, y) in a.perron_vector.iter().zip(&b.perron_vector) {
            prop_assert!((x - y).abs() < 1e-6);
        }
    }

    #[test]
    fn radius_within_degree_bounds(
        g in strong_digraph(8),
        x in proptest::collection::vec(0.01..10.0f64, 8),
        alpha in 0.0..0.99f64,
    ) {
        let n = g.order();
        let r = spectral_radius(&g, alpha, &tight()).unwrap();
        let min_out = (0..n).map(|v| g.out_degree(v)).min().unwrap() as f64;
        let max_out = (0..n).map(|v| g.out_degree(v)).max().unwrap() as f64;
        prop_assert!(r.radius >= min_out - 1e-9);
        prop_assert!(r.radius <= max_out + 1e-9);
        prop_assert!(r.radius >= alpha * max_out - 1e-9);
        let m = alpha_matrix(&g, alpha).unwrap();
        let (lo, hi) = collatz_wielandt_bounds(&m, &x[..n]).unwrap();
        prop_assert!(lo <= r.radius + 1e-9 && r.radius <= hi + 1e-9);
    }

    #[test]
    fn characteristic_polynomial_vanishes_at_eigenvalues(
        g in strong_digraph(6),
        alpha in 0.0..0.99f64,
    ) {
        let n = g.order();
        let m = alpha_matrix(&g, alpha).unwrap();
        let p = characteristic_polynomial(n, m.entries());
        prop_assert_eq!(p.len(), n + 1);
        let trace: f64 = (0..n).map(|i| m.get(i, i)).sum();
        prop_assert!((p[n - 1] + trace).abs() < 1e-9);
        for mu in DMatrix::from_row_slice(n, n, m.entries()).complex_eigenvalues().iter() {
            let scale = mu.norm().max(1.0).powi(n as i32);
            prop_assert!(poly_eval(&p, *mu).norm() / scale < 1e-7);
        }
        let r = spectral_radius(&g, alpha, &tight()).unwrap().radius;
        prop_assert!(poly_eval(&p, Complex64::new(r, 0.0)).norm() / r.max(1.0).powi(n as i32) < 1e-7);
    }
}
