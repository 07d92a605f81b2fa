//! Acceptance suite. Runs every criterion at its stated tolerance, prints
//! one PASS/FAIL line each and exits non-zero on any failure not listed
//! in `KNOWN_RED`.

use std::time::Instant;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use digraph_alpha::digraph::{is_isomorphic, is_strongly_connected, Digraph};
use digraph_alpha::families::{
    b_nd, brualdi_li_tournament, c_ng, extremal_tournament, k_nkm, k_nkm_partition, rotational_tournament,
};
use digraph_alpha::formulas::lambda_knkm;
use digraph_alpha::oracle::{
    enumerate_strong, explore_on_survey, verify_on_survey, verify_theorem, Mode, Parameter, ScanConfig, Status,
    Survey, TheoremId,
};
use digraph_alpha::spectral::{
    alpha_matrix, characteristic_polynomial, poly_eval, poly_remainder, quotient_matrix, spectral_radius,
    spectral_radius_general, PowerOptions,
};
use digraph_alpha::transforms::{redirect_in_arcs, subdivide_arc};

type Outcome = Result<String, String>;

/// Criteria that cannot hold as stated. Criterion 8 asks for a margin of
/// 1e-9, but for B(12,d), d = 5, 6, 7 at alpha = 0 the exact gaps are
/// about 1.5e-10, 1.1e-10 and 3.4e-10. They still print FAIL.
const KNOWN_RED: [usize; 1] = [8];

const THEOREM_ALPHAS: [f64; 4] = [0.0, 0.3, 0.5, 0.7];
const EXPLORE_ALPHAS: [f64; 4] = [0.0, 0.25, 0.5, 0.75];

struct Surveys {
    /// Orders 2..=5, each over THEOREM_ALPHAS followed by EXPLORE_ALPHAS
    /// values not already present.
    by_order: Vec<Survey>,
}

impl Surveys {
    fn build() -> Self {
        let mut alphas = THEOREM_ALPHAS.to_vec();
        alphas.extend(EXPLORE_ALPHAS.iter().filter(|a| !THEOREM_ALPHAS.contains(a)));
        let by_order = (2..=5)
            .map(|n| Survey::build(n, &alphas, &ScanConfig::default()).expect("scan"))
            .collect();
        Surveys { by_order }
    }

    fn at(&self, n: usize) -> &Survey {
        &self.by_order[n - 2]
    }
}

fn alpha_grid() -> Vec<f64> {
    (0..10).map(|i| i as f64 / 10.0).collect()
}

fn opts() -> PowerOptions {
    PowerOptions::default()
}

/// Runs `id` on the survey restricted to `alphas` and demands confirmation.
fn confirmed(id: TheoremId, survey: &Survey, alphas: &[f64]) -> Result<usize, String> {
    let v = verify_on_survey(id, survey).map_err(|e| e.to_string())?;
    let relevant: Vec<_> = v.checks.iter().filter(|c| alphas.contains(&c.alpha)).collect();
    if relevant.is_empty() {
        return Err(format!("{id} n={}: no cases", survey.n));
    }
    if let Some(c) = relevant.iter().find(|c| c.status != Status::Confirmed) {
        return Err(format!("{id} n={} alpha={} {}: {:?} {}", survey.n, c.alpha, c.case, c.status, c.detail));
    }
    Ok(relevant.len())
}

fn c1_formula_agreement() -> Outcome {
    let mut cases = 0;
    let mut worst = 0.0f64;
    for n in 4..=12 {
        for k in 1..=n - 2 {
            for m in 1..n - k {
                let g = k_nkm(n, k, m).map_err(|e| e.to_string())?;
                for &a in &alpha_grid() {
                    let f = lambda_knkm(n, k, m, a).map_err(|e| e.to_string())?;
                    let r = spectral_radius(&g, a, &opts()).map_err(|e| e.to_string())?;
                    let err = (f - r.radius).abs();
                    if err > 1e-8 || f < r.certificate_lo - 1e-8 || f > r.certificate_hi + 1e-8 {
                        return Err(format!("K({n},{k},{m}) alpha={a}: formula {f} vs {}", r.radius));
                    }
                    worst = worst.max(err);
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} cases, max |error| {worst:.2e}"))
}

fn c2_girth(s: &Surveys) -> Outcome {
    let mut cases = 0;
    for n in 3..=5 {
        cases += confirmed(TheoremId::T3_1, s.at(n), &THEOREM_ALPHAS)?;
    }
    Ok(format!("{cases} (n, alpha, g) cases: unique minimizer C(n,g), radius > 1 + 1e-9"))
}

fn c3_clique(s: &Surveys) -> Outcome {
    let mut cases = 0;
    for n in 3..=5 {
        cases += confirmed(TheoremId::T4_1, s.at(n), &THEOREM_ALPHAS)?;
    }
    Ok(format!("{cases} (n, alpha, d) cases: unique minimizer B(n,d)"))
}

/// Independent count of maximizing classes for the connectivity groups.
fn maximizer_class_counts(survey: &Survey, param: Parameter) -> Result<(), String> {
    let n = survey.n;
    for &alpha in &THEOREM_ALPHAS {
        let ai = survey.alpha_index(alpha).unwrap();
        let report = survey.report(ai, param, Mode::Max);
        for k in 1..=n - 2 {
            let group = report.group(k).ok_or(format!("{param:?} n={n} k={k}: empty"))?;
            let expected = if alpha == 0.0 && n - k - 1 != 1 { 2 } else { 1 };
            if group.classes.len() != expected {
                return Err(format!(
                    "{param:?} n={n} k={k} alpha={alpha}: {} maximizing classes, expected {expected}",
                    group.classes.len()
                ));
            }
        }
    }
    Ok(())
}

fn c4_vertex_connectivity(s: &Surveys) -> Outcome {
    let mut cases = 0;
    for n in 4..=5 {
        cases += confirmed(TheoremId::T5_3, s.at(n), &THEOREM_ALPHAS)?;
        maximizer_class_counts(s.at(n), Parameter::VertexConn)?;
    }
    Ok(format!("{cases} (n, alpha, k) cases: maximizers and closed form agree"))
}

fn c5_second_max(s: &Surveys) -> Outcome {
    let mut cases = 0;
    for n in 4..=5 {
        cases += confirmed(TheoremId::R5_1, s.at(n), &[0.0, 0.5])?;
    }
    Ok(format!("{cases} (n, alpha) cases: second maximum attained only by K(n,n-2,1)"))
}

fn c6_arc_connectivity(s: &Surveys) -> Outcome {
    let mut cases = 0;
    for n in 4..=5 {
        for id in [TheoremId::T6_3, TheoremId::T6_4] {
            cases += confirmed(id, s.at(n), &THEOREM_ALPHAS)?;
        }
        maximizer_class_counts(s.at(n), Parameter::ArcConn)?;
        maximizer_class_counts(s.at(n), Parameter::ArcConnTight)?;
    }
    Ok(format!("{cases} cases over both arc-connectivity groupings"))
}

fn c7_regular_minimum(s: &Surveys) -> Outcome {
    let mut cases = 0;
    for n in 4..=5 {
        cases += confirmed(TheoremId::T6_5, s.at(n), &THEOREM_ALPHAS)?;
    }
    Ok(format!("{cases} cases: minimum k, attained only by k-regular digraphs"))
}

/// Primed minus unprimed radius for every legal parameter, n <= 12.
fn c8_primed(_: &Surveys) -> Outcome {
    let tight = PowerOptions::with_tol(1e-13);
    let mut cases = 0;
    let mut below = Vec::new();
    for n in 3..=12 {
        for id in [TheoremId::L3_1, TheoremId::L4_1] {
            // strictness itself, certified by disjoint enclosures
            let v = verify_theorem(id, n, &THEOREM_ALPHAS, &ScanConfig::default()).map_err(|e| e.to_string())?;
            if v.status != Status::Confirmed {
                let bad = v.checks.iter().find(|c| c.status != Status::Confirmed).unwrap();
                return Err(format!("{id} n={n} alpha={} {}: {}", bad.alpha, bad.case, bad.detail));
            }
            for p in 2..n {
                let (plain, primed) = if id == TheoremId::L3_1 {
                    (c_ng(n, p, false), c_ng(n, p, true))
                } else {
                    (b_nd(n, p, false), b_nd(n, p, true))
                };
                let (plain, primed) = (plain.map_err(|e| e.to_string())?, primed.map_err(|e| e.to_string())?);
                for &a in &THEOREM_ALPHAS {
                    let gap = spectral_radius(&primed, a, &tight).map_err(|e| e.to_string())?.radius
                        - spectral_radius(&plain, a, &tight).map_err(|e| e.to_string())?.radius;
                    if gap <= 1e-9 {
                        below.push(format!("{id} n={n} p={p} alpha={a} gap={gap:.3e}"));
                    }
                    cases += 1;
                }
            }
        }
    }
    if below.is_empty() {
        Ok(format!("{cases} cases with gap > 1e-9"))
    } else {
        Err(format!(
            "{} of {cases} gaps are positive (certified) but not above 1e-9: {}",
            below.len(),
            below.join("; ")
        ))
    }
}

fn random_strong(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    loop {
        let p = rng.gen_range(0.2..0.8);
        let arcs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v)
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Digraph::from_arcs(n, arcs).unwrap();
        if is_strongly_connected(&g) {
            return g;
        }
    }
}

fn c9_transformations(_: &Surveys) -> Outcome {
    // subdivision on every arc of every strong non-cycle digraph, n <= 5
    let mut subdivisions = 0u64;
    for n in 2..=5 {
        let graphs: Vec<Digraph> = enumerate_strong(n, false).unwrap().map(|(_, g)| g).collect();
        let results: Vec<Result<u64, String>> = graphs
            .par_iter()
            .map(|g| {
                if n >= 3 && g.arc_count() == n {
                    return Ok(0); // directed cycle
                }
                let mut count = 0;
                for a in [0.0, 0.5] {
                    let before = spectral_radius(g, a, &opts()).map_err(|e| e.to_string())?.radius;
                    for arc in g.arcs() {
                        let after = subdivide_arc(g, arc).map_err(|e| e.to_string())?.after;
                        let lam = spectral_radius(&after, a, &opts()).map_err(|e| e.to_string())?.radius;
                        if lam > before + 1e-9 {
                            return Err(format!("subdividing {arc:?} of {g:?} at alpha={a}: {before} -> {lam}"));
                        }
                        count += 1;
                    }
                }
                Ok(count)
            })
            .collect();
        for r in results {
            subdivisions += r?;
        }
    }

    // redirection towards a vertex with larger Perron entry
    let mut rng = ChaCha8Rng::seed_from_u64(0x2_6);
    let mut redirections = 0;
    let mut strict = 0;
    while redirections < 200 {
        let n = rng.gen_range(3..=7);
        let g = random_strong(&mut rng, n);
        let alpha = [0.0, 0.3, 0.5, 0.7][rng.gen_range(0..4)];
        let r = spectral_radius(&g, alpha, &opts()).map_err(|e| e.to_string())?;
        let x = &r.perron_vector;
        let (p, q) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if p == q || x[q] < x[p] {
            continue;
        }
        let eligible: Vec<usize> = g
            .in_neighbors(p)
            .into_iter()
            .filter(|&t| t != q && !g.has_arc(t, q))
            .collect();
        if eligible.is_empty() {
            continue;
        }
        let take = rng.gen_range(1..=eligible.len());
        let tails = &eligible[..take];
        let h = redirect_in_arcs(&g, p, q, tails).map_err(|e| e.to_string())?.after;
        let lam_h = spectral_radius_general(&h, alpha, &opts()).map_err(|e| e.to_string())?.radius;
        if lam_h < r.radius - 1e-9 {
            return Err(format!("redirect p={p} q={q} tails={tails:?} of {g:?}: {} -> {lam_h}", r.radius));
        }
        if is_strongly_connected(&h) && x[q] - x[p] > 1e-6 {
            if lam_h <= r.radius + 1e-12 {
                return Err(format!("strict increase missing: p={p} q={q} of {g:?}"));
            }
            strict += 1;
        }
        redirections += 1;
    }
    Ok(format!(
        "{subdivisions} subdivisions never increase; {redirections} redirections never decrease ({strict} strict)"
    ))
}

fn c10_bounds(s: &Surveys) -> Outcome {
    let mut checked = 0;
    for survey in &s.by_order {
        for &alpha in &THEOREM_ALPHAS {
            let b = survey.bounds(survey.alpha_index(alpha).unwrap());
            if b.violation_count > 0 {
                return Err(format!("n={} alpha={alpha}: {:?}", survey.n, b.violations[0]));
            }
            checked += b.checked;
        }
    }
    Ok(format!("{checked} (digraph, alpha) pairs satisfy every bound and equality case"))
}

fn c11_quotients(_: &Surveys) -> Outcome {
    let mut quotients = 0;
    let mut eigen_checks = 0;
    let mut worst = 0.0f64;
    for n in 3..=10 {
        for k in 1..=n - 2 {
            for m in 1..n - k {
                let g = k_nkm(n, k, m).map_err(|e| e.to_string())?;
                for &a in &alpha_grid() {
                    let am = alpha_matrix(&g, a).map_err(|e| e.to_string())?;
                    let q = quotient_matrix(&am, &k_nkm_partition(n, k, m)).map_err(|e| e.to_string())?;
                    let rq = q.spectral_radius(&opts()).map_err(|e| e.to_string())?.radius;
                    let rg = spectral_radius(&g, a, &opts()).map_err(|e| e.to_string())?.radius;
                    if (rq - rg).abs() > 1e-9 {
                        return Err(format!("K({n},{k},{m}) alpha={a}: quotient {rq} vs {rg}"));
                    }
                    quotients += 1;
                    if n > 8 {
                        continue;
                    }
                    let full = characteristic_polynomial(n, am.entries());
                    let eig = DMatrix::from_row_slice(3, 3, &q.entries).complex_eigenvalues();
                    for mu in eig.iter() {
                        let mu = Complex64::new(mu.re, mu.im);
                        let r = mu.norm().max(1.0);
                        let scale: f64 = full.iter().enumerate().map(|(i, c)| c.abs() * r.powi(i as i32)).sum();
                        let rel = poly_eval(&full, mu).norm() / scale;
                        if rel > 1e-6 {
                            return Err(format!("K({n},{k},{m}) alpha={a}: |p({mu})| scaled {rel:e}"));
                        }
                        worst = worst.max(rel);
                        eigen_checks += 1;
                    }
                    // multiplicities: the quotient polynomial divides the full one
                    let small = characteristic_polynomial(3, &q.entries);
                    let rem = poly_remainder(&full, &small);
                    let size = full.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
                    let rem_max = rem.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
                    if rem_max > 1e-6 * size {
                        return Err(format!("K({n},{k},{m}) alpha={a}: remainder {rem_max:e}"));
                    }
                }
            }
        }
    }
    Ok(format!(
        "{quotients} equitable quotients with matching radius; {eigen_checks} quotient eigenvalues are roots (max scaled |p| {worst:.1e})"
    ))
}

fn c12_tournaments(_: &Surveys) -> Outcome {
    let mut parts = Vec::new();
    for n in 3..=6 {
        let best = extremal_tournament(n, 0.0, &opts()).map_err(|e| e.to_string())?;
        let generator = if n % 2 == 1 {
            rotational_tournament(n)
        } else {
            brualdi_li_tournament(n)
        }
        .map_err(|e| e.to_string())?;
        let lam = spectral_radius(&generator, 0.0, &opts()).map_err(|e| e.to_string())?.radius;
        if (best.radius - lam).abs() > 1e-9 {
            return Err(format!("n={n}: brute force {} vs generator {lam}", best.radius));
        }
        if !is_isomorphic(&best.digraph, &generator) {
            return Err(format!("n={n}: maximizer not isomorphic to the generator"));
        }
        parts.push(format!("n={n}: {lam:.10}"));
    }
    Ok(parts.join(", "))
}

fn c13_exploration(s: &Surveys) -> Outcome {
    let mut rows = 0;
    let mut worst_zero = 0.0f64;
    let mut table = String::new();
    for n in 2..=5 {
        let ds: Vec<usize> = (1..n).collect();
        let mut report = explore_on_survey(s.at(n), &ds, &ScanConfig::default()).map_err(|e| e.to_string())?;
        report.rows.retain(|r| EXPLORE_ALPHAS.contains(&r.alpha));
        rows += report.rows.len();
        if let Some(g) = report.max_gap_at_zero() {
            worst_zero = worst_zero.max(g);
        }
        table.push_str(&report.to_string());
    }
    print!("{table}");
    if worst_zero > 1e-8 {
        return Err(format!("alpha = 0 gap {worst_zero:e} exceeds 1e-8"));
    }
    Ok(format!("{rows} rows; largest alpha = 0 gap {worst_zero:.1e}"))
}

fn main() {
    let start = Instant::now();
    let surveys = Surveys::build();
    println!(
        "scanned {} strongly connected digraphs (n = 2..5) in {:.1?}",
        surveys.by_order.iter().map(|s| s.strong_count).sum::<u64>(),
        start.elapsed()
    );
    let criteria: [(&str, fn(&Surveys) -> Outcome); 13] = [
        ("formula agreement", |_| c1_formula_agreement()),
        ("girth minimum", c2_girth),
        ("clique minimum", c3_clique),
        ("vertex connectivity maximum", c4_vertex_connectivity),
        ("second maximum", c5_second_max),
        ("arc connectivity maximum", c6_arc_connectivity),
        ("k-regular minimum", c7_regular_minimum),
        ("primed strict inequalities", c8_primed),
        ("transformation monotonicity", c9_transformations),
        ("bound suite", c10_bounds),
        ("quotient machinery", c11_quotients),
        ("tournament generators", c12_tournaments),
        ("G0 exploration", c13_exploration),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check(&surveys) {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{:.1?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed.push(i + 1);
                println!("FAIL {:>2} {name}: {why} [{:.1?}]", i + 1, t.elapsed());
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1?}",
        criteria.len() - failed.len(),
        criteria.len(),
        start.elapsed()
    );
    let unexpected: Vec<usize> = failed.iter().copied().filter(|c| !KNOWN_RED.contains(c)).collect();
    for c in KNOWN_RED.iter().filter(|c| failed.contains(c)) {
        println!("criterion {c} is red as expected: its stated margin is not attainable");
    }
    for c in KNOWN_RED.iter().filter(|c| !failed.contains(c)) {
        println!("criterion {c} was expected to be red but passed");
    }
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
