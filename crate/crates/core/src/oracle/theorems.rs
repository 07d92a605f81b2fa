use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::report::GroupReport;
use super::survey::{Mode, Parameter, Survey};
use super::{ScanConfig, ATTAIN_TOL};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::families::{b_nd, c_ng, circulant, k_nkm};
use crate::formulas::{max_radius_vertex_connectivity, second_max_radius};
use crate::spectral::{check_alpha, spectral_radius, PowerOptions};

/// Largest order for the family-backed strict inequalities.
pub const MAX_FAMILY_ORDER: usize = 12;
/// Certificate width for the primed-family strict inequalities. Some gaps
/// at n = 12 are near 1e-10, so the intervals have to be much narrower.
const STRICT_TOL: f64 = 1e-13;
/// Matching tolerance for the k-regular minimum.
const REGULAR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Minimum radius at given girth is attained only by `C_{n,g}`.
    T3_1,
    /// Minimum radius at given clique number is attained only by `B_{n,d}`.
    T4_1,
    /// Maximum at given vertex connectivity: `K(n,k,1)` and `K(n,k,n-k-1)`
    /// at α = 0, only `K(n,k,n-k-1)` for α > 0.
    T5_3,
    /// Same maximizers over arc connectivity `k` with δ⁰ = k.
    T6_3,
    /// Same maximizers over arc connectivity `k`.
    T6_4,
    /// Minimum at connectivity `k` is `k`, attained only by k-regular digraphs.
    T6_5,
    /// Second-largest radius overall, attained only by `K(n,n-2,1)`.
    R5_1,
    /// λα(C′_{n,g}) > λα(C_{n,g}).
    L3_1,
    /// λα(B′_{n,d}) > λα(B_{n,d}).
    L4_1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::T3_1,
        TheoremId::T4_1,
        TheoremId::T5_3,
        TheoremId::T6_3,
        TheoremId::T6_4,
        TheoremId::T6_5,
        TheoremId::R5_1,
        TheoremId::L3_1,
        TheoremId::L4_1,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::T3_1 => "T3.1",
            TheoremId::T4_1 => "T4.1",
            TheoremId::T5_3 => "T5.3",
            TheoremId::T6_3 => "T6.3",
            TheoremId::T6_4 => "T6.4",
            TheoremId::T6_5 => "T6.5",
            TheoremId::R5_1 => "R5.1",
            TheoremId::L3_1 => "L3.1",
            TheoremId::L4_1 => "L4.1",
        }
    }

    /// Whether the check needs the exhaustive scan.
    pub fn needs_enumeration(self) -> bool {
        !matches!(self, TheoremId::L3_1 | TheoremId::L4_1)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Confirmed,
    Violated,
    Vacuous,
}

/// One case of a verdict (one α and one parameter value).
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub alpha: f64,
    pub case: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationVerdict {
    pub theorem: TheoremId,
    pub n: usize,
    pub alphas: Vec<f64>,
    pub status: Status,
    /// Present exactly when `status` is `Violated`.
    pub witness: Option<Digraph>,
    pub checks: Vec<Check>,
}

struct Collector {
    checks: Vec<Check>,
    witness: Option<Digraph>,
}

impl Collector {
    fn new() -> Self {
        Collector {
            checks: Vec::new(),
            witness: None,
        }
    }

    fn vacuous(&mut self, alpha: f64, case: String, detail: impl Into<String>) {
        self.checks.push(Check {
            alpha,
            case,
            status: Status::Vacuous,
            detail: detail.into(),
        });
    }

    fn outcome(&mut self, alpha: f64, case: String, failure: Option<(String, Digraph)>, ok: String) {
        let (status, detail) = match failure {
            None => (Status::Confirmed, ok),
            Some((why, witness)) => {
                self.witness.get_or_insert(witness);
                (Status::Violated, why)
            }
        };
        self.checks.push(Check {
            alpha,
            case,
            status,
            detail,
        });
    }

    fn finish(self, theorem: TheoremId, n: usize, alphas: &[f64]) -> VerificationVerdict {
        let status = if self.checks.iter().any(|c| c.status == Status::Violated) {
            Status::Violated
        } else if self.checks.iter().all(|c| c.status == Status::Vacuous) {
            Status::Vacuous
        } else {
            Status::Confirmed
        };
        VerificationVerdict {
            theorem,
            n,
            alphas: alphas.to_vec(),
            status,
            witness: if status == Status::Violated { self.witness } else { None },
            checks: self.checks,
        }
    }
}

/// Verifies `id` at order `n` for every α in `alphas`. Enumeration-backed
/// ids scan all strongly connected digraphs; the primed-family inequalities
/// only need the generators.
pub fn verify_theorem(
    id: TheoremId,
    n: usize,
    alphas: &[f64],
    cfg: &ScanConfig,
) -> Result<VerificationVerdict> {
    if id.needs_enumeration() {
        let survey = Survey::build(n, alphas, cfg)?;
        verify_on_survey(id, &survey)
    } else {
        verify_primed(id, n, alphas, &cfg.opts)
    }
}

/// Evaluates an id against an existing scan (so one scan serves many ids).
pub fn verify_on_survey(id: TheoremId, survey: &Survey) -> Result<VerificationVerdict> {
    if !id.needs_enumeration() {
        return verify_primed(id, survey.n, &survey.alphas, &Default::default());
    }
    let n = survey.n;
    let mut out = Collector::new();
    for ai in 0..survey.alphas.len() {
        match id {
            TheoremId::T3_1 => {
                for g in 2..n {
                    unique_minimizer(&mut out, survey, ai, Parameter::Girth, g, &c_ng(n, g, false)?, "g")?;
                }
            }
            TheoremId::T4_1 => {
                for d in 2..n {
                    unique_minimizer(&mut out, survey, ai, Parameter::Clique, d, &b_nd(n, d, false)?, "d")?;
                }
            }
            TheoremId::T5_3 => connectivity_maximizers(&mut out, survey, ai, Parameter::VertexConn)?,
            TheoremId::T6_3 => connectivity_maximizers(&mut out, survey, ai, Parameter::ArcConnTight)?,
            TheoremId::T6_4 => connectivity_maximizers(&mut out, survey, ai, Parameter::ArcConn)?,
            TheoremId::T6_5 => {
                for param in [Parameter::VertexConn, Parameter::ArcConn] {
                    regular_minimum(&mut out, survey, ai, param)?;
                }
            }
            TheoremId::R5_1 => second_maximum(&mut out, survey, ai)?,
            TheoremId::L3_1 | TheoremId::L4_1 => unreachable!(),
        }
    }
    Ok(out.finish(id, n, &survey.alphas))
}

fn radius(g: &Digraph, alpha: f64) -> Result<f64> {
    Ok(spectral_radius(g, alpha, &PowerOptions::default())?.radius)
}

/// First attaining representative not isomorphic to any expected digraph,
/// or else the first expected digraph missing from the attaining classes.
fn class_mismatch(group: &GroupReport, expected: &[Digraph]) -> Option<(String, Digraph)> {
    use crate::digraph::is_isomorphic;
    if let Some(c) = group
        .classes
        .iter()
        .find(|c| !expected.iter().any(|e| is_isomorphic(&c.representative, e)))
    {
        return Some((
            format!("unexpected attaining class (code {})", c.code),
            c.representative.clone(),
        ));
    }
    expected
        .iter()
        .find(|e| !group.classes.iter().any(|c| is_isomorphic(&c.representative, e)))
        .map(|e| ("expected extremal digraph does not attain".to_string(), e.clone()))
}

fn unique_minimizer(
    out: &mut Collector,
    survey: &Survey,
    ai: usize,
    param: Parameter,
    key: usize,
    expected: &Digraph,
    sym: &str,
) -> Result<()> {
    let alpha = survey.alphas[ai];
    let case = format!("{sym}={key}");
    let Some(ext) = survey.group(ai, param, Mode::Min, key) else {
        out.vacuous(alpha, case, "class is empty");
        return Ok(());
    };
    let group = GroupReport::from_extremum(survey.n, key, ext);
    let family_value = radius(expected, alpha)?;
    let rep = group.classes[0].representative.clone();
    let failure = class_mismatch(&group, std::slice::from_ref(expected))
        .or_else(|| {
            ((group.extremum - family_value).abs() > ATTAIN_TOL).then(|| {
                (format!("minimum {} differs from family value {family_value}", group.extremum), rep.clone())
            })
        })
        .or_else(|| {
            (group.extremum <= 1.0 + 1e-9)
                .then(|| (format!("minimum {} is not above 1", group.extremum), rep))
        });
    out.outcome(
        alpha,
        case,
        failure,
        format!("min {:.12} attained by one class", group.extremum),
    );
    Ok(())
}

fn connectivity_maximizers(out: &mut Collector, survey: &Survey, ai: usize, param: Parameter) -> Result<()> {
    let n = survey.n;
    let alpha = survey.alphas[ai];
    for k in 1..=n.saturating_sub(2) {
        let case = format!("k={k}");
        let Some(ext) = survey.group(ai, param, Mode::Max, k) else {
            out.vacuous(alpha, case, "class is empty");
            continue;
        };
        let group = GroupReport::from_extremum(n, k, ext);
        let mut expected = vec![k_nkm(n, k, n - k - 1)?];
        if alpha == 0.0 {
            expected.push(k_nkm(n, k, 1)?);
        }
        let closed = max_radius_vertex_connectivity(n, k, alpha)?;
        let rep = group.classes[0].representative.clone();
        let failure = class_mismatch(&group, &expected).or_else(|| {
            ((group.extremum - closed).abs() > ATTAIN_TOL)
                .then(|| (format!("maximum {} differs from closed form {closed}", group.extremum), rep))
        });
        out.outcome(
            alpha,
            case,
            failure,
            format!("max {:.12} over {} class(es)", group.extremum, group.classes.len()),
        );
    }
    Ok(())
}

fn regular_minimum(out: &mut Collector, survey: &Survey, ai: usize, param: Parameter) -> Result<()> {
    let n = survey.n;
    let alpha = survey.alphas[ai];
    let tag = if param == Parameter::VertexConn { "kappa" } else { "arc-kappa" };
    for k in 1..=n.saturating_sub(2) {
        let case = format!("{tag}={k}");
        let Some(ext) = survey.group(ai, param, Mode::Min, k) else {
            out.vacuous(alpha, case, "class is empty");
            continue;
        };
        let group = GroupReport::from_extremum(n, k, ext);
        let witness = circulant(n, &(1..=k).collect::<Vec<_>>())?;
        let failure = if (group.extremum - k as f64).abs() > REGULAR_TOL {
            Some((
                format!("minimum {} differs from {k}", group.extremum),
                group.classes[0].representative.clone(),
            ))
        } else if let Some(c) = group.classes.iter().find(|c| !c.representative.is_regular_of_degree(k)) {
            Some(("attaining digraph is not k-regular".to_string(), c.representative.clone()))
        } else if param.of_digraph(&witness) != Some(k)
            || !group.classes_match(&group_with(&group, &witness))
        {
            Some(("circulant witness does not attain".to_string(), witness))
        } else {
            None
        };
        out.outcome(
            alpha,
            case,
            failure,
            format!("min = {k} over {} k-regular class(es)", group.classes.len()),
        );
    }
    Ok(())
}

/// The group's own classes plus `extra`; matching against it checks that
/// `extra` is one of them.
fn group_with(group: &GroupReport, extra: &Digraph) -> Vec<Digraph> {
    group
        .classes
        .iter()
        .map(|c| c.representative.clone())
        .chain(std::iter::once(extra.clone()))
        .collect()
}

fn second_maximum(out: &mut Collector, survey: &Survey, ai: usize) -> Result<()> {
    let n = survey.n;
    let alpha = survey.alphas[ai];
    let case = "second maximum".to_string();
    if n < 3 {
        out.vacuous(alpha, case, "only the complete digraph exists");
        return Ok(());
    }
    let top = survey.overall_max(ai);
    let second = survey.second_max(ai);
    let closed = second_max_radius(n, alpha)?;
    let expected = k_nkm(n, n - 2, 1)?;
    let complete = crate::families::complete(n)?;
    let failure = if !top.classes_match(std::slice::from_ref(&complete)) {
        Some(("maximum is not attained only by the complete digraph".into(), top.classes[0].representative.clone()))
    } else if (second.extremum - closed).abs() > ATTAIN_TOL {
        Some((
            format!("second maximum {} differs from closed form {closed}", second.extremum),
            second.classes[0].representative.clone(),
        ))
    } else {
        class_mismatch(&second, std::slice::from_ref(&expected))
    };
    out.outcome(
        alpha,
        case,
        failure,
        format!("second max {:.12} attained only by K(n,n-2,1)", second.extremum),
    );
    Ok(())
}

fn verify_primed(id: TheoremId, n: usize, alphas: &[f64], opts: &PowerOptions) -> Result<VerificationVerdict> {
    if !(2..=MAX_FAMILY_ORDER).contains(&n) {
        return Err(Error::Parameter(format!(
            "{id} is checked for 2 <= n <= {MAX_FAMILY_ORDER}, got {n}"
        )));
    }
    let mut out = Collector::new();
    for &alpha in alphas {
        check_alpha(alpha)?;
        if n < 3 {
            out.vacuous(alpha, "all".into(), "no legal parameter at this order");
            continue;
        }
        for p in 2..n {
            let (plain, primed, sym) = match id {
                TheoremId::L3_1 => (c_ng(n, p, false)?, c_ng(n, p, true)?, "g"),
                TheoremId::L4_1 => (b_nd(n, p, false)?, b_nd(n, p, true)?, "d"),
                _ => unreachable!(),
            };
            let tight = PowerOptions {
                tol: opts.tol.min(STRICT_TOL),
                ..*opts
            };
            let a = spectral_radius(&plain, alpha, &tight)?;
            let b = spectral_radius(&primed, alpha, &tight)?;
            let gap = b.radius - a.radius;
            let failure = (b.certificate_lo <= a.certificate_hi).then(|| {
                (
                    format!(
                        "certificates overlap: primed [{}, {}], plain [{}, {}]",
                        b.certificate_lo, b.certificate_hi, a.certificate_lo, a.certificate_hi
                    ),
                    primed,
                )
            });
            out.outcome(alpha, format!("{sym}={p}"), failure, format!("gap {gap:.6e}"));
        }
    }
    Ok(out.finish(id, n, alphas))
}
