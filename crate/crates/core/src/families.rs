//! Deterministic generators for the named digraph families.
//!
//! Vertex numbering is fixed so that tests can refer to structure by
//! position:
//!
//! * `c_ng`: the g-cycle is `0 -> 1 -> ... -> g-1 -> 0`; the path runs
//!   `g-1 -> g -> ... -> n-1 -> 0`.
//! * `b_nd`: the clique is the last `d` vertices. The path leaves clique
//!   vertex `n-d`, visits the external vertices `0, 1, ..., n-d-1` in order
//!   and re-enters at clique vertex `n-d+1`.
//! * `k_nkm`: blocks `V1 = 0..m`, `S = m..m+k`, `V2 = m+k..n`.
//! * `g0`: parts are consecutive, the `r` larger parts first.
//! * `h4`: first block `0..a`, second block `a..n`; `U` and `W` are the
//!   `k` lowest vertices of each block.

use rayon::prelude::*;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::spectral::{check_alpha, spectral_radius_general, PowerOptions};

/// Values closer than this count as equal when picking an extremal
/// tournament; ties go to the smaller code.
const TIE_TOL: f64 = 1e-8;

/// Largest order accepted by the exhaustive tournament search.
pub const MAX_BRUTEFORCE_TOURNAMENT: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TournamentKind {
    Transitive,
    Rotational,
    BrualdiLi,
    ExtremalBruteforce,
}

/// A named family together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Cng { n: usize, g: usize, primed: bool },
    Bnd { n: usize, d: usize, primed: bool },
    Knkm { n: usize, k: usize, m: usize },
    Tournament { kind: TournamentKind, n: usize, alpha: f64 },
    G0 { n: usize, d: usize, alpha: f64 },
    H4 { n: usize, k: usize, a: usize },
    Circulant { n: usize, steps: Vec<usize> },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Digraph> {
        match *self {
            FamilySpec::Path { n } => path(n),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::Cng { n, g, primed } => c_ng(n, g, primed),
            FamilySpec::Bnd { n, d, primed } => b_nd(n, d, primed),
            FamilySpec::Knkm { n, k, m } => k_nkm(n, k, m),
            FamilySpec::Tournament { kind, n, alpha } => tournament(kind, n, alpha),
            FamilySpec::G0 { n, d, alpha } => g0(n, d, alpha),
            FamilySpec::H4 { n, k, a } => h4(n, k, a),
            FamilySpec::Circulant { n, ref steps } => circulant(n, steps),
        }
    }
}

fn param(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(msg()))
    }
}

fn all_pairs(vs: std::ops::Range<usize>) -> impl Iterator<Item = (usize, usize)> {
    let ws = vs.clone();
    vs.flat_map(move |u| ws.clone().filter(move |&v| v != u).map(move |v| (u, v)))
}

pub fn path(n: usize) -> Result<Digraph> {
    param(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Digraph> {
    param(n >= 2, || format!("cycle needs n >= 2, got {n}"))?;
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Digraph> {
    param(n >= 1, || format!("complete digraph needs n >= 1, got {n}"))?;
    Digraph::from_arcs(n, all_pairs(0..n))
}

/// `C_{n,g}`: a g-cycle with a path of `n - g` new vertices from its last
/// vertex back to vertex 0. The primed variant points the final path arc at
/// `g - 1` instead of 0.
pub fn c_ng(n: usize, g: usize, primed: bool) -> Result<Digraph> {
    param(g >= 2 && g + 1 <= n, || format!("C(n,g) needs 2 <= g <= n-1, got n={n}, g={g}"))?;
    let mut arcs: Vec<(usize, usize)> = (0..g - 1).map(|i| (i, i + 1)).collect();
    arcs.push((g - 1, 0));
    arcs.extend((g - 1..n - 1).map(|i| (i, i + 1)));
    arcs.push((n - 1, if primed { g - 1 } else { 0 }));
    Digraph::from_arcs(n, arcs)
}

/// `B_{n,d}`: a complete digraph on the last `d` vertices plus a path
/// through the `n - d` external vertices, leaving clique vertex `n - d` and
/// re-entering at `n - d + 1`. The primed variant closes the path back onto
/// its start vertex `n - d`.
pub fn b_nd(n: usize, d: usize, primed: bool) -> Result<Digraph> {
    param(d >= 2 && d + 1 <= n, || format!("B(n,d) needs 2 <= d <= n-1, got n={n}, d={d}"))?;
    let ext = n - d;
    let start = ext;
    let end = ext + 1;
    let mut arcs: Vec<(usize, usize)> = all_pairs(ext..n).collect();
    arcs.push((start, 0));
    arcs.extend((1..ext).map(|i| (i - 1, i)));
    arcs.push((ext - 1, if primed { start } else { end }));
    Digraph::from_arcs(n, arcs)
}

/// The block partition `[V1, S, V2]` of `k_nkm(n, k, m)`.
pub fn k_nkm_partition(n: usize, k: usize, m: usize) -> [Vec<usize>; 3] {
    [(0..m).collect(), (m..m + k).collect(), (m + k..n).collect()]
}

/// `K(n,k,m)`: complete blocks `V1` (size m), `S` (size k) and `V2`
/// (size n-k-m); every digon between `S` and the rest; one-way arcs from
/// `V1` to `V2`.
pub fn k_nkm(n: usize, k: usize, m: usize) -> Result<Digraph> {
    param(k >= 1 && k + 2 <= n, || format!("K(n,k,m) needs 1 <= k <= n-2, got n={n}, k={k}"))?;
    param(m >= 1 && m + k + 1 <= n, || {
        format!("K(n,k,m) needs 1 <= m <= n-k-1, got n={n}, k={k}, m={m}")
    })?;
    let [v1, s, v2] = k_nkm_partition(n, k, m);
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for block in [&v1, &s, &v2] {
        for &u in block {
            arcs.extend(block.iter().filter(|&&v| v != u).map(|&v| (u, v)));
        }
    }
    for &c in &s {
        for &o in v1.iter().chain(&v2) {
            arcs.push((c, o));
            arcs.push((o, c));
        }
    }
    for &u in &v1 {
        arcs.extend(v2.iter().map(|&v| (u, v)));
    }
    Digraph::from_arcs(n, arcs)
}

pub fn transitive_tournament(n: usize) -> Result<Digraph> {
    param(n >= 1, || format!("tournament needs n >= 1, got {n}"))?;
    Digraph::from_arcs(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// Regular tournament on odd `n`: `i -> i + s (mod n)` for `s = 1..(n-1)/2`.
pub fn rotational_tournament(n: usize) -> Result<Digraph> {
    param(n >= 3 && n % 2 == 1, || format!("rotational tournament needs odd n >= 3, got {n}"))?;
    let steps: Vec<usize> = (1..=(n - 1) / 2).collect();
    circulant(n, &steps)
}

/// Brualdi–Li tournament on `n = 2h` vertices, adjacency
/// `[[U, Uᵀ], [I + Uᵀ, U]]` with `U` the strictly upper triangular
/// all-ones `h × h` matrix: two transitive halves, first-half vertex `i`
/// beats second-half vertex `h + j` exactly when `i > j`.
pub fn brualdi_li_tournament(n: usize) -> Result<Digraph> {
    param(n >= 2 && n % 2 == 0, || format!("Brualdi-Li tournament needs even n >= 2, got {n}"))?;
    let h = n / 2;
    let mut arcs = Vec::new();
    for i in 0..h {
        for j in i + 1..h {
            arcs.push((i, j));
            arcs.push((h + i, h + j));
        }
        for j in 0..h {
            if i > j {
                arcs.push((i, h + j));
            } else {
                arcs.push((h + j, i));
            }
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// Decodes a tournament code: bit `b` refers to the `b`-th pair `(i, j)`,
/// `i < j`, in lexicographic order; a set bit orients it `i -> j`.
pub fn tournament_from_code(n: usize, code: u64) -> Digraph {
    let mut arcs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            arcs.push(if code >> bit & 1 == 1 { (i, j) } else { (j, i) });
            bit += 1;
        }
    }
    Digraph::from_arcs(n, arcs).expect("tournament code yields a valid digraph")
}

/// Outcome of the exhaustive tournament search.
#[derive(Debug, Clone)]
pub struct ExtremalTournament {
    pub digraph: Digraph,
    pub code: u64,
    pub radius: f64,
}

/// Searches all `2^(n(n-1)/2)` tournaments for the largest ρ(Aα). Ties within
/// `1e-8` go to the smallest code, so the answer does not depend on how the
/// work is split.
pub fn extremal_tournament(n: usize, alpha: f64, opts: &PowerOptions) -> Result<ExtremalTournament> {
    param((1..=MAX_BRUTEFORCE_TOURNAMENT).contains(&n), || {
        format!("exhaustive tournament search supports 1 <= n <= {MAX_BRUTEFORCE_TOURNAMENT}, got {n}")
    })?;
    check_alpha(alpha)?;
    let codes = 1u64 << (n * (n - 1) / 2);
    let radii: Vec<f64> = (0..codes)
        .into_par_iter()
        .map(|code| {
            spectral_radius_general(&tournament_from_code(n, code), alpha, opts).map(|r| r.radius)
        })
        .collect::<Result<_>>()?;
    let best = radii.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let code = radii.iter().position(|&r| r >= best - TIE_TOL).unwrap() as u64;
    Ok(ExtremalTournament {
        digraph: tournament_from_code(n, code),
        code,
        radius: radii[code as usize],
    })
}

pub fn tournament(kind: TournamentKind, n: usize, alpha: f64) -> Result<Digraph> {
    match kind {
        TournamentKind::Transitive => transitive_tournament(n),
        TournamentKind::Rotational => rotational_tournament(n),
        TournamentKind::BrualdiLi => brualdi_li_tournament(n),
        TournamentKind::ExtremalBruteforce => {
            extremal_tournament(n, alpha, &PowerOptions::default()).map(|t| t.digraph)
        }
    }
}

/// Sizes of the `d` parts of `G0`: `r = n - l*d` parts of size `l + 1`
/// followed by `d - r` parts of size `l`, where `l = floor(n / d)`.
pub fn g0_part_sizes(n: usize, d: usize) -> Vec<usize> {
    let l = n / d;
    let r = n - l * d;
    (0..d).map(|j| if j < r { l + 1 } else { l }).collect()
}

/// Tournament placed inside a part of `G0`: rotational or Brualdi–Li at
/// α = 0, otherwise the exhaustive maximizer for this α.
fn part_tournament(size: usize, alpha: f64) -> Result<Digraph> {
    match size {
        1 => Digraph::empty(1),
        _ if alpha == 0.0 && size % 2 == 1 => rotational_tournament(size),
        _ if alpha == 0.0 => brualdi_li_tournament(size),
        _ if size <= MAX_BRUTEFORCE_TOURNAMENT => {
            extremal_tournament(size, alpha, &PowerOptions::default()).map(|t| t.digraph)
        }
        _ => Err(Error::Parameter(format!(
            "no extremal tournament is known for part size {size} at alpha = {alpha}; \
             choose the tournament explicitly"
        ))),
    }
}

/// `G0`: `d` nearly equal parts, all digons between distinct parts, an
/// extremal tournament inside each part.
pub fn g0(n: usize, d: usize, alpha: f64) -> Result<Digraph> {
    param(d >= 1 && d <= n, || format!("G0 needs 1 <= d <= n, got n={n}, d={d}"))?;
    check_alpha(alpha)?;
    let sizes = g0_part_sizes(n, d);
    let mut arcs = Vec::new();
    let mut owner = Vec::with_capacity(n);
    let mut offset = 0;
    for (p, &size) in sizes.iter().enumerate() {
        let t = part_tournament(size, alpha)?;
        arcs.extend(t.arcs().map(|(u, v)| (u + offset, v + offset)));
        owner.extend(std::iter::repeat(p).take(size));
        offset += size;
    }
    for u in 0..n {
        arcs.extend((0..n).filter(|&v| owner[v] != owner[u]).map(|v| (u, v)));
    }
    Digraph::from_arcs(n, arcs)
}

/// `H4`: complete blocks on `0..a` and `a..n`, every arc from the second
/// block to the first, and every arc from `U = {0..k}` to
/// `W = {a..a+k}`.
pub fn h4(n: usize, k: usize, a: usize) -> Result<Digraph> {
    param(k >= 1 && k + 2 <= a && a + k + 2 <= n, || {
        format!("H4 needs k >= 1 and k+2 <= a <= n-k-2, got n={n}, k={k}, a={a}")
    })?;
    let mut arcs: Vec<(usize, usize)> = all_pairs(0..a).chain(all_pairs(a..n)).collect();
    for v in a..n {
        arcs.extend((0..a).map(|u| (v, u)));
    }
    for u in 0..k {
        arcs.extend((a..a + k).map(|w| (u, w)));
    }
    Digraph::from_arcs(n, arcs)
}

/// Circulant digraph: `i -> i + s (mod n)` for each step `s`. Step 1 must
/// be present.
pub fn circulant(n: usize, steps: &[usize]) -> Result<Digraph> {
    param(n >= 2, || format!("circulant needs n >= 2, got {n}"))?;
    param(steps.contains(&1), || "circulant steps must contain 1".into())?;
    if let Some(&s) = steps.iter().find(|&&s| s == 0 || s >= n) {
        return Err(Error::Parameter(format!("circulant step {s} outside 1..{n}")));
    }
    Digraph::from_arcs(
        n,
        (0..n).flat_map(|i| steps.iter().map(move |&s| (i, (i + s) % n))),
    )
}
