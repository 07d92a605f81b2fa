//! Radius-monotone surgeries: moving in-arcs from one vertex to another,
//! and subdividing an arc with a new vertex.

use std::collections::BTreeSet;

use crate::digraph::{is_strongly_connected, Digraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformKind {
    /// Arcs `(t, p)` replaced by `(t, q)` for each listed tail `t`.
    RedirectInArcs { p: usize, q: usize, tails: Vec<usize> },
    /// Arc `(i, j)` replaced by `(i, w), (w, j)` with new vertex `w`.
    SubdivideArc { arc: (usize, usize), new_vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformRecord {
    pub before: Digraph,
    pub after: Digraph,
    pub kind: TransformKind,
}

/// Replaces `(t, p)` with `(t, q)` for every `t` in `tails`. Each tail must
/// be an in-neighbor of `p`, not an in-neighbor of `q`, and not `q` itself.
/// Out-degrees are unchanged. The result may fail to be strongly connected.
pub fn redirect_in_arcs(g: &Digraph, p: usize, q: usize, tails: &[usize]) -> Result<TransformRecord> {
    let n = g.order();
    if p >= n || q >= n || p == q {
        return Err(Error::Parameter(format!(
            "need distinct vertices p, q < {n}, got p={p}, q={q}"
        )));
    }
    let set: BTreeSet<usize> = tails.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::Parameter("tail set is empty".into()));
    }
    if let Some(&t) = set
        .iter()
        .find(|&&t| t >= n || t == q || !g.has_arc(t, p) || g.has_arc(t, q))
    {
        return Err(Error::BadRedirect(t));
    }
    let remove: Vec<_> = set.iter().map(|&t| (t, p)).collect();
    let add: Vec<_> = set.iter().map(|&t| (t, q)).collect();
    Ok(TransformRecord {
        before: g.clone(),
        after: g.edit(&remove, &add)?,
        kind: TransformKind::RedirectInArcs {
            p,
            q,
            tails: set.into_iter().collect(),
        },
    })
}

/// Directed cycles on three or more vertices. The digon is treated as the
/// complete digraph on two vertices and may be subdivided.
fn is_long_directed_cycle(g: &Digraph) -> bool {
    let p = g.degree_profile();
    g.order() >= 3 && p.max_out == 1 && p.min_out == 1 && p.min_in == 1
}

/// Subdivides `(i, j)` with a new vertex `w = n`. `g` must be strongly
/// connected and not a directed cycle on three or more vertices.
pub fn subdivide_arc(g: &Digraph, arc: (usize, usize)) -> Result<TransformRecord> {
    let (i, j) = arc;
    if !g.has_arc(i, j) {
        return Err(Error::MissingArc(i, j));
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected("subdivision needs a strongly connected digraph"));
    }
    if is_long_directed_cycle(g) {
        return Err(Error::SubdivideCycle);
    }
    let w = g.order();
    let after = Digraph::from_arcs(
        w + 1,
        g.arcs()
            .filter(|&a| a != arc)
            .chain([(i, w), (w, j)]),
    )?;
    Ok(TransformRecord {
        before: g.clone(),
        after,
        kind: TransformKind::SubdivideArc { arc, new_vertex: w },
    })
}
