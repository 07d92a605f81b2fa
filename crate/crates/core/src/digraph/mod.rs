//! Simple digraphs on dense vertex labels `0..n` and the combinatorial
//! parameters used to index the extremal classes: strong connectivity,
//! girth, clique number, vertex and arc connectivity, degrees.
//!
//! A digon `(u, v), (v, u)` is two distinct arcs; loops and multiple arcs
//! are not representable.

mod cliques;
mod connectivity;
mod iso;
mod text;

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

pub use cliques::{clique_number, girth};
pub use connectivity::{
    arc_connectivity, is_strongly_connected, strong_components, vertex_connectivity,
};
pub use iso::{is_isomorphic, permute};
pub use text::{parse_digraph, read_digraph, write_digraph};

/// A simple digraph. Out-neighbor lists are kept sorted, so iteration over
/// [`Digraph::arcs`] is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
}

impl Digraph {
    /// Builds a digraph from an arc list; duplicates collapse.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyDigraph);
        }
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::ArcOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::LoopArc(u, v));
            }
            sets[u].insert(v);
        }
        Ok(Digraph {
            out: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_arcs(n, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out
            .get(u)
            .map_or(false, |row| row.binary_search(&v).is_ok())
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.order()).filter(|&u| self.has_arc(u, v)).collect()
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.out.iter().filter(|row| row.binary_search(&v).is_ok()).count()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
    }

    pub fn is_digon(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }

    /// True when every vertex has out-degree and in-degree `k`.
    pub fn is_regular_of_degree(&self, k: usize) -> bool {
        let p = self.degree_profile();
        p.out_degrees.iter().chain(&p.in_degrees).all(|&d| d == k)
    }

    /// Returns a copy with the arcs in `remove` deleted and those in `add`
    /// inserted. Fails if an added arc is invalid.
    pub fn edit(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Self> {
        let removed: BTreeSet<_> = remove.iter().copied().collect();
        Digraph::from_arcs(
            self.order(),
            self.arcs()
                .filter(|a| !removed.contains(a))
                .chain(add.iter().copied()),
        )
    }

    /// Join: disjoint union plus every digon between the two sides. `other`
    /// is relabeled by `self.order()`.
    pub fn join(&self, other: &Digraph) -> Digraph {
        let (n1, n2) = (self.order(), other.order());
        let cross = (0..n1).flat_map(|u| (n1..n1 + n2).flat_map(move |v| [(u, v), (v, u)]));
        Digraph::from_arcs(n1 + n2, self.union_arcs(other).chain(cross))
            .expect("join of valid digraphs is valid")
    }

    /// Disjoint union; `other` is relabeled by `self.order()`.
    pub fn union(&self, other: &Digraph) -> Digraph {
        Digraph::from_arcs(self.order() + other.order(), self.union_arcs(other))
            .expect("union of valid digraphs is valid")
    }

    fn union_arcs<'a>(&'a self, other: &'a Digraph) -> impl Iterator<Item = (usize, usize)> + 'a {
        let shift = self.order();
        self.arcs()
            .chain(other.arcs().map(move |(u, v)| (u + shift, v + shift)))
    }

    /// Induced subdigraph on `vertices`, relabeled `0..|S|` in ascending
    /// original order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Digraph> {
        if vertices.is_empty() {
            return Err(Error::InvalidVertexSet("empty vertex set".into()));
        }
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&v| v >= self.order()) {
            return Err(Error::InvalidVertexSet(format!(
                "vertex {bad} outside 0..{}",
                self.order()
            )));
        }
        let sorted: Vec<usize> = set.into_iter().collect();
        let index = |v: usize| sorted.binary_search(&v).ok();
        let arcs = sorted.iter().flat_map(|&u| {
            self.out[u]
                .iter()
                .filter_map(move |&v| index(v).map(|j| (index(u).unwrap(), j)))
        });
        Digraph::from_arcs(sorted.len(), arcs)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs=", self.order())?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

/// Serialized as `{"n": N, "arcs": [[u, v], ...]}`.
impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Digraph", 2)?;
        st.serialize_field("n", &self.order())?;
        st.serialize_field("arcs", &self.arcs().collect::<Vec<_>>())?;
        st.end()
    }
}

/// Out- and in-degree sequences with their extrema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
    /// δ⁺
    pub min_out: usize,
    /// Δ⁺
    pub max_out: usize,
    /// δ⁻
    pub min_in: usize,
    /// δ⁰ = min(δ⁺, δ⁻)
    pub min_over_both: usize,
}

impl DegreeProfile {
    fn of(g: &Digraph) -> Self {
        let n = g.order();
        let out_degrees: Vec<usize> = (0..n).map(|u| g.out_degree(u)).collect();
        let mut in_degrees = vec![0; n];
        for (_, v) in g.arcs() {
            in_degrees[v] += 1;
        }
        let min_out = *out_degrees.iter().min().unwrap();
        let max_out = *out_degrees.iter().max().unwrap();
        let min_in = *in_degrees.iter().min().unwrap();
        DegreeProfile {
            min_over_both: min_out.min(min_in),
            out_degrees,
            in_degrees,
            min_out,
            max_out,
            min_in,
        }
    }

    pub fn is_out_regular(&self) -> bool {
        self.min_out == self.max_out
    }
}
