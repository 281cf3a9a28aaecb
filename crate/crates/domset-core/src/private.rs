//! Private neighborhoods of a dominating set, and normalization of a
//! minimum dominating set so every member keeps an *external* private
//! neighbor.
//!
//! For a set `S` and `v ∈ S`, the private neighborhood is
//! `pn[v,S] = { w : N[w] ∩ S = {v} }` — the vertices dominated by `v` and
//! by no other member. The external part `epn[v,S] = pn[v,S] \ S` drops
//! `v` itself (the only member that can appear in its own `pn`). On an
//! isolate-free graph, some minimum dominating set always has
//! `epn[v,D] ≠ ∅` for every member; [`bc_normalize`] rewrites a given
//! minimum dominating set into one of that form.

use alloc::vec::Vec;

use crate::bits::VertexSet;
use crate::graph::Graph;
use crate::solve::gamma_exact;

/// `pn`/`epn` of one member of the queried set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrivateView {
    pub vertex: u16,
    /// `{ w : N[w] ∩ d = {vertex} }`.
    pub pn: VertexSet,
    /// `pn \ d`.
    pub epn: VertexSet,
}

/// Private neighborhoods of every member of `d`, ascending by vertex index.
///
/// # Panics
///
/// Panics if `d` is empty.
#[must_use]
pub fn private_neighborhoods(g: &Graph, d: &VertexSet) -> Vec<PrivateView> {
    assert!(!d.is_empty(), "private neighborhoods need a nonempty set");
    let n = g.n();
    let mut pn: Vec<VertexSet> = Vec::new();
    let members: Vec<u16> = d.iter().collect();
    pn.resize(members.len(), VertexSet::empty(n));
    for w in 0..n as u16 {
        let dominators = g.closed_neighbors(w).intersection(d);
        if dominators.count() == 1 {
            let v = dominators.first().expect("count is 1");
            let slot = members.binary_search(&v).expect("v is a member of d");
            pn[slot].insert(w);
        }
    }
    members
        .into_iter()
        .zip(pn)
        .map(|(vertex, pn)| PrivateView {
            vertex,
            epn: pn.difference(d),
            pn,
        })
        .collect()
}

/// Lowest-index member of `d` whose `epn` is empty, or `None` when every
/// member keeps an external private neighbor.
pub(crate) fn first_epn_empty(g: &Graph, d: &VertexSet) -> Option<u16> {
    private_neighborhoods(g, d)
        .into_iter()
        .find(|view| view.epn.is_empty())
        .map(|view| view.vertex)
}

/// Why [`bc_normalize`] rejected its input or gave up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcError {
    /// The graph has an isolated vertex (witnessed by the lowest one); no
    /// dominating set can give it an external private neighbor.
    IsolatedVertex(u16),
    /// `d` does not dominate every vertex.
    NotDominating,
    /// `d` has the wrong size for a minimum dominating set (checked
    /// against the exact solver for orders ≤ 40).
    NotMinimum { expected: usize, got: usize },
    /// The swap loop hit its iteration cap and no exhaustive fallback is
    /// available at this order.
    NormalizationFailed,
}

impl core::fmt::Display for BcError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BcError::IsolatedVertex(v) => write!(f, "vertex {v} is isolated"),
            BcError::NotDominating => write!(f, "set does not dominate the graph"),
            BcError::NotMinimum { expected, got } => {
                write!(f, "set has size {got}, minimum dominating sets have size {expected}")
            }
            BcError::NormalizationFailed => {
                write!(f, "normalization did not converge within the iteration cap")
            }
        }
    }
}

/// Order bound below which the input size is verified against the exact
/// solver; above it the caller vouches for minimality.
const VERIFY_MINIMUM_UP_TO: usize = 40;

/// Order bound for the exhaustive fallback over all minimum dominating sets.
const EXHAUSTIVE_FALLBACK_UP_TO: usize = 20;

/// Rewrites a minimum dominating set into one of equal size in which every
/// member has an external private neighbor (possible on any isolate-free
/// graph).
///
/// Procedure: while some member `v` has `epn[v,D] = ∅`, swap `v` (lowest
/// such index) for its lowest-index neighbor — minimality forces
/// `pn[v,D] = {v}`, so `v` has no neighbor inside `D` and the swap keeps
/// `D` dominating. The loop is capped at `n²` iterations; on cap hit,
/// orders ≤ 20 fall back to exhaustive search over all minimum dominating
/// sets, larger orders report failure.
pub fn bc_normalize(g: &Graph, d: &VertexSet) -> Result<VertexSet, BcError> {
    let n = g.n();
    if let Some(v) = (0..n as u16).find(|&v| g.degree(v) == 0) {
        return Err(BcError::IsolatedVertex(v));
    }
    if g.cover(d).dom_count != n {
        return Err(BcError::NotDominating);
    }
    if n <= VERIFY_MINIMUM_UP_TO {
        let expected = gamma_exact(g).value;
        if d.count() != expected {
            return Err(BcError::NotMinimum {
                expected,
                got: d.count(),
            });
        }
    }
    bc_normalize_trusted(g, d)
}

/// [`bc_normalize`] without the precondition checks, for callers that just
/// produced `d` themselves (isolate-free graph, dominating, minimum size).
pub(crate) fn bc_normalize_trusted(g: &Graph, d: &VertexSet) -> Result<VertexSet, BcError> {
    let n = g.n();
    let mut current = *d;
    let mut iterations = n * n;
    while iterations > 0 && first_epn_empty(g, &current).is_some() {
        iterations -= 1;
        let v = first_epn_empty(g, &current).expect("loop condition");
        let u = g
            .neighbors(v)
            .first()
            .expect("isolate-free graphs have no degree-0 vertex");
        // For a minimum dominating set, epn[v] = ∅ forces pn[v] = {v}, so
        // no neighbor of v is inside the set and the swap keeps the size.
        debug_assert!(!current.contains(u), "swap target must be outside the set");
        current.remove(v);
        current.insert(u);
        debug_assert_eq!(g.cover(&current).dom_count, n, "swap must keep domination");
    }
    // The size check guards callers whose "minimum" set was not: a swap
    // into an existing member would silently shrink the set.
    if current.count() == d.count() && first_epn_empty(g, &current).is_none() {
        return Ok(current);
    }
    if n <= EXHAUSTIVE_FALLBACK_UP_TO {
        if let Some(found) = exhaustive_normalized(g, d.count()) {
            return Ok(found);
        }
    }
    Err(BcError::NormalizationFailed)
}

/// First (lexicographically by member list) dominating set of size `k`
/// whose members all keep an external private neighbor.
fn exhaustive_normalized(g: &Graph, k: usize) -> Option<VertexSet> {
    let n = g.n();
    let mut picks: Vec<u16> = (0..k as u16).collect();
    if k == 0 || k > n {
        return None;
    }
    loop {
        let set = VertexSet::from_indices(n, picks.iter().copied());
        if g.cover(&set).dom_count == n && first_epn_empty(g, &set).is_none() {
            return Some(set);
        }
        // Advance to the next k-combination of 0..n in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if picks[i] < (n - k + i) as u16 {
                picks[i] += 1;
                for j in i + 1..k {
                    picks[j] = picks[j - 1] + 1;
                }
                break;
            }
        }
    }
}
