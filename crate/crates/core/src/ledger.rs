//! Every applicable lower and upper bound on λ(Γ_G), each tagged with the
//! structural fact it comes from.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::groups::{FiniteGroup, MaximalCyclicDecomposition};
use crate::invariants::{
    clique_number, cut_vertex_component_profile, cut_vertex_condition, find_complement_p4,
    hamilton_path, independence_number, WitnessedValue,
};
use crate::limits::Limits;
use crate::powergraph::PowerGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// `λ >= n`: diameter at most 2 forces distinct labels and the identity
    /// is adjacent to everything.
    IdentityInjectivity,
    /// `λ >= 2ω - 2`.
    Clique,
    /// `λ <= 2n - α - 1`.
    Independence,
    /// `λ <= 2n - 4` unless cyclic of prime power order.
    NotCyclicPrimePower,
    /// `λ <= 2n - 5` when the complement contains a path on four vertices.
    ComplementP4,
    /// `λ <= n` from the component profile at the identity.
    CutVertex,
    /// `λ <= n` from trivially intersecting maximal cyclic subgroups.
    MaximalCyclicCut,
    /// `λ <= n` from a Hamilton path in the complement of `Γ - e`.
    IdentityComplementHamilton,
}

impl BoundSource {
    pub fn tag(self) -> &'static str {
        match self {
            BoundSource::IdentityInjectivity => "identity-injectivity",
            BoundSource::Clique => "clique",
            BoundSource::Independence => "independence",
            BoundSource::NotCyclicPrimePower => "not-cyclic-prime-power",
            BoundSource::ComplementP4 => "complement-p4",
            BoundSource::CutVertex => "cut-vertex",
            BoundSource::MaximalCyclicCut => "maximal-cyclic-cut",
            BoundSource::IdentityComplementHamilton => "identity-complement-hamilton",
        }
    }
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub kind: BoundKind,
    pub value: usize,
    pub source: BoundSource,
    /// Computed from a heuristic stand-in because the exact invariant hit a
    /// capacity limit. Still a valid bound, just possibly weaker.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub degraded: bool,
}

#[derive(Debug, Clone)]
pub struct BoundLedger {
    pub bounds: Vec<Bound>,
    pub lower: usize,
    pub upper: usize,
    pub omega: Option<WitnessedValue>,
    pub alpha: Option<WitnessedValue>,
    pub identity_profile: Vec<usize>,
    pub maximal_cyclic: MaximalCyclicDecomposition,
    pub complement_p4: Option<[usize; 4]>,
    /// Hamilton path in the complement of `Γ - e`, as element indices, if one
    /// was found.
    pub identity_hamilton: Option<Vec<usize>>,
}

impl BoundLedger {
    pub fn pinned(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }

    /// Sources of the bounds that meet at the pinned value.
    pub fn pinning_sources(&self) -> Vec<BoundSource> {
        match self.pinned() {
            Some(v) => self.bounds.iter().filter(|b| b.value == v).map(|b| b.source).collect(),
            None => Vec::new(),
        }
    }
}

pub fn bound_ledger(g: &FiniteGroup, graph: &PowerGraph, limits: &Limits) -> Result<BoundLedger> {
    let n = g.order();
    let mut bounds = Vec::new();
    let push = |bounds: &mut Vec<Bound>, kind, value, source, degraded| {
        bounds.push(Bound {
            kind,
            value,
            source,
            degraded,
        })
    };

    if n >= 2 {
        push(&mut bounds, BoundKind::Lower, n, BoundSource::IdentityInjectivity, false);
    }

    let omega = exact_or_capacity(clique_number(graph, limits.clique))?;
    let omega_value = match &omega {
        Some(w) => w.value,
        None => greedy_set(graph, true).len(),
    };
    push(&mut bounds, BoundKind::Lower, 2 * omega_value - 2, BoundSource::Clique, omega.is_none());

    let alpha = exact_or_capacity(independence_number(graph, limits.clique))?;
    let alpha_value = match &alpha {
        Some(w) => w.value,
        None => greedy_set(graph, false).len(),
    };
    push(&mut bounds, BoundKind::Upper, 2 * n - alpha_value - 1, BoundSource::Independence, alpha.is_none());

    let cyclic_prime_power = g.is_cyclic() && (n == 1 || crate::arith::prime_power(n).is_some());
    if !cyclic_prime_power {
        push(&mut bounds, BoundKind::Upper, 2 * n - 4, BoundSource::NotCyclicPrimePower, false);
    }

    let complement_p4 = find_complement_p4(graph);
    if complement_p4.is_some() {
        push(&mut bounds, BoundKind::Upper, 2 * n - 5, BoundSource::ComplementP4, false);
    }

    let identity_profile = cut_vertex_component_profile(graph, graph.identity_vertex())?;
    if n >= 3 && cut_vertex_condition(&identity_profile) {
        push(&mut bounds, BoundKind::Upper, n, BoundSource::CutVertex, false);
    }

    let maximal_cyclic = g.maximal_cyclic_subgroups();
    if !g.is_cyclic() && maximal_cyclic.pairwise_trivial && maximal_cyclic.size_condition_holds() {
        push(&mut bounds, BoundKind::Upper, n, BoundSource::MaximalCyclicCut, false);
    }

    let lower = bounds.iter().filter(|b| b.kind == BoundKind::Lower).map(|b| b.value).max().unwrap_or(0);
    let mut upper = bounds.iter().filter(|b| b.kind == BoundKind::Upper).map(|b| b.value).min().unwrap_or(0);

    // Only worth a search when it could close the gap at n.
    let mut identity_hamilton = None;
    if n >= 2 && lower == n && upper > n {
        let (rest, map) = graph.without_identity();
        if let Ok(Some(path)) = hamilton_path(&rest.complement(), limits.dp) {
            identity_hamilton = Some(path.into_iter().map(|i| map[i]).collect());
            push(&mut bounds, BoundKind::Upper, n, BoundSource::IdentityComplementHamilton, false);
            upper = n;
        }
    }

    Ok(BoundLedger {
        bounds,
        lower,
        upper,
        omega,
        alpha,
        identity_profile,
        maximal_cyclic,
        complement_p4,
        identity_hamilton,
    })
}

fn exact_or_capacity(r: Result<WitnessedValue>) -> Result<Option<WitnessedValue>> {
    match r {
        Ok(w) => Ok(Some(w)),
        Err(e) if e.is_capacity() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Greedy clique (or independent set) by descending degree (ascending for
/// independent sets); only used as a fallback bound.
fn greedy_set(graph: &PowerGraph, clique: bool) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    if clique {
        order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    } else {
        order.sort_by_key(|&v| (graph.degree(v), v));
    }
    let mut chosen: Vec<usize> = Vec::new();
    for v in order {
        if chosen.iter().all(|&u| graph.adjacent(u, v) == clique) {
            chosen.push(v);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::*;
    use crate::powergraph::build_power_graph;

    fn ledger(g: &FiniteGroup) -> BoundLedger {
        bound_ledger(g, &build_power_graph(g), &Limits::default()).unwrap()
    }

    fn has(l: &BoundLedger, source: BoundSource) -> bool {
        l.bounds.iter().any(|b| b.source == source)
    }

    #[test]
    fn z6_sandwich() {
        let l = ledger(&make_cyclic(6).unwrap());
        assert_eq!(l.lower, 8);
        let indep = l.bounds.iter().find(|b| b.source == BoundSource::Independence).unwrap();
        assert_eq!(indep.value, 9);
        assert_eq!(l.upper, 8);
        assert_eq!(l.pinned(), Some(8));
    }

    #[test]
    fn klein_pinned_by_maximal_cyclic() {
        let z2 = make_cyclic(2).unwrap();
        let l = ledger(&direct_product(&z2, &z2).unwrap());
        assert!(has(&l, BoundSource::MaximalCyclicCut));
        assert!(has(&l, BoundSource::CutVertex));
        assert_eq!(l.pinned(), Some(4));
    }

    #[test]
    fn a5_pinned_without_search() {
        let l = ledger(&make_a5().unwrap());
        assert!(l.maximal_cyclic.pairwise_trivial);
        assert!(has(&l, BoundSource::MaximalCyclicCut));
        assert_eq!(l.pinned(), Some(60));
        assert!(l.pinning_sources().contains(&BoundSource::MaximalCyclicCut));
    }

    #[test]
    fn complete_graph_pinned() {
        let l = ledger(&make_cyclic(9).unwrap());
        assert_eq!(l.pinned(), Some(16));
        assert!(!has(&l, BoundSource::NotCyclicPrimePower));
    }

    #[test]
    fn q8_not_pinned() {
        let l = ledger(&make_generalized_quaternion(8).unwrap());
        assert_eq!(l.lower, 8);
        assert!(l.upper > 8);
        assert!(l.identity_hamilton.is_none());
    }
}
