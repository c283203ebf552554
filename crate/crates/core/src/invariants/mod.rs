//! Exact graph invariants with checkable witnesses: clique and independence
//! numbers, Hamilton paths, minimum path covers, and the small structural
//! probes used by the λ bounds.

mod clique;
mod hamilton;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::MAX_DP_LIMIT;

use hamilton::{greedy_path_cover, heuristic_hamilton_path, MaskGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Clique,
    IndependentSet,
    HamiltonPath,
    PathCover,
    P4,
}

/// A value together with the vertex set or sequence that certifies it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessedValue {
    pub value: usize,
    pub witness: Vec<usize>,
    pub kind: WitnessKind,
}

/// Vertex-disjoint paths covering every vertex exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathCover {
    pub paths: Vec<Vec<usize>>,
}

impl PathCover {
    pub fn count(&self) -> usize {
        self.paths.len()
    }

    /// Checks disjointness, coverage and edge-consecutiveness.
    pub fn verify(&self, graph: &Graph) -> bool {
        let mut seen = vec![false; graph.vertex_count()];
        for path in &self.paths {
            if path.is_empty() {
                return false;
            }
            for &v in path {
                if v >= seen.len() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            if path.windows(2).any(|w| !graph.adjacent(w[0], w[1])) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Orients each path so its first vertex is the smaller endpoint and
    /// sorts paths by first vertex.
    fn canonicalize(mut self) -> Self {
        for p in &mut self.paths {
            if p.first() > p.last() {
                p.reverse();
            }
        }
        self.paths.sort();
        self
    }
}

pub fn clique_number(graph: &Graph, limit: usize) -> Result<WitnessedValue> {
    let witness = clique::max_clique(graph, limit)?;
    Ok(WitnessedValue {
        value: witness.len(),
        witness,
        kind: WitnessKind::Clique,
    })
}

pub fn independence_number(graph: &Graph, limit: usize) -> Result<WitnessedValue> {
    let witness = clique::max_clique(&graph.complement(), limit)?;
    Ok(WitnessedValue {
        value: witness.len(),
        witness,
        kind: WitnessKind::IndependentSet,
    })
}

pub fn is_clique(graph: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && graph.adjacent(u, v)))
}

pub fn is_independent(graph: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && !graph.adjacent(u, v)))
}

pub fn is_hamilton_path(graph: &Graph, path: &[usize]) -> bool {
    PathCover {
        paths: vec![path.to_vec()],
    }
    .verify(graph)
        || (graph.vertex_count() == 0 && path.is_empty())
}

/// `Ok(Some(path))` when a Hamilton path exists, `Ok(None)` when it provably
/// does not. Above `dp_limit` vertices only the randomized search runs; if it
/// fails the answer is a capacity error, never a claim of absence.
pub fn hamilton_path(graph: &Graph, dp_limit: usize) -> Result<Option<Vec<usize>>> {
    let n = graph.vertex_count();
    if n <= 1 {
        return Ok(Some((0..n).collect()));
    }
    if graph.connected_components().len() > 1 {
        return Ok(None);
    }
    if (0..n).filter(|&v| graph.degree(v) == 1).count() > 2 {
        return Ok(None);
    }
    let limit = dp_limit.min(MAX_DP_LIMIT);
    if n <= limit {
        return Ok(MaskGraph::new(graph).hamilton_path());
    }
    match heuristic_hamilton_path(graph) {
        Some(p) => Ok(Some(p)),
        None => Err(Error::capacity(
            format!("Hamilton path search on {n} vertices (heuristic inconclusive)"),
            limit,
        )),
    }
}

/// Minimum path cover. Isolated vertices become trivial paths and every other
/// connected component is solved exactly by the layered subset DP. A
/// component above `dp_limit` is still solved exactly when the randomized
/// search finds a Hamilton path in it; otherwise the result is a capacity
/// error carrying the component count and a greedy cover size as bounds.
pub fn path_cover_number(graph: &Graph, dp_limit: usize) -> Result<PathCover> {
    let limit = dp_limit.min(MAX_DP_LIMIT);
    let components = graph.connected_components();
    let mut paths = Vec::new();
    let mut unresolved = Vec::new();
    for comp in &components {
        if comp.len() == 1 {
            paths.push(comp.clone());
            continue;
        }
        let local = graph.induced(comp);
        let cover = if comp.len() <= limit {
            MaskGraph::new(&local).min_path_cover()
        } else if let Some(p) = heuristic_hamilton_path(&local) {
            vec![p]
        } else {
            unresolved.push((comp.len(), greedy_path_cover(&local).len()));
            continue;
        };
        paths.extend(
            cover
                .into_iter()
                .map(|p| p.into_iter().map(|i| comp[i]).collect::<Vec<_>>()),
        );
    }

    if unresolved.is_empty() {
        return Ok(PathCover { paths }.canonicalize());
    }
    Err(Error::CapacityExceeded {
        what: format!(
            "path cover: component of {} vertices",
            unresolved.iter().map(|u| u.0).max().unwrap_or(0)
        ),
        limit,
        lower: Some(components.len()),
        upper: Some(paths.len() + unresolved.iter().map(|u| u.1).sum::<usize>()),
    })
}

/// Four distinct vertices `u1..u4` with each consecutive pair nonadjacent in
/// `graph`, i.e. a path on four vertices in the complement.
pub fn find_complement_p4(graph: &Graph) -> Option<[usize; 4]> {
    let comp = graph.complement();
    for (u2, u3) in comp.edges().into_iter().flat_map(|(a, b)| [(a, b), (b, a)]) {
        for u1 in comp.neighbors(u2).ones().filter(|&x| x != u3) {
            if let Some(u4) = comp.neighbors(u3).ones().find(|&x| x != u2 && x != u1) {
                return Some([u1, u2, u3, u4]);
            }
        }
    }
    None
}

/// Component sizes of `graph - v`, largest first.
pub fn cut_vertex_component_profile(graph: &Graph, v: usize) -> Result<Vec<usize>> {
    let (rest, _) = graph.delete_vertex(v)?;
    Ok(rest.connected_components().iter().map(Vec::len).collect())
}

/// The cut-vertex condition `n_1 <= n_2 + ... + n_t` on a component profile,
/// with at least two components.
pub fn cut_vertex_condition(profile: &[usize]) -> bool {
    match profile.split_first() {
        Some((first, rest)) if !rest.is_empty() => *first <= rest.iter().sum(),
        _ => false,
    }
}
