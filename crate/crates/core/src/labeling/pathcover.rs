use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{path_cover_number, PathCover};

use super::{ensure_valid, Labeling};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCoverSolution {
    pub lambda: usize,
    pub labeling: Labeling,
    /// Minimum path cover of the complement.
    pub cover: PathCover,
}

/// Labels the paths of a complement path cover in order: consecutive
/// integers along a path, one skipped label between paths.
pub fn labeling_from_cover(vertex_count: usize, cover: &PathCover) -> Labeling {
    let mut labels = vec![0; vertex_count];
    let mut next = 0;
    for path in &cover.paths {
        for &v in path {
            labels[v] = next;
            next += 1;
        }
        next += 1;
    }
    Labeling::new(labels)
}

/// λ of a graph of diameter at most 2 from the path covering number `r` of
/// its complement: `n - 1` when `r = 1`, otherwise `n + r - 2`.
pub fn lambda_via_path_cover(graph: &Graph, dp_limit: usize) -> Result<PathCoverSolution> {
    let n = graph.vertex_count();
    match graph.diameter() {
        Some(d) if d <= 2 => {}
        Some(d) => {
            return Err(Error::invalid(format!(
                "path-cover method needs diameter <= 2, graph has diameter {d}"
            )))
        }
        None => {
            return Err(Error::invalid(
                "path-cover method needs a connected graph of diameter <= 2",
            ))
        }
    }
    if n == 0 {
        return Err(Error::invalid("graph has no vertices"));
    }
    let cover = path_cover_number(&graph.complement(), dp_limit)?;
    let r = cover.count();
    let lambda = if r == 1 { n - 1 } else { n + r - 2 };
    let labeling = labeling_from_cover(n, &cover);
    debug_assert_eq!(labeling.span(), lambda);
    ensure_valid(graph, &labeling, "path-cover labeling")?;
    Ok(PathCoverSolution {
        lambda,
        labeling,
        cover,
    })
}
