/// Size limits for the exact solvers. Exceeding one yields a
/// capacity-exceeded error rather than an unbounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex limit for the clique / independent-set branch and bound.
    pub clique: usize,
    /// Per-component vertex limit for the Hamilton-path and path-cover
    /// subset DP.
    pub dp: usize,
    /// Vertex limit for the L(2,1) backtracking solver.
    pub backtrack: usize,
}

pub const DEFAULT_CLIQUE_LIMIT: usize = 128;
pub const DEFAULT_DP_LIMIT: usize = 24;
pub const DEFAULT_BACKTRACK_LIMIT: usize = 20;
/// Subset DP uses `u32` masks.
pub const MAX_DP_LIMIT: usize = 30;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            clique: DEFAULT_CLIQUE_LIMIT,
            dp: DEFAULT_DP_LIMIT,
            backtrack: DEFAULT_BACKTRACK_LIMIT,
        }
    }
}
