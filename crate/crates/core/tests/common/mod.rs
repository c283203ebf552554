//! Slow, obviously-correct reference implementations used to check the
//! library. Nothing here calls into the solvers under test.

#![allow(dead_code)]

use lambda_power::groups::FiniteGroup;

/// Adjacency matrix of a small graph.
#[derive(Debug, Clone)]
pub struct Matrix {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Matrix {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Matrix { n, adj }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Matrix {
        let mut adj = vec![vec![false; self.n]; self.n];
        for u in 0..self.n {
            for v in 0..self.n {
                adj[u][v] = u != v && !self.adj[u][v];
            }
        }
        Matrix { n: self.n, adj }
    }

    /// All-pairs distances by Floyd-Warshall; `usize::MAX` for unreachable.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; self.n]; self.n];
        for u in 0..self.n {
            d[u][u] = 0;
            for v in 0..self.n {
                if self.adj[u][v] {
                    d[u][v] = 1;
                }
            }
        }
        for k in 0..self.n {
            for i in 0..self.n {
                for j in 0..self.n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        d
    }
}

/// Power graph straight from the Cayley table: `x ~ y` iff one is a power of
/// the other, found by repeated multiplication.
pub fn power_graph_matrix(g: &FiniteGroup) -> Matrix {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for x in 0..n {
        let mut p = x;
        loop {
            if p != x {
                adj[x][p] = true;
                adj[p][x] = true;
            }
            p = g.op(p, x);
            if p == x {
                break;
            }
        }
    }
    Matrix { n, adj }
}

/// L(2,1) condition checked pair by pair from the distance matrix.
pub fn is_l21(m: &Matrix, labels: &[usize]) -> bool {
    if labels.len() != m.n {
        return false;
    }
    let d = m.distances();
    for u in 0..m.n {
        for v in u + 1..m.n {
            let gap = labels[u].abs_diff(labels[v]);
            if (d[u][v] == 1 && gap < 2) || (d[u][v] == 2 && gap < 1) {
                return false;
            }
        }
    }
    true
}

pub fn span(labels: &[usize]) -> usize {
    match (labels.iter().min(), labels.iter().max()) {
        (Some(a), Some(b)) => b - a,
        _ => 0,
    }
}

/// λ by plain depth-first enumeration of labelings in `0..=k` for
/// increasing `k`. Vertex 0's label is left unconstrained.
pub fn brute_lambda(m: &Matrix) -> usize {
    if m.n == 0 {
        return 0;
    }
    let d = m.distances();
    fn extend(d: &[Vec<usize>], k: usize, labels: &mut Vec<usize>) -> bool {
        let v = labels.len();
        if v == d.len() {
            return true;
        }
        for l in 0..=k {
            let ok = (0..v).all(|u| {
                let gap = labels[u].abs_diff(l);
                !((d[u][v] == 1 && gap < 2) || (d[u][v] == 2 && gap < 1))
            });
            if ok {
                labels.push(l);
                if extend(d, k, labels) {
                    return true;
                }
                labels.pop();
            }
        }
        false
    }
    (0..).find(|&k| extend(&d, k, &mut Vec::new())).unwrap()
}

/// Whether the vertices of `mask` can be ordered into a path of `m`, by
/// trying every start and extending depth first.
fn has_hamilton_path_on(m: &Matrix, mask: u32) -> bool {
    fn walk(m: &Matrix, v: usize, left: u32) -> bool {
        if left == 0 {
            return true;
        }
        (0..m.n).any(|w| left & (1 << w) != 0 && m.adj[v][w] && walk(m, w, left & !(1 << w)))
    }
    (0..m.n).any(|s| mask & (1 << s) != 0 && walk(m, s, mask & !(1 << s)))
}

/// Minimum number of vertex-disjoint paths covering `m`, by enumerating every
/// set partition (the block holding the lowest unplaced vertex first) and
/// keeping those whose blocks all carry a Hamilton path.
pub fn brute_path_cover(m: &Matrix) -> usize {
    assert!(m.n <= 12, "exhaustive oracle is for small graphs");
    let full: u32 = if m.n == 0 { 0 } else { (1 << m.n) - 1 };
    let traceable: Vec<bool> = (0..=full).map(|s| s != 0 && has_hamilton_path_on(m, s)).collect();
    fn go(rest: u32, traceable: &[bool], used: usize, best: &mut usize) {
        if used >= *best {
            return;
        }
        if rest == 0 {
            *best = used;
            return;
        }
        let low = rest & rest.wrapping_neg();
        let others = rest & !low;
        // Every subset of `others`, joined with the lowest vertex.
        let mut sub = others;
        loop {
            let block = sub | low;
            if traceable[block as usize] {
                go(rest & !block, traceable, used + 1, best);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
    }
    let mut best = m.n.max(1);
    if m.n == 0 {
        return 0;
    }
    go(full, &traceable, 0, &mut best);
    best
}

pub fn brute_clique_number(m: &Matrix) -> usize {
    let mut best = 0;
    for s in 0u32..(1 << m.n) {
        let vs: Vec<usize> = (0..m.n).filter(|&v| s & (1 << v) != 0).collect();
        if vs.len() > best && vs.iter().all(|&a| vs.iter().all(|&b| a == b || m.adj[a][b])) {
            best = vs.len();
        }
    }
    best
}

/// Whether `path` is a Hamilton path of `m`.
pub fn is_hamilton(m: &Matrix, path: &[usize]) -> bool {
    let mut seen = vec![false; m.n];
    for &v in path {
        if v >= m.n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    path.len() == m.n && path.windows(2).all(|w| m.adj[w[0]][w[1]])
}

/// Whether `n = p q^k` for distinct primes `p`, `q` and `k >= 1`, by trial
/// division.
pub fn is_pqn_order(n: usize) -> bool {
    let mut primes = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        let mut e = 0;
        while m.is_multiple_of(d) {
            m /= d;
            e += 1;
        }
        if e > 0 {
            primes.push(e);
        }
        d += 1;
    }
    if m > 1 {
        primes.push(1);
    }
    primes.len() == 2 && primes.contains(&1)
}
