//! Explicit labelings that attain λ on specific families.

use crate::arith::{euler_phi, gcd, is_power_of_two, is_prime};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{make_cyclic, make_dihedral, make_generalized_quaternion};
use crate::invariants::is_clique;
use crate::powergraph::build_power_graph;

use super::{ensure_valid, Labeling};

/// A maximum clique `C` split into blocks `C_1..C_{s+1}` and the rest of the
/// graph split into `A_1..A_s`, with `|A_i| < |C_i|` and no edges between
/// `A_i` and `C_i`. Such a partition labels the graph with span `2|C| - 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub clique: Vec<usize>,
    pub a_parts: Vec<Vec<usize>>,
    pub c_parts: Vec<Vec<usize>>,
}

impl PartitionCertificate {
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        let n = graph.vertex_count();
        if self.c_parts.len() != self.a_parts.len() + 1 {
            return Err(Error::invalid(format!(
                "need exactly one more clique block than A-parts ({} vs {})",
                self.c_parts.len(),
                self.a_parts.len()
            )));
        }
        if !is_clique(graph, &self.clique) {
            return Err(Error::invalid("certificate clique is not a clique"));
        }
        let mut in_clique = vec![false; n];
        for &v in &self.clique {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} out of range")));
            }
            in_clique[v] = true;
        }
        let mut seen = vec![false; n];
        for (block, want_clique) in self
            .c_parts
            .iter()
            .map(|b| (b, true))
            .chain(self.a_parts.iter().map(|b| (b, false)))
        {
            for &v in block {
                if v >= n || seen[v] || in_clique[v] != want_clique {
                    return Err(Error::invalid(format!(
                        "vertex {v} misplaced: blocks must partition the clique and its complement"
                    )));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::invalid("blocks do not cover every vertex"));
        }
        for (i, (a, c)) in self.a_parts.iter().zip(&self.c_parts).enumerate() {
            if a.len() + 1 > c.len() {
                return Err(Error::invalid(format!(
                    "block {i}: |A| = {} but |C| = {}",
                    a.len(),
                    c.len()
                )));
            }
            if a.iter().any(|&u| c.iter().any(|&v| graph.adjacent(u, v))) {
                return Err(Error::invalid(format!("block {i}: A and C are not fully nonadjacent")));
            }
        }
        Ok(())
    }
}

/// Clique vertices get the even labels `2, 4, ..., 2|C|` in block order;
/// the `l`-th vertex of `A_i` gets one more than the `l`-th vertex of `C_i`.
pub fn construct_partition_labeling(graph: &Graph, cert: &PartitionCertificate) -> Result<Labeling> {
    cert.validate(graph)?;
    let labeling = interleaved_labeling(graph.vertex_count(), &cert.c_parts, &cert.a_parts);
    ensure_valid(graph, &labeling, "partition construction")?;
    Ok(labeling)
}

fn interleaved_labeling(n: usize, blocks: &[Vec<usize>], attached: &[Vec<usize>]) -> Labeling {
    let mut labels = vec![0; n];
    let mut next = 2;
    for (i, block) in blocks.iter().enumerate() {
        for (l, &v) in block.iter().enumerate() {
            labels[v] = next;
            if let Some(&u) = attached.get(i).and_then(|a| a.get(l)) {
                labels[u] = next + 1;
            }
            next += 2;
        }
    }
    Labeling::new(labels)
}

/// The labeling of `D_{2k}` with rotations `a^i -> 2i + 1`, reflections
/// `a^i b -> 2i + 2` and the identity at 0, span `2k`.
pub fn construct_dihedral_labeling(k: usize) -> Result<Labeling> {
    if k < 3 {
        return Err(Error::invalid(format!("dihedral parameter must be >= 3, got {k}")));
    }
    let g = make_dihedral(2 * k)?;
    let mut labels = vec![0; 2 * k];
    for i in 1..k {
        labels[i] = 2 * i + 1;
    }
    for i in 0..k {
        labels[k + i] = 2 * i + 2;
    }
    let labeling = Labeling::new(labels);
    ensure_valid(&build_power_graph(&g), &labeling, "dihedral construction")?;
    Ok(labeling)
}

/// Labeling of `Q_{4k}` (index layout of
/// [`make_generalized_quaternion`]): span `4k + 1` when `k` is a power of 2,
/// otherwise span `4k`.
pub fn construct_quaternion_labeling(k: usize) -> Result<Labeling> {
    if k < 2 {
        return Err(Error::invalid(format!("quaternion parameter must be >= 2, got {k}")));
    }
    let g = make_generalized_quaternion(4 * k)?;
    let two_k = 2 * k;
    let x = |i: usize| i % two_k;
    let xy = |i: usize| two_k + i % two_k;
    let mut labels = vec![usize::MAX; 4 * k];

    if is_power_of_two(k) {
        labels[x(0)] = 0;
        labels[x(k)] = 2;
        labels[x(1)] = two_k;
        for i in (2..two_k).filter(|&i| i != k) {
            labels[x(i)] = 2 * i;
        }
        for j in 1..k {
            labels[xy(j)] = 2 * (j + 1) + 3;
            labels[xy(two_k - j)] = two_k + 2 * (j + 1) + 1;
        }
        labels[xy(0)] = 5;
        labels[xy(k)] = 4 * k;
    } else {
        // x0 = x^(2^a) with 2^a the 2-part of 2k: the element of largest odd
        // order in <x>.
        let two_part = two_k & two_k.wrapping_neg();
        let x0 = x(two_part);
        labels[x(0)] = 0;
        labels[x(k)] = 2;
        labels[x0] = 3;
        let rest = (1..two_k).map(x).filter(|&e| e != x(k) && e != x0);
        for (i, e) in rest.enumerate() {
            labels[e] = 2 * (i + 2) + 1;
        }
        for j in 1..k {
            labels[xy(j)] = 2 * (j + 2);
            labels[xy(two_k - j)] = two_k + 2 * (j + 1);
        }
        labels[xy(0)] = 4;
        labels[xy(k)] = 4 * k - 1;
    }
    debug_assert!(labels.iter().all(|&l| l != usize::MAX));
    let labeling = Labeling::new(labels);
    ensure_valid(&build_power_graph(&g), &labeling, "quaternion construction")?;
    Ok(labeling)
}

/// Order classes of `Z_{pq^n}` (element indices ascending within each):
/// `x[i-1]` holds elements of order `p q^(n-i)`, `y[i-1]` those of order
/// `q^(n+1-i)`, and `z` the identity plus the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZpqnClasses {
    pub x: Vec<Vec<usize>>,
    pub y: Vec<Vec<usize>>,
    pub z: Vec<usize>,
}

pub fn zpqn_order_classes(p: usize, q: usize, n: u32) -> Result<ZpqnClasses> {
    check_pqn(p, q, n)?;
    let qn = q.pow(n);
    let order = p * qn;
    let element_order = |g: usize| order / gcd(order, g);
    let nn = n as usize;
    let mut x = vec![Vec::new(); nn];
    let mut y = vec![Vec::new(); nn];
    let mut z = Vec::new();
    for g in 0..order {
        let o = element_order(g);
        if o == 1 || o == order {
            z.push(g);
        } else if o % p == 0 {
            // o = p q^(n-i)
            let b = (o / p).ilog(q) as usize;
            x[nn - 1 - b].push(g);
        } else {
            // o = q^(n+1-i)
            let b = o.ilog(q) as usize;
            y[nn - b].push(g);
        }
    }
    debug_assert_eq!(z.len(), euler_phi(order) + 1);
    Ok(ZpqnClasses { x, y, z })
}

/// Labeling of `Z_{pq^n}` with span `2 ω - 2`. For `(p, q) = (3, 2)` the
/// `Y_i` blocks are as large as the `X_i` blocks they pair with, so the
/// interleaving runs directly over the order classes; otherwise it goes
/// through a [`PartitionCertificate`].
pub fn construct_zpqn_labeling(p: usize, q: usize, n: u32) -> Result<Labeling> {
    let classes = zpqn_order_classes(p, q, n)?;
    let g = make_cyclic(p * q.pow(n))?;
    let graph = build_power_graph(&g);

    if (p, q) == (3, 2) {
        let mut blocks = classes.x.clone();
        blocks.push(classes.z.clone());
        let labeling = interleaved_labeling(g.order(), &blocks, &classes.y);
        ensure_valid(&graph, &labeling, "Z_{3*2^n} construction")?;
        return Ok(labeling);
    }

    let (clique_classes, attached) = if p < q {
        (classes.y, classes.x)
    } else {
        (classes.x, classes.y)
    };
    let mut c_parts = clique_classes;
    c_parts.push(classes.z);
    let cert = PartitionCertificate {
        clique: c_parts.iter().flatten().copied().collect(),
        a_parts: attached,
        c_parts,
    };
    construct_partition_labeling(&graph, &cert)
}

fn check_pqn(p: usize, q: usize, n: u32) -> Result<()> {
    if !is_prime(p) || !is_prime(q) || p == q || n == 0 {
        return Err(Error::invalid(format!(
            "need distinct primes p, q and n >= 1, got p={p}, q={q}, n={n}"
        )));
    }
    Ok(())
}
