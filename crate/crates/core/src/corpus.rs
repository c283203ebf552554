//! The built-in sweep corpus: every abelian group (cyclic included) up to a
//! given order, plus the dihedral and generalized quaternion families.

use crate::arith::factorize;
use crate::error::Result;
use crate::groups::{Descriptor, FiniteGroup, DEFAULT_MAX_ORDER};
use crate::groupspec::build_descriptor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Cyclic,
    /// Abelian but not cyclic.
    Abelian,
    Dihedral,
    Quaternion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub family: Family,
    pub order: usize,
    pub descriptor: Descriptor,
}

impl CorpusEntry {
    pub fn spec(&self) -> String {
        self.descriptor.to_string()
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        build_descriptor(&self.descriptor, DEFAULT_MAX_ORDER)
    }
}

/// All corpus groups of order at most `max_order`, sorted by order and then
/// by spec.
pub fn corpus(max_order: usize) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        for factors in invariant_factor_lists(n) {
            let family = if factors.len() == 1 { Family::Cyclic } else { Family::Abelian };
            out.push(CorpusEntry {
                family,
                order: n,
                descriptor: product_of_cyclics(&factors),
            });
        }
        if n >= 6 && n % 2 == 0 {
            out.push(CorpusEntry {
                family: Family::Dihedral,
                order: n,
                descriptor: Descriptor::Dihedral(n),
            });
        }
        if n >= 8 && n % 4 == 0 {
            out.push(CorpusEntry {
                family: Family::Quaternion,
                order: n,
                descriptor: Descriptor::GeneralizedQuaternion(n),
            });
        }
    }
    out.sort_by_cached_key(|e| (e.order, e.spec()));
    out
}

/// Invariant factor decompositions `d_1 | d_2 | ... | d_k` with product `n`,
/// one per isomorphism class of abelian groups of order `n`.
pub fn invariant_factor_lists(n: usize) -> Vec<Vec<usize>> {
    let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for list in &lists {
            for part in partitions(e as usize) {
                // Lists are kept descending, so the largest exponents pair
                // with the largest existing factors.
                let mut merged = list.clone();
                merged.resize(merged.len().max(part.len()), 1);
                for (i, &k) in part.iter().enumerate() {
                    merged[i] *= p.pow(k as u32);
                }
                next.push(merged);
            }
        }
        lists = next;
    }
    for list in &mut lists {
        list.retain(|&d| d > 1);
        list.sort_unstable();
        if list.is_empty() {
            list.push(1);
        }
    }
    lists.sort();
    lists
}

/// Partitions of `e` into positive parts, parts in descending order.
fn partitions(e: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(e, e, &mut Vec::new(), &mut out);
    out
}

fn product_of_cyclics(factors: &[usize]) -> Descriptor {
    let mut it = factors.iter().map(|&d| Descriptor::Cyclic(d));
    let first = it.next().expect("at least one factor");
    it.fold(first, |acc, d| Descriptor::Product(Box::new(acc), Box::new(d)))
}
