//! Finite groups as dense Cayley tables.
//!
//! Elements are the indices `0..n`, and index 0 is always the identity.
//! Every constructor returns an immutable [`FiniteGroup`] with element
//! orders and inverses precomputed.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{is_prime, lcm};
use crate::error::{Error, Result};

/// Default ceiling on group order. The table is `n * n` entries.
pub const DEFAULT_MAX_ORDER: usize = 10_000;

const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 10_000;
const ASSOC_SEED: u64 = 0x5eed_1a4b_da00;

/// Structured name of how a group was built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Cyclic(usize),
    /// Dihedral group, parameter is the group order.
    Dihedral(usize),
    /// Generalized quaternion group, parameter is the group order.
    GeneralizedQuaternion(usize),
    Alternating5,
    Permutation(Vec<Permutation>),
    Product(Box<Descriptor>, Box<Descriptor>),
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Cyclic(n) => write!(f, "Z{n}"),
            Descriptor::Dihedral(m) => write!(f, "D{m}"),
            Descriptor::GeneralizedQuaternion(m) => write!(f, "Q{m}"),
            Descriptor::Alternating5 => write!(f, "A5"),
            Descriptor::Permutation(gens) => {
                write!(f, "perm:")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            Descriptor::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

/// A permutation of `{0..degree}` stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::invalid(format!(
                    "image vector {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles written with 1-based points.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::invalid(format!(
                        "point {p} outside domain 1..={degree}"
                    )));
                }
                if touched[p - 1] {
                    return Err(Error::invalid(format!(
                        "point {p} appears twice; cycles must be disjoint"
                    )));
                }
                touched[p - 1] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self` followed by `other`: `x -> other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    /// Canonical disjoint cycle form, 1-based, each cycle starting at its
    /// smallest point, cycles ordered by that point, fixed points dropped.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Same permutation on a larger domain.
    pub fn extended(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree()..degree.max(self.degree()));
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "(1)");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// A finite group given by its Cayley table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    orders: Vec<usize>,
    inverses: Vec<usize>,
    descriptor: Descriptor,
}

/// Maximal cyclic subgroups, largest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalCyclicDecomposition {
    pub subgroups: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    /// Whether every two distinct maximal cyclic subgroups meet only in the
    /// identity.
    pub pairwise_trivial: bool,
}

impl MaximalCyclicDecomposition {
    /// `n_1 + t - 2 <= n_2 + ... + n_t`.
    pub fn size_condition_holds(&self) -> bool {
        match self.sizes.split_first() {
            Some((first, rest)) => first + self.sizes.len() - 2 <= rest.iter().sum::<usize>(),
            None => false,
        }
    }
}

impl FiniteGroup {
    /// Wraps a row-major Cayley table with identity at index 0.
    pub fn from_table(order: usize, table: Vec<u32>, descriptor: Descriptor) -> Result<Self> {
        if order == 0 {
            return Err(Error::invalid("group order must be positive"));
        }
        if table.len() != order * order {
            return Err(Error::invalid("Cayley table has wrong size"));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::invalid("Cayley table entry out of range"));
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(Error::invalid("index 0 is not the identity"));
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            match row.iter().position(|&y| y == 0) {
                Some(y) => inverses[x] = y,
                None => return Err(Error::invalid(format!("element {x} has no inverse"))),
            }
        }
        let mut orders = vec![0; order];
        for (x, slot) in orders.iter_mut().enumerate() {
            let mut k = 1;
            let mut p = x;
            while p != 0 {
                p = table[p * order + x] as usize;
                k += 1;
                if k > order {
                    return Err(Error::invalid(format!("element {x} has no finite order")));
                }
            }
            *slot = k;
        }
        Ok(FiniteGroup {
            order,
            table,
            orders,
            inverses,
            descriptor,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn element_order(&self, x: usize) -> Result<usize> {
        self.check_index(x)?;
        Ok(self.orders[x])
    }

    pub fn power(&self, x: usize, k: usize) -> usize {
        let k = k % self.orders[x];
        (0..k).fold(0, |acc, _| self.op(acc, x))
    }

    /// The elements of `<x>` in ascending index order.
    pub fn cyclic_subgroup(&self, x: usize) -> Result<Vec<usize>> {
        self.check_index(x)?;
        let mut out = self.powers(x);
        out.sort_unstable();
        Ok(out)
    }

    /// `x^0, x^1, ..., x^(|x|-1)` in that order.
    pub fn powers(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.orders[x]);
        let mut p = 0;
        loop {
            out.push(p);
            p = self.op(p, x);
            if p == 0 {
                break;
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.order)
    }

    /// True when every non-identity element has prime order.
    pub fn is_p_group(&self) -> bool {
        self.orders[1..].iter().all(|&k| is_prime(k))
    }

    pub fn involutions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(|&x| self.orders[x] == 2)
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if x >= self.order {
            return Err(Error::invalid(format!(
                "element index {x} out of range for group of order {}",
                self.order
            )));
        }
        Ok(())
    }

    /// Checks identity, inverse, associativity and Lagrange. Associativity is
    /// exhaustive up to order 64 and sampled on a fixed seed above that.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.op(0, x) != x || self.op(x, 0) != x {
                return Err(Error::Internal(format!("identity law fails at {x}")));
            }
            if self.op(x, self.inverses[x]) != 0 || self.op(self.inverses[x], x) != 0 {
                return Err(Error::Internal(format!("inverse law fails at {x}")));
            }
            if !n.is_multiple_of(self.orders[x]) {
                return Err(Error::Internal(format!("order of {x} does not divide {n}")));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| self.op(self.op(a, b), c) == self.op(a, self.op(b, c));
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::Internal(format!("not associative at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SEED);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::Internal(format!("not associative at ({a},{b},{c})")));
                }
            }
        }
        Ok(())
    }

    pub fn maximal_cyclic_subgroups(&self) -> MaximalCyclicDecomposition {
        let n = self.order;
        let mut by_order: Vec<usize> = (0..n).collect();
        by_order.sort_by(|&a, &b| self.orders[b].cmp(&self.orders[a]).then(a.cmp(&b)));

        // An element outside every maximal subgroup found so far generates a
        // new maximal one: any strictly larger cyclic overgroup has a
        // generator of larger order, which was handled earlier.
        let mut covered = FixedBitSet::with_capacity(n);
        let mut subgroups = Vec::new();
        for x in by_order {
            if covered.contains(x) {
                continue;
            }
            let mut members = self.powers(x);
            for &m in &members {
                covered.insert(m);
            }
            members.sort_unstable();
            subgroups.push(members);
        }
        // Stable sort keeps generator order among equal sizes.
        subgroups.sort_by_key(|s| std::cmp::Reverse(s.len()));

        let mut hits = vec![0usize; n];
        for s in &subgroups {
            for &m in s {
                hits[m] += 1;
            }
        }
        let pairwise_trivial = hits[1..].iter().all(|&h| h == 1);
        let sizes = subgroups.iter().map(Vec::len).collect();
        MaximalCyclicDecomposition {
            subgroups,
            sizes,
            pairwise_trivial,
        }
    }
}

pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    make_cyclic_with_limit(n, DEFAULT_MAX_ORDER)
}

pub fn make_cyclic_with_limit(n: usize, max_order: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::invalid("cyclic group order must be at least 1"));
    }
    check_limit(n, max_order)?;
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
        .collect();
    FiniteGroup::from_table(n, table, Descriptor::Cyclic(n))
}

/// Dihedral group of order `m = 2k`, `k >= 3`. Index `i < k` is the rotation
/// `a^i`; index `k + i` is the reflection `a^i b`.
pub fn make_dihedral(m: usize) -> Result<FiniteGroup> {
    if !m.is_multiple_of(2) || m < 6 {
        return Err(Error::invalid(format!(
            "dihedral group order must be even and at least 6, got {m}"
        )));
    }
    check_limit(m, DEFAULT_MAX_ORDER)?;
    let k = m / 2;
    let mut table = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let (i, ra) = (a % k, a >= k);
            let (j, rb) = (b % k, b >= k);
            let prod = match (ra, rb) {
                (false, false) => (i + j) % k,
                (false, true) => k + (i + j) % k,
                (true, false) => k + (i + k - j) % k,
                (true, true) => (i + k - j) % k,
            };
            table.push(prod as u32);
        }
    }
    FiniteGroup::from_table(m, table, Descriptor::Dihedral(m))
}

/// Generalized quaternion group of order `m = 4k`, `k >= 2`, presented as
/// `<x, y | x^k = y^2, x^2k = 1, y^-1 x y = x^-1>`. Index `i < 2k` is `x^i`;
/// index `2k + i` is `x^i y`.
pub fn make_generalized_quaternion(m: usize) -> Result<FiniteGroup> {
    if !m.is_multiple_of(4) || m < 8 {
        return Err(Error::invalid(format!(
            "generalized quaternion order must be a multiple of 4 and at least 8, got {m}"
        )));
    }
    check_limit(m, DEFAULT_MAX_ORDER)?;
    let two_k = m / 2;
    let k = m / 4;
    let mut table = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let (i, ya) = (a % two_k, a >= two_k);
            let (j, yb) = (b % two_k, b >= two_k);
            // y x^j = x^-j y and y^2 = x^k.
            let prod = match (ya, yb) {
                (false, false) => (i + j) % two_k,
                (false, true) => two_k + (i + j) % two_k,
                (true, false) => two_k + (i + two_k - j) % two_k,
                (true, true) => (i + two_k - j + k) % two_k,
            };
            table.push(prod as u32);
        }
    }
    FiniteGroup::from_table(m, table, Descriptor::GeneralizedQuaternion(m))
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_with_limit(g, h, DEFAULT_MAX_ORDER)
}

/// Element `(a, b)` gets index `a * |h| + b`.
pub fn direct_product_with_limit(
    g: &FiniteGroup,
    h: &FiniteGroup,
    max_order: usize,
) -> Result<FiniteGroup> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng
        .checked_mul(nh)
        .ok_or_else(|| Error::capacity("direct product order", max_order))?;
    check_limit(n, max_order)?;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a1, b1) = (x / nh, x % nh);
        for y in 0..n {
            let (a2, b2) = (y / nh, y % nh);
            table.push((g.op(a1, a2) * nh + h.op(b1, b2)) as u32);
        }
    }
    let out = FiniteGroup::from_table(
        n,
        table,
        Descriptor::Product(Box::new(g.descriptor.clone()), Box::new(h.descriptor.clone())),
    )?;
    debug_assert!((0..n).all(|x| out.orders[x] == lcm(g.orders[x / nh], h.orders[x % nh])));
    Ok(out)
}

pub fn from_permutations(generators: &[Permutation], degree: usize) -> Result<FiniteGroup> {
    from_permutations_with_limit(generators, degree, DEFAULT_MAX_ORDER)
}

/// Closure of the generators under composition, breadth first. Element 0
/// is the identity and new elements are numbered in discovery order, with
/// generators tried in the order given.
pub fn from_permutations_with_limit(
    generators: &[Permutation],
    degree: usize,
    max_order: usize,
) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(Error::invalid("permutation domain must be non-empty"));
    }
    let gens: Vec<Permutation> = generators
        .iter()
        .map(|g| {
            if g.degree() > degree {
                Err(Error::invalid(format!(
                    "generator {g} acts on more than {degree} points"
                )))
            } else {
                Ok(g.extended(degree))
            }
        })
        .collect::<Result<_>>()?;

    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let next = elements[i].then(g);
            if !index.contains_key(&next) {
                if elements.len() >= max_order {
                    return Err(Error::capacity("permutation group closure", max_order));
                }
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }

    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            table.push(index[&a.then(b)] as u32);
        }
    }
    FiniteGroup::from_table(n, table, Descriptor::Permutation(generators.to_vec()))
}

/// The alternating group on five letters, generated by `(1 2 3 4 5)` and
/// `(1 2 3)`.
pub fn make_a5() -> Result<FiniteGroup> {
    let gens = [
        Permutation::from_cycles(&[vec![1, 2, 3, 4, 5]], 5)?,
        Permutation::from_cycles(&[vec![1, 2, 3]], 5)?,
    ];
    let mut g = from_permutations(&gens, 5)?;
    g.descriptor = Descriptor::Alternating5;
    Ok(g)
}

fn check_limit(n: usize, max_order: usize) -> Result<()> {
    if n > max_order {
        return Err(Error::capacity(format!("group of order {n}"), max_order));
    }
    Ok(())
}
