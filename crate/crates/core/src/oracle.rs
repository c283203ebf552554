//! Closed-form λ values for recognizable group families, and consistency
//! checks that tie a computed λ back to the structural characterizations.
//!
//! Family recognition reads the Cayley table, never only the descriptor, so
//! permutation-generated groups are classified the same way as groups built
//! by the named constructors.

use std::fmt;

use serde::Serialize;

use crate::arith::{factorize, is_power_of_two, is_prime, prime_power, split_pqn};
use crate::error::Result;
use crate::groups::FiniteGroup;
use crate::invariants::hamilton_path;
use crate::powergraph::build_power_graph;

pub use crate::arith::euler_phi;

/// Which closed form produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredictionSource {
    /// Cyclic of prime power order: the power graph is complete.
    CompleteGraph,
    /// Cyclic of order `p q^n`.
    CyclicPqn,
    Dihedral,
    GeneralizedQuaternion,
    /// Every non-identity element has prime order.
    PGroup,
    /// Abelian with every non-identity element of the same prime order.
    ElementaryAbelian,
    /// Noncyclic, maximal cyclic subgroups meet trivially and the largest is
    /// no bigger than the rest allow.
    MaximalCyclicCut,
}

impl PredictionSource {
    pub fn tag(self) -> &'static str {
        match self {
            PredictionSource::CompleteGraph => "complete-graph",
            PredictionSource::CyclicPqn => "cyclic-pqn",
            PredictionSource::Dihedral => "dihedral",
            PredictionSource::GeneralizedQuaternion => "generalized-quaternion",
            PredictionSource::PGroup => "p-group",
            PredictionSource::ElementaryAbelian => "elementary-abelian",
            PredictionSource::MaximalCyclicCut => "maximal-cyclic-cut",
        }
    }
}

impl fmt::Display for PredictionSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub value: Option<usize>,
    pub source: Option<PredictionSource>,
    pub applicability: String,
}

impl Prediction {
    fn matched(value: usize, source: PredictionSource, applicability: String) -> Self {
        Prediction {
            value: Some(value),
            source: Some(source),
            applicability,
        }
    }

    fn none() -> Self {
        Prediction {
            value: None,
            source: None,
            applicability: "no closed form applies".into(),
        }
    }
}

/// `Some(k)` when `g` is dihedral of order `2k` with `k >= 3`: a cyclic
/// subgroup of index 2 whose coset consists of involutions.
pub fn dihedral_parameter(g: &FiniteGroup) -> Option<usize> {
    let n = g.order();
    if !n.is_multiple_of(2) || n < 6 || g.is_abelian() {
        return None;
    }
    let k = n / 2;
    index_two_cyclic(g, |outside| g.orders()[outside] == 2).map(|_| k)
}

/// `Some(k)` when `g` is generalized quaternion of order `4k`, `k >= 2`:
/// a unique involution, a cyclic subgroup of index 2, and every element
/// outside it of order 4.
pub fn quaternion_parameter(g: &FiniteGroup) -> Option<usize> {
    let n = g.order();
    if !n.is_multiple_of(4) || n < 8 || g.involutions().count() != 1 || g.is_abelian() {
        return None;
    }
    index_two_cyclic(g, |outside| g.orders()[outside] == 4).map(|_| n / 4)
}

fn index_two_cyclic(g: &FiniteGroup, outside_ok: impl Fn(usize) -> bool) -> Option<usize> {
    let half = g.order() / 2;
    (0..g.order()).filter(|&a| g.orders()[a] == half).find(|&a| {
        let mut inside = vec![false; g.order()];
        for p in g.powers(a) {
            inside[p] = true;
        }
        (0..g.order()).filter(|&e| !inside[e]).all(&outside_ok)
    })
}

fn is_cyclic_prime_power(g: &FiniteGroup) -> bool {
    g.is_cyclic() && (g.order() == 1 || prime_power(g.order()).is_some())
}

fn zpqn_formula(p: usize, q: usize, n: u32) -> usize {
    if p < q {
        2 * q.pow(n - 1) * (p * q - p + 1) - 2
    } else {
        2 * q.pow(n) * (p - 1)
    }
}

/// Every closed form that applies to `g`, in rule order.
pub fn matching_predictions(g: &FiniteGroup) -> Vec<Prediction> {
    let n = g.order();
    let mut out = Vec::new();
    if is_cyclic_prime_power(g) {
        out.push(Prediction::matched(
            2 * n - 2,
            PredictionSource::CompleteGraph,
            format!("cyclic of prime power order {n}"),
        ));
    }
    if g.is_cyclic() {
        if let Some((p, q, e)) = split_pqn(n) {
            out.push(Prediction::matched(
                zpqn_formula(p, q, e),
                PredictionSource::CyclicPqn,
                format!("cyclic of order {p}*{q}^{e}"),
            ));
        }
    }
    if let Some(k) = dihedral_parameter(g) {
        out.push(Prediction::matched(
            2 * k,
            PredictionSource::Dihedral,
            format!("dihedral of order {n}"),
        ));
    }
    if let Some(k) = quaternion_parameter(g) {
        let v = if is_power_of_two(k) { 4 * k + 1 } else { 4 * k };
        out.push(Prediction::matched(
            v,
            PredictionSource::GeneralizedQuaternion,
            format!("generalized quaternion of order {n}"),
        ));
    }
    if n > 1 && g.is_p_group() {
        let v = if is_prime(n) { 2 * (n - 1) } else { n };
        let elementary = g.is_abelian() && factorize(n).len() == 1;
        let source = if elementary && !is_prime(n) {
            PredictionSource::ElementaryAbelian
        } else {
            PredictionSource::PGroup
        };
        out.push(Prediction::matched(v, source, format!("P-group of order {n}")));
    }
    if !g.is_cyclic() {
        let m = g.maximal_cyclic_subgroups();
        if m.pairwise_trivial && m.size_condition_holds() {
            out.push(Prediction::matched(
                n,
                PredictionSource::MaximalCyclicCut,
                format!("maximal cyclic subgroup sizes {:?}", m.sizes),
            ));
        }
    }
    out
}

/// The first applicable closed form, or an empty prediction.
pub fn predict_lambda(g: &FiniteGroup) -> Prediction {
    matching_predictions(g).into_iter().next().unwrap_or_else(Prediction::none)
}

/// True iff `g` is cyclic of order `p q^n` (`p != q` primes, `n >= 1`),
/// the groups whose power graph has independence number 2.
pub fn classify_alpha2(g: &FiniteGroup) -> bool {
    g.is_cyclic() && split_pqn(g.order()).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerEqualityVerdict {
    /// `None` when the Hamilton search was inconclusive or the group is
    /// trivial, where the characterization does not apply.
    pub consistent: Option<bool>,
    pub lambda_equals_order: bool,
    pub hamilton_exists: Option<bool>,
    /// Witness path in the complement of `Γ - e`, as element indices.
    pub hamilton_path: Option<Vec<usize>>,
}

/// Checks `λ = n` against the existence of a Hamilton path in the complement
/// of the power graph with the identity removed.
pub fn check_lower_equality(g: &FiniteGroup, lambda: usize, dp_limit: usize) -> Result<LowerEqualityVerdict> {
    let n = g.order();
    let lambda_equals_order = lambda == n;
    if n < 2 {
        return Ok(LowerEqualityVerdict {
            consistent: None,
            lambda_equals_order,
            hamilton_exists: None,
            hamilton_path: None,
        });
    }
    let pg = build_power_graph(g);
    let (rest, map) = pg.without_identity();
    let outcome = hamilton_path(&rest.complement(), dp_limit);
    let (exists, path) = match outcome {
        Ok(Some(p)) => (Some(true), Some(p.into_iter().map(|i| map[i]).collect())),
        Ok(None) => (Some(false), None),
        Err(e) if e.is_capacity() => (None, None),
        Err(e) => return Err(e),
    };
    Ok(LowerEqualityVerdict {
        consistent: exists.map(|h| lambda >= n && h == lambda_equals_order),
        lambda_equals_order,
        hamilton_exists: exists,
        hamilton_path: path,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperVerdict {
    /// False for cyclic groups of prime power order, where the check does not
    /// apply.
    pub applicable: bool,
    pub consistent: bool,
    pub equality: bool,
    /// `g` is the Klein four-group or cyclic of order `2q`, `q` an odd prime.
    pub exceptional: bool,
}

pub fn is_upper_exceptional(g: &FiniteGroup) -> bool {
    let n = g.order();
    let klein = n == 4 && g.involutions().count() == 3;
    let z2q = g.is_cyclic() && n.is_multiple_of(2) && n / 2 > 2 && is_prime(n / 2);
    klein || z2q
}

/// Checks `λ <= 2n - 4` with equality exactly on the exceptional groups.
pub fn check_upper_classification(g: &FiniteGroup, lambda: usize) -> UpperVerdict {
    let n = g.order();
    if is_cyclic_prime_power(g) {
        return UpperVerdict {
            applicable: false,
            consistent: true,
            equality: false,
            exceptional: false,
        };
    }
    let bound = 2 * n - 4;
    let equality = lambda == bound;
    let exceptional = is_upper_exceptional(g);
    UpperVerdict {
        applicable: true,
        consistent: lambda <= bound && equality == exceptional,
        equality,
        exceptional,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::*;

    fn prod(a: usize, b: usize) -> FiniteGroup {
        direct_product(&make_cyclic(a).unwrap(), &make_cyclic(b).unwrap()).unwrap()
    }

    #[test]
    fn predictions() {
        let p = predict_lambda(&make_cyclic(9).unwrap());
        assert_eq!((p.value, p.source), (Some(16), Some(PredictionSource::CompleteGraph)));
        let p = predict_lambda(&make_cyclic(18).unwrap());
        assert_eq!((p.value, p.source), (Some(28), Some(PredictionSource::CyclicPqn)));
        let p = predict_lambda(&make_generalized_quaternion(16).unwrap());
        assert_eq!((p.value, p.source), (Some(17), Some(PredictionSource::GeneralizedQuaternion)));
        let p = predict_lambda(&make_dihedral(12).unwrap());
        assert_eq!((p.value, p.source), (Some(12), Some(PredictionSource::Dihedral)));
        let p = predict_lambda(&prod(2, 2));
        assert_eq!((p.value, p.source), (Some(4), Some(PredictionSource::ElementaryAbelian)));
        let p = predict_lambda(&make_a5().unwrap());
        assert_eq!((p.value, p.source), (Some(60), Some(PredictionSource::PGroup)));
        let p = predict_lambda(&make_cyclic(30).unwrap());
        assert_eq!(p.value, None);
        let p = predict_lambda(&make_cyclic(1).unwrap());
        assert_eq!(p.value, Some(0));
    }

    #[test]
    fn zpqn_formula_values() {
        assert_eq!(zpqn_formula(2, 3, 1), 8);
        assert_eq!(zpqn_formula(3, 2, 1), 8);
        assert_eq!(zpqn_formula(2, 3, 2), 28);
        assert_eq!(zpqn_formula(3, 2, 2), 16);
        assert_eq!(zpqn_formula(2, 5, 1), 16);
        assert_eq!(zpqn_formula(5, 2, 1), 16);
        assert_eq!(zpqn_formula(3, 5, 1), 24);
    }

    #[test]
    fn rules_agree_when_several_match() {
        let groups = [
            make_dihedral(6).unwrap(),
            make_dihedral(10).unwrap(),
            prod(2, 2),
            prod(3, 3),
            direct_product(&prod(2, 2), &make_cyclic(2).unwrap()).unwrap(),
            make_a5().unwrap(),
            make_cyclic(6).unwrap(),
        ];
        for g in &groups {
            let preds = matching_predictions(g);
            assert!(!preds.is_empty());
            assert!(preds.iter().all(|p| p.value == preds[0].value), "{}", g.descriptor());
        }
    }

    #[test]
    fn structural_recognition() {
        assert_eq!(dihedral_parameter(&make_dihedral(14).unwrap()), Some(7));
        assert_eq!(dihedral_parameter(&make_generalized_quaternion(12).unwrap()), None);
        assert_eq!(dihedral_parameter(&prod(2, 4)), None);
        assert_eq!(quaternion_parameter(&make_generalized_quaternion(20).unwrap()), Some(5));
        assert_eq!(quaternion_parameter(&make_dihedral(8).unwrap()), None);
        assert_eq!(quaternion_parameter(&make_cyclic(8).unwrap()), None);
        // D6 as permutations of a triangle.
        let r = Permutation::from_cycles(&[vec![1, 2, 3]], 3).unwrap();
        let s = Permutation::from_cycles(&[vec![2, 3]], 3).unwrap();
        assert_eq!(dihedral_parameter(&from_permutations(&[r, s], 3).unwrap()), Some(3));
    }

    #[test]
    fn alpha2_classification() {
        assert!(classify_alpha2(&make_cyclic(6).unwrap()));
        assert!(classify_alpha2(&make_cyclic(12).unwrap()));
        assert!(!classify_alpha2(&make_cyclic(30).unwrap()));
        assert!(!classify_alpha2(&prod(2, 2)));
        assert!(classify_alpha2(&prod(2, 3)));
    }

    #[test]
    fn lower_equality_checks() {
        let v = check_lower_equality(&make_dihedral(6).unwrap(), 6, 24).unwrap();
        assert_eq!(v.consistent, Some(true));
        assert!(v.hamilton_path.is_some());
        let v = check_lower_equality(&make_generalized_quaternion(8).unwrap(), 9, 24).unwrap();
        assert_eq!(v.consistent, Some(true));
        assert_eq!(v.hamilton_exists, Some(false));
        let v = check_lower_equality(&make_cyclic(4).unwrap(), 6, 24).unwrap();
        assert_eq!(v.consistent, Some(true));
        let v = check_lower_equality(&make_dihedral(6).unwrap(), 7, 24).unwrap();
        assert_eq!(v.consistent, Some(false));
    }

    #[test]
    fn upper_classification_checks() {
        let v = check_upper_classification(&make_cyclic(6).unwrap(), 8);
        assert!(v.consistent && v.equality && v.exceptional);
        let v = check_upper_classification(&prod(2, 2), 4);
        assert!(v.consistent && v.equality);
        let v = check_upper_classification(&make_dihedral(6).unwrap(), 6);
        assert!(v.consistent && !v.equality);
        let v = check_upper_classification(&make_dihedral(6).unwrap(), 8);
        assert!(!v.consistent);
        assert!(!check_upper_classification(&make_cyclic(8).unwrap(), 14).applicable);
    }
}
