mod common;

use common::*;
use lambda_power::corpus::corpus;
use lambda_power::exact::{lambda_exact, ExactOptions};
use lambda_power::groups::{from_permutations, FiniteGroup, Permutation};
use lambda_power::invariants::{clique_number, independence_number};
use lambda_power::labeling::{construct_partition_labeling, zpqn_order_classes, PartitionCertificate};
use lambda_power::{build_power_graph, parse_group_spec};
use proptest::prelude::*;

fn exhaustive_axioms(g: &FiniteGroup) -> bool {
    let n = g.order();
    let e = (0..n).find(|&e| (0..n).all(|x| g.op(e, x) == x && g.op(x, e) == x));
    let Some(e) = e else { return false };
    let inverses = (0..n).all(|x| (0..n).any(|y| g.op(x, y) == e));
    let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| g.op(g.op(a, b), c) == g.op(a, g.op(b, c)))));
    e == 0 && inverses && assoc
}

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_groups_satisfy_axioms(gens in proptest::collection::vec(permutation(4), 1..3)) {
        let g = from_permutations(&gens, 4).unwrap();
        prop_assert!(g.order() <= 24 && 24 % g.order() == 0);
        prop_assert!(exhaustive_axioms(&g));
        prop_assert!(g.verify_axioms().is_ok());
    }

    #[test]
    fn products_satisfy_axioms(a in 1usize..9, b in 1usize..9) {
        let g = parse_group_spec(&format!("Z{a}xZ{b}")).unwrap().build(64).unwrap();
        prop_assert_eq!(g.order(), a * b);
        prop_assert!(exhaustive_axioms(&g));
        prop_assert_eq!(g.is_cyclic(), gcd(a, b) == 1);
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn corpus_groups_are_groups_and_power_graphs_match() {
    for e in corpus(30) {
        let g = e.build().unwrap();
        if g.order() <= 64 {
            assert!(exhaustive_axioms(&g), "{}", e.spec());
        }
        let pg = build_power_graph(&g);
        let m = power_graph_matrix(&g);
        assert_eq!(pg.edges(), m.edges(), "{}", e.spec());
    }
}

/// Labeling and bound invariants over every exactly solved corpus group.
#[test]
fn reports_satisfy_invariants() {
    for e in corpus(24) {
        let g = e.build().unwrap();
        let n = g.order();
        let r = lambda_exact(&g, &ExactOptions::default()).unwrap();
        let Some(lambda) = r.lambda else { continue };
        let m = power_graph_matrix(&g);
        let labels = r.labeling.as_ref().expect("witness requested");
        assert!(is_l21(&m, labels), "{}", e.spec());
        assert_eq!(span(labels), lambda, "{}", e.spec());
        if n >= 2 {
            assert!(lambda >= n, "{}", e.spec());
            // Diameter two forces distinct labels.
            let mut sorted = labels.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), n, "{}", e.spec());
        }
        let pg = build_power_graph(&g);
        let omega = clique_number(&pg, 128).unwrap().value;
        let alpha = independence_number(&pg, 128).unwrap().value;
        assert!(2 * omega - 2 <= lambda, "{}", e.spec());
        assert!(lambda + alpha < 2 * n || n == 1, "{}", e.spec());
    }
}

/// Whenever a partition certificate validates, the constructed labeling has
/// span `2ω - 2`, and that is λ.
#[test]
fn partition_certificates_reach_clique_bound() {
    let mut validated = 0;
    for m in 6..=60 {
        let Some((p, q, n)) = lambda_power::arith::split_pqn(m) else { continue };
        let classes = zpqn_order_classes(p, q, n).unwrap();
        let (mut c_parts, a_parts) = if p < q { (classes.y, classes.x) } else { (classes.x, classes.y) };
        c_parts.push(classes.z);
        let cert = PartitionCertificate {
            clique: c_parts.iter().flatten().copied().collect(),
            a_parts,
            c_parts,
        };
        let g = parse_group_spec(&format!("Z{m}")).unwrap().build(64).unwrap();
        let pg = build_power_graph(&g);
        if cert.validate(&pg).is_err() {
            continue;
        }
        validated += 1;
        let l = construct_partition_labeling(&pg, &cert).unwrap();
        let omega = clique_number(&pg, 128).unwrap().value;
        assert_eq!(l.span(), 2 * omega - 2, "Z{m}");
        assert!(is_l21(&power_graph_matrix(&g), l.labels()), "Z{m}");
        if let Some(lambda) = lambda_exact(&g, &ExactOptions::default()).unwrap().lambda {
            assert_eq!(lambda, l.span(), "Z{m}");
        }
    }
    assert!(validated >= 8, "only {validated} certificates validated");
}
