use std::collections::{BTreeMap, HashMap};

use proptest::prelude::*;

use gtcrystal::bijection::pattern_to_tableau;
use gtcrystal::crystal::{
    build_graph, build_graph_bfs, connectivity, highest_weight_elements, verify_axioms,
    verify_isomorphism, CrystalGraph, CrystalModel, GtpCrystal, SsytCrystal,
};
use gtcrystal::gtpattern::{enumerate_patterns, validate_pattern, GtPattern, Pick};
use gtcrystal::partition::partitions_up_to;
use gtcrystal::ssyt::{enumerate_tableaux, validate_tableau};
use gtcrystal::{Error, Partition};

fn part(parts: &[i64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn gtp_graph(n: usize, parts: &[i64]) -> CrystalGraph {
    build_graph(
        &GtpCrystal::new(n),
        &enumerate_patterns(n, &part(parts)).unwrap(),
    )
    .unwrap()
}

#[test]
fn small_graph_sizes() {
    let g = gtp_graph(3, &[3, 1, 0]);
    assert_eq!((g.vertices.len(), g.edges.len()), (15, 18));
    let g = gtp_graph(1, &[4]);
    assert_eq!((g.vertices.len(), g.edges.len()), (1, 0));
    assert_eq!(connectivity(&g), 1);
    let g = gtp_graph(2, &[1, 0]);
    assert_eq!((g.vertices.len(), g.edges.len()), (2, 1));
    assert_eq!(g.edges[0].i, 1);
}

#[test]
fn highest_weight_of_small_crystals() {
    let model = GtpCrystal::new(1);
    let one = enumerate_patterns(1, &part(&[4])).unwrap();
    assert_eq!(highest_weight_elements(&model, &one).unwrap(), one);

    let model = SsytCrystal::new(3);
    let tableaux = enumerate_tableaux(3, &part(&[3, 1])).unwrap();
    let top = validate_tableau(3, &part(&[3, 1]), vec![vec![1, 1, 1], vec![2]]).unwrap();
    assert_eq!(
        highest_weight_elements(&model, &tableaux).unwrap(),
        vec![top]
    );
}

#[test]
fn disjoint_union_has_two_components() {
    let g = gtp_graph(3, &[3, 1, 0]);
    let doubled = g.disjoint_union(&g, "#2");
    assert_eq!(doubled.vertices.len(), 30);
    assert_eq!(connectivity(&doubled), 2);
    assert_eq!(doubled.sources().len(), 2);
}

#[test]
fn escaping_element_is_reported() {
    let model = GtpCrystal::new(3);
    let mut patterns = enumerate_patterns(3, &part(&[3, 1])).unwrap();
    patterns.retain(|p| p.entry(1, 1) != 0);
    match build_graph(&model, &patterns) {
        Err(Error::Escape { key }) => assert!(key.contains("rows")),
        other => panic!("expected an escape error, got {other:?}"),
    }
}

#[test]
fn identity_and_bijection_are_isomorphisms() {
    let gtp = GtpCrystal::new(3);
    let patterns = enumerate_patterns(3, &part(&[3, 1])).unwrap();
    assert!(verify_isomorphism(&gtp, &patterns, &gtp, &patterns, |p| Ok(p.clone())).pass);
    let tableaux = enumerate_tableaux(3, &part(&[3, 1])).unwrap();
    let report = verify_isomorphism(
        &gtp,
        &patterns,
        &SsytCrystal::new(3),
        &tableaux,
        pattern_to_tableau,
    );
    assert!(report.pass, "{:?}", report.violations);
    assert_eq!(report.checked, 30);
}

#[test]
fn transposing_two_equal_weight_vertices_breaks_intertwining() {
    let gtp = GtpCrystal::new(3);
    let patterns = enumerate_patterns(3, &part(&[3, 1])).unwrap();
    let x = validate_pattern(3, vec![vec![3, 1, 0], vec![2, 1], vec![1]]).unwrap();
    let y = validate_pattern(3, vec![vec![3, 1, 0], vec![3, 0], vec![1]]).unwrap();
    assert_eq!(gtp.weight(&x), gtp.weight(&y));
    let swap = |p: &GtPattern| {
        let q = if *p == x {
            y.clone()
        } else if *p == y {
            x.clone()
        } else {
            p.clone()
        };
        pattern_to_tableau(&q)
    };
    let tableaux = enumerate_tableaux(3, &part(&[3, 1])).unwrap();
    let report = verify_isomorphism(&gtp, &patterns, &SsytCrystal::new(3), &tableaux, swap);
    assert!(!report.pass);
    assert!(report
        .violations
        .iter()
        .any(|v| v.axiom.starts_with("intertwine")));
    assert!(report
        .violations
        .iter()
        .all(|v| v.axiom != "weight" && v.axiom != "onto"));
}

#[test]
fn breadth_first_build_equals_enumeration() {
    for n in 1..=4 {
        for shape in partitions_up_to(5, n) {
            let model = GtpCrystal::new(n);
            let patterns = enumerate_patterns(n, &shape).unwrap();
            let tops = highest_weight_elements(&model, &patterns).unwrap();
            let a = build_graph(&model, &patterns).unwrap().canonicalized();
            let b = build_graph_bfs(&model, &tops).unwrap().canonicalized();
            assert_eq!(a, b, "n={n} shape={shape}");
        }
    }
}

/// Per label, every vertex has at most one in- and one out-edge, and the
/// string through `b` has `phi_i(b) + epsilon_i(b)` edges.
#[test]
fn label_classes_are_strings_of_the_right_length() {
    for n in 2..=4 {
        for shape in partitions_up_to(5, n) {
            let model = GtpCrystal::new(n);
            let patterns = enumerate_patterns(n, &shape).unwrap();
            let graph = build_graph(&model, &patterns).unwrap();
            let by_key: HashMap<String, &GtPattern> = patterns
                .iter()
                .map(|p| (model.canonical_key(p), p))
                .collect();
            for i in 1..n {
                let mut next: BTreeMap<&str, &str> = BTreeMap::new();
                let mut prev: BTreeMap<&str, &str> = BTreeMap::new();
                for e in graph.edges.iter().filter(|e| e.i == i) {
                    assert!(next.insert(&e.from, &e.to).is_none());
                    assert!(prev.insert(&e.to, &e.from).is_none());
                }
                for (key, p) in &by_key {
                    let mut head = key.as_str();
                    let mut up = 0;
                    while let Some(h) = prev.get(head) {
                        head = h;
                        up += 1;
                    }
                    let mut length = 0;
                    let mut cur = head;
                    while let Some(t) = next.get(cur) {
                        cur = t;
                        length += 1;
                    }
                    assert_eq!(up, model.epsilon(p, i).unwrap());
                    assert_eq!(
                        length,
                        model.phi(p, i).unwrap() + model.epsilon(p, i).unwrap()
                    );
                }
            }
        }
    }
}

fn mutated_report(
    n: usize,
    shape: &Partition,
    lower: Pick,
    raise: Pick,
) -> gtcrystal::crystal::Report {
    let model = GtpCrystal::with_picks(n, lower, raise);
    verify_axioms(&model, &enumerate_patterns(n, shape).unwrap())
}

/// First shape, in sweep order, on which the mutated model fails. Axiom (i)
/// is reported as `"i"` for `e_i(f_i b) = b` and `"i-converse"` for
/// `f_i(e_i b) = b`.
fn witness(lower: Pick, raise: Pick) -> Option<(usize, Partition, Vec<String>)> {
    for n in 2..=4 {
        for shape in partitions_up_to(4, n) {
            let report = mutated_report(n, &shape, lower, raise);
            if !report.pass {
                let axioms = report.violations.iter().map(|v| v.axiom.clone()).collect();
                return Some((n, shape, axioms));
            }
        }
    }
    None
}

#[test]
fn flipped_lowering_tie_break_is_caught() {
    let (n, shape, axioms) = witness(Pick::Smallest, Pick::Smallest).expect("no witness");
    assert!(
        axioms.iter().any(|a| a == "i-converse"),
        "n={n} shape={shape} {axioms:?}"
    );
}

#[test]
fn flipped_raising_tie_break_is_caught() {
    let (n, shape, axioms) = witness(Pick::Largest, Pick::Largest).expect("no witness");
    assert!(
        axioms.iter().any(|a| a == "i"),
        "n={n} shape={shape} {axioms:?}"
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn graph_does_not_depend_on_input_order(
        patterns in Just(enumerate_patterns(3, &Partition::new(vec![3, 1]).unwrap()).unwrap()).prop_shuffle()
    ) {
        let model = GtpCrystal::new(3);
        let reference = gtp_graph(3, &[3, 1]).canonicalized();
        let shuffled = build_graph(&model, &patterns).unwrap().canonicalized();
        prop_assert_eq!(
            serde_json::to_string(&shuffled).unwrap(),
            serde_json::to_string(&reference).unwrap()
        );
    }

    #[test]
    fn tableau_graph_does_not_depend_on_input_order(
        tableaux in Just(enumerate_tableaux(3, &Partition::new(vec![2, 1]).unwrap()).unwrap()).prop_shuffle()
    ) {
        let model = SsytCrystal::new(3);
        let sorted = enumerate_tableaux(3, &Partition::new(vec![2, 1]).unwrap()).unwrap();
        let reference = build_graph(&model, &sorted).unwrap().canonicalized();
        prop_assert_eq!(build_graph(&model, &tableaux).unwrap().canonicalized(), reference);
    }
}
