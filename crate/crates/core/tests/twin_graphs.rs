//! The twin crystal graphs of shape (3, 1, 0) for n = 3, vertex by vertex.

use std::collections::BTreeSet;

use gtcrystal::bijection::pattern_to_tableau;
use gtcrystal::crystal::{
    build_graph, connectivity, highest_weight_elements, CrystalModel, GtpCrystal, SsytCrystal,
};
use gtcrystal::gtpattern::{enumerate_patterns, validate_pattern, GtPattern};
use gtcrystal::ssyt::{enumerate_tableaux, validate_tableau, Tableau};
use gtcrystal::Partition;

/// Vertices numbered as in the drawing: middle rows of each pattern.
const PATTERNS: [(usize, [i64; 2], i64); 15] = [
    (1, [3, 1], 3),
    (2, [3, 1], 2),
    (3, [3, 0], 3),
    (4, [3, 1], 1),
    (5, [2, 1], 2),
    (6, [3, 0], 2),
    (7, [2, 1], 1),
    (8, [2, 0], 2),
    (9, [3, 0], 1),
    (10, [1, 1], 1),
    (11, [2, 0], 1),
    (12, [3, 0], 0),
    (13, [1, 0], 1),
    (14, [2, 0], 0),
    (15, [1, 0], 0),
];

const TABLEAUX: [(usize, [i64; 3], i64); 15] = [
    (1, [1, 1, 1], 2),
    (2, [1, 1, 2], 2),
    (3, [1, 1, 1], 3),
    (4, [1, 2, 2], 2),
    (5, [1, 1, 3], 2),
    (6, [1, 1, 2], 3),
    (7, [1, 2, 3], 2),
    (8, [1, 1, 3], 3),
    (9, [1, 2, 2], 3),
    (10, [1, 3, 3], 2),
    (11, [1, 2, 3], 3),
    (12, [2, 2, 2], 3),
    (13, [1, 3, 3], 3),
    (14, [2, 2, 3], 3),
    (15, [2, 3, 3], 3),
];

const EDGES: [(usize, usize, usize); 18] = [
    (1, 1, 2),
    (1, 2, 3),
    (2, 1, 4),
    (2, 2, 5),
    (3, 1, 6),
    (4, 2, 7),
    (5, 1, 7),
    (5, 2, 8),
    (6, 1, 9),
    (7, 2, 10),
    (8, 1, 11),
    (9, 2, 11),
    (9, 1, 12),
    (10, 2, 13),
    (11, 1, 14),
    (12, 2, 14),
    (13, 1, 15),
    (14, 2, 15),
];

fn pattern(id: usize) -> GtPattern {
    let (_, mid, bottom) = PATTERNS[id - 1];
    validate_pattern(3, vec![vec![3, 1, 0], mid.to_vec(), vec![bottom]]).unwrap()
}

fn tableau(id: usize) -> Tableau {
    let (_, first, second) = TABLEAUX[id - 1];
    let shape = Partition::new(vec![3, 1]).unwrap();
    validate_tableau(3, &shape, vec![first.to_vec(), vec![second]]).unwrap()
}

fn expected_edges<M: CrystalModel>(
    model: &M,
    element: impl Fn(usize) -> M::Element,
) -> BTreeSet<(String, usize, String)> {
    EDGES
        .iter()
        .map(|&(u, i, v)| {
            (
                model.canonical_key(&element(u)),
                i,
                model.canonical_key(&element(v)),
            )
        })
        .collect()
}

fn actual_edges(graph: &gtcrystal::crystal::CrystalGraph) -> BTreeSet<(String, usize, String)> {
    graph
        .edges
        .iter()
        .map(|e| (e.from.clone(), e.i, e.to.clone()))
        .collect()
}

fn shape() -> Partition {
    Partition::new(vec![3, 1, 0]).unwrap()
}

#[test]
fn drawing_tables_are_consistent() {
    for (k, row) in PATTERNS.iter().enumerate() {
        assert_eq!(row.0, k + 1);
        assert_eq!(TABLEAUX[k].0, k + 1);
        assert_eq!(
            pattern_to_tableau(&pattern(k + 1)).unwrap(),
            tableau(k + 1),
            "vertex {}",
            k + 1
        );
    }
}

#[test]
fn pattern_graph_matches_the_drawing() {
    let model = GtpCrystal::new(3);
    let patterns = enumerate_patterns(3, &shape()).unwrap();
    let graph = build_graph(&model, &patterns).unwrap();
    assert_eq!(graph.vertices.len(), 15);
    assert_eq!(graph.edges.len(), 18);
    let drawn: BTreeSet<String> = (1..=15).map(|k| model.canonical_key(&pattern(k))).collect();
    let built: BTreeSet<String> = graph.vertices.iter().map(|v| v.key.clone()).collect();
    assert_eq!(drawn, built);
    assert_eq!(actual_edges(&graph), expected_edges(&model, pattern));
    assert_eq!(connectivity(&graph), 1);
    assert_eq!(
        highest_weight_elements(&model, &patterns).unwrap(),
        vec![pattern(1)]
    );
    assert_eq!(
        graph.sources(),
        vec![model.canonical_key(&pattern(1)).as_str()]
    );
}

#[test]
fn tableau_graph_matches_the_drawing() {
    let model = SsytCrystal::new(3);
    let tableaux = enumerate_tableaux(3, &shape()).unwrap();
    let graph = build_graph(&model, &tableaux).unwrap();
    assert_eq!(graph.vertices.len(), 15);
    assert_eq!(graph.edges.len(), 18);
    assert_eq!(actual_edges(&graph), expected_edges(&model, tableau));
    assert_eq!(connectivity(&graph), 1);
    assert_eq!(
        highest_weight_elements(&model, &tableaux).unwrap(),
        vec![tableau(1)]
    );
}

#[test]
fn bijection_carries_one_edge_set_onto_the_other() {
    let gtp = GtpCrystal::new(3);
    let ssyt = SsytCrystal::new(3);
    let patterns = enumerate_patterns(3, &shape()).unwrap();
    let tableaux: Vec<Tableau> = patterns
        .iter()
        .map(|p| pattern_to_tableau(p).unwrap())
        .collect();
    let g = build_graph(&gtp, &patterns).unwrap();
    let t = build_graph(&ssyt, &tableaux).unwrap();
    let key_map: std::collections::HashMap<String, String> = patterns
        .iter()
        .zip(&tableaux)
        .map(|(p, t)| (gtp.canonical_key(p), ssyt.canonical_key(t)))
        .collect();
    let mapped: BTreeSet<(String, usize, String)> = actual_edges(&g)
        .into_iter()
        .map(|(u, i, v)| (key_map[&u].clone(), i, key_map[&v].clone()))
        .collect();
    assert_eq!(mapped, actual_edges(&t));
}

#[test]
fn dot_export_lists_every_drawn_edge() {
    let model = GtpCrystal::new(3);
    let graph = build_graph(&model, &enumerate_patterns(3, &shape()).unwrap()).unwrap();
    let dot = graph.to_dot();
    assert_eq!(dot.matches(" -> ").count(), 18);
    for k in 1..=15 {
        let label = format!("label=\"{}\"", pattern(k).to_compact());
        assert!(dot.contains(&label), "missing {label}");
    }
    assert_eq!(dot.matches("class=\"i1\"").count(), 9);
    assert_eq!(dot.matches("class=\"i2\"").count(), 9);
}
