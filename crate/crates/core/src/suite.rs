//! Whole-crystal verification for one shape or a sweep of shapes.
//!
//! For each `(n, lambda)` the suite enumerates both element sets and runs:
//! the dimension cross-check, the axiom checks for both models, the
//! isomorphism check for the pattern-to-tableau bijection, the agreement of
//! the two tableau bracketing routes, the counting identities, the
//! diamond-number identities, the string datum cross-check, and graph
//! shape checks (connected, one highest-weight element, breadth-first build
//! equal to the enumeration build).

use num_bigint::BigUint;
use serde::Serialize;

use crate::bijection::{check_counting_lemma, pattern_to_tableau};
use crate::crystal::{
    build_graph, build_graph_bfs, connectivity, highest_weight_elements, string_datum_along,
    verify_axioms, verify_isomorphism, Direction, GtpCrystal, Report, SsytColumnCrystal,
    SsytCrystal,
};
use crate::error::Result;
use crate::gtpattern::{
    datum_position, diamond_a, diamond_b, enumerate_patterns, long_word, string_datum, sum_a,
    sum_b, weight_expressions, GtPattern,
};
use crate::partition::{partitions_up_to, weyl_dimension, Partition};
use crate::ssyt::enumerate_tableaux;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub violations: usize,
    /// First few violations, rendered.
    pub detail: Vec<String>,
}

impl CheckResult {
    fn from_messages(name: &str, messages: Vec<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            pass: messages.is_empty(),
            violations: messages.len(),
            detail: messages.into_iter().take(5).collect(),
        }
    }

    fn from_report(name: &str, report: &Report) -> Self {
        CheckResult {
            name: name.to_string(),
            pass: report.pass,
            violations: report.violations.len(),
            detail: report
                .violations
                .iter()
                .take(5)
                .map(|v| {
                    format!(
                        "{} {:?} i={:?}: expected {}, got {}",
                        v.axiom, v.keys, v.i, v.expected, v.actual
                    )
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ShapeReport {
    pub n: usize,
    pub shape: Partition,
    pub elements: usize,
    pub edges: usize,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub pass: bool,
    pub shapes: Vec<ShapeReport>,
}

/// The diamond-number identities for one pattern: `b(i, j) = -a(i, j-1)`,
/// the sign conditions on `a(i, 0)` and `b(i, i+1)`, the relation
/// `A(i, 0) = A(i, j) - B(i, j) = -B(i, i+1)` and the agreement of the three
/// weight expressions in the weight lattice.
pub fn identity_violations(p: &GtPattern) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let name = p.to_compact();
    for i in 1..p.n() {
        for j in 1..=i + 1 {
            let (b, a) = (diamond_b(p, i, j)?, diamond_a(p, i, j - 1)?);
            if b != -a {
                out.push(format!(
                    "{name}: b({i},{j}) = {b} but a({i},{}) = {a}",
                    j - 1
                ));
            }
        }
        let a0 = diamond_a(p, i, 0)?;
        if a0 > 0 {
            out.push(format!("{name}: a({i},0) = {a0} > 0"));
        }
        let b_last = diamond_b(p, i, i + 1)?;
        if b_last > 0 {
            out.push(format!("{name}: b({i},{}) = {b_last} > 0", i + 1));
        }
        let big_a0 = sum_a(p, i, 0)?;
        let big_b_last = sum_b(p, i, i + 1)?;
        if big_a0 != -big_b_last {
            out.push(format!(
                "{name}: A({i},0) = {big_a0} but B({i},{}) = {big_b_last}",
                i + 1
            ));
        }
        for j in 0..=i + 1 {
            let a_j = if j <= i { sum_a(p, i, j)? } else { 0 };
            let b_j = if j >= 1 { sum_b(p, i, j)? } else { 0 };
            if a_j - b_j != big_a0 {
                out.push(format!(
                    "{name}: A({i},{j}) - B({i},{j}) = {} != A({i},0) = {big_a0}",
                    a_j - b_j
                ));
            }
        }
    }
    let [direct, via_a, via_b] = weight_expressions(p);
    if !direct.congruent(&via_a) || !direct.congruent(&via_b) {
        out.push(format!(
            "{name}: weight expressions {direct}, {via_a}, {via_b} disagree"
        ));
    }
    Ok(out)
}

/// Compares the closed-form string datum with greedy raising along the
/// reduced long word.
pub fn string_datum_violations(p: &GtPattern) -> Result<Vec<String>> {
    let n = p.n();
    let model = GtpCrystal::new(n);
    let iterated = string_datum_along(&model, p, &long_word(n), Direction::Raise)?;
    let closed = string_datum(p);
    let mut out = Vec::new();
    for (&(i, j), &v) in &closed.d {
        let w = iterated[datum_position(i, j)];
        if v != w {
            out.push(format!(
                "{}: d({i},{j}) = {v} but the operators give {w}",
                p.to_compact()
            ));
        }
    }
    Ok(out)
}

/// Runs every check on the crystal of shape `lambda` with `n` rows.
pub fn verify_shape(n: usize, lambda: &Partition) -> Result<ShapeReport> {
    let patterns = enumerate_patterns(n, lambda)?;
    let tableaux = enumerate_tableaux(n, lambda)?;
    let gtp = GtpCrystal::new(n);
    let words = SsytCrystal::new(n);
    let columns = SsytColumnCrystal::new(n);
    let mut checks = Vec::new();

    let dim = weyl_dimension(n, lambda)?;
    let mut msgs = Vec::new();
    if BigUint::from(patterns.len()) != dim {
        msgs.push(format!("{} patterns but dimension {dim}", patterns.len()));
    }
    if BigUint::from(tableaux.len()) != dim {
        msgs.push(format!("{} tableaux but dimension {dim}", tableaux.len()));
    }
    checks.push(CheckResult::from_messages("dimension", msgs));

    checks.push(CheckResult::from_report(
        "axioms-gtp",
        &verify_axioms(&gtp, &patterns),
    ));
    checks.push(CheckResult::from_report(
        "axioms-ssyt",
        &verify_axioms(&words, &tableaux),
    ));
    checks.push(CheckResult::from_report(
        "isomorphism",
        &verify_isomorphism(&gtp, &patterns, &words, &tableaux, pattern_to_tableau),
    ));
    checks.push(CheckResult::from_report(
        "bracketing-routes",
        &verify_isomorphism(&words, &tableaux, &columns, &tableaux, |t| Ok(t.clone())),
    ));

    let mut lemma = Vec::new();
    let mut identities = Vec::new();
    let mut datum = Vec::new();
    for p in &patterns {
        lemma.extend(check_counting_lemma(p)?.into_iter().map(|v| {
            format!(
                "({}) {} i={} j={}: pattern {} vs tableau {}",
                v.part, v.pattern, v.i, v.j, v.from_pattern, v.from_tableau
            )
        }));
        identities.extend(identity_violations(p)?);
        datum.extend(string_datum_violations(p)?);
    }
    checks.push(CheckResult::from_messages("counting-lemma", lemma));
    checks.push(CheckResult::from_messages("identities", identities));
    checks.push(CheckResult::from_messages("string-datum", datum));

    let graph = build_graph(&gtp, &patterns)?;
    let mut msgs = Vec::new();
    let components = connectivity(&graph);
    if components != 1 {
        msgs.push(format!("{components} connected components"));
    }
    let tops = highest_weight_elements(&gtp, &patterns)?;
    if tops.len() != 1 {
        msgs.push(format!("{} highest-weight elements", tops.len()));
    } else {
        let bfs = build_graph_bfs(&gtp, &tops)?.canonicalized();
        if bfs != graph.clone().canonicalized() {
            msgs.push("breadth-first graph differs from the enumerated graph".into());
        }
    }
    checks.push(CheckResult::from_messages("graph", msgs));

    Ok(ShapeReport {
        n,
        shape: lambda.clone(),
        elements: patterns.len(),
        edges: graph.edges.len(),
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

/// Every `(n', lambda)` with `1 <= n' <= max_n`, `l(lambda) <= n'` and
/// `|lambda| <= max_size`.
pub fn sweep_shapes(max_size: i64, max_n: usize) -> Vec<(usize, Partition)> {
    (1..=max_n)
        .flat_map(|n| {
            partitions_up_to(max_size, n)
                .into_iter()
                .map(move |l| (n, l))
        })
        .collect()
}

pub fn verify_sweep(max_size: i64, max_n: usize) -> Result<SweepReport> {
    let shapes = sweep_shapes(max_size, max_n)
        .into_iter()
        .map(|(n, l)| verify_shape(n, &l))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        pass: shapes.iter().all(|s| s.pass),
        shapes,
    })
}
