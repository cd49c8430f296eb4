use std::path::PathBuf;
use std::process::{Command, Output};

const LAMBDA_PATTERN: &str = r#"{"n":3,"rows":[[3,1,0],[3,1],[2]]}"#;
const EXAMPLE_TABLEAU: &str = r#"{"n":4,"shape":[5,2,2],"rows":[[1,2,2,2,3],[3,3],[4,4]]}"#;

fn gtcrystal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtcrystal"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn enumerate_counts() {
    for (n, l, count) in [("3", "3,1,0", 15), ("2", "2,0", 3), ("3", "2,1,0", 8)] {
        let o = gtcrystal(&["enumerate", "-n", n, "-l", l]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).lines().count(), count);
        let o = gtcrystal(&["enumerate", "-n", n, "-l", l, "--model", "ssyt"]);
        assert_eq!(stdout(&o).lines().count(), count);
    }
}

#[test]
fn enumerate_rejects_bad_shapes() {
    let o = gtcrystal(&["enumerate", "-n", "3", "-l", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert!(o.stdout.is_empty());
    let o = gtcrystal(&["enumerate", "-n", "2", "-l", "1,1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn apply_lowers_the_worked_example() {
    let o = gtcrystal(&["apply", "f", "2", "--gtp", LAMBDA_PATTERN]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"n\":3,\"rows\":[[3,1,0],[2,1],[2]]}\n");
}

#[test]
fn apply_reports_none_with_success() {
    let top = r#"{"n":3,"rows":[[3,1,0],[3,1],[3]]}"#;
    let o = gtcrystal(&["apply", "e", "1", "--gtp", top]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "none\n");
}

#[test]
fn apply_on_a_tableau() {
    let o = gtcrystal(&["apply", "f", "2", "--ssyt", EXAMPLE_TABLEAU]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "{\"n\":4,\"shape\":[5,2,2],\"rows\":[[1,2,2,3,3],[3,3],[4,4]]}\n"
    );
}

#[test]
fn apply_input_errors() {
    let bad = r#"{"n":3,"rows":[[3,1,0],[4,1],[2]]}"#;
    assert_eq!(
        gtcrystal(&["apply", "f", "1", "--gtp", bad]).status.code(),
        Some(2)
    );
    assert_eq!(
        gtcrystal(&["apply", "f", "3", "--gtp", LAMBDA_PATTERN])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gtcrystal(&["apply", "g", "1", "--gtp", LAMBDA_PATTERN])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(gtcrystal(&["apply", "f", "1"]).status.code(), Some(2));
}

#[test]
fn element_from_a_file() {
    let path = scratch("lambda.json", LAMBDA_PATTERN);
    let o = gtcrystal(&["apply", "f", "1", "--gtp", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "{\"n\":3,\"rows\":[[3,1,0],[3,1],[1]]}\n");
}

#[test]
fn biject_twice_is_the_identity() {
    let once = gtcrystal(&["biject", "--gtp", LAMBDA_PATTERN]);
    assert!(once.status.success());
    let tableau = stdout(&once);
    assert_eq!(
        tableau,
        "{\"n\":3,\"shape\":[3,1],\"rows\":[[1,1,2],[2]]}\n"
    );
    let twice = gtcrystal(&["biject", "--ssyt", tableau.trim()]);
    assert_eq!(stdout(&twice).trim(), LAMBDA_PATTERN);

    let back = gtcrystal(&["biject", "--ssyt", EXAMPLE_TABLEAU]);
    let again = gtcrystal(&["biject", "--gtp", stdout(&back).trim()]);
    assert_eq!(stdout(&again).trim(), EXAMPLE_TABLEAU);
}

#[test]
fn graph_documents() {
    let o = gtcrystal(&[
        "graph", "-n", "3", "-l", "3,1,0", "--model", "gtp", "--format", "json",
    ]);
    let graph: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(graph["vertices"].as_array().unwrap().len(), 15);
    assert_eq!(graph["edges"].as_array().unwrap().len(), 18);

    let o = gtcrystal(&["graph", "-n", "1", "-l", "4"]);
    let dot = stdout(&o);
    assert_eq!(dot.matches("[label=").count(), 1);
    assert!(!dot.contains("->"));

    let o = gtcrystal(&["graph", "-n", "2", "-l", "1,0"]);
    let dot = stdout(&o);
    assert_eq!(dot.matches(" -> ").count(), 1);
    assert!(dot.contains("label=\"1\""));
}

/// Balanced braces and quotes, one statement per line, and every edge
/// endpoint declared as a node.
#[test]
fn dot_is_well_formed() {
    for model in ["gtp", "ssyt"] {
        let o = gtcrystal(&["graph", "-n", "3", "-l", "3,1,0", "--model", model]);
        let dot = stdout(&o);
        assert!(dot.starts_with("digraph "));
        assert_eq!(dot.matches('{').count(), dot.matches('}').count());
        assert_eq!(dot.matches('"').count() % 2, 0);
        let lines: Vec<&str> = dot.lines().collect();
        let mut nodes = std::collections::HashSet::new();
        for line in &lines[1..lines.len() - 1] {
            assert!(line.ends_with(';'), "{line}");
            let id = line.split_whitespace().next().unwrap();
            if !line.contains("->") && id.starts_with('v') {
                nodes.insert(id.to_string());
            }
        }
        for line in lines.iter().filter(|l| l.contains("->")) {
            let mut parts = line.split_whitespace();
            let from = parts.next().unwrap();
            parts.next();
            let to = parts.next().unwrap();
            assert!(nodes.contains(from) && nodes.contains(to), "{line}");
        }
        assert_eq!(nodes.len(), 15);
    }
}

#[test]
fn outputs_are_byte_deterministic() {
    for args in [
        vec!["graph", "-n", "3", "-l", "3,2,0", "--format", "dot"],
        vec![
            "graph", "-n", "3", "-l", "3,2,0", "--format", "json", "--model", "ssyt",
        ],
        vec!["enumerate", "-n", "4", "-l", "2,1"],
        vec!["verify", "-n", "3", "-l", "2,1"],
    ] {
        assert_eq!(gtcrystal(&args).stdout, gtcrystal(&args).stdout);
    }
}

#[test]
fn verify_shapes_and_sweeps() {
    let o = gtcrystal(&["verify", "-n", "3", "-l", "3,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("PASS n=3"));
    let report: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(report["pass"], true);

    let o = gtcrystal(&["verify", "--all-upto", "3", "-n", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["shapes"].as_array().unwrap().len(), 4 + 6 + 7);

    let o = gtcrystal(&["verify", "--gtp", LAMBDA_PATTERN, "--json"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_input_errors() {
    let path = scratch("corrupt.json", r#"{"n":3,"rows":[[3,1,0],[3"#);
    let o = gtcrystal(&["verify", "--gtp", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = gtcrystal(&["verify", "--gtp", "/nonexistent/element.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(gtcrystal(&["verify", "-n", "3"]).status.code(), Some(2));
}

#[test]
fn dim_and_string_datum() {
    let o = gtcrystal(&["dim", "-n", "3", "-l", "3,1,0"]);
    assert_eq!(stdout(&o), "15\n");
    let o = gtcrystal(&["dim", "-n", "6", "-l", "4,3,2,1"]);
    // hook-content: (6·7·8·9)(5·6·7)(4·5)(3) / (7·5·3·1)(5·3·1)(3·1)(1)
    assert_eq!(stdout(&o), "8064\n");
    let o = gtcrystal(&["string-datum", "--gtp", LAMBDA_PATTERN]);
    assert!(o.status.success());
    let datum: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(datum["n"], 3);
    assert_eq!(datum["d"].as_array().unwrap().len(), 3);
}

#[test]
fn help_exits_cleanly() {
    let o = gtcrystal(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("string-datum"));
    assert_eq!(gtcrystal(&[]).status.code(), Some(2));
}
