use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::CrystalModel;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub key: String,
    pub element: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: String,
    pub i: usize,
    pub to: String,
}

/// Vertices plus `i`-labelled edges `b -> f_i(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub n: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

// Labels 1 and 2 are blue and red.
const PALETTE: [&str; 8] = [
    "blue",
    "red",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan",
];

impl CrystalGraph {
    /// Sorts vertices by key and edges by `(from, i, to)`.
    pub fn canonicalize(&mut self) {
        self.vertices.sort_by(|a, b| a.key.cmp(&b.key));
        self.edges
            .sort_by(|a, b| (&a.from, a.i, &a.to).cmp(&(&b.from, b.i, &b.to)));
    }

    pub fn canonicalized(mut self) -> Self {
        self.canonicalize();
        self
    }

    /// Keys of vertices with no incoming edge.
    pub fn sources(&self) -> Vec<&str> {
        let targets: HashSet<&str> = self.edges.iter().map(|e| e.to.as_str()).collect();
        self.vertices
            .iter()
            .map(|v| v.key.as_str())
            .filter(|k| !targets.contains(k))
            .collect()
    }

    /// Disjoint union; keys of `other` get `suffix` appended.
    pub fn disjoint_union(&self, other: &CrystalGraph, suffix: &str) -> CrystalGraph {
        let mut out = self.clone();
        out.vertices.extend(other.vertices.iter().map(|v| Vertex {
            key: format!("{}{suffix}", v.key),
            element: v.element.clone(),
        }));
        out.edges.extend(other.edges.iter().map(|e| Edge {
            from: format!("{}{suffix}", e.from),
            i: e.i,
            to: format!("{}{suffix}", e.to),
        }));
        out
    }

    /// Graphviz document. Nodes are `v0, v1, ...` in vertex order and carry
    /// the single-line form `3,1,0/3,1/2` of the element rows.
    pub fn to_dot(&self) -> String {
        let index: HashMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.key.as_str(), k))
            .collect();
        let mut out = String::from("digraph crystal {\n");
        out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
        for (k, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!(
                "  v{k} [label=\"{}\"];\n",
                compact_label(&v.element)
            ));
        }
        for e in &self.edges {
            let color = PALETTE[(e.i - 1) % PALETTE.len()];
            out.push_str(&format!(
                "  v{} -> v{} [label=\"{}\", class=\"i{}\", color=\"{color}\", fontcolor=\"{color}\"];\n",
                index[e.from.as_str()],
                index[e.to.as_str()],
                e.i,
                e.i
            ));
        }
        out.push_str("}\n");
        out
    }
}

fn compact_label(element: &serde_json::Value) -> String {
    match element.get("rows").and_then(|r| r.as_array()) {
        Some(rows) => rows
            .iter()
            .map(|row| {
                row.as_array()
                    .map(|cells| {
                        cells
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .unwrap_or_default()
            })
            .collect::<Vec<_>>()
            .join("/"),
        None => element.to_string().replace('"', "'"),
    }
}

/// Materializes the lowering edges over a given element set.
///
/// Vertices keep the input order and edges are sorted by source position
/// then label. Fails if two elements share a key or some `f_i(b)` is not in
/// the set.
pub fn build_graph<M: CrystalModel>(model: &M, elements: &[M::Element]) -> Result<CrystalGraph> {
    let keys: Vec<String> = elements.iter().map(|b| model.canonical_key(b)).collect();
    let mut seen = HashSet::with_capacity(keys.len());
    for k in &keys {
        if !seen.insert(k.as_str()) {
            return Err(Error::Shape(format!("duplicate element {k}")));
        }
    }
    let mut edges = Vec::new();
    for (b, key) in elements.iter().zip(&keys) {
        for i in model.labels() {
            if let Some(target) = model.lower(b, i)? {
                let tkey = model.canonical_key(&target);
                if !seen.contains(tkey.as_str()) {
                    return Err(Error::Escape { key: tkey });
                }
                edges.push(Edge {
                    from: key.clone(),
                    i,
                    to: tkey,
                });
            }
        }
    }
    let vertices = elements
        .iter()
        .zip(keys)
        .map(|(b, key)| Vertex {
            key,
            element: model.to_json(b),
        })
        .collect();
    Ok(CrystalGraph {
        n: model.rank(),
        vertices,
        edges,
    })
}

/// Breadth-first construction from `sources` following lowering edges.
/// Vertices appear in discovery order.
pub fn build_graph_bfs<M: CrystalModel>(model: &M, sources: &[M::Element]) -> Result<CrystalGraph> {
    let mut seen: HashSet<String> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    for s in sources {
        if seen.insert(model.canonical_key(s)) {
            queue.push_back(s.clone());
        }
    }
    while let Some(b) = queue.pop_front() {
        for i in model.labels() {
            if let Some(c) = model.lower(&b, i)? {
                if seen.insert(model.canonical_key(&c)) {
                    queue.push_back(c);
                }
            }
        }
        order.push(b);
    }
    build_graph(model, &order)
}

/// Number of weakly connected components.
pub fn connectivity(graph: &CrystalGraph) -> usize {
    let index: HashMap<&str, usize> = graph
        .vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (v.key.as_str(), k))
        .collect();
    let mut parent: Vec<usize> = (0..graph.vertices.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in &graph.edges {
        if let (Some(&a), Some(&b)) = (index.get(e.from.as_str()), index.get(e.to.as_str())) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    (0..parent.len())
        .filter(|&x| find(&mut parent, x) == x)
        .count()
}
