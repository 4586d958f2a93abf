//! Graph output: Graphviz DOT and a minimal JSON edge list.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use tcg_core::Graph;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Vertices in index order, then edges `i -- j` with `i < j` in
/// lexicographic order. Vertices are labelled by their group element when
/// the graph carries labels.
pub fn export_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    if g.vertex_count() == 0 {
        out.push_str("}\n");
        return out;
    }
    for v in 0..g.vertex_count() {
        let label = match g.labels() {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        };
        writeln!(out, "  {v} [label={}];", quote(&label)).unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(out, "  {i} -- {j};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphJsonError {
    #[error("edge {0:?} is not of the form [i, j] with i < j < n")]
    BadEdge([usize; 2]),
    #[error("edges are not strictly increasing at {0:?}")]
    Unsorted([usize; 2]),
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson { n: g.vertex_count(), edges: g.edges().into_iter().map(|(i, j)| [i, j]).collect() }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphJsonError> {
        let mut g = Graph::new(self.n);
        let mut prev: Option<[usize; 2]> = None;
        for &e in &self.edges {
            let [i, j] = e;
            if i >= j || j >= self.n {
                return Err(GraphJsonError::BadEdge(e));
            }
            if prev.is_some_and(|p| p >= e) {
                return Err(GraphJsonError::Unsorted(e));
            }
            prev = Some(e);
            g.add_edge(i, j);
        }
        Ok(g)
    }
}

pub fn export_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("graph JSON serializes")
}
