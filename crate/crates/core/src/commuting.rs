//! Commuting graphs `C(G, X)`, the full graph `Γ(G)` on non-central
//! elements, and the transversal graph `T(G)` on one representative per
//! non-trivial coset of the center.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::group::{ElementSubset, FiniteGroup, GroupError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CommutingKind {
    General,
    Gamma,
    Transversal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommutingError {
    AbelianGroup,
    NotTransversal,
    Group(GroupError),
}

impl fmt::Display for CommutingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommutingError::AbelianGroup => write!(f, "group is abelian; the commuting graph has no vertices"),
            CommutingError::NotTransversal => write!(f, "subset is not a transversal of the center"),
            CommutingError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CommutingError {}

impl From<GroupError> for CommutingError {
    fn from(e: GroupError) -> Self {
        CommutingError::Group(e)
    }
}

/// A commuting graph together with the group element behind each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingGraph {
    pub graph: Graph,
    pub vertex_elements: Vec<usize>,
    pub kind: CommutingKind,
    pub center_size: usize,
}

/// `C(G, X)`: vertices are the members of `X` in ascending order, joined
/// when distinct and commuting.
pub fn commuting_graph(g: &FiniteGroup, x: &ElementSubset) -> CommutingGraph {
    build(g, x.members().to_vec(), CommutingKind::General, g.center().len())
}

fn build(g: &FiniteGroup, elements: Vec<usize>, kind: CommutingKind, center_size: usize) -> CommutingGraph {
    let labels = elements.iter().map(|&e| g.label(e)).collect();
    let mut graph = Graph::new(elements.len());
    for (a, &x) in elements.iter().enumerate() {
        for (b, &y) in elements.iter().enumerate().skip(a + 1) {
            if g.commutes(x, y) {
                graph.add_edge(a, b);
            }
        }
    }
    CommutingGraph { graph: graph.with_labels(labels), vertex_elements: elements, kind, center_size }
}

/// `Γ(G)`, the commuting graph on `G \ Z(G)`.
pub fn gamma(g: &FiniteGroup) -> Result<CommutingGraph, CommutingError> {
    let z = g.center();
    if z.len() == g.order() {
        return Err(CommutingError::AbelianGroup);
    }
    let elements = (0..g.order()).filter(|&x| !z.contains(x)).collect();
    Ok(build(g, elements, CommutingKind::Gamma, z.len()))
}

/// `T(G)` on the canonical (minimal-index) transversal of `Z(G)`.
pub fn transversal_graph(g: &FiniteGroup) -> Result<CommutingGraph, CommutingError> {
    let z = g.center();
    if z.len() == g.order() {
        return Err(CommutingError::AbelianGroup);
    }
    let t = g.canonical_transversal(&z);
    transversal_graph_on(g, &t)
}

/// `T(G)` on a caller-chosen transversal of `Z(G)`; the member lying in
/// `Z(G)` itself is dropped.
pub fn transversal_graph_on(g: &FiniteGroup, t: &ElementSubset) -> Result<CommutingGraph, CommutingError> {
    let z = g.center();
    if z.len() == g.order() {
        return Err(CommutingError::AbelianGroup);
    }
    if t.universe() != g.order() {
        return Err(CommutingError::NotTransversal);
    }
    // Any transversal has exactly one central member; require it to be 0.
    if !g.is_transversal(t, &z) {
        return Err(CommutingError::NotTransversal);
    }
    let elements = t.iter().filter(|&x| !z.contains(x)).collect();
    Ok(build(g, elements, CommutingKind::Transversal, z.len()))
}

/// Rebuilds `Γ(G)` from `T(G)`: every vertex becomes a clique of
/// `center_size` vertices, and two blocks are fully joined exactly when
/// their vertices are adjacent in `t`. Vertex `(i, r)` sits at
/// `i * center_size + r`.
pub fn expand_transversal_graph(t: &Graph, center_size: usize) -> Graph {
    let n = t.vertex_count();
    let z = center_size;
    let mut out = Graph::new(n * z);
    for i in 0..n {
        for r in 0..z {
            for s in r + 1..z {
                out.add_edge(i * z + r, i * z + s);
            }
        }
    }
    for (i, j) in t.edges() {
        for r in 0..z {
            for s in 0..z {
                out.add_edge(i * z + r, j * z + s);
            }
        }
    }
    out
}

/// One vertex or vertex pair where the observed count differs from the
/// centralizer-index prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaMismatch {
    pub elements: (usize, Option<usize>),
    pub observed: i64,
    pub expected: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaReport {
    pub holds: bool,
    pub checked: usize,
    pub mismatches: Vec<FormulaMismatch>,
}

impl FormulaReport {
    fn from_mismatches(checked: usize, mismatches: Vec<FormulaMismatch>) -> Self {
        FormulaReport { holds: mismatches.is_empty(), checked, mismatches }
    }
}

fn centralizer_bits(g: &FiniteGroup, x: usize) -> Vec<u64> {
    let mut bits = vec![0u64; g.order().div_ceil(64)];
    for y in 0..g.order() {
        if g.commutes(x, y) {
            bits[y / 64] |= 1 << (y % 64);
        }
    }
    bits
}

/// Checks `deg(x) = [C_G(x) : Z(G)] - 2` on every vertex of `T(G)`.
pub fn degree_formula_check(g: &FiniteGroup) -> Result<FormulaReport, CommutingError> {
    let t = transversal_graph(g)?;
    let z = t.center_size as i64;
    let mut mismatches = Vec::new();
    for (v, &x) in t.vertex_elements.iter().enumerate() {
        let observed = t.graph.degree(v) as i64;
        let expected = g.centralizer(x).len() as i64 / z - 2;
        if observed != expected {
            mismatches.push(FormulaMismatch { elements: (x, None), observed, expected });
        }
    }
    Ok(FormulaReport::from_mismatches(t.vertex_elements.len(), mismatches))
}

/// Checks `|N(x) ∩ N(y)| = [C_G(x) ∩ C_G(y) : Z(G)] - 3` for adjacent and
/// `- 1` for non-adjacent pairs of distinct vertices of `T(G)`.
pub fn common_neighbors_formula_check(g: &FiniteGroup) -> Result<FormulaReport, CommutingError> {
    let t = transversal_graph(g)?;
    let z = t.center_size as i64;
    let bits: Vec<Vec<u64>> = t.vertex_elements.iter().map(|&x| centralizer_bits(g, x)).collect();
    let n = t.vertex_elements.len();
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for a in 0..n {
        for b in a + 1..n {
            checked += 1;
            let meet: i64 = bits[a].iter().zip(&bits[b]).map(|(p, q)| (p & q).count_ones() as i64).sum();
            let offset = if t.graph.has_edge(a, b) { 3 } else { 1 };
            let expected = meet / z - offset;
            let observed = t.graph.common_neighbors(a, b) as i64;
            if observed != expected {
                let elements = (t.vertex_elements[a], Some(t.vertex_elements[b]));
                mismatches.push(FormulaMismatch { elements, observed, expected });
            }
        }
    }
    Ok(FormulaReport::from_mismatches(checked, mismatches))
}
