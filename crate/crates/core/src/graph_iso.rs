//! Graph isomorphism by colour refinement plus individualization.
//!
//! Both graphs are coloured jointly so that equal colours mean the same
//! thing on either side. Refinement replaces each colour by the pair (old
//! colour, multiset of neighbour colours) until stable. If the partition is
//! not discrete, a vertex `v` of the smallest non-singleton cell of the first
//! graph is individualized against every vertex of the matching cell of the
//! second graph in turn. Trying every candidate makes the search complete.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Largest vertex count accepted by [`graphs_isomorphic`].
pub const GRAPH_ISO_MAX_VERTICES: usize = 260;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphIsoError {
    TooManyVertices { vertices: usize, bound: usize },
}

impl fmt::Display for GraphIsoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphIsoError::TooManyVertices { vertices, bound } => {
                write!(f, "{vertices} vertices exceed the isomorphism bound {bound}")
            }
        }
    }
}

impl core::error::Error for GraphIsoError {}

/// A vertex bijection `g -> h` preserving adjacency, if one exists.
pub fn graphs_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, GraphIsoError> {
    for n in [g.vertex_count(), h.vertex_count()] {
        if n > GRAPH_ISO_MAX_VERTICES {
            return Err(GraphIsoError::TooManyVertices { vertices: n, bound: GRAPH_ISO_MAX_VERTICES });
        }
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let gc = g.components();
    let hc = h.components();
    if gc.summary != hc.summary {
        return Ok(None);
    }
    // Unions of cliques are determined by their component sizes.
    if gc.summary.iter().all(|c| c.is_complete) {
        let mut map = vec![0; g.vertex_count()];
        for (pg, ph) in gc.partition.iter().zip(&hc.partition) {
            for (&a, &b) in pg.iter().zip(ph) {
                map[a] = b;
            }
        }
        return Ok(Some(map));
    }
    let n = g.vertex_count();
    let colours = vec![0u32; 2 * n];
    let found = Search { g, h, n }.descend(colours);
    debug_assert!(found.as_ref().map_or(true, |m| g.is_isomorphism(h, m)));
    Ok(found)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    n: usize,
}

impl Search<'_> {
    fn graph_of(&self, v: usize) -> (&Graph, usize) {
        if v < self.n {
            (self.g, v)
        } else {
            (self.h, v - self.n)
        }
    }

    /// Refines to a stable colouring. Returns the number of colours, or
    /// `None` when the two sides disagree on some colour class size.
    fn refine(&self, colours: &mut [u32]) -> Option<usize> {
        let total = colours.len();
        let mut count = colours.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        loop {
            let mut signatures: Vec<(u32, Vec<u32>, usize)> = Vec::with_capacity(total);
            for v in 0..total {
                let (graph, local) = self.graph_of(v);
                let offset = if v < self.n { 0 } else { self.n };
                let mut hist = vec![0u32; count];
                for w in graph.neighbors(local) {
                    hist[colours[w + offset] as usize] += 1;
                }
                signatures.push((colours[v], hist, v));
            }
            signatures.sort_unstable();
            let mut next = 0u32;
            let mut sizes: Vec<(usize, usize)> = Vec::new();
            for i in 0..total {
                if i > 0 && (signatures[i].0 != signatures[i - 1].0 || signatures[i].1 != signatures[i - 1].1) {
                    next += 1;
                }
                let v = signatures[i].2;
                colours[v] = next;
                if sizes.len() <= next as usize {
                    sizes.push((0, 0));
                }
                if v < self.n {
                    sizes[next as usize].0 += 1;
                } else {
                    sizes[next as usize].1 += 1;
                }
            }
            if sizes.iter().any(|(a, b)| a != b) {
                return None;
            }
            let new_count = next as usize + 1;
            if new_count == count {
                return Some(count);
            }
            count = new_count;
        }
    }

    fn descend(&self, mut colours: Vec<u32>) -> Option<Vec<usize>> {
        let count = self.refine(&mut colours)?;
        let n = self.n;
        if count == n {
            let mut by_colour = vec![0usize; n];
            for v in 0..n {
                by_colour[colours[v] as usize] = v;
            }
            let map: Vec<usize> = (0..n).map(|v| by_colour[colours[n + v] as usize]).collect();
            // map currently sends h-vertices to g-vertices; invert it.
            let mut forward = vec![0usize; n];
            for (hv, &gv) in map.iter().enumerate() {
                forward[gv] = hv;
            }
            return self.g.is_isomorphism(self.h, &forward).then_some(forward);
        }
        let mut cell_size = vec![0usize; count];
        for &c in &colours[..n] {
            cell_size[c as usize] += 1;
        }
        let target = (0..count).filter(|&c| cell_size[c] > 1).min_by_key(|&c| (cell_size[c], c))?;
        let v = (0..n).find(|&v| colours[v] as usize == target)?;
        let fresh = count as u32;
        for w in (0..n).filter(|&w| colours[n + w] as usize == target) {
            let mut next = colours.clone();
            next[v] = fresh;
            next[n + w] = fresh;
            if let Some(found) = self.descend(next) {
                return Some(found);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn identity_and_relabelling() {
        let p = petersen();
        let map = graphs_isomorphic(&p, &p).unwrap().unwrap();
        assert!(p.is_isomorphism(&p, &map));
        let perm = [3, 7, 1, 0, 9, 2, 8, 6, 5, 4];
        let q = p.permuted(&perm);
        let map = graphs_isomorphic(&p, &q).unwrap().unwrap();
        assert!(p.is_isomorphism(&q, &map));
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C6 and 2C3 are both 2-regular on six vertices.
        let c6 = cycle(6);
        let two_triangles = Graph::disjoint_union(&[cycle(3), cycle(3)]);
        assert_eq!(graphs_isomorphic(&c6, &two_triangles).unwrap(), None);
        // Same degree sequence, different structure, both connected.
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert_eq!(graphs_isomorphic(&prism, &k33).unwrap(), None);
    }

    #[test]
    fn component_profile_mismatch() {
        let a = Graph::disjoint_union(&[Graph::complete(3), Graph::edgeless(4)]);
        let b = Graph::disjoint_union(&[Graph::complete(2), Graph::edgeless(5)]);
        assert_eq!(graphs_isomorphic(&a, &b).unwrap(), None);
        let a2 = a.permuted(&[6, 5, 4, 3, 2, 1, 0]);
        assert!(graphs_isomorphic(&a, &a2).unwrap().is_some());
    }

    #[test]
    fn bound_is_enforced() {
        let big = Graph::new(GRAPH_ISO_MAX_VERTICES + 1);
        assert!(matches!(graphs_isomorphic(&big, &big), Err(GraphIsoError::TooManyVertices { .. })));
    }
}
