//! Undirected simple graphs on indexed vertices.
//!
//! Adjacency is a dense bit matrix, one row of `u64` words per vertex, which
//! makes common-neighbour counts a popcount over the AND of two rows.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComponentInfo {
    pub size: usize,
    pub is_complete: bool,
    pub is_edgeless: bool,
}

/// Connected components, largest first; `partition[i]` holds the vertices
/// of `summary[i]` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub summary: Vec<ComponentInfo>,
    pub partition: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph { n, words, rows: vec![0; n * words], labels: None }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn edgeless(n: usize) -> Self {
        Graph::new(n)
    }

    /// `copies` disjoint copies of `K_size`.
    pub fn union_of_cliques(copies: usize, size: usize) -> Self {
        let parts: Vec<Graph> = (0..copies).map(|_| Graph::complete(size)).collect();
        Graph::disjoint_union(&parts)
    }

    pub fn disjoint_union(parts: &[Graph]) -> Self {
        let total = parts.iter().map(|g| g.n).sum();
        let mut out = Graph::new(total);
        let mut offset = 0;
        for g in parts {
            for (i, j) in g.edges() {
                out.add_edge(offset + i, offset + j);
            }
            offset += g.n;
        }
        out
    }

    /// Builds a graph from an edge list; self-loops and out-of-range
    /// endpoints are rejected with the offending edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, (usize, usize)> {
        let mut g = Graph::new(n);
        for &(i, j) in edges {
            if i == j || i >= n || j >= n {
                return Err((i, j));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i < self.n && j < self.n, "invalid edge ({i},{j})");
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.rows[j * self.words + i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.has_edge(i, j))
    }

    pub fn common_neighbors(&self, i: usize, j: usize) -> usize {
        self.row(i).iter().zip(self.row(j)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The subgraph induced on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// The graph with vertex `i` renamed `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (i, j) in self.edges() {
            g.add_edge(perm[i], perm[j]);
        }
        g
    }

    /// True when `map` is a bijection `self -> other` preserving adjacency
    /// and non-adjacency.
    pub fn is_isomorphism(&self, other: &Graph, map: &[usize]) -> bool {
        if self.n != other.n || map.len() != self.n {
            return false;
        }
        let mut seen = vec![false; other.n];
        for &m in map {
            if m >= other.n || core::mem::replace(&mut seen[m], true) {
                return false;
            }
        }
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.has_edge(i, j) == other.has_edge(map[i], map[j])))
    }

    pub fn components(&self) -> Components {
        let mut comp = vec![usize::MAX; self.n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            comp[s] = id;
            let mut queue = vec![s];
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        queue.push(w);
                    }
                }
            }
            queue.sort_unstable();
            parts.push(queue);
        }
        parts.sort_by_key(|p| (Reverse(p.len()), p[0]));
        let summary = parts
            .iter()
            .map(|p| {
                let s = p.len();
                let internal: usize = p.iter().map(|&v| self.degree(v)).sum::<usize>() / 2;
                ComponentInfo { size: s, is_complete: internal == s * (s - 1) / 2, is_edgeless: internal == 0 }
            })
            .collect();
        Components { summary, partition: parts }
    }

    pub fn is_connected(&self) -> bool {
        self.components().partition.len() <= 1
    }

    /// The common degree when the graph is regular.
    pub fn is_regular(&self) -> Option<usize> {
        let mut degs = self.degrees().into_iter();
        let k = degs.next()?;
        degs.all(|d| d == k).then_some(k)
    }

    /// `(m, n)` when the graph is `m` disjoint copies of `K_n`.
    pub fn disjoint_union_form(&self) -> Option<(usize, usize)> {
        let comps = self.components();
        let first = comps.summary.first()?;
        comps
            .summary
            .iter()
            .all(|c| c.is_complete && c.size == first.size)
            .then_some((comps.summary.len(), first.size))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_of_small_graphs() {
        let i4 = Graph::edgeless(4);
        let c = i4.components();
        assert_eq!(c.summary.len(), 4);
        assert!(c.summary.iter().all(|s| s.size == 1 && s.is_complete && s.is_edgeless));

        let g = Graph::union_of_cliques(4, 6);
        let c = g.components();
        assert_eq!(c.summary.len(), 4);
        assert!(c.summary.iter().all(|s| s.size == 6 && s.is_complete && !s.is_edgeless));

        assert!(Graph::new(0).components().summary.is_empty());
    }

    #[test]
    fn regularity_and_union_form() {
        assert_eq!(Graph::complete(5).is_regular(), Some(4));
        let k3_i4 = Graph::disjoint_union(&[Graph::complete(3), Graph::edgeless(4)]);
        assert_eq!(k3_i4.is_regular(), None);
        assert_eq!(k3_i4.disjoint_union_form(), None);
        let four_k2 = Graph::union_of_cliques(4, 2);
        assert_eq!(four_k2.is_regular(), Some(1));
        assert_eq!(four_k2.disjoint_union_form(), Some((4, 2)));
        assert_eq!(Graph::edgeless(5).disjoint_union_form(), Some((5, 1)));
        assert_eq!(Graph::new(0).disjoint_union_form(), None);
    }

    #[test]
    fn components_sorted_by_size() {
        let g = Graph::disjoint_union(&[Graph::edgeless(2), Graph::complete(3)]);
        let c = g.components();
        assert_eq!(c.summary[0].size, 3);
        assert_eq!(c.partition[0], vec![2, 3, 4]);
        assert_eq!(c.partition[1], vec![0]);
    }

    #[test]
    fn edge_list_rejects_loops() {
        assert_eq!(Graph::from_edges(3, &[(0, 1), (2, 2)]), Err((2, 2)));
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err((0, 3)));
        let g = Graph::from_edges(3, &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.common_neighbors(0, 2), 1);
    }
}
