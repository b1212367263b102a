//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are 0-based indices inside the library. Every text format and
//! every `Display` impl uses 1-based labels.

mod cycles;
mod family;
mod io;
mod vertex_set;

pub use cycles::OddCycle;
pub use family::Family;
pub use io::{parse_edge_list, parse_graph6, to_graph6};
pub use vertex_set::VertexSet;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A finite simple graph on the vertex set `0..d`.
///
/// Edges keep their insertion order; each is stored as `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    d: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the host vertex behind each new index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `host[k]` is the host index of vertex `k` of `graph`.
    pub host: Vec<usize>,
}

impl Graph {
    /// Builds a graph from 0-based edge pairs.
    pub fn new<I>(d: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if d == 0 {
            return Err(Error::NoVertices);
        }
        if d > MAX_VERTICES {
            return Err(Error::TooManyVertices(d));
        }
        let mut g = Graph { d, edges: Vec::new(), adj: vec![VertexSet::EMPTY; d] };
        for (u, v) in edges {
            for w in [u, v] {
                if w >= d {
                    return Err(Error::VertexOutOfRange { vertex: w + 1, d });
                }
            }
            if u == v {
                return Err(Error::Loop(u + 1));
            }
            let (u, v) = (u.min(v), u.max(v));
            if g.adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u + 1, v + 1));
            }
            g.adj[u] = g.adj[u].with(v);
            g.adj[v] = g.adj[v].with(u);
            g.edges.push((u, v));
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edge pairs.
    pub fn from_labels(d: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut zero_based = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > d {
                    return Err(Error::VertexOutOfRange { vertex: w, d });
                }
            }
            zero_based.push((u - 1, v - 1));
        }
        Graph::new(d, zero_based)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.d
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.d)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.d && self.adj[u].contains(v)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.d {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v + 1, d: self.d })
        }
    }

    /// `N(G;T)`: every vertex adjacent to some member of `t`.
    pub fn neighborhood(&self, t: VertexSet) -> VertexSet {
        t.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    pub fn is_independent(&self, t: VertexSet) -> bool {
        t.iter().all(|v| self.adj[v].is_disjoint(t))
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Components of the subgraph induced by `within`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let within = within.intersection(self.vertices());
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.reach_within(v, within);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True when `within` is empty or induces a connected subgraph.
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.min() {
            None => true,
            Some(v) => self.reach_within(v, within) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Proper 2-coloring of the subgraph induced by `within`, as the set of
    /// vertices given the second color, or `None` if it is not bipartite.
    pub fn two_coloring_within(&self, within: VertexSet) -> Option<VertexSet> {
        let mut colored = VertexSet::EMPTY;
        let mut odd = VertexSet::EMPTY;
        let mut queue = VecDeque::new();
        for root in within {
            if colored.contains(root) {
                continue;
            }
            colored = colored.with(root);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].intersection(within) {
                    if !colored.contains(w) {
                        colored = colored.with(w);
                        if !odd.contains(u) {
                            odd = odd.with(w);
                        }
                        queue.push_back(w);
                    } else if odd.contains(w) == odd.contains(u) {
                        return None;
                    }
                }
            }
        }
        Some(odd)
    }

    pub fn is_bipartite_within(&self, within: VertexSet) -> bool {
        self.two_coloring_within(within).is_some()
    }

    pub fn is_bipartite(&self) -> bool {
        self.is_bipartite_within(self.vertices())
    }

    /// The subgraph induced by `s`, relabelled `0..|s|` in ascending host order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<InducedSubgraph> {
        let s = s.intersection(self.vertices());
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let host: Vec<usize> = s.iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (k, &v) in host.iter().enumerate() {
            index[v] = k;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) && s.contains(v))
            .map(|&(u, v)| (index[u], index[v]));
        let graph = Graph::new(host.len(), edges)?;
        Ok(InducedSubgraph { graph, host })
    }

    /// Edges of a BFS spanning forest of the subgraph on `within`, using only
    /// the edges accepted by `keep`.
    pub fn spanning_forest_with<F>(&self, within: VertexSet, keep: F) -> Vec<(usize, usize)>
    where
        F: Fn(usize, usize) -> bool,
    {
        let mut seen = VertexSet::EMPTY;
        let mut tree = Vec::new();
        let mut queue = VecDeque::new();
        for root in within {
            if seen.contains(root) {
                continue;
            }
            seen = seen.with(root);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].intersection(within).difference(seen) {
                    if keep(u, w) {
                        seen = seen.with(w);
                        tree.push((u.min(w), u.max(w)));
                        queue.push_back(w);
                    }
                }
            }
        }
        tree
    }

    /// Serializes to the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.d, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Graph {
        Family::Bridge(2).generate().unwrap()
    }

    fn k3() -> Graph {
        Family::Complete(3).generate().unwrap()
    }

    #[test]
    fn connectivity_examples() {
        assert!(two_triangles().is_connected());
        let two_triangles =
            Graph::from_labels(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
    }

    #[test]
    fn component_examples() {
        assert_eq!(k3().connected_components(), vec![VertexSet::from_labels([1, 2, 3])]);
        let g = two_triangles();
        let rest = g.vertices().difference(VertexSet::from_labels([3, 4, 7, 8]));
        assert_eq!(
            g.components_within(rest),
            vec![VertexSet::from_labels([1, 2]), VertexSet::from_labels([5, 6])]
        );
        let edgeless = Graph::new(3, []).unwrap();
        assert_eq!(
            edgeless.connected_components(),
            vec![
                VertexSet::from_labels([1]),
                VertexSet::from_labels([2]),
                VertexSet::from_labels([3])
            ]
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = two_triangles();
        let tri = g.induced_subgraph(VertexSet::from_labels([4, 5, 6])).unwrap();
        assert_eq!(tri.graph.size(), 3);
        assert_eq!(tri.host, vec![3, 4, 5]);
        let single = k3().induced_subgraph(VertexSet::from_labels([1])).unwrap();
        assert_eq!((single.graph.order(), single.graph.size()), (1, 0));
        let two = g.induced_subgraph(VertexSet::from_labels([1, 2, 5, 6])).unwrap();
        assert_eq!(two.graph.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(k3().induced_subgraph(VertexSet::EMPTY), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn neighborhood_examples() {
        let g = two_triangles();
        assert_eq!(g.neighborhood(VertexSet::from_labels([7, 8])), VertexSet::from_labels([3, 4]));
        assert_eq!(k3().neighborhood(VertexSet::from_labels([1])), VertexSet::from_labels([2, 3]));
        assert_eq!(g.neighborhood(VertexSet::from_labels([1])), VertexSet::from_labels([2, 3]));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_labels(2, &[(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(Graph::from_labels(3, &[(1, 2), (2, 1)]), Err(Error::DuplicateEdge(1, 2)));
        assert_eq!(
            Graph::from_labels(3, &[(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, d: 3 })
        );
        assert_eq!(Graph::new(65, []), Err(Error::TooManyVertices(65)));
        assert_eq!(Graph::new(0, []), Err(Error::NoVertices));
    }

    #[test]
    fn bipartiteness() {
        assert!(!k3().is_bipartite());
        assert!(Family::Cycle(6).generate().unwrap().is_bipartite());
        assert!(Family::CompleteBipartite(2, 3).generate().unwrap().is_bipartite());
        assert!(!two_triangles().is_bipartite());
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = two_triangles();
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
