use std::fmt;

use super::{Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A cycle of odd length, stored in canonical form: it starts at its smallest
/// vertex and continues toward the smaller of that vertex's two cycle
/// neighbours.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OddCycle(Vec<usize>);

impl OddCycle {
    /// Canonicalizes a cyclic vertex sequence. Returns `None` unless it has odd
    /// length at least 3 and distinct vertices.
    pub fn new(mut vertices: Vec<usize>) -> Option<Self> {
        let n = vertices.len();
        if n < 3 || n.is_multiple_of(2) {
            return None;
        }
        let set = VertexSet::from_indices(vertices.iter().copied());
        if set.len() != n {
            return None;
        }
        let start = (0..n).min_by_key(|&k| vertices[k]).expect("nonempty");
        vertices.rotate_left(start);
        if vertices[1] > vertices[n - 1] {
            vertices[1..].reverse();
        }
        Some(OddCycle(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_indices(self.0.iter().copied())
    }

    /// Consecutive pairs, ending with the closing pair `(last, first)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.0.len();
        (0..n).map(move |k| (self.0[k], self.0[(k + 1) % n]))
    }

    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    /// True when every consecutive pair is an edge of `g`.
    pub fn lies_in(&self, g: &Graph) -> bool {
        self.edges().all(|(u, v)| g.has_edge(u, v))
    }

    /// True when `g` has no edge between non-consecutive cycle vertices.
    pub fn is_chordless_in(&self, g: &Graph) -> bool {
        let set = self.vertex_set();
        self.0.iter().all(|&v| g.neighbors(v).intersection(set).len() == 2)
    }
}

impl fmt::Display for OddCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str(")")
    }
}

impl Graph {
    /// Some odd cycle of the subgraph induced by `s`, or `None` if that
    /// subgraph is bipartite. `s` must be nonempty and induce a connected graph.
    pub fn odd_cycle_within(&self, s: VertexSet) -> Result<Option<OddCycle>> {
        let s = s.intersection(self.vertices());
        let root = s.min().ok_or(Error::EmptyVertexSet)?;
        if !self.is_connected_within(s) {
            return Err(Error::DisconnectedSubset(s));
        }
        let mut parent = [usize::MAX; MAX_VERTICES];
        let mut depth = [usize::MAX; MAX_VERTICES];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u).intersection(s) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if depth[w] == depth[u] {
                    // BFS layers differ by at most one, so an edge inside a
                    // layer closes a cycle of length 2k+1 through the tree.
                    let (mut a, mut b) = (u, w);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while a != b {
                        a = parent[a];
                        b = parent[b];
                        left.push(a);
                        right.push(b);
                    }
                    right.pop();
                    left.extend(right.into_iter().rev());
                    return Ok(Some(OddCycle::new(left).expect("simple odd cycle")));
                }
            }
        }
        Ok(None)
    }

    /// All chordless odd cycles, each once, ordered lexicographically by
    /// their ascending vertex lists.
    ///
    /// Grows induced paths from each start vertex `s` through vertices larger
    /// than `s`; a path closes into a chordless cycle exactly when its new end
    /// is adjacent to `s`.
    pub fn chordless_odd_cycles(&self) -> Vec<OddCycle> {
        let mut found = Vec::new();
        for s in 0..self.d {
            let above = self.vertices().difference(VertexSet::full(s + 1));
            for first in self.neighbors(s).intersection(above) {
                let mut path = vec![s, first];
                let blocked = VertexSet::full(s + 1).with(first);
                self.extend_induced_path(&mut path, blocked, &mut found);
            }
        }
        let mut cycles: Vec<OddCycle> =
            found.into_iter().map(|p| OddCycle::new(p).expect("odd induced cycle")).collect();
        cycles.sort_by_key(|a| a.vertex_set());
        cycles
    }

    fn extend_induced_path(
        &self,
        path: &mut Vec<usize>,
        blocked: VertexSet,
        found: &mut Vec<Vec<usize>>,
    ) {
        let s = path[0];
        let first = path[1];
        let last = *path.last().expect("path has two vertices");
        for w in self.neighbors(last).difference(blocked) {
            if self.has_edge(w, s) {
                // each cycle is met once per direction; keep one
                if (path.len() + 1) % 2 == 1 && first < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    found.push(cycle);
                }
            } else {
                path.push(w);
                self.extend_induced_path(path, blocked.union(self.neighbors(last)), found);
                path.pop();
            }
        }
    }
}
