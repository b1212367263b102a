use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// Parametric graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Two triangles `{1,2,3}` and `{4,5,6}` joined through `k` bridge
    /// vertices `7..=k+6`, each adjacent to exactly 3 and 4.
    /// `Bridge(2)` is the 8-vertex graph with the disjoint triangles.
    Bridge(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Bridge(_) => "bridge",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
        }
    }

    fn invalid(&self, reason: impl Into<String>) -> Error {
        Error::InvalidFamily { family: self.name().to_string(), reason: reason.into() }
    }

    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Bridge(k) => {
                if k == 0 {
                    return Err(self.invalid("k must be at least 1 (k = 0 is disconnected)"));
                }
                let mut edges = vec![(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)];
                for b in 7..=k + 6 {
                    edges.push((3, b));
                    edges.push((b, 4));
                }
                Graph::from_labels(k + 6, &edges)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(self.invalid("n must be at least 3"));
                }
                Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
            }
            Family::Complete(n) => {
                if n == 0 {
                    return Err(self.invalid("n must be at least 1"));
                }
                Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(self.invalid("both sides must be nonempty"));
                }
                Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            }
        }
        .map_err(|e| match e {
            Error::TooManyVertices(_) => self.invalid(e.to_string()),
            other => other,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Bridge(k) => write!(f, "bridge({k})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
        }
    }
}
