//! Regular vertices, fundamental sets, and the support forms of the facets
//! of the edge polytope.

use std::fmt;
use std::ops::ControlFlow;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Names one facet of the edge polytope.
///
/// The derived order puts every `RegularVertex` before every `Fundamental`,
/// each group in ascending (lexicographic) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FacetDescriptor {
    RegularVertex(usize),
    Fundamental(VertexSet),
}

impl fmt::Display for FacetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FacetDescriptor::RegularVertex(i) => write!(f, "RegularVertex({})", i + 1),
            FacetDescriptor::Fundamental(t) => write!(f, "Fundamental({t})"),
        }
    }
}

/// A linear form `x -> (coeffs . x) / denom` with `denom` 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportForm {
    coeffs: Vec<i64>,
    denom: i64,
}

impl SupportForm {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// `coeffs . x`, without dividing by the denominator.
    pub fn raw_value(&self, x: &[i64]) -> i64 {
        assert_eq!(x.len(), self.coeffs.len(), "form and vector lengths differ");
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// Raw value at the edge vector of `{u, v}`.
    pub fn raw_value_at_edge(&self, (u, v): (usize, usize)) -> i64 {
        self.coeffs[u] + self.coeffs[v]
    }

    /// The normalized value `(coeffs . x) / denom`, exactly.
    pub fn value(&self, x: &[i64]) -> Rational64 {
        Rational64::new(self.raw_value(x), self.denom)
    }

    pub fn value_at_edge(&self, e: (usize, usize)) -> Rational64 {
        Rational64::new(self.raw_value_at_edge(e), self.denom)
    }
}

/// Fails unless `g` is connected and has an odd cycle.
pub fn require_connected_nonbipartite(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_bipartite() {
        return Err(Error::Bipartite);
    }
    Ok(())
}

/// True when `s` is empty or every component of the subgraph it induces has
/// an odd cycle.
fn every_component_nonbipartite(g: &Graph, s: VertexSet) -> bool {
    g.components_within(s).into_iter().all(|c| !g.is_bipartite_within(c))
}

/// Vertex `i` is regular when every component of `G - i` has an odd cycle.
pub fn is_regular_vertex(g: &Graph, i: usize) -> Result<bool> {
    g.check_vertex(i)?;
    Ok(every_component_nonbipartite(g, g.vertices().without(i)))
}

pub fn regular_vertices(g: &Graph) -> Vec<usize> {
    g.vertices().iter().filter(|&i| every_component_nonbipartite(g, g.vertices().without(i))).collect()
}

/// Connectivity of the bipartite graph with parts `t` and `N(G;t)` whose
/// edges are those of `g` running between the parts. `t` must be independent.
pub fn induced_bipartite_connected(g: &Graph, t: VertexSet) -> bool {
    let Some(start) = t.min() else { return true };
    let all = t.union(g.neighborhood(t));
    let mut seen = VertexSet::singleton(start);
    loop {
        let from_t = g.neighborhood(seen.intersection(t));
        let from_n = g.neighborhood(seen.difference(t)).intersection(t);
        let next = seen.union(from_t).union(from_n);
        if next == seen {
            return seen == all;
        }
        seen = next;
    }
}

/// Conditions (b) and (c) of a fundamental set, for an independent `t`.
fn independent_set_is_fundamental(g: &Graph, t: VertexSet) -> bool {
    let closed = t.union(g.neighborhood(t));
    induced_bipartite_connected(g, t)
        && every_component_nonbipartite(g, g.vertices().difference(closed))
}

pub fn is_fundamental(g: &Graph, t: VertexSet) -> Result<bool> {
    if t.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(v) = t.max() {
        g.check_vertex(v)?;
    }
    Ok(g.is_independent(t) && independent_set_is_fundamental(g, t))
}

/// Visits every fundamental set in lexicographic order until `visit` breaks.
///
/// Independent sets are grown depth-first, only ever adding a vertex above
/// the current maximum that is not adjacent to the set, so each independent
/// set is reached once and preorder is lexicographic.
pub fn for_each_fundamental_set<F>(g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    fn grow<F>(g: &Graph, current: VertexSet, candidates: VertexSet, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(VertexSet) -> ControlFlow<()>,
    {
        for v in candidates {
            let next = current.with(v);
            if independent_set_is_fundamental(g, next) {
                visit(next)?;
            }
            let above = candidates.difference(VertexSet::full(v + 1));
            grow(g, next, above.difference(g.neighbors(v)), visit)?;
        }
        ControlFlow::Continue(())
    }
    grow(g, VertexSet::EMPTY, g.vertices(), &mut visit)
}

pub fn enumerate_fundamental_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_fundamental_set(g, |t| {
        out.push(t);
        ControlFlow::Continue(())
    });
    out
}

/// Regular-vertex facets (ascending) followed by fundamental-set facets
/// (lexicographic).
pub fn facets(g: &Graph) -> Result<Vec<FacetDescriptor>> {
    require_connected_nonbipartite(g)?;
    let mut out: Vec<FacetDescriptor> =
        regular_vertices(g).into_iter().map(FacetDescriptor::RegularVertex).collect();
    out.extend(enumerate_fundamental_sets(g).into_iter().map(FacetDescriptor::Fundamental));
    Ok(out)
}

/// Checks that `f` names a facet of `g`.
pub fn validate_descriptor(g: &Graph, f: FacetDescriptor) -> Result<()> {
    let ok = match f {
        FacetDescriptor::RegularVertex(i) => g.check_vertex(i).is_ok() && is_regular_vertex(g, i)?,
        FacetDescriptor::Fundamental(t) => {
            !t.is_empty() && t.is_subset(g.vertices()) && is_fundamental(g, t)?
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidDescriptor(f.to_string()))
    }
}

/// The support form of a facet: the unit form at `i` for a regular vertex,
/// and `+1` on `N(G;T)`, `-1` on `T` for a fundamental set, halved when
/// `T ∪ N(G;T)` covers every vertex.
pub fn support_form(g: &Graph, f: FacetDescriptor) -> Result<SupportForm> {
    validate_descriptor(g, f)?;
    Ok(support_form_unchecked(g, f))
}

pub(crate) fn support_form_unchecked(g: &Graph, f: FacetDescriptor) -> SupportForm {
    let mut coeffs = vec![0i64; g.order()];
    match f {
        FacetDescriptor::RegularVertex(i) => {
            coeffs[i] = 1;
            SupportForm { coeffs, denom: 1 }
        }
        FacetDescriptor::Fundamental(t) => {
            let n = g.neighborhood(t);
            for v in n {
                coeffs[v] = 1;
            }
            for v in t {
                coeffs[v] = -1;
            }
            let denom = if t.union(n) == g.vertices() { 2 } else { 1 };
            SupportForm { coeffs, denom }
        }
    }
}
