//! Exhaustive cross-checks between the combinatorial criterion and the
//! lattice oracle, run graph by graph.

use std::fmt;

use crate::error::Result;
use crate::facets::{self, FacetDescriptor};
use crate::graph::{Graph, VertexSet};
use crate::lattice;
use crate::serre;

/// Every labelled simple graph on `d` vertices, by edge subset of `K_d` in
/// increasing bitmask order.
pub fn labelled_graphs(d: usize) -> impl Iterator<Item = Graph> {
    assert!((1..=11).contains(&d), "labelled enumeration supports 1 <= d <= 11");
    let pairs: Vec<(usize, usize)> =
        (0..d).flat_map(|u| (u + 1..d).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        Graph::new(d, edges).expect("subsets of K_d are simple")
    })
}

pub fn is_connected_nonbipartite(g: &Graph) -> bool {
    g.is_connected() && !g.is_bipartite()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    /// The combinatorial criterion and the oracle give the same verdict and violation list.
    CriterionMatchesOracle,
    /// The edge vectors span the even-sum lattice, and the tree-plus-cycle
    /// basis rebuilds it.
    GroupLattice,
    /// Every facet form hits the value 1.
    ConditionOne,
    /// Lattice condition two matches the connectivity predicate, facet by facet.
    ConditionTwoMatchesConnectivity,
    /// The facet lattice of each fundamental set splits as a direct sum.
    Decomposition,
    /// Odd cycle condition implies (R1).
    NormalImpliesR1,
    /// Forms are nonnegative on all edges and vanish on at least one.
    FacetSupport,
    /// Edge vectors on each facet have affine dimension `d - 2`.
    FacetRank,
}

impl Invariant {
    pub const ALL: [Invariant; 8] = [
        Invariant::CriterionMatchesOracle,
        Invariant::GroupLattice,
        Invariant::ConditionOne,
        Invariant::ConditionTwoMatchesConnectivity,
        Invariant::Decomposition,
        Invariant::NormalImpliesR1,
        Invariant::FacetSupport,
        Invariant::FacetRank,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::CriterionMatchesOracle => "criterion-matches-oracle",
            Invariant::GroupLattice => "group-lattice",
            Invariant::ConditionOne => "condition-one",
            Invariant::ConditionTwoMatchesConnectivity => "condition-two-matches-connectivity",
            Invariant::Decomposition => "decomposition",
            Invariant::NormalImpliesR1 => "normal-implies-r1",
            Invariant::FacetSupport => "facet-support",
            Invariant::FacetRank => "facet-rank",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of auditing one connected nonbipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphAudit {
    pub normal: bool,
    pub r1: bool,
    pub facets: usize,
    pub failures: Vec<Invariant>,
}

impl GraphAudit {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn connectivity_predicate(g: &Graph, f: FacetDescriptor) -> bool {
    match f {
        FacetDescriptor::RegularVertex(i) => g.is_connected_within(g.vertices().without(i)),
        FacetDescriptor::Fundamental(t) => {
            let rest = g.vertices().difference(t.union(g.neighborhood(t)));
            rest.is_empty() || g.is_connected_within(rest)
        }
    }
}

/// Runs every invariant on a connected nonbipartite graph. Errors are
/// returned only for malformed input; an internal inconsistency raised by a
/// check counts as that check failing.
pub fn audit_graph(g: &Graph) -> Result<GraphAudit> {
    facets::require_connected_nonbipartite(g)?;
    let mut failures = Vec::new();
    let mut fail = |inv: Invariant| {
        if !failures.contains(&inv) {
            failures.push(inv);
        }
    };

    let criterion = serre::satisfies_r1(g)?;
    let normal = serre::odd_cycle_condition_violation(g).is_none();
    if normal && !criterion.holds {
        fail(Invariant::NormalImpliesR1);
    }

    match lattice::verify_tree_cycle_basis(g) {
        Ok(true) => {}
        _ => fail(Invariant::GroupLattice),
    }

    let checks = match lattice::oracle_facet_checks(g) {
        Ok(checks) => checks,
        Err(_) => {
            fail(Invariant::CriterionMatchesOracle);
            fail(Invariant::ConditionOne);
            Vec::new()
        }
    };
    let oracle_violations: Vec<FacetDescriptor> =
        checks.iter().filter(|c| !c.passes()).map(|c| c.facet).collect();
    if checks.is_empty() || oracle_violations != criterion.violations {
        fail(Invariant::CriterionMatchesOracle);
    }

    for check in &checks {
        if !check.condition_one {
            fail(Invariant::ConditionOne);
        }
        if check.condition_two != connectivity_predicate(g, check.facet) {
            fail(Invariant::ConditionTwoMatchesConnectivity);
        }
        let values: Vec<i64> = g.edges().iter().map(|&e| check.form.raw_value_at_edge(e)).collect();
        if values.iter().any(|&v| v < 0) || !values.contains(&0) {
            fail(Invariant::FacetSupport);
        }
        if !matches!(lattice::verify_facet_rank(g, check.facet), Ok(true)) {
            fail(Invariant::FacetRank);
        }
        if let FacetDescriptor::Fundamental(t) = check.facet {
            if !matches!(lattice::verify_decomposition(g, t), Ok(true)) {
                fail(Invariant::Decomposition);
            }
        }
    }

    Ok(GraphAudit { normal, r1: criterion.holds, facets: checks.len(), failures })
}

/// Vertices `i` where "regular" and "`{i}` is fundamental" disagree.
pub fn regular_vs_singleton_mismatches(g: &Graph) -> Vec<usize> {
    let regular = VertexSet::from_indices(facets::regular_vertices(g));
    g.vertices()
        .iter()
        .filter(|&i| {
            let singleton = facets::is_fundamental(g, VertexSet::singleton(i)).unwrap_or(false);
            regular.contains(i) != singleton
        })
        .collect()
}
