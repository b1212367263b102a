//! The combinatorial (R1) criterion, the odd cycle condition for normality,
//! and the classification report that combines them.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::facets::{self, FacetDescriptor};
use crate::graph::{Graph, OddCycle};

/// Whether to stop at the first violation or collect all of them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Scan {
    #[default]
    All,
    FirstViolation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R1Verdict {
    pub holds: bool,
    /// Violating facets in canonical order; empty iff `holds`.
    pub violations: Vec<FacetDescriptor>,
}

/// First pair of vertex-disjoint chordless odd cycles with no edge between
/// them, or `None` when the odd cycle condition holds.
pub fn odd_cycle_condition_violation(g: &Graph) -> Option<(OddCycle, OddCycle)> {
    let cycles = g.chordless_odd_cycles();
    let sets: Vec<_> = cycles.iter().map(OddCycle::vertex_set).collect();
    for a in 0..cycles.len() {
        for b in a + 1..cycles.len() {
            if sets[a].is_disjoint(sets[b]) && g.neighborhood(sets[a]).is_disjoint(sets[b]) {
                return Some((cycles[a].clone(), cycles[b].clone()));
            }
        }
    }
    None
}

pub fn satisfies_r1(g: &Graph) -> Result<R1Verdict> {
    satisfies_r1_with(g, Scan::All)
}

/// Decides (R1) for the edge ring of a connected graph.
///
/// Bipartite graphs satisfy (R1) outright. Otherwise the check is: removing
/// any regular vertex leaves a connected graph, and for every fundamental set
/// `T`, either `T ∪ N(G;T)` covers every vertex or what remains is connected.
pub fn satisfies_r1_with(g: &Graph, scan: Scan) -> Result<R1Verdict> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_bipartite() {
        return Ok(R1Verdict { holds: true, violations: Vec::new() });
    }
    let mut violations = Vec::new();
    for i in facets::regular_vertices(g) {
        if !g.is_connected_within(g.vertices().without(i)) {
            violations.push(FacetDescriptor::RegularVertex(i));
            if scan == Scan::FirstViolation {
                return Ok(R1Verdict { holds: false, violations });
            }
        }
    }
    let _ = facets::for_each_fundamental_set(g, |t| {
        let rest = g.vertices().difference(t.union(g.neighborhood(t)));
        if !g.is_connected_within(rest) {
            violations.push(FacetDescriptor::Fundamental(t));
            if scan == Scan::FirstViolation {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    Ok(R1Verdict { holds: violations.is_empty(), violations })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub bipartite: bool,
    pub normal: bool,
    pub r1: bool,
    pub r1_violations: Vec<FacetDescriptor>,
    pub occ_violation: Option<(OddCycle, OddCycle)>,
    pub notes: String,
}

pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    classify_with(g, Scan::All)
}

pub fn classify_with(g: &Graph, scan: Scan) -> Result<ClassificationReport> {
    let verdict = satisfies_r1_with(g, scan)?;
    let bipartite = g.is_bipartite();
    let occ_violation = odd_cycle_condition_violation(g);
    let normal = occ_violation.is_none();
    if bipartite && !normal {
        return Err(Error::Inconsistent("bipartite graph fails the odd cycle condition".into()));
    }
    if normal && !verdict.holds {
        return Err(Error::Inconsistent(format!(
            "normal edge ring reported without (R1); violations: {:?}",
            verdict.violations
        )));
    }
    let notes = match (normal, verdict.holds) {
        (true, _) => "normal hence Cohen–Macaulay",
        (false, true) => "satisfies (R1); normal iff Cohen–Macaulay",
        (false, false) => "fails (R1), hence not normal",
    };
    Ok(ClassificationReport {
        bipartite,
        normal,
        r1: verdict.holds,
        r1_violations: verdict.violations,
        occ_violation,
        notes: notes.to_string(),
    })
}
