//! Acceptance criteria, one line each. Every check is exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use edgering::audit::labelled_graphs;
use edgering::facets::FacetDescriptor;
use edgering::graph::{parse_edge_list, parse_graph6};
use edgering::lattice::{self, FacetCheck, IntegerLattice};
use edgering::{serre, Family, Graph, R1Verdict};

const TWO_TRIANGLES: &str = "8 10\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n3 7\n7 4\n3 8\n8 4\n";
const CORPUS7: &[u8] = include_bytes!("data/conn7.g6");

const EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const BRIDGE_BUDGET: Duration = Duration::from_secs(1);
const EXHAUSTIVE_BUDGET: Duration = Duration::from_secs(300);

// labelled connected nonbipartite graphs on 3, 4, 5, 6 vertices
const LABELLED_COUNTS: [usize; 4] = [1, 19, 533, 23673];

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn criterion_1() -> Outcome {
    let started = Instant::now();
    let g = parse_edge_list(TWO_TRIANGLES).unwrap();
    let r = serre::classify(&g).unwrap();
    let elapsed = started.elapsed();
    let pair = r.occ_violation.as_ref().map(|(a, b)| (a.labels(), b.labels()));
    let pass = !r.bipartite
        && !r.normal
        && pair == Some((vec![1, 2, 3], vec![4, 5, 6]))
        && r.r1
        && r.r1_violations.is_empty()
        && elapsed < EXAMPLE_BUDGET;
    Outcome {
        id: 1,
        title: "two-triangle example classification",
        pass,
        detail: format!(
            "bipartite={} normal={} occ={:?} r1={} violations={} in {:.3?}",
            r.bipartite,
            r.normal,
            pair,
            r.r1,
            r.r1_violations.len(),
            elapsed
        ),
    }
}

fn criterion_2() -> Outcome {
    let started = Instant::now();
    let mut rows = Vec::new();
    let mut pass = true;
    for k in 1..=6 {
        let g = Family::Bridge(k).generate().unwrap();
        let r1 = serre::satisfies_r1(&g).unwrap().holds;
        let normal = serre::odd_cycle_condition_violation(&g).is_none();
        pass &= r1 == (k >= 2) && !normal;
        rows.push(format!("k={k}:r1={r1},normal={normal}"));
    }
    let elapsed = started.elapsed();
    pass &= elapsed < BRIDGE_BUDGET;
    Outcome {
        id: 2,
        title: "bridge family: (R1) iff k >= 2, never normal",
        pass,
        detail: format!("{} in {:.3?}", rows.join(" "), elapsed),
    }
}

/// Everything computed once per swept graph.
struct Swept {
    graph: Graph,
    criterion: R1Verdict,
    normal: bool,
    checks: Vec<FacetCheck>,
}

impl Swept {
    fn new(graph: Graph) -> Self {
        let criterion = serre::satisfies_r1(&graph).unwrap();
        let normal = serre::odd_cycle_condition_violation(&graph).is_none();
        let checks = lattice::oracle_facet_checks(&graph).unwrap();
        Swept { graph, criterion, normal, checks }
    }

    fn oracle(&self) -> R1Verdict {
        let violations: Vec<FacetDescriptor> =
            self.checks.iter().filter(|c| !c.passes()).map(|c| c.facet).collect();
        R1Verdict { holds: violations.is_empty(), violations }
    }
}

fn eligible(g: &Graph) -> bool {
    g.is_connected() && !g.is_bipartite()
}

fn criterion_3(labelled: &[Swept], corpus: &[Swept], exhaustive_time: Duration) -> Outcome {
    let disagree = |set: &[Swept]| set.iter().filter(|s| s.criterion != s.oracle()).count();
    let (a, b) = (disagree(labelled), disagree(corpus));
    let failing = corpus.iter().filter(|s| !s.criterion.holds).count();
    let counts = [3, 4, 5, 6].map(|d| labelled.iter().filter(|s| s.graph.order() == d).count());
    Outcome {
        id: 3,
        title: "combinatorial criterion agrees with lattice oracle",
        pass: a == 0 && b == 0 && counts == LABELLED_COUNTS && exhaustive_time < EXHAUSTIVE_BUDGET,
        detail: format!(
            "{} labelled graphs d<=6 {counts:?} ({a} disagreements, {:.1?}), {} corpus graphs d=7 \
             ({failing} without (R1), {b} disagreements)",
            labelled.len(),
            exhaustive_time,
            corpus.len()
        ),
    }
}

fn criterion_4(all: &[&Swept]) -> Outcome {
    let mut bad = 0;
    for s in all {
        let d = s.graph.order();
        let group = lattice::group_of_monoid(&s.graph).unwrap();
        let ok = group == IntegerLattice::even_sum(d).unwrap()
            && group.rank() == d
            && group.determinant() == Some(2)
            && lattice::verify_tree_cycle_basis(&s.graph).unwrap();
        bad += !ok as usize;
    }
    Outcome {
        id: 4,
        title: "edge vectors span the even-sum lattice; tree + 2e_i basis",
        pass: bad == 0,
        detail: format!("{} graphs, {bad} failures", all.len()),
    }
}

fn criterion_5(all: &[&Swept]) -> Outcome {
    let mut facets = 0;
    let mut halved = 0;
    let mut bad = 0;
    for s in all {
        for c in &s.checks {
            facets += 1;
            halved += (c.form.denom() == 2) as usize;
            bad += !c.condition_one as usize;
        }
    }
    Outcome {
        id: 5,
        title: "every facet form takes the value 1 on some edge",
        pass: bad == 0 && halved > 0,
        detail: format!("{facets} facets ({halved} with halved forms), {bad} failures"),
    }
}

fn criterion_6(all: &[&Swept]) -> Outcome {
    let mut pointwise_bad = 0;
    let mut decomposition_bad = 0;
    let mut condition_two_failures = 0;
    let mut fundamental = 0;
    for s in all {
        let g = &s.graph;
        for c in &s.checks {
            let connected = match c.facet {
                FacetDescriptor::RegularVertex(i) => g.is_connected_within(g.vertices().without(i)),
                FacetDescriptor::Fundamental(t) => {
                    let rest = g.vertices().difference(t.union(g.neighborhood(t)));
                    rest.is_empty() || g.is_connected_within(rest)
                }
            };
            pointwise_bad += (c.condition_two != connected) as usize;
            condition_two_failures += !c.condition_two as usize;
            if let FacetDescriptor::Fundamental(t) = c.facet {
                fundamental += 1;
                decomposition_bad += !lattice::verify_decomposition(g, t).unwrap() as usize;
            }
        }
    }
    Outcome {
        id: 6,
        title: "lattice condition two matches connectivity; facet lattice decomposes",
        pass: pointwise_bad == 0 && decomposition_bad == 0,
        detail: format!(
            "{pointwise_bad} pointwise mismatches ({condition_two_failures} facets fail condition two), \
             {decomposition_bad}/{fundamental} decomposition failures"
        ),
    }
}

fn criterion_7(all: &[&Swept]) -> Outcome {
    let normal = all.iter().filter(|s| s.normal).count();
    let exceptions = all.iter().filter(|s| s.normal && !s.criterion.holds).count();
    Outcome {
        id: 7,
        title: "odd cycle condition implies (R1)",
        pass: exceptions == 0,
        detail: format!("{normal} normal graphs, {exceptions} exceptions"),
    }
}

fn criterion_8(all: &[&Swept]) -> Outcome {
    let mut support_bad = 0;
    let mut rank_bad = 0;
    let mut facets = 0;
    for s in all {
        for c in &s.checks {
            facets += 1;
            let values: Vec<i64> =
                s.graph.edges().iter().map(|&e| c.form.raw_value_at_edge(e)).collect();
            support_bad += (values.iter().any(|&v| v < 0) || !values.contains(&0)) as usize;
            rank_bad += !lattice::verify_facet_rank(&s.graph, c.facet).unwrap() as usize;
        }
    }
    Outcome {
        id: 8,
        title: "facet forms support the polytope; facets have dimension d-2",
        pass: support_bad == 0 && rank_bad == 0,
        detail: format!("{facets} facets, {support_bad} support failures, {rank_bad} rank failures"),
    }
}

fn main() -> ExitCode {
    let mut outcomes = vec![criterion_1(), criterion_2()];

    let started = Instant::now();
    let labelled: Vec<Swept> =
        (1..=6).flat_map(labelled_graphs).filter(eligible).map(Swept::new).collect();
    let exhaustive_time = started.elapsed();
    let corpus: Vec<Swept> =
        parse_graph6(CORPUS7).unwrap().into_iter().filter(eligible).map(Swept::new).collect();
    outcomes.push(criterion_3(&labelled, &corpus, exhaustive_time));

    let all: Vec<&Swept> = labelled.iter().chain(&corpus).collect();
    outcomes.push(criterion_4(&all));
    outcomes.push(criterion_5(&all));
    outcomes.push(criterion_6(&all));
    outcomes.push(criterion_7(&all));
    outcomes.push(criterion_8(&all));

    let mut failed = 0;
    for o in &outcomes {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {} -- {}", o.id, o.title, o.detail);
        failed += !o.pass as usize;
    }
    println!("acceptance: {} passed, {failed} failed", outcomes.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
