mod common;

use common::{connected_nonbipartite, glued_blocks};
use edgering::audit::audit_graph;
use edgering::facets::{self, FacetDescriptor};
use edgering::lattice::{self, IntegerLattice};
use edgering::{serre, Family};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn criterion_matches_oracle_beyond_exhaustive_range(g in glued_blocks()) {
        let criterion = serre::satisfies_r1(&g).unwrap();
        let oracle = lattice::oracle_r1(&g).unwrap();
        prop_assert_eq!(&criterion, &oracle, "graph:\n{}", g);
    }

    #[test]
    fn every_invariant_holds(g in prop_oneof![connected_nonbipartite(4, 9, 2), glued_blocks()]) {
        let audit = audit_graph(&g).unwrap();
        prop_assert!(audit.passed(), "{:?} on\n{}", audit.failures, g);
    }

    #[test]
    fn group_lattice_is_even_sum(g in connected_nonbipartite(3, 12, 2)) {
        let group = lattice::group_of_monoid(&g).unwrap();
        prop_assert_eq!(group.rank(), g.order());
        prop_assert_eq!(group.determinant(), Some(2));
        prop_assert!(lattice::verify_tree_cycle_basis(&g).unwrap());
    }

    // Removing a regular vertex: condition two holds exactly when the rest
    // stays connected; same for fundamental sets and what they leave behind.
    #[test]
    fn condition_two_pointwise(g in glued_blocks()) {
        for f in facets::facets(&g).unwrap() {
            let expected = match f {
                FacetDescriptor::RegularVertex(i) => g.is_connected_within(g.vertices().without(i)),
                FacetDescriptor::Fundamental(t) => {
                    let rest = g.vertices().difference(t.union(g.neighborhood(t)));
                    rest.is_empty() || g.is_connected_within(rest)
                }
            };
            prop_assert_eq!(lattice::check_condition_two(&g, f).unwrap(), expected, "{}", f);
        }
    }
}

#[test]
fn bridge_family_audits() {
    for k in 1..=6 {
        let g = Family::Bridge(k).generate().unwrap();
        let audit = audit_graph(&g).unwrap();
        assert!(audit.passed(), "bridge({k}): {:?}", audit.failures);
        assert_eq!(audit.r1, k >= 2, "bridge({k})");
        assert!(!audit.normal);
    }
}

#[test]
fn bridge_one_lattices_differ_by_parity_vector() {
    // after removing vertex 7 the triangles split; a vector with odd sum on
    // each triangle lies in the cut lattice but not in the facet lattice
    let g = Family::Bridge(1).generate().unwrap();
    let form = facets::support_form(&g, FacetDescriptor::RegularVertex(6)).unwrap();
    let cut = lattice::group_of_monoid(&g)
        .unwrap()
        .intersection(&IntegerLattice::kernel_of_form(form.coeffs()).unwrap())
        .unwrap();
    let x = [1, 0, 0, 1, 0, 0, 0];
    assert!(cut.contains(&x).unwrap());
    let on_facet: Vec<_> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| u != 6 && v != 6)
        .map(|&e| lattice::edge_vector(e, 7).unwrap())
        .collect();
    let spanned = IntegerLattice::span(7, &on_facet).unwrap();
    assert!(!spanned.contains(&x).unwrap());
    assert!(!lattice::check_condition_two(&g, FacetDescriptor::RegularVertex(6)).unwrap());
}
