mod common;

use common::*;
use contraction_lab::fpt::*;
use contraction_lab::graph::*;
use contraction_lab::solvers::*;
use proptest::prelude::*;

fn brute_deletion(g: &Graph, t: usize, k: usize) -> bool {
    let tk1 = Graph::empty(t);
    (0..=k.min(g.n())).any(|s| subsets(g.n(), s).iter().any(|d| brute_induced(&g.without(d).0, &tk1).is_none()))
}

fn assert_fpt_agrees(g: &Graph, t: usize, k: usize) {
    let tk1 = Graph::empty(t);
    let d = tk1_contract_fpt(g, t, k).unwrap();
    assert_eq!(d.answer, brute_hfc(g, &tk1, k), "t={t} k={k} on {:?}", g.edges());
    if let Some(f) = d.edges() {
        assert!(check_hfc_witness(g, &tk1, k, f), "bad witness {f:?} on {:?}", g.edges());
    }
    if !tk1_vertex_deletion(g, t, 2 * k).answer {
        assert!(!d.answer);
    }
}

#[test]
fn vertex_deletion_fixtures() {
    assert!(!tk1_vertex_deletion(&Graph::empty(2), 2, 0).answer);
    let d = tk1_vertex_deletion(&Graph::empty(2), 2, 1);
    assert_eq!(d.vertices(), Some(&[0][..]));
    assert!(tk1_vertex_deletion(&Graph::complete(5), 2, 0).answer);
    let p5 = Graph::path(5);
    for k in 0..=3 {
        assert_eq!(tk1_vertex_deletion(&p5, 3, k).answer, brute_deletion(&p5, 3, k), "k={k}");
    }
}

#[test]
fn vertex_deletion_matches_exhaustive_search() {
    for g in nonisomorphic_up_to(6) {
        for t in 2..=3 {
            for k in 0..=3 {
                let d = tk1_vertex_deletion(&g, t, k);
                assert_eq!(d.answer, brute_deletion(&g, t, k), "t={t} k={k} on {:?}", g.edges());
                if let Some(del) = d.vertices() {
                    assert!(del.len() <= k);
                    assert!(brute_induced(&g.without(del).0, &Graph::empty(t)).is_none());
                }
            }
        }
    }
}

#[test]
fn contraction_fixtures() {
    assert!(tk1_contract_fpt(&Graph::path(3), 2, 1).unwrap().answer);
    for k in 0..=3 {
        assert!(!tk1_contract_fpt(&Graph::empty(2), 2, k).unwrap().answer);
    }
    assert!(!tk1_contract_fpt(&Graph::path(5), 2, 2).unwrap().answer);
    assert!(tk1_contract_fpt(&Graph::path(5), 2, 3).unwrap().answer);
    assert!(tk1_contract_fpt(&Graph::complete(4), 2, 0).unwrap().answer);
    // V_k = {1, 2}; the pendant edge 0-3 runs from T = {3} into V_c ∖ T.
    let paw = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]);
    let d = tk1_contract_fpt(&paw, 2, 1).unwrap();
    assert_eq!(d.edges(), Some(&EdgeSet::new([(0, 3)])));
    assert!(tk1_contract_fpt(&Graph::path(3), 1, 0).is_err());
}

#[test]
fn contraction_ceiling_is_enforced() {
    let err = tk1_contract_fpt_with(&Graph::cycle(6), 2, 2, 3).unwrap_err();
    assert_eq!(err.name(), "SearchBudgetExceeded");
}

#[test]
fn contraction_agrees_with_brute_force_up_to_six_vertices() {
    for g in nonisomorphic_up_to(6) {
        for t in 2..=3 {
            for k in 0..=2 {
                assert_fpt_agrees(&g, t, k);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn contraction_agrees_on_random_seven_vertex_graphs(g in arb_graph(7), t in 2usize..=3, k in 0usize..=2) {
        assert_fpt_agrees(&g, t, k);
    }
}
