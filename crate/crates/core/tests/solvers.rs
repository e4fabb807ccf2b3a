mod common;

use common::*;
use contraction_lab::graph::*;
use contraction_lab::solvers::*;
use contraction_lab::Error;
use proptest::prelude::*;

fn hfc(g: &Graph, h: Pattern, k: usize) -> bool {
    solve_hfc(g, &h, k).unwrap().answer
}

fn two_k2() -> Graph {
    graph(4, &[(0, 1), (2, 3)])
}

#[test]
fn hfc_examples() {
    assert!(!hfc(&Graph::path(3), Pattern::IndepSet(2), 0));
    let d = solve_hfc(&Graph::path(3), &Pattern::IndepSet(2), 1).unwrap();
    assert!(d.answer);
    assert_eq!(d.edges().unwrap().as_slice(), &[(0, 1)]);
    assert!(hfc(&Graph::cycle(4), Pattern::Complete(3), 0));
    assert!(!hfc(&two_k2(), Pattern::Matching(2), 0));
    assert!(hfc(&two_k2(), Pattern::Matching(2), 1));
    assert!(brute_hfc(&two_k2(), &build_pattern(&Pattern::Matching(2)).unwrap(), 1));
    assert!(!brute_hfc(&two_k2(), &build_pattern(&Pattern::Matching(2)).unwrap(), 0));
}

#[test]
fn hfc_guard_refuses_large_searches() {
    let g = Graph::complete(12);
    let opts = HfcOptions { ceiling: 1000, ..Default::default() };
    let err = solve_hfc_with(&g, &Pattern::Path(4), 3, &opts).unwrap_err();
    assert!(matches!(err, Error::SearchBudgetExceeded { .. }));
    let opts = HfcOptions { ceiling: 5, engine: Engine::Branch, ..Default::default() };
    let err = solve_hfc_with(&Graph::path(9), &Pattern::IndepSet(2), 6, &opts).unwrap_err();
    assert!(matches!(err, Error::SearchBudgetExceeded { .. }));
    assert!(matches!(solve_hfc(&g, &Pattern::Complete(0), 1), Err(Error::BadParameter(_))));
}

fn small_patterns() -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=4).flat_map(nonisomorphic).collect();
    for p in [Pattern::Path(5), Pattern::Cycle(5), Pattern::Bistar(2, 1), Pattern::Star(4), Pattern::Matching(2)] {
        out.push(build_pattern(&p).unwrap());
    }
    out
}

#[test]
fn hfc_engines_agree_with_brute_force() {
    let patterns = small_patterns();
    let hosts = nonisomorphic_up_to(5);
    let forests = HfcOptions::default();
    let all_sets = HfcOptions { forests_only: false, ..Default::default() };
    let branch = HfcOptions::with_engine(Engine::Branch);
    for g in &hosts {
        for h in &patterns {
            for k in 0..=2 {
                let expected = brute_hfc(g, h, k);
                for opts in [&forests, &all_sets, &branch] {
                    let d = solve_hfc_graph(g, h, k, opts).unwrap();
                    assert_eq!(d.answer, expected, "g={:?} h={:?} k={k} {:?}", g.edges(), h.edges(), opts.engine);
                    if let Some(f) = d.edges() {
                        assert!(check_hfc_witness(g, h, k, f));
                    }
                }
            }
        }
    }
}

#[test]
fn forest_restriction_is_harmless_on_six_vertices() {
    let patterns = small_patterns();
    for g in nonisomorphic(6) {
        for h in &patterns {
            for k in 0..=2 {
                let forest = solve_hfc_graph(&g, h, k, &HfcOptions::default()).unwrap();
                let full = solve_hfc_graph(&g, h, k, &HfcOptions { forests_only: false, ..Default::default() }).unwrap();
                let branch = solve_hfc_graph(&g, h, k, &HfcOptions::with_engine(Engine::Branch)).unwrap();
                assert_eq!(forest.answer, full.answer);
                assert_eq!(forest.answer, branch.answer);
                if forest.answer {
                    assert_eq!(forest.edges().unwrap().len(), branch.edges().unwrap().len());
                }
            }
        }
    }
}

#[test]
fn enumeration_witness_is_first_in_order() {
    // Smallest size first, then the lexicographically least edge list.
    for g in nonisomorphic_up_to(5) {
        let h = build_pattern(&Pattern::Path(3)).unwrap();
        for k in 0..=2 {
            let d = solve_hfc_graph(&g, &h, k, &HfcOptions { forests_only: false, ..Default::default() }).unwrap();
            let first = edge_sets(&g, k)
                .into_iter()
                .find(|f| brute_induced(&brute_contract(&g, f.as_slice()), &h).is_none());
            assert_eq!(d.edges().cloned(), first);
        }
    }
}

#[test]
fn hfc_is_monotone_in_budget() {
    let h = build_pattern(&Pattern::Path(4)).unwrap();
    for g in nonisomorphic(6) {
        let answers: Vec<bool> = (0..=3)
            .map(|k| solve_hfc_graph(&g, &h, k, &HfcOptions::default()).unwrap().answer)
            .collect();
        assert!(answers.windows(2).all(|w| !w[0] || w[1]));
    }
}

#[test]
fn domination_examples() {
    assert!(!solve_dominating_set(&Graph::path(4), 1).answer);
    assert!(solve_dominating_set(&Graph::path(4), 2).answer);
    let star = build_pattern(&Pattern::Star(5)).unwrap();
    assert_eq!(solve_dominating_set(&star, 1).vertices(), Some(&[0][..]));
    assert!(solve_dominating_set(&Graph::cycle(6), 2).answer);
    assert!(!solve_vertex_cover(&Graph::complete(3), 1).answer);
    assert!(solve_vertex_cover(&Graph::complete(3), 2).answer);
    assert!(solve_vertex_cover(&Graph::empty(4), 0).answer);
    assert!(solve_vertex_cover(&Graph::path(5), 2).answer);
    assert!(!solve_vertex_cover(&Graph::path(5), 1).answer);
}

#[test]
fn domination_matches_oracles() {
    for g in nonisomorphic_up_to(6) {
        let ds = brute_min_ds(&g);
        let vc = brute_min_vc(&g);
        for k in 0..=g.n() {
            let d = solve_dominating_set(&g, k);
            assert_eq!(d.answer, k >= ds);
            if let Some(w) = d.vertices() {
                assert!(is_dominating_set(&g, w));
                assert_eq!(w.len(), ds);
            }
            let c = solve_vertex_cover(&g, k);
            assert_eq!(c.answer, k >= vc);
            if let Some(w) = c.vertices() {
                assert!(is_vertex_cover(&g, w));
                assert_eq!(w.len(), vc);
            }
        }
    }
}

#[test]
fn domatic_examples() {
    assert!(solve_domatic(&Graph::complete(3), 3).unwrap().answer);
    let star = build_pattern(&Pattern::Star(3)).unwrap();
    assert!(solve_domatic(&star, 2).unwrap().answer);
    assert!(!solve_domatic(&star, 3).unwrap().answer);
    let d = solve_domatic(&Graph::path(5), 2).unwrap();
    assert!(d.answer);
    assert!(is_domatic_partition(&Graph::path(5), d.sets().unwrap(), 2));
    assert!(is_domatic_partition(&Graph::path(5), &[vec![1, 3], vec![0, 2, 4]], 2));
    assert!(matches!(solve_domatic(&star, 0), Err(Error::BadParameter(_))));
}

#[test]
fn domatic_matches_oracle() {
    for g in nonisomorphic_up_to(6) {
        let best = brute_domatic(&g);
        for d in 1..=g.n() + 1 {
            let r = solve_domatic(&g, d).unwrap();
            assert_eq!(r.answer, d <= best, "g={:?} d={d}", g.edges());
            if r.answer {
                let sets = r.sets().unwrap();
                assert_eq!(sets.len(), d);
                assert!(is_domatic_partition(&g, sets, d));
                assert_eq!(sets.iter().map(Vec::len).sum::<usize>(), g.n());
            }
        }
    }
}

#[test]
fn domatic_of_disconnected_graph_is_componentwise_minimum() {
    let g = Graph::complete(4).disjoint_union(&Graph::path(3));
    assert!(solve_domatic(&g, 2).unwrap().answer);
    assert!(!solve_domatic(&g, 3).unwrap().answer);
}

#[test]
fn star_certificate_examples() {
    let k132 = build_k1ab(3, 2).unwrap();
    assert!(star_no_certificate(&k132, 3, 1).unwrap().is_some());
    assert!(!solve_hfc(&k132, &Pattern::Star(3), 1).unwrap().answer);
    assert!(star_no_certificate(&Graph::complete(2), 3, 5).unwrap().is_none());
    assert!(star_no_certificate(&k132, 3, 2).unwrap().is_none());
    assert!(brute_induced(&k132, &build_k1ab(3, 3).unwrap()).is_none());
    assert!(star_no_certificate(&k132, 1, 0).is_err());
}

#[test]
fn bistar_certificate_examples() {
    let g = build_k1abc(3, 2, 1).unwrap();
    assert_eq!(g.n(), 11);
    let w = bistar_no_certificate(&g, 3, 1, 1).unwrap();
    assert_eq!(w.map(|w| w.len()), Some(11));
    assert!(!solve_hfc(&g, &Pattern::Bistar(3, 1), 1).unwrap().answer);

    let mut bent = g.clone();
    let pendant = g.n() - 1;
    bent.add_edge(pendant, 0);
    assert!(bistar_no_certificate(&bent, 3, 1, 1).unwrap().is_none());

    for host in [build_k1ab(3, 2).unwrap(), build_k1ab(4, 3).unwrap(), Graph::cycle(7)] {
        for k in 0..=2 {
            assert_eq!(
                bistar_no_certificate(&host, 3, 0, k).unwrap(),
                star_no_certificate(&host, 3, k).unwrap()
            );
        }
    }
    assert!(bistar_no_certificate(&g, 1, 2, 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certificates_are_sound(g in arb_graph(10), t in 2usize..4, t2 in 0usize..2, k in 0usize..2) {
        if star_no_certificate(&g, t, k).unwrap().is_some() {
            prop_assert!(!solve_hfc_with(&g, &Pattern::Star(t), k, &HfcOptions::with_engine(Engine::Branch)).unwrap().answer);
        }
        if t >= t2 && bistar_no_certificate(&g, t, t2, k).unwrap().is_some() {
            prop_assert!(!solve_hfc_with(&g, &Pattern::Bistar(t, t2), k, &HfcOptions::with_engine(Engine::Branch)).unwrap().answer);
        }
    }
}
