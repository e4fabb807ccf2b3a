mod common;

use common::*;
use contraction_lab::graph::*;
use contraction_lab::harness::graph6::{emit_graph6, parse_graph6};
use contraction_lab::Error;
use proptest::prelude::*;

fn paw() -> Graph {
    build_pattern(&Pattern::Paw).unwrap()
}

#[test]
fn contract_small_examples() {
    let (g, map) = contract_edges(&Graph::path(3), &EdgeSet::new([(0, 1), (1, 2)])).unwrap();
    assert_eq!(g, Graph::empty(1));
    assert_eq!(map, vec![0, 0, 0]);

    let (g, _) = contract_edges(&Graph::cycle(4), &EdgeSet::new([(0, 1)])).unwrap();
    assert_eq!(g, Graph::complete(3));

    let (g, map) = contract_edges(&paw(), &EdgeSet::new([(0, 3)])).unwrap();
    assert_eq!(g, brute_contract(&paw(), &[(0, 3)]));
    assert!(brute_isomorphic(&g, &Graph::complete(3)));
    assert_eq!(map, vec![0, 1, 2, 0]);
}

#[test]
fn contract_rejects_non_edges() {
    let err = contract_edges(&Graph::path(4), &EdgeSet::new([(0, 2)])).unwrap_err();
    assert_eq!(err, Error::NonEdge(0, 2));
    assert!(partition_from_edges(&Graph::path(4), &EdgeSet::new([(1, 3)])).is_err());
}

#[test]
fn partition_examples() {
    let p = partition_from_edges(&Graph::path(4), &EdgeSet::new([(0, 1)])).unwrap();
    assert_eq!(p.blocks(), &[vec![0, 1], vec![2], vec![3]]);
    assert_eq!(p.cost(), 1);

    let g = Graph::cycle(5);
    let p = partition_from_edges(&g, &EdgeSet::default()).unwrap();
    assert_eq!(p, VertexPartition::singletons(5));
    assert_eq!(p.cost(), 0);

    let k3 = Graph::complete(3);
    let p = partition_from_edges(&k3, &EdgeSet::new(k3.edges())).unwrap();
    assert_eq!(p.len(), 1);
    assert_eq!(p.cost(), 2);
}

#[test]
fn quotient_examples() {
    let c4 = Graph::cycle(4);
    let p = VertexPartition::new(&c4, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
    assert_eq!(quotient(&c4, &p).unwrap(), Graph::complete(3));
    assert_eq!(quotient(&c4, &VertexPartition::singletons(4)).unwrap(), c4);

    assert!(matches!(
        VertexPartition::new(&c4, vec![vec![0, 2], vec![1], vec![3]]),
        Err(Error::InvalidPartition(_))
    ));
    assert!(matches!(
        VertexPartition::new(&c4, vec![vec![0, 1], vec![2]]),
        Err(Error::InvalidPartition(_))
    ));
    assert!(matches!(
        quotient(&c4, &VertexPartition::singletons(3)),
        Err(Error::InvalidPartition(_))
    ));
}

#[test]
fn quotient_matches_contraction_exhaustively() {
    let mut checked = 0;
    for n in 1..=5 {
        for g in all_graphs(n) {
            for f in edge_sets(&g, 2) {
                let (c, map) = contract_edges(&g, &f).unwrap();
                let p = partition_from_edges(&g, &f).unwrap();
                let q = quotient(&g, &p).unwrap();
                assert!(is_isomorphic(&q, &c), "g={:?} f={:?}", g.edges(), f);
                assert_eq!(c, brute_contract(&g, f.as_slice()));
                assert_eq!(c.n(), n - p.cost());
                assert!(p.cost() <= f.len());
                assert_eq!(map.iter().max().map_or(0, |m| m + 1), c.n());
                checked += 1;
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn spanning_edges_realize_the_partition() {
    for g in all_graphs(5) {
        for f in edge_sets(&g, 2) {
            let p = partition_from_edges(&g, &f).unwrap();
            let s = p.spanning_edges(&g);
            assert_eq!(s.len(), p.cost());
            assert_eq!(partition_from_edges(&g, &s).unwrap(), p);
        }
    }
}

#[test]
fn induced_examples() {
    assert_eq!(contains_induced(&Graph::cycle(5), &Pattern::Claw).unwrap(), None);
    assert_eq!(contains_induced(&Graph::path(4), &Pattern::IndepSet(2)).unwrap(), Some(vec![0, 2]));
    let endpoints = contains_induced_graph(&Graph::path(4), &Graph::empty(2)).unwrap();
    assert!(!Graph::path(4).has_edge(endpoints[0], endpoints[1]));
    let star = build_pattern(&Pattern::Star(3)).unwrap();
    assert_eq!(contains_induced(&star, &Pattern::Path(4)).unwrap(), None);
}

#[test]
fn induced_agrees_with_subset_scan() {
    let mut patterns = Vec::new();
    for n in 1..=4 {
        patterns.extend(all_graphs(n));
    }
    patterns.push(paw());
    patterns.push(Graph::cycle(5));
    patterns.push(build_pattern(&Pattern::Bistar(2, 1)).unwrap());
    let hosts: Vec<Graph> = (1..=6).flat_map(|n| all_graphs(n).step_by(n * n + 1)).collect();
    for g in &hosts {
        for h in &patterns {
            assert_eq!(contains_induced_graph(g, h), brute_induced(g, h), "g={:?} h={:?}", g.edges(), h.edges());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn induced_matches_oracle_on_random_graphs(g in arb_graph(8), h in arb_graph(5)) {
        prop_assert_eq!(contains_induced_graph(&g, &h), brute_induced(&g, &h));
    }

    #[test]
    fn canonical_form_decides_isomorphism(a in arb_graph(6), b in arb_graph(6)) {
        prop_assert_eq!(canonical_form(&a) == canonical_form(&b), brute_isomorphic(&a, &b));
        prop_assert_eq!(is_isomorphic(&a, &b), brute_isomorphic(&a, &b));
    }

    #[test]
    fn canonical_form_is_relabelling_invariant(g in arb_graph(8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(20)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}

fn brute_separator(h: &Graph) -> Vec<Vec<usize>> {
    let n = h.n();
    let mut out = Vec::new();
    for s in 1..=2 {
        for k in subsets(n, s) {
            if s == 2 && !h.has_edge(k[0], k[1]) {
                continue;
            }
            let universal = k.iter().all(|&x| (0..n).filter(|v| !k.contains(v)).all(|v| h.has_edge(x, v)));
            let rest: Vec<usize> = (0..n).filter(|v| !k.contains(v)).collect();
            if universal && h.induced(&rest).components().len() >= 2 {
                out.push(k);
            }
        }
    }
    out
}

#[test]
fn separator_examples() {
    let w = universal_separator(&paw()).unwrap();
    assert_eq!(w.kind, SeparatorKind::UniversalK1);
    assert_eq!(w.vertices, vec![0]);
    let w = universal_separator(&build_pattern(&Pattern::Diamond).unwrap()).unwrap();
    assert_eq!(w.kind, SeparatorKind::UniversalK2);
    assert_eq!(w.vertices, vec![0, 1]);
    assert_eq!(brute_separator(&build_pattern(&Pattern::Diamond).unwrap()), vec![vec![0, 1]]);
    assert_eq!(universal_separator(&Graph::path(4)).unwrap().kind, SeparatorKind::None);
    assert!(brute_separator(&Graph::path(4)).is_empty());
    assert_eq!(universal_separator(&Graph::empty(2)).unwrap_err(), Error::Disconnected);
}

#[test]
fn separator_agrees_with_brute_force_up_to_seven_vertices() {
    let mut connected = 0;
    for n in 1..=7 {
        for h in all_graphs(n) {
            if !h.is_connected() {
                continue;
            }
            connected += 1;
            let found = universal_separator(&h).unwrap();
            let brute = brute_separator(&h);
            assert!(brute.len() <= 1, "more than one universal separator in {:?}", h.edges());
            match brute.first() {
                None => assert_eq!(found.kind, SeparatorKind::None),
                Some(k) => {
                    assert_eq!(&found.vertices, k);
                    let kind = if k.len() == 1 { SeparatorKind::UniversalK1 } else { SeparatorKind::UniversalK2 };
                    assert_eq!(found.kind, kind);
                }
            }
        }
    }
    assert!(connected > 800_000);
}

#[test]
fn pattern_builders() {
    let star = build_pattern(&Pattern::Star(3)).unwrap();
    assert_eq!((star.n(), star.m()), (4, 3));
    assert!(brute_isomorphic(&build_pattern(&Pattern::Bistar(1, 1)).unwrap(), &Graph::path(4)));
    for t in 1..=4 {
        let b = build_pattern(&Pattern::Bistar(t, 0)).unwrap();
        assert!(is_isomorphic(&b, &build_pattern(&Pattern::Star(t + 1)).unwrap()));
    }
    assert_eq!(build_pattern(&Pattern::Star(0)).unwrap(), Graph::empty(1));
    assert_eq!(build_pattern(&Pattern::IndepSet(1)).unwrap(), Graph::empty(1));
    assert_eq!(build_pattern(&Pattern::Matching(1)).unwrap(), Graph::complete(2));
    assert_eq!(build_pattern(&Pattern::Claw).unwrap(), star);
    assert!(matches!(build_pattern(&Pattern::Complete(0)), Err(Error::BadParameter(_))));
    assert!(matches!(build_pattern(&Pattern::Cycle(2)), Err(Error::BadParameter(_))));
    assert!(matches!(build_pattern(&Pattern::Bistar(1, 2)), Err(Error::BadParameter(_))));
    assert!(matches!(build_pattern(&Pattern::Arbitrary(Graph::empty(0))), Err(Error::BadParameter(_))));
}

#[test]
fn pattern_names_round_trip() {
    let all = [
        Pattern::Complete(3),
        Pattern::Path(4),
        Pattern::Cycle(5),
        Pattern::Star(3),
        Pattern::Bistar(3, 1),
        Pattern::IndepSet(2),
        Pattern::Matching(3),
        Pattern::K2PlusK1,
        Pattern::K3PlusK1,
        Pattern::Claw,
        Pattern::Paw,
        Pattern::Diamond,
        Pattern::Arbitrary(Graph::cycle(6)),
    ];
    for p in all {
        assert_eq!(p.to_string().parse::<Pattern>().unwrap(), p);
    }
    assert!("Q7".parse::<Pattern>().is_err());
}

#[test]
fn k1ab_builders() {
    let g = build_k1abc(4, 3, 2).unwrap();
    assert_eq!(g.n(), 22);
    assert_eq!(g.degree(0), 15);
    assert_eq!(build_k1abc(2, 3, 0).unwrap(), build_k1ab(2, 3).unwrap());
    let p3 = build_k1ab(1, 1).unwrap();
    assert_eq!(p3, build_pattern(&Pattern::Star(2)).unwrap());
    assert!(build_k1ab(0, 2).is_err());
    assert!(build_k1abc(1, 0, 1).is_err());
}

#[test]
fn canopy_3_3_matches_the_level_formula() {
    let c = build_canopy(3, 3).unwrap();
    let counts: Vec<usize> = c.cliques.iter().skip(1).map(Vec::len).collect();
    assert_eq!(counts, vec![1, 3, 12]);
    assert_eq!(c.levels[3].len(), 48);
    assert_eq!(c.graph.n(), 65);
    assert_eq!(canopy_size(3, 3), 65);
    let tiny = build_canopy(5, 1).unwrap();
    assert_eq!(tiny.graph, Graph::complete(3));
}

#[test]
fn canopy_structure() {
    for t in 1..=3 {
        for k in 1..=4 {
            let c = build_canopy(t, k).unwrap();
            let g = &c.graph;
            assert!(g.is_connected());
            assert_eq!(g.n() as u128, canopy_size(t, k));
            assert_eq!(c.levels.len(), k + 1);
            let mut owner = vec![usize::MAX; g.n()];
            for (i, level) in c.cliques.iter().enumerate() {
                let expected = t.pow((i / 2) as u32) * (k + 1).pow((i.saturating_sub(1) / 2) as u32);
                if i > 0 {
                    assert_eq!(level.len(), expected);
                }
                for q in level {
                    for (a, &u) in q.iter().enumerate() {
                        assert_eq!(owner[u], usize::MAX);
                        owner[u] = i;
                        for &v in &q[a + 1..] {
                            assert!(g.has_edge(u, v));
                        }
                    }
                }
            }
            assert!(owner.iter().all(|&o| o != usize::MAX));
            for i in (1..k).step_by(2) {
                for (j, q) in c.cliques[i].iter().enumerate() {
                    let children = &c.cliques[i + 1][j * t..(j + 1) * t];
                    for child in children {
                        for (a, &u) in q.iter().enumerate() {
                            for (b, &v) in child.iter().enumerate() {
                                assert_eq!(g.has_edge(u, v), a == b);
                            }
                        }
                    }
                    let linked = c.cliques[i + 1]
                        .iter()
                        .filter(|ch| ch.iter().any(|&v| q.iter().any(|&u| g.has_edge(u, v))))
                        .count();
                    assert_eq!(linked, t);
                }
            }
        }
    }
}

#[test]
fn graph6_fixtures() {
    assert_eq!(emit_graph6(&Graph::empty(1)), "@");
    assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
    assert_eq!(emit_graph6(&Graph::complete(3)), "Bw");
    assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
    assert_eq!(emit_graph6(&Graph::empty(0)), "?");
    let big = build_canopy(3, 3).unwrap().graph;
    let code = emit_graph6(&big);
    assert!(code.starts_with('~'));
    assert_eq!(parse_graph6(&code).unwrap(), big);
    for bad in ["", "Bx", "B", "Bww", "C\u{7f}"] {
        assert!(matches!(parse_graph6(bad), Err(Error::MalformedGraph6(_))), "{bad:?}");
    }
}
