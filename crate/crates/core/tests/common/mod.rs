#![allow(dead_code)]

use contraction_lab::graph::{EdgeSet, Graph, Pattern};
use contraction_lab::reductions::{classify_pattern, Classification};
use proptest::prelude::*;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

/// Every labelled graph on `n` vertices, by edge mask over the lexicographic pair order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    permutations(n).iter().any(|p| {
        (0..n).all(|u| (u + 1..n).all(|v| a.has_edge(u, v) == b.has_edge(p[u], p[v])))
    })
}

/// Every `s`-subset of `0..n`, in lexicographic order.
pub fn subsets(n: usize, s: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, s, &mut Vec::new(), &mut out);
    out
}

/// Least vertex set inducing `h`, by scanning every subset in lexicographic order.
pub fn brute_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    subsets(g.n(), h.n())
        .into_iter()
        .find(|s| brute_isomorphic(&g.induced(s), h))
}

/// Quotient computed from scratch: classes by union-find, relabelled by least member.
pub fn brute_contract(g: &Graph, f: &[(usize, usize)]) -> Graph {
    let n = g.n();
    let mut class: Vec<usize> = (0..n).collect();
    for _ in 0..n {
        for &(u, v) in f {
            let m = class[u].min(class[v]);
            class[u] = m;
            class[v] = m;
        }
    }
    for _ in 0..n {
        for v in 0..n {
            class[v] = class[class[v]];
        }
    }
    let mut reps: Vec<usize> = class.clone();
    reps.sort_unstable();
    reps.dedup();
    let idx = |v: usize| reps.binary_search(&class[v]).unwrap();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if class[u] != class[v] {
            edges.push((idx(u), idx(v)));
        }
    }
    Graph::from_edges(reps.len(), &edges).unwrap()
}

/// Every edge set of size at most `k` (no cycle restriction).
pub fn edge_sets(g: &Graph, k: usize) -> Vec<EdgeSet> {
    let edges = g.edges();
    (0..=k.min(edges.len()))
        .flat_map(|s| subsets(edges.len(), s))
        .map(|idx| EdgeSet::new(idx.iter().map(|&i| edges[i])))
        .collect()
}

/// Brute-force H-free contraction: any edge set of size at most `k` whose
/// contraction leaves no induced `h`.
pub fn brute_hfc(g: &Graph, h: &Graph, k: usize) -> bool {
    edge_sets(g, k)
        .iter()
        .any(|f| brute_induced(&brute_contract(g, f.as_slice()), h).is_none())
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// One representative per isomorphism class on `n` vertices.
pub fn nonisomorphic(n: usize) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    all_graphs(n)
        .filter(|g| seen.insert(contraction_lab::graph::canonical_form(g)))
        .collect()
}

pub fn nonisomorphic_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(nonisomorphic).collect()
}

/// Smallest dominating set size, by subset scan.
pub fn brute_min_ds(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&s| subsets(g.n(), s).iter().any(|d| {
            (0..g.n()).all(|v| d.contains(&v) || g.neighbors(v).iter().any(|u| d.contains(u)))
        }))
        .unwrap()
}

/// Smallest vertex cover size, by subset scan.
pub fn brute_min_vc(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&s| subsets(g.n(), s).iter().any(|t| g.edges().iter().all(|(u, v)| t.contains(u) || t.contains(v))))
        .unwrap()
}

/// Domatic number, by trying every coloring.
pub fn brute_domatic(g: &Graph) -> usize {
    let n = g.n();
    (1..=n)
        .rev()
        .find(|&d| {
            let total = d.pow(n as u32);
            (0..total).any(|code| {
                let mut c = code;
                let color: Vec<usize> = (0..n).map(|_| { let x = c % d; c /= d; x }).collect();
                (0..n).all(|v| {
                    let mut seen = vec![false; d];
                    seen[color[v]] = true;
                    for &u in g.neighbors(v) {
                        seen[color[u]] = true;
                    }
                    seen.into_iter().all(|s| s)
                })
            })
        })
        .unwrap_or(0)
}

/// Size-1 and size-2 universal sets whose removal disconnects `h`.
pub fn brute_separators(h: &Graph) -> Vec<Vec<usize>> {
    let n = h.n();
    let mut out = Vec::new();
    for s in (1..=2).flat_map(|size| subsets(n, size)) {
        let universal = s.iter().all(|&a| (0..n).all(|x| x == a || h.has_edge(a, x)));
        let rest: Vec<usize> = (0..n).filter(|x| !s.contains(x)).collect();
        if universal && !rest.is_empty() && !h.is_connected_set(&rest) {
            out.push(s);
        }
    }
    out
}

pub fn component_graphs(h: &Graph, drop: &[usize]) -> Vec<Graph> {
    let (rest, _) = h.without(drop);
    rest.components().iter().map(|c| rest.induced(c)).collect()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Recomputes every branch predicate independently and checks that exactly
/// one holds, that classify_pattern picks it, and that its data re-verifies.
pub fn check_classification(h: &Graph) -> Result<&'static str, String> {
    let n = h.n();
    let complete = h.is_complete();
    let connected = h.is_connected();
    let comps = h.components();
    let seps = brute_separators(h);
    ensure!(seps.len() <= 1 || !connected, "several separators in {:?}", h.edges());
    let star = n >= 4 && h.m() == n - 1 && (0..n).any(|v| h.degree(v) == n - 1);
    let parts = seps.first().map(|s| component_graphs(h, s)).unwrap_or_default();
    let all_iso = parts.iter().all(|p| brute_isomorphic(p, &parts[0]));
    let matching = !connected && comps.iter().all(|c| c.len() == 2);
    let predicates = [
        ("PolyTrivial", n <= 2 && complete),
        ("CompleteKt", n >= 3 && complete),
        ("SmallBase", (n <= 3 && !complete) || (matching && comps.len() == 2)),
        ("DisconnectedBigComponent", n >= 4 && !connected && comps.iter().any(|c| c.len() >= 3)),
        (
            "IsolatedVertexPad",
            n >= 4 && !connected && comps.iter().all(|c| c.len() <= 2) && comps.iter().any(|c| c.len() == 1),
        ),
        ("MatchingChain", matching && comps.len() >= 3),
        ("GeneralVC", n >= 4 && connected && !complete && seps.is_empty()),
        ("StarBranch", star),
        ("UniSepHetero", n >= 4 && connected && !complete && !star && !seps.is_empty() && !all_iso),
        ("UniSepHomog", n >= 4 && connected && !complete && !star && !seps.is_empty() && all_iso),
    ];
    let hits: Vec<&'static str> = predicates.iter().filter(|p| p.1).map(|p| p.0).collect();
    ensure!(hits.len() == 1, "{:?} matched {hits:?}", h.edges());
    let class = classify_pattern(&Pattern::Arbitrary(h.clone())).map_err(|e| e.to_string())?;
    ensure!(class.name() == hits[0], "{:?}: classified {} but predicates say {}", h.edges(), class.name(), hits[0]);
    match class {
        Classification::GeneralVc { w } => ensure!(!h.is_universal(w), "w = {w} is universal"),
        Classification::UniSepHetero { k, j, c, h_prime } => {
            ensure!(vec![k.clone()] == seps, "separator {k:?} vs {seps:?}");
            let min = parts.iter().map(Graph::n).min().unwrap();
            ensure!(j.n() == min, "J is not a smallest component");
            ensure!(c == parts.iter().filter(|p| brute_isomorphic(p, &j)).count(), "wrong count c");
            ensure!(h_prime.n() == n - c * j.n(), "H' has the wrong order");
            let kept = component_graphs(&h_prime, &(0..k.len()).collect::<Vec<_>>());
            ensure!(kept.len() == parts.len() - c, "H' keeps the wrong components");
            ensure!(kept.iter().all(|p| !brute_isomorphic(p, &j)), "H' keeps a copy of J");
        }
        Classification::UniSepHomog { k, j, t, enforcer } => {
            ensure!(vec![k] == seps, "separator mismatch");
            ensure!(t == parts.len(), "wrong t");
            ensure!(brute_isomorphic(&j, &parts[0]), "J is not a component");
            let back = brute_contract(&enforcer.graph, &[(enforcer.v, enforcer.w)]);
            ensure!(brute_isomorphic(&back, h), "enforcer does not contract back to H");
        }
        Classification::IsolatedVertexPad { v, rest } => {
            ensure!(h.degree(v) == 0, "v = {v} is not isolated");
            ensure!(brute_isomorphic(&rest, &h.without(&[v]).0), "rest is not H - v");
        }
        Classification::DisconnectedBigComponent { component, h_prime } => {
            ensure!(comps.contains(&component) && component.len() >= 3, "bad component {component:?}");
            ensure!(brute_isomorphic(&h_prime, &h.induced(&component)), "H' is not the component");
        }
        _ => {}
    }
    Ok(hits[0])
}
