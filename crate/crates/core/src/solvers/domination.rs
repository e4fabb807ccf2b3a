use super::{first_subset, Decision, Witness};
use crate::graph::{Graph, VertexSet};

fn closed_neighborhoods(g: &Graph) -> Vec<VertexSet> {
    (0..g.n())
        .map(|v| {
            let mut s = VertexSet::from_iter(g.n(), g.neighbors(v).iter().copied());
            s.insert(v);
            s
        })
        .collect()
}

pub fn is_dominating_set(g: &Graph, d: &[usize]) -> bool {
    let mut covered = vec![false; g.n()];
    for &v in d {
        if v >= g.n() {
            return false;
        }
        covered[v] = true;
        for &u in g.neighbors(v) {
            covered[u] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

pub fn is_vertex_cover(g: &Graph, t: &[usize]) -> bool {
    g.edges().iter().all(|(u, v)| t.contains(u) || t.contains(v))
}

/// Smallest dominating set of size at most `k`, least in size-then-lexicographic order.
pub fn solve_dominating_set(g: &Graph, k: usize) -> Decision {
    let n = g.n();
    let closed = closed_neighborhoods(g);
    let full = VertexSet::full(n);
    for s in 0..=k.min(n) {
        let hit = first_subset(n, s, |idx| {
            let mut acc = VertexSet::new(n);
            for &v in idx {
                acc.union_with(&closed[v]);
            }
            acc == full
        });
        if let Some(d) = hit {
            return Decision::yes(Witness::Vertices(d));
        }
    }
    Decision::no()
}

/// Smallest vertex cover of size at most `k`, least in size-then-lexicographic order.
pub fn solve_vertex_cover(g: &Graph, k: usize) -> Decision {
    let n = g.n();
    let edges = g.edges();
    for s in 0..=k.min(n) {
        let hit = first_subset(n, s, |idx| {
            let t = VertexSet::from_iter(n, idx.iter().copied());
            edges.iter().all(|&(u, v)| t.contains(u) || t.contains(v))
        });
        if let Some(t) = hit {
            return Decision::yes(Witness::Vertices(t));
        }
    }
    Decision::no()
}
