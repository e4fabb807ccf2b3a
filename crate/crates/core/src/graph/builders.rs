use super::Graph;
use crate::error::{Error, Result};

fn clique(g: &mut Graph, size: usize) -> Vec<usize> {
    let vs: Vec<usize> = (0..size).map(|_| g.add_vertex()).collect();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            g.add_edge(u, v);
        }
    }
    vs
}

/// K_{1,a,b}: a root (vertex 0) adjacent to every vertex of a+1 disjoint copies of K_b.
pub fn build_k1ab(a: usize, b: usize) -> Result<Graph> {
    build_k1abc(a, b, 0)
}

/// K_{1,a,b,c}: K_{1,a,b} with c pendant vertices on each vertex of the first
/// clique. The pendants come last, grouped by their clique vertex.
pub fn build_k1abc(a: usize, b: usize, c: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::BadParameter(format!("K1,a,b needs a, b >= 1 (got a={a}, b={b})")));
    }
    let mut g = Graph::empty(1);
    let mut first = Vec::new();
    for i in 0..=a {
        let q = clique(&mut g, b);
        for &v in &q {
            g.add_edge(0, v);
        }
        if i == 0 {
            first = q;
        }
    }
    for &v in &first {
        for _ in 0..c {
            let p = g.add_vertex();
            g.add_edge(v, p);
        }
    }
    Ok(g)
}

/// A (t,k)-canopy with its level structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canopy {
    pub graph: Graph,
    /// `levels[i]` lists the vertices of level i; level 0 is the root alone.
    pub levels: Vec<Vec<usize>>,
    /// `cliques[i]` lists the cliques of level i, in creation order.
    pub cliques: Vec<Vec<Vec<usize>>>,
}

impl Canopy {
    pub fn root(&self) -> usize {
        0
    }
}

/// Builds the (t,k)-canopy rooted at vertex 0.
///
/// Level 1 is one (k+1)-clique joined to the root. Each clique on an odd level
/// gets t child cliques, each attached by the perfect matching that pairs the
/// j-th vertices. Each vertex on an even level is joined to its own child clique.
pub fn build_canopy(t: usize, k: usize) -> Result<Canopy> {
    if t < 1 || k < 1 {
        return Err(Error::BadParameter(format!("canopy needs t, k >= 1 (got t={t}, k={k})")));
    }
    let mut g = Graph::empty(1);
    let first = clique(&mut g, k + 1);
    for &v in &first {
        g.add_edge(0, v);
    }
    let mut cliques = vec![vec![vec![0]], vec![first]];
    for i in 1..k {
        let mut next = Vec::new();
        for parent in &cliques[i] {
            if i % 2 == 1 {
                for _ in 0..t {
                    let child = clique(&mut g, k + 1);
                    for (&p, &c) in parent.iter().zip(&child) {
                        g.add_edge(p, c);
                    }
                    next.push(child);
                }
            } else {
                for &p in parent {
                    let child = clique(&mut g, k + 1);
                    for &c in &child {
                        g.add_edge(p, c);
                    }
                    next.push(child);
                }
            }
        }
        cliques.push(next);
    }
    let levels = cliques.iter().map(|l| l.concat()).collect();
    Ok(Canopy { graph: g, levels, cliques })
}

/// Vertex count of the (t,k)-canopy without building it.
pub fn canopy_size(t: usize, k: usize) -> u128 {
    let (t, k) = (t as u128, k as u128);
    let mut total: u128 = 1;
    for i in 1..=k {
        let count = t.saturating_pow((i / 2) as u32).saturating_mul((k + 1).saturating_pow(((i - 1) / 2) as u32));
        total = total.saturating_add(count.saturating_mul(k + 1));
    }
    total
}
