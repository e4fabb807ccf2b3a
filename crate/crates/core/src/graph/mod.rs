//! Simple undirected graphs on dense indices, contraction, and induced-subgraph search.

mod bitset;
mod builders;
mod canon;
mod dense;
mod induced;
mod partition;
mod pattern;
mod separator;

pub use bitset::VertexSet;
pub use builders::{build_canopy, build_k1ab, build_k1abc, canopy_size, Canopy};
pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use dense::DenseGraph;
pub use induced::{
    contains_induced, contains_induced_graph, find_induced, for_each_induced, is_h_free,
    PatternMatcher, SearchScope,
};
pub use partition::{contract_edges, partition_from_edges, quotient, EdgeSet, VertexPartition};
pub use pattern::{build_pattern, Pattern};
pub use separator::{universal_separator, SeparatorKind, SeparatorWitness};

use crate::error::{Error, Result};

pub type Edge = (usize, usize);

pub(crate) fn norm(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph. Neighbor lists are kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::BadParameter(format!("self-loop at {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::BadParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect(),
        }
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Inserts `uv`; a no-op when the edge is already present.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.n() && v < self.n(), "edge ({u}, {v}) out of range");
        if let Err(i) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(i, v);
            let j = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(j, u);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if let Ok(i) = self.adj[u].binary_search(&v) {
            self.adj[u].remove(i);
            let j = self.adj[v].binary_search(&u).unwrap();
            self.adj[v].remove(j);
        }
    }

    /// Subgraph induced by `vs`; vertex `i` of the result is `vs[i]`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(vs.len());
        for (i, &v) in vs.iter().enumerate() {
            g.adj[i] = self.adj[v]
                .iter()
                .filter(|&&u| pos[u] != usize::MAX)
                .map(|&u| pos[u])
                .collect();
            g.adj[i].sort_unstable();
        }
        g
    }

    /// Removes `vs`, returning the rest together with the surviving original indices.
    pub fn without(&self, vs: &[usize]) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n()).filter(|v| !vs.contains(v)).collect();
        (self.induced(&kept), kept)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = self.clone();
        g.adj
            .extend(other.adj.iter().map(|l| l.iter().map(|&v| v + off).collect()));
        g
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &u in &self.adj[comp[i]] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `vs` induces a connected subgraph. The empty set does not.
    pub fn is_connected_set(&self, vs: &[usize]) -> bool {
        !vs.is_empty() && self.induced(vs).is_connected()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected()
    }

    pub fn dense(&self) -> DenseGraph {
        DenseGraph::from_graph(self)
    }
}
