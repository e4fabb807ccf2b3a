use std::collections::BTreeSet;

use super::{norm, Edge, Graph};
use crate::error::{Error, Result};

/// A set of unordered vertex pairs, stored normalized and sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    edges: Vec<Edge>,
}

impl EdgeSet {
    pub fn new<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let set: BTreeSet<Edge> = edges.into_iter().map(|(u, v)| norm(u, v)).collect();
        EdgeSet { edges: set.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&norm(u, v)).is_ok()
    }

    pub fn check_in(&self, g: &Graph) -> Result<()> {
        match self.edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            Some(&(u, v)) => Err(Error::NonEdge(u, v)),
            None => Ok(()),
        }
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet::new(iter)
    }
}

/// Partition of the vertices of a host graph into connected blocks.
///
/// Blocks are sorted internally and ordered by their least vertex, so equal
/// partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = g.n();
        let mut seen = vec![false; n];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
                seen[v] = true;
            }
            if !g.is_connected_set(b) {
                return Err(Error::InvalidPartition(format!("block {b:?} is not connected")));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(VertexPartition { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition { n, blocks: (0..n).map(|v| vec![v]).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Minimum number of contractions realizing the partition.
    pub fn cost(&self) -> usize {
        self.n - self.blocks.len()
    }

    /// Block index of every vertex.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }

    /// A spanning forest of the blocks: `cost()` edges of `g` whose contraction
    /// realizes this partition.
    pub fn spanning_edges(&self, g: &Graph) -> EdgeSet {
        let mut edges = Vec::new();
        for b in &self.blocks {
            let mut inside = vec![false; g.n()];
            inside[b[0]] = true;
            let mut stack = vec![b[0]];
            while let Some(u) = stack.pop() {
                for &v in g.neighbors(u) {
                    if !inside[v] && b.binary_search(&v).is_ok() {
                        inside[v] = true;
                        edges.push(norm(u, v));
                        stack.push(v);
                    }
                }
            }
        }
        EdgeSet::new(edges)
    }
}

/// Contracts the edges of `f` one at a time. The map sends each original vertex
/// to its class; classes are numbered by least original vertex.
pub fn contract_edges(g: &Graph, f: &EdgeSet) -> Result<(Graph, Vec<usize>)> {
    f.check_in(g)?;
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut owner: Vec<usize> = (0..n).collect();
    let find = |owner: &Vec<usize>, mut v: usize| {
        while owner[v] != v {
            v = owner[v];
        }
        v
    };
    for (u, v) in f.iter() {
        let (a, b) = (find(&owner, u), find(&owner, v));
        if a == b {
            continue;
        }
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        let moved = std::mem::take(&mut adj[gone]);
        for x in moved {
            adj[x].remove(&gone);
            if x != keep {
                adj[x].insert(keep);
                adj[keep].insert(x);
            }
        }
        adj[keep].remove(&gone);
        alive[gone] = false;
        owner[gone] = keep;
    }
    let mut index = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if alive[v] {
            index[v] = next;
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for v in (0..n).filter(|&v| alive[v]) {
        edges.extend(adj[v].iter().filter(|&&x| x > v).map(|&x| (index[v], index[x])));
    }
    let map = (0..n).map(|v| index[find(&owner, v)]).collect();
    Ok((Graph::from_edges(next, &edges)?, map))
}

/// Components of the spanning subgraph `(V(g), f)`.
pub fn partition_from_edges(g: &Graph, f: &EdgeSet) -> Result<VertexPartition> {
    f.check_in(g)?;
    let sub = Graph::from_edges(g.n(), f.as_slice())?;
    Ok(VertexPartition { n: g.n(), blocks: sub.components() })
}

/// The quotient graph: one vertex per block, adjacent when a cross edge exists.
pub fn quotient(g: &Graph, p: &VertexPartition) -> Result<Graph> {
    if p.n != g.n() {
        return Err(Error::InvalidPartition("partition is over a different vertex count".into()));
    }
    let p = VertexPartition::new(g, p.blocks.clone())?;
    let block = p.block_of();
    let edges: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| block[u] != block[v])
        .map(|(u, v)| norm(block[u], block[v]))
        .collect();
    Graph::from_edges(p.len(), &edges)
}
