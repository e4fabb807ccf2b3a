use super::bitset::{iter_words, words_for};
use super::{Graph, VertexSet};

/// Adjacency-matrix view used by the search routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl DenseGraph {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        DenseGraph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut d = DenseGraph::new(g.n());
        for (u, v) in g.edges() {
            d.add_edge(u, v);
        }
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        self.rows[u * w + v / 64] |= 1 << (v % 64);
        self.rows[v * w + u / 64] |= 1 << (u % 64);
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_words(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v).to_vec())
    }

    /// Sparse copy restricted to `alive`, relabelled in increasing order.
    pub fn to_graph_on(&self, alive: &VertexSet) -> Graph {
        let vs = alive.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for &u in &vs {
            for v in self.neighbors(u) {
                if u < v && pos[v] != usize::MAX {
                    edges.push((pos[u], pos[v]));
                }
            }
        }
        Graph::from_edges(vs.len(), &edges).expect("dense rows are simple")
    }

    pub fn to_graph(&self) -> Graph {
        self.to_graph_on(&VertexSet::full(self.n))
    }

    /// Contracts each block onto its least member, keeping original indices.
    /// Returns the contracted matrix and the set of surviving representatives.
    pub fn contract_blocks(&self, blocks: &[Vec<usize>]) -> (DenseGraph, VertexSet) {
        let mut d = self.clone();
        let mut alive = VertexSet::full(self.n);
        let w = self.words;
        let mut merged = vec![0u64; w];
        for b in blocks.iter().filter(|b| b.len() > 1) {
            let rep = *b.iter().min().unwrap();
            let mut members = vec![0u64; w];
            for &v in b {
                members[v / 64] |= 1 << (v % 64);
            }
            merged.iter_mut().for_each(|x| *x = 0);
            for &v in b {
                for (m, r) in merged.iter_mut().zip(d.row(v)) {
                    *m |= r;
                }
            }
            for (m, s) in merged.iter_mut().zip(&members) {
                *m &= !s;
            }
            for &v in b {
                if v != rep {
                    alive.remove(v);
                    d.row_mut(v).iter_mut().for_each(|x| *x = 0);
                }
            }
            d.row_mut(rep).copy_from_slice(&merged);
            for x in iter_words(&merged).collect::<Vec<_>>() {
                let row = d.row_mut(x);
                for (r, s) in row.iter_mut().zip(&members) {
                    *r &= !s;
                }
                row[rep / 64] |= 1 << (rep % 64);
            }
        }
        (d, alive)
    }
}
