use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::{binomial_sum, Decision, Witness};
use crate::error::{Error, Result};
use crate::graph::{
    build_pattern, norm, DenseGraph, Edge, EdgeSet, Graph, Pattern, PatternMatcher, SearchScope,
};

/// Environment variable overriding the default search ceiling.
pub const BUDGET_ENV: &str = "CONTRACTION_LAB_BUDGET";

const DEFAULT_CEILING: u64 = 100_000_000;

/// The ceiling from `CONTRACTION_LAB_BUDGET`, or 10^8.
pub fn default_ceiling() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().replace('_', "").parse().ok())
        .unwrap_or(DEFAULT_CEILING)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Every edge set by size, then lexicographically; the first success wins.
    Enumerate,
    /// Bounded search tree: some contracted edge must touch each induced copy
    /// of H. Iterative deepening returns a smallest solution.
    Branch,
}

#[derive(Clone, Debug)]
pub struct HfcOptions {
    /// Largest number of candidate edge sets (enumeration) or search nodes
    /// (branching) before giving up.
    pub ceiling: u64,
    /// Skip edge sets containing a cycle. Enumeration only.
    pub forests_only: bool,
    pub engine: Engine,
}

impl Default for HfcOptions {
    fn default() -> Self {
        HfcOptions { ceiling: default_ceiling(), forests_only: true, engine: Engine::Enumerate }
    }
}

impl HfcOptions {
    pub fn with_engine(engine: Engine) -> Self {
        HfcOptions { engine, ..Default::default() }
    }
}

/// Whether at most `k` contractions make `g` H-free.
pub fn solve_hfc(g: &Graph, h: &Pattern, k: usize) -> Result<Decision> {
    solve_hfc_with(g, h, k, &HfcOptions::default())
}

pub fn solve_hfc_with(g: &Graph, h: &Pattern, k: usize, opts: &HfcOptions) -> Result<Decision> {
    solve_hfc_graph(g, &build_pattern(h)?, k, opts)
}

pub fn solve_hfc_graph(g: &Graph, h: &Graph, k: usize, opts: &HfcOptions) -> Result<Decision> {
    let found = match opts.engine {
        Engine::Enumerate => enumerate(g, h, k, opts)?,
        Engine::Branch => branch(g, h, k, opts.ceiling)?,
    };
    Ok(match found {
        Some(f) => Decision::yes(Witness::Edges(f)),
        None => Decision::no(),
    })
}

/// Whether `f` is a set of at most `k` edges of `g` whose contraction leaves no induced `h`.
pub fn check_hfc_witness(g: &Graph, h: &Graph, k: usize, f: &EdgeSet) -> bool {
    if f.len() > k || f.check_in(g).is_err() {
        return false;
    }
    let (d, alive) = g.dense().contract_blocks(&blocks_of(g.n(), f.as_slice()));
    let scope = SearchScope { allowed: Some(alive), ..Default::default() };
    PatternMatcher::new(h).find(&d, &scope).is_none()
}

fn blocks_of(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for &(u, v) in edges {
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &(u, v) in edges {
        for x in [u, v] {
            let r = root(&mut parent, x);
            groups.entry(r).or_default().push(x);
        }
    }
    groups
        .into_values()
        .map(|mut b| {
            b.sort_unstable();
            b.dedup();
            b
        })
        .collect()
}

fn closes_cycle(chosen: &[Edge], u: usize, v: usize) -> bool {
    let mut seen = vec![u];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        for &(a, b) in chosen {
            let y = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if y == v {
                return true;
            }
            if !seen.contains(&y) {
                seen.push(y);
            }
        }
        i += 1;
    }
    false
}

struct Enum<'a> {
    n: usize,
    d: &'a DenseGraph,
    edges: &'a [Edge],
    matcher: &'a PatternMatcher,
    forests_only: bool,
}

impl Enum<'_> {
    fn free_after(&self, chosen: &[Edge]) -> bool {
        let (cd, alive) = self.d.contract_blocks(&blocks_of(self.n, chosen));
        let scope = SearchScope { allowed: Some(alive), ..Default::default() };
        self.matcher.find(&cd, &scope).is_none()
    }

    /// Lexicographically first `size`-set extending `chosen` with edges after `from`.
    fn extend(&self, chosen: &mut Vec<Edge>, from: usize, size: usize) -> bool {
        if chosen.len() == size {
            return self.free_after(chosen);
        }
        let left = size - chosen.len();
        for i in from..self.edges.len() {
            if self.edges.len() - i < left {
                break;
            }
            let (u, v) = self.edges[i];
            if self.forests_only && closes_cycle(chosen, u, v) {
                continue;
            }
            chosen.push((u, v));
            if self.extend(chosen, i + 1, size) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

fn enumerate(g: &Graph, h: &Graph, k: usize, opts: &HfcOptions) -> Result<Option<EdgeSet>> {
    let edges = g.edges();
    let needed = binomial_sum(edges.len(), k);
    if needed > opts.ceiling as u128 {
        return Err(Error::SearchBudgetExceeded { needed, ceiling: opts.ceiling });
    }
    let d = g.dense();
    let matcher = PatternMatcher::new(h);
    let e = Enum { n: g.n(), d: &d, edges: &edges, matcher: &matcher, forests_only: opts.forests_only };
    let max_size = if opts.forests_only { k.min(g.n().saturating_sub(1)) } else { k };
    for size in 0..=max_size.min(edges.len()) {
        let try_first = |first: usize| -> Option<Vec<Edge>> {
            let mut chosen = vec![edges[first]];
            e.extend(&mut chosen, first + 1, size).then_some(chosen)
        };
        let hit = if size == 0 {
            e.free_after(&[]).then(Vec::new)
        } else if binomial_sum(edges.len(), size) > 512 {
            (0..edges.len()).into_par_iter().find_map_first(try_first)
        } else {
            (0..edges.len()).find_map(try_first)
        };
        if let Some(f) = hit {
            return Ok(Some(EdgeSet::new(f)));
        }
    }
    Ok(None)
}

struct Branch<'a> {
    g: &'a Graph,
    d: &'a DenseGraph,
    matcher: &'a PatternMatcher,
    ceiling: u64,
    nodes: u64,
    seen: HashSet<Vec<usize>>,
}

impl Branch<'_> {
    /// `label[v]` is the least vertex of v's block.
    fn go(&mut self, label: &mut Vec<usize>, chosen: &mut Vec<Edge>, budget: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.ceiling {
            return Err(Error::SearchBudgetExceeded { needed: self.nodes as u128, ceiling: self.ceiling });
        }
        let (cd, alive) = self.d.contract_blocks(&blocks_of(self.g.n(), chosen));
        let scope = SearchScope { allowed: Some(alive), ..Default::default() };
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut seen_copies = 0;
        self.matcher.for_each(&cd, &scope, |m| {
            let weight: usize = m.iter().map(|&x| cd.degree(x)).sum();
            if best.as_ref().is_none_or(|(w, _)| weight < *w) {
                best = Some((weight, m.to_vec()));
            }
            seen_copies += 1;
            seen_copies < 24
        });
        let Some((_, copy)) = best else {
            return Ok(true);
        };
        if budget == 0 {
            return Ok(false);
        }
        let mut moves: BTreeSet<Edge> = BTreeSet::new();
        for &x in &copy {
            for y in cd.neighbors(x) {
                moves.insert(norm(x, y));
            }
        }
        for (x, y) in moves {
            let realizing = self.realizing_edge(label, x, y);
            let mut next = label.clone();
            for l in next.iter_mut() {
                if *l == y {
                    *l = x;
                }
            }
            if !self.seen.insert(next.clone()) {
                continue;
            }
            chosen.push(realizing);
            let mut next_label = next;
            if self.go(&mut next_label, chosen, budget - 1)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    fn realizing_edge(&self, label: &[usize], x: usize, y: usize) -> Edge {
        let mut best: Option<Edge> = None;
        for u in (0..label.len()).filter(|&u| label[u] == x) {
            for &v in self.g.neighbors(u) {
                if label[v] == y {
                    let e = norm(u, v);
                    if best.is_none_or(|b| e < b) {
                        best = Some(e);
                    }
                }
            }
        }
        best.expect("quotient edge has a realizing edge")
    }
}

fn branch(g: &Graph, h: &Graph, k: usize, ceiling: u64) -> Result<Option<EdgeSet>> {
    let d = g.dense();
    let matcher = PatternMatcher::new(h);
    let mut b = Branch { g, d: &d, matcher: &matcher, ceiling, nodes: 0, seen: HashSet::new() };
    for budget in 0..=k.min(g.n().saturating_sub(1)) {
        b.seen.clear();
        let mut label: Vec<usize> = (0..g.n()).collect();
        let mut chosen = Vec::new();
        if b.go(&mut label, &mut chosen, budget)? {
            return Ok(Some(EdgeSet::new(chosen)));
        }
    }
    Ok(None)
}
