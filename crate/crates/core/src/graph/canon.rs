use std::cmp::Ordering;

use super::induced::PatternMatcher;
use super::{DenseGraph, Graph, SearchScope};

/// Isomorphism-invariant code: the largest column-major upper-triangle
/// adjacency string over all vertex orders compatible with a degree
/// refinement. Exponential; meant for graphs of about ten vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: Vec<u8>,
}

struct Canon<'a> {
    d: &'a DenseGraph,
    class_of: Vec<usize>,
    slots: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    code: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl Canon<'_> {
    fn go(&mut self, j: usize) {
        let n = self.d.n();
        if j == n {
            if self.best.as_ref().is_none_or(|b| self.code > *b) {
                self.best = Some(self.code.clone());
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.class_of[v] != self.slots[j] {
                continue;
            }
            let start = self.code.len();
            for i in 0..j {
                self.code.push(self.d.has_edge(self.order[i], v) as u8);
            }
            let worse = self
                .best
                .as_ref()
                .is_some_and(|b| self.code[..].cmp(&b[..self.code.len()]) == Ordering::Less);
            if !worse {
                self.used[v] = true;
                self.order.push(v);
                self.go(j + 1);
                self.order.pop();
                self.used[v] = false;
            }
            self.code.truncate(start);
        }
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let keys: Vec<_> = (0..n).map(key).collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable_by(|a, b| b.cmp(a));
    distinct.dedup();
    let class_of: Vec<usize> = keys
        .iter()
        .map(|k| distinct.iter().position(|d| d == k).unwrap())
        .collect();
    let mut slots = class_of.clone();
    slots.sort_unstable();
    let d = g.dense();
    let mut c = Canon {
        d: &d,
        class_of,
        slots,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        code: Vec::with_capacity(n * n / 2),
        best: None,
    };
    c.go(0);
    CanonicalForm { n, bits: c.best.unwrap_or_default() }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && PatternMatcher::new(b).find(&a.dense(), &SearchScope::default()).is_some()
}
