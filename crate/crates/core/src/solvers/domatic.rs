use super::{is_dominating_set, Decision, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Whether `sets` are pairwise disjoint dominating sets of `g`, at least `d` of them.
pub fn is_domatic_partition(g: &Graph, sets: &[Vec<usize>], d: usize) -> bool {
    let mut seen = vec![false; g.n()];
    for s in sets {
        for &v in s {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    sets.len() >= d && sets.iter().all(|s| is_dominating_set(g, s))
}

struct Coloring<'a> {
    g: &'a Graph,
    d: usize,
    color: Vec<usize>,
    /// `count[u * d + c]`: vertices of color c in N[u].
    count: Vec<u32>,
    present: Vec<usize>,
    open: Vec<usize>,
}

impl Coloring<'_> {
    fn closed(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(v).chain(self.g.neighbors(v).iter().copied())
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        let mut ok = true;
        let members: Vec<usize> = self.closed(v).collect();
        for u in members {
            self.open[u] -= 1;
            let slot = &mut self.count[u * self.d + c];
            *slot += 1;
            if *slot == 1 {
                self.present[u] += 1;
            }
            if self.present[u] + self.open[u] < self.d {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, c: usize) {
        let members: Vec<usize> = self.closed(v).collect();
        for u in members {
            self.open[u] += 1;
            let slot = &mut self.count[u * self.d + c];
            *slot -= 1;
            if *slot == 0 {
                self.present[u] -= 1;
            }
        }
        self.color[v] = usize::MAX;
    }

    fn go(&mut self, v: usize, used: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        for c in 0..(used + 1).min(self.d) {
            let ok = self.assign(v, c);
            if ok && self.go(v + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

fn split_component(g: &Graph, d: usize) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let min_closed = (0..n).map(|v| g.degree(v) + 1).min().unwrap_or(0);
    if d > min_closed {
        return None;
    }
    let mut col = Coloring {
        g,
        d,
        color: vec![usize::MAX; n],
        count: vec![0; n * d],
        present: vec![0; n],
        open: (0..n).map(|v| g.degree(v) + 1).collect(),
    };
    if !col.go(0, 0) {
        return None;
    }
    let mut sets = vec![Vec::new(); d];
    for v in 0..n {
        sets[col.color[v]].push(v);
    }
    Some(sets)
}

/// Decides whether `g` has `d` pairwise disjoint dominating sets. The witness
/// partitions the vertex set into exactly `d` dominating sets.
///
/// Components are solved separately and their classes merged by index.
pub fn solve_domatic(g: &Graph, d: usize) -> Result<Decision> {
    if d < 1 {
        return Err(Error::BadParameter("domatic target d must be at least 1".into()));
    }
    let mut sets = vec![Vec::new(); d];
    for comp in g.components() {
        let sub = g.induced(&comp);
        match split_component(&sub, d) {
            Some(parts) => {
                for (acc, part) in sets.iter_mut().zip(parts) {
                    acc.extend(part.into_iter().map(|i| comp[i]));
                }
            }
            None => return Ok(Decision::no()),
        }
    }
    for s in &mut sets {
        s.sort_unstable();
    }
    Ok(Decision::yes(Witness::Sets(sets)))
}
