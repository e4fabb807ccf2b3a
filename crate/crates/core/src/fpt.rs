//! tK1-free Contraction in FPT time, and the bounded search tree for
//! tK1-free Vertex Deletion it starts from.

use crate::error::{Error, Result};
use crate::graph::{norm, Edge, EdgeSet, Graph};
use crate::solvers::{default_ceiling, Decision, Witness};

/// Lexicographically first independent set of size `t` among `allowed`, if any.
fn independent_set(adj: &dyn Fn(usize, usize) -> bool, allowed: &[usize], t: usize) -> Option<Vec<usize>> {
    fn go(adj: &dyn Fn(usize, usize) -> bool, allowed: &[usize], t: usize, from: usize, cur: &mut Vec<usize>) -> bool {
        if cur.len() == t {
            return true;
        }
        for i in from..allowed.len() {
            if allowed.len() - i < t - cur.len() {
                break;
            }
            let v = allowed[i];
            if cur.iter().all(|&u| !adj(u, v)) {
                cur.push(v);
                if go(adj, allowed, t, i + 1, cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    let mut cur = Vec::new();
    go(adj, allowed, t, 0, &mut cur).then_some(cur)
}

/// Deleting at most `k` vertices to kill every induced tK1: branch on the
/// vertices of the first independent t-set. The witness is the deleted set.
pub fn tk1_vertex_deletion(g: &Graph, t: usize, k: usize) -> Decision {
    fn go(g: &Graph, t: usize, k: usize, alive: &mut Vec<bool>, deleted: &mut Vec<usize>) -> bool {
        let allowed: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
        let Some(s) = independent_set(&|u, v| g.has_edge(u, v), &allowed, t) else {
            return true;
        };
        if k == 0 {
            return false;
        }
        for v in s {
            alive[v] = false;
            deleted.push(v);
            if go(g, t, k - 1, alive, deleted) {
                return true;
            }
            deleted.pop();
            alive[v] = true;
        }
        false
    }
    let mut alive = vec![true; g.n()];
    let mut deleted = Vec::new();
    if go(g, t.max(1), k, &mut alive, &mut deleted) {
        deleted.sort_unstable();
        Decision::yes(Witness::Vertices(deleted))
    } else {
        Decision::no()
    }
}

/// A quotient of the input graph: `label[v]` is the least vertex of v's block.
#[derive(Clone)]
struct Quotient<'a> {
    g: &'a Graph,
    label: Vec<usize>,
    /// Original edges contracted so far, one per contraction.
    used: Vec<Edge>,
}

impl<'a> Quotient<'a> {
    fn new(g: &'a Graph) -> Self {
        Quotient { g, label: (0..g.n()).collect(), used: Vec::new() }
    }

    fn vertices(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.label[v] == v).collect()
    }

    fn find(&self, v: usize) -> usize {
        self.label[v]
    }

    /// Some original edge between blocks `a` and `b`.
    fn crossing(&self, a: usize, b: usize) -> Option<Edge> {
        if a == b {
            return None;
        }
        self.g.edges().into_iter().find(|&(x, y)| {
            let (lx, ly) = (self.label[x], self.label[y]);
            (lx == a && ly == b) || (lx == b && ly == a)
        })
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.crossing(a, b).is_some()
    }

    /// Edges of the quotient with both ends among `vs`, as block pairs.
    fn edges_among(&self, vs: &[usize]) -> Vec<Edge> {
        let mut out = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if self.adjacent(a, b) {
                    out.push(norm(a, b));
                }
            }
        }
        out
    }

    /// Contracts the quotient edges `s` (block pairs) one after the other.
    fn contract(&self, s: &[Edge]) -> Self {
        let mut q = self.clone();
        for &(a, b) in s {
            let (a, b) = (q.find(a), q.find(b));
            let Some(e) = q.crossing(a, b) else { continue };
            q.used.push(e);
            let (keep, gone) = (a.min(b), a.max(b));
            for l in q.label.iter_mut() {
                if *l == gone {
                    *l = keep;
                }
            }
        }
        q
    }

    fn is_tk1_free(&self, t: usize) -> bool {
        independent_set(&|a, b| self.adjacent(a, b), &self.vertices(), t).is_none()
    }
}

/// All subsets of `items` with at most `k` elements, smallest first.
fn subsets_upto<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![(Vec::new(), 0usize)];
    for _ in 0..k.min(items.len()) {
        let mut next = Vec::new();
        for (s, from) in &layer {
            for i in *from..items.len() {
                let mut s2: Vec<T> = s.clone();
                s2.push(items[i]);
                out.push(s2.clone());
                next.push((s2, i + 1));
            }
        }
        layer = next;
    }
    out
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    subsets_upto(items, size).into_iter().filter(|s| s.len() == size).collect()
}

fn bit_subsets(items: &[usize]) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> + '_ {
    (0..1u64 << items.len()).map(move |m| {
        let (inn, out): (Vec<(usize, &usize)>, Vec<(usize, &usize)>) = items.iter().enumerate().partition(|(i, _)| m >> i & 1 == 1);
        (inn.into_iter().map(|(_, &v)| v).collect(), out.into_iter().map(|(_, &v)| v).collect())
    })
}

struct Fpt<'a> {
    g: &'a Graph,
    t: usize,
    k: usize,
    vc: Vec<usize>,
    nodes: u64,
    ceiling: u64,
}

impl<'a> Fpt<'a> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.ceiling {
            return Err(Error::SearchBudgetExceeded { needed: self.nodes as u128, ceiling: self.ceiling });
        }
        Ok(())
    }

    /// Step 2 on `g1 = G/S0` with `k1` contractions left.
    fn step2(&mut self, g1: &Quotient<'a>, k1: usize) -> Result<Option<Vec<Edge>>> {
        let in_vc = self.in_vc();
        let vk_prime: Vec<usize> = g1.vertices().into_iter().filter(|&v| !in_vc[v]).collect();
        for (r, r0) in bit_subsets(&vk_prime) {
            if !r.iter().all(|&x| self.vc.iter().any(|&c| g1.adjacent(x, c))) {
                continue;
            }
            self.tick()?;
            let tset = self.build_t(g1, &r0);
            if let Some(f) = self.step2_with_t(g1, k1, &r, &tset)? {
                return Ok(Some(f));
            }
        }
        Ok(None)
    }

    fn in_vc(&self) -> Vec<bool> {
        let mut in_vc = vec![false; self.g.n()];
        for &v in &self.vc {
            in_vc[v] = true;
        }
        in_vc
    }

    /// T_1 ∪ … ∪ T_{t−1}.
    fn build_t(&self, g1: &Quotient<'a>, r0: &[usize]) -> Vec<usize> {
        let t = self.t;
        let mut tprime: Vec<usize> = Vec::new();
        for _ in 1..t {
            let mut ti: Vec<usize> = Vec::new();
            let rest: Vec<usize> = self.vc.iter().copied().filter(|v| !tprime.contains(v)).collect();
            for l0 in 0..=t {
                for l1 in 0..=t - l0 {
                    let l2 = t - l0 - l1;
                    for s0 in subsets_of_size(r0, l0) {
                        for s1 in subsets_of_size(&tprime, l1) {
                            let mut taken = vec![false; self.g.n()];
                            let mut z: Vec<Vec<usize>> = Vec::new();
                            for s2 in subsets_of_size(&rest, l2) {
                                if s2.iter().any(|&v| taken[v]) {
                                    continue;
                                }
                                let independent = s2.iter().enumerate().all(|(i, &a)| s2[i + 1..].iter().all(|&b| !g1.adjacent(a, b)));
                                let apart = s2.iter().all(|&a| s0.iter().chain(&s1).all(|&b| !g1.adjacent(a, b)));
                                if independent && apart {
                                    for &v in &s2 {
                                        taken[v] = true;
                                    }
                                    z.push(s2);
                                }
                            }
                            for set in z.into_iter().take(self.k + 1) {
                                ti.extend(set);
                            }
                        }
                    }
                }
            }
            ti.sort_unstable();
            ti.dedup();
            for v in ti {
                if !tprime.contains(&v) {
                    tprime.push(v);
                }
            }
        }
        tprime.sort_unstable();
        tprime
    }

    fn step2_with_t(&mut self, g1: &Quotient<'a>, k1: usize, r: &[usize], tset: &[usize]) -> Result<Option<Vec<Edge>>> {
        let outside: Vec<usize> = self.vc.iter().copied().filter(|v| tset.binary_search(v).is_err()).collect();
        for (r1, r2) in bit_subsets(r) {
            if !r1.iter().all(|&x| tset.iter().any(|&y| g1.adjacent(x, y))) {
                continue;
            }
            let e1: Vec<Edge> = r1.iter().flat_map(|&x| tset.iter().filter(move |&&y| g1.adjacent(x, y)).map(move |&y| (x, y))).collect();
            for s1 in subsets_upto(&e1, k1) {
                if !r1.iter().all(|&x| s1.iter().any(|&(a, _)| a == x)) {
                    continue;
                }
                self.tick()?;
                let g2 = g1.contract(&s1);
                let k2 = k1 - s1.len();
                let mut s2 = Vec::new();
                let mut stuck = false;
                for &u in &r2 {
                    match outside.iter().find(|&&v| g2.adjacent(g2.find(u), v)) {
                        Some(&v) => s2.push((u, v)),
                        None => stuck = true,
                    }
                }
                if stuck || s2.len() > k2 {
                    continue;
                }
                let g3 = g2.contract(&s2);
                let k3 = k2 - s2.len();
                let p: Vec<usize> = tset
                    .iter()
                    .filter_map(|&u| outside.iter().copied().find(|&v| self.g.has_edge(u, v)))
                    .collect();
                let mut blocks: Vec<usize> = tset.iter().chain(&p).map(|&v| g3.find(v)).collect();
                blocks.sort_unstable();
                blocks.dedup();
                for s3 in subsets_upto(&g3.edges_among(&blocks), k3) {
                    self.tick()?;
                    let g4 = g3.contract(&s3);
                    if g4.is_tk1_free(self.t) {
                        return Ok(Some(g4.used));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// tK1-free Contraction by the branching algorithm: vertex deletion at budget
/// 2k splits V into V_k and V_c, then S0 ⊆ E[V_k], the (R, R0) and (R1, R2)
/// splits, the sets T_i, and S1, S2, S3 are tried in turn. P holds one
/// neighbour in V_c ∖ T of every vertex of T. The witness is one original
/// edge per contraction of the accepting branch.
pub fn tk1_contract_fpt(g: &Graph, t: usize, k: usize) -> Result<Decision> {
    tk1_contract_fpt_with(g, t, k, default_ceiling())
}

/// As [`tk1_contract_fpt`], giving up after `ceiling` branch nodes.
pub fn tk1_contract_fpt_with(g: &Graph, t: usize, k: usize, ceiling: u64) -> Result<Decision> {
    if t < 2 {
        return Err(Error::BadParameter(format!("tK1 needs t >= 2 (got {t})")));
    }
    let Some(vk) = tk1_vertex_deletion(g, t, 2 * k).vertices().map(<[usize]>::to_vec) else {
        return Ok(Decision::no());
    };
    let vc: Vec<usize> = (0..g.n()).filter(|v| !vk.contains(v)).collect();
    let mut fpt = Fpt { g, t, k, vc, nodes: 0, ceiling };
    let base = Quotient::new(g);
    let e0 = base.edges_among(&vk);
    for s0 in subsets_upto(&e0, k) {
        fpt.tick()?;
        let g1 = base.contract(&s0);
        if let Some(f) = fpt.step2(&g1, k - s0.len())? {
            return Ok(Decision::yes(Witness::Edges(EdgeSet::new(f))));
        }
    }
    Ok(Decision::no())
}
