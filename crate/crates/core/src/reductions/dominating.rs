use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{build_canopy, build_pattern, canopy_size, Graph, Pattern};

use super::{dominates, guard, Builder, Construction, Head, LabeledReduction, Problem, ReductionOptions};

/// Dominating Set reductions for small fixed patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LegacyVariant {
    Claw,
    /// 2K2 with X independent, Y a clique and pendants on Y.
    TwoK2A,
    /// 2K2 with X a clique, pendants on X and on the hub.
    TwoK2B,
    K3K1,
    /// T_{1,2}, realized as `Pattern::Bistar(2, 1)`.
    T12,
    /// K_{1,t}, t ≥ 4.
    StarW(usize),
}

impl LegacyVariant {
    pub fn pattern(&self) -> Pattern {
        match *self {
            LegacyVariant::Claw => Pattern::Claw,
            LegacyVariant::TwoK2A | LegacyVariant::TwoK2B => Pattern::Matching(2),
            LegacyVariant::K3K1 => Pattern::K3PlusK1,
            LegacyVariant::T12 => Pattern::Bistar(2, 1),
            LegacyVariant::StarW(t) => Pattern::Star(t),
        }
    }

    /// Label of the vertex the forward witness contracts into.
    pub(crate) fn hub(&self) -> &'static str {
        match self {
            LegacyVariant::StarW(_) => "w",
            _ => "u",
        }
    }

    /// Label whose i-th vertex stands for v_i in the forward witness.
    pub(crate) fn spokes(&self) -> &'static str {
        match self {
            LegacyVariant::TwoK2B => "Y",
            _ => "X",
        }
    }
}

impl fmt::Display for LegacyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LegacyVariant::Claw => write!(f, "claw"),
            LegacyVariant::TwoK2A => write!(f, "2k2a"),
            LegacyVariant::TwoK2B => write!(f, "2k2b"),
            LegacyVariant::K3K1 => write!(f, "k3k1"),
            LegacyVariant::T12 => write!(f, "t12"),
            LegacyVariant::StarW(t) => write!(f, "starw{t}"),
        }
    }
}

fn diameter(h: &Graph) -> usize {
    let mut best = 0;
    for s in 0..h.n() {
        let mut dist = vec![usize::MAX; h.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in h.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        best = best.max(dist.into_iter().filter(|&d| d != usize::MAX).max().unwrap_or(0));
    }
    best
}

/// Lowest-index vertex of maximum degree.
fn max_degree_vertex(h: &Graph) -> usize {
    (0..h.n()).min_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v)).unwrap_or(0)
}

/// Joins x_i to `targets[j]` whenever v_i dominates v_j.
fn domination_edges(b: &mut Builder, gp: &Graph, x: &[usize], targets: &[Vec<usize>]) {
    for i in 0..gp.n() {
        for (j, t) in targets.iter().enumerate() {
            if dominates(gp, i, j) {
                b.join(&[x[i]], t);
            }
        }
    }
}

fn singletons(vs: &[usize]) -> Vec<Vec<usize>> {
    vs.iter().map(|&v| vec![v]).collect()
}

/// Dominating Set to XFC(H) for a tree H that is neither a star nor a bistar.
///
/// A clique X = {x_i}, then n copies of H sharing w, with the rest of copy j
/// labelled `W_j` (1-based). w is joined to X and x_i to all of W_j when v_i
/// dominates v_j. The shared vertex defaults to the lowest-index vertex of
/// maximum degree.
pub fn reduce_ds_tree(gp: &Graph, h: &Pattern, k: usize) -> Result<LabeledReduction> {
    tree(gp, h, k, &ReductionOptions::default())
}

pub(crate) fn tree(gp: &Graph, h: &Pattern, k: usize, opts: &ReductionOptions) -> Result<LabeledReduction> {
    let hg = build_pattern(h)?;
    if !hg.is_tree() {
        return Err(Error::BadPattern(format!("{h} is not a tree")));
    }
    if diameter(&hg) <= 3 {
        return Err(Error::BadPattern(format!("{h} is a star or a bistar")));
    }
    let w = opts.w.unwrap_or_else(|| max_degree_vertex(&hg));
    if w >= hg.n() {
        return Err(Error::BadParameter(format!("w = {w} is not a vertex of {h}")));
    }
    let n = gp.n();
    guard(n as u128 * hg.n() as u128 + 1, opts)?;
    let mut b = Builder::new();
    let x = b.clique_block("X", n);
    let wv = b.vertex("w");
    b.join(&[wv], &x);
    let rest: Vec<usize> = (0..hg.n()).filter(|&p| p != w).collect();
    let mut copies = Vec::new();
    for j in 1..=n {
        let copy = b.block(&format!("W_{j}"), rest.len());
        let mut map = vec![wv; hg.n()];
        for (&p, &c) in rest.iter().zip(&copy) {
            map[p] = c;
        }
        for (p, q) in hg.edges() {
            b.edge(map[p], map[q]);
        }
        copies.push(copy);
    }
    domination_edges(&mut b, gp, &x, &copies);
    let head = Head::new(Construction::DsTree, gp, Problem::DominatingSet, k, Problem::Hfc(h.clone()))
        .param("h", h)
        .param("w", w)
        .param("k", k);
    Ok(b.finish(head, k))
}

/// Shared skeleton of the asymmetric bistar and large star reductions:
/// X, Y, w, A, B, then `side` cliques each for A', B', X' and one clique Y'.
fn star_skeleton(b: &mut Builder, gp: &Graph, k: usize, side: usize) -> Vec<usize> {
    let x = b.clique_block("X", gp.n());
    let y = b.block("Y", gp.n());
    domination_edges(b, gp, &x, &singletons(&y));
    let w = b.vertex("w");
    let a = b.block("A", k + 1);
    let bb = b.block("B", k + 1);
    b.join(&[w], &x);
    b.join(&[w], &a);
    b.join(&[w], &bb);
    b.clique(&[a.clone(), bb.clone(), y.clone()].concat());
    let mut outer = Vec::new();
    for (name, anchor) in [("A'", &a), ("B'", &bb), ("X'", &x)] {
        for _ in 0..side {
            let c = b.clique_block(name, k + 1);
            b.join(&c, anchor);
            outer.extend(c);
        }
    }
    let yp = b.clique_block("Y'", k + 1);
    b.join(&yp, &y);
    outer.extend(yp);
    outer
}

/// Dominating Set to XFC(T_{t,t'}), t > t' ≥ 0 and t ≥ 3.
///
/// With t' = 0 the target is the star K_{1,t+1} and no pendants are added.
/// Pendants are labelled `P`.
pub fn reduce_ds_bistar_asym(gp: &Graph, t: usize, t2: usize, k: usize) -> Result<LabeledReduction> {
    bistar_asym(gp, t, t2, k, &ReductionOptions::default())
}

pub(crate) fn bistar_asym(gp: &Graph, t: usize, t2: usize, k: usize, opts: &ReductionOptions) -> Result<LabeledReduction> {
    if t < 3 || t <= t2 {
        return Err(Error::BadParameter(format!("asymmetric bistar needs t >= 3 and t > t' (got t={t}, t'={t2})")));
    }
    let (n, q) = (gp.n() as u128, k as u128 + 1);
    let outer = (3 * (t as u128 - 1) + 1) * q;
    guard(2 * n + 1 + 2 * q + outer * (1 + t2 as u128), opts)?;
    let mut b = Builder::new();
    let outer = star_skeleton(&mut b, gp, k, t - 1);
    for v in outer {
        let p = b.block("P", t2);
        b.join(&[v], &p);
    }
    let target = if t2 == 0 { Pattern::Star(t + 1) } else { Pattern::Bistar(t, t2) };
    let head = Head::new(Construction::DsBistarAsym, gp, Problem::DominatingSet, k, Problem::Hfc(target))
        .param("t", t)
        .param("t'", t2)
        .param("k", k);
    Ok(b.finish(head, k))
}

/// Dominating Set to XFC(T_{t,t'}), t ≥ t' ≥ 3.
///
/// Cliques A_1..A_t of k + 1 vertices and the clique X are joined to w. Each
/// Y_i is an n-clique; x_i meets y_{1,j} when v_i dominates v_j and is matched
/// to y_{i',i} for i' ≥ 2. Every Y vertex is the root of its own
/// (t',k)-canopy, whose other vertices are labelled `C_{y}`.
pub fn reduce_ds_bistar_sym(gp: &Graph, t: usize, t2: usize, k: usize) -> Result<LabeledReduction> {
    bistar_sym(gp, t, t2, k, &ReductionOptions::default())
}

pub(crate) fn bistar_sym(gp: &Graph, t: usize, t2: usize, k: usize, opts: &ReductionOptions) -> Result<LabeledReduction> {
    if t < 3 || t2 < 3 || t2 > t {
        return Err(Error::BadParameter(format!("symmetric bistar needs t >= t' >= 3 (got t={t}, t'={t2})")));
    }
    let n = gp.n();
    let canopy = canopy_size(t2, k);
    let ys = (t2 * n) as u128;
    guard((t * (k + 1) + n + 1) as u128 + ys.saturating_mul(canopy), opts)?;
    let mut b = Builder::new();
    let mut a = Vec::new();
    for i in 1..=t {
        a.extend(b.clique_block(&format!("A_{i}"), k + 1));
    }
    let x = b.clique_block("X", n);
    let w = b.vertex("w");
    b.join(&[w], &a);
    b.join(&[w], &x);
    let mut y_all = Vec::new();
    for i in 1..=t2 {
        let yi = b.clique_block(&format!("Y_{i}"), n);
        if i == 1 {
            domination_edges(&mut b, gp, &x, &singletons(&yi));
        } else {
            for (&xi, &yj) in x.iter().zip(&yi) {
                b.edge(xi, yj);
            }
        }
        y_all.extend(yi);
    }
    if k >= 1 {
        let c = build_canopy(t2, k)?;
        for &y in &y_all {
            let label = format!("C_{{{y}}}");
            let mut map = vec![y; c.graph.n()];
            for p in 1..c.graph.n() {
                map[p] = b.vertex(&label);
            }
            for (p, q) in c.graph.edges() {
                b.edge(map[p], map[q]);
            }
        }
    }
    let head = Head::new(Construction::DsBistarSym, gp, Problem::DominatingSet, k, Problem::Hfc(Pattern::Bistar(t, t2)))
        .param("t", t)
        .param("t'", t2)
        .param("k", k);
    Ok(b.finish(head, k))
}

/// Dominating Set reductions for claw, 2K2 (two versions), K3+K1, T_{1,2} and
/// K_{1,t} with t ≥ 4. The source must be connected and not complete.
pub fn reduce_ds_legacy(gp: &Graph, k: usize, variant: LegacyVariant) -> Result<LabeledReduction> {
    legacy(gp, k, variant, &ReductionOptions::default())
}

pub(crate) fn legacy(gp: &Graph, k: usize, variant: LegacyVariant, opts: &ReductionOptions) -> Result<LabeledReduction> {
    if !gp.is_connected() {
        return Err(Error::DisconnectedSource);
    }
    if gp.is_complete() {
        return Err(Error::BadParameter("source graph must not be complete".into()));
    }
    let (n, q) = (gp.n() as u128, k as u128 + 1);
    let size = match variant {
        LegacyVariant::Claw => 2 * n + 2 * q + 1,
        LegacyVariant::TwoK2A => 2 * n + n * q + 1,
        LegacyVariant::TwoK2B => 2 * n + n * q + q + 1,
        LegacyVariant::K3K1 => 2 * n + q + 1,
        LegacyVariant::T12 => 2 * n + 3 * q + 1,
        LegacyVariant::StarW(t) => {
            if t < 4 {
                return Err(Error::BadParameter(format!("star variant needs t >= 4 (got {t})")));
            }
            2 * n + 1 + 2 * q + 3 * (t as u128 - 2) * q + q
        }
    };
    guard(size, opts)?;
    let n = gp.n();
    let mut b = Builder::new();
    match variant {
        LegacyVariant::Claw => {
            let x = b.clique_block("X", n);
            let y = b.clique_block("Y", n);
            domination_edges(&mut b, gp, &x, &singletons(&y));
            let a = b.block("A", k + 1);
            let bb = b.block("B", k + 1);
            b.clique(&[a.clone(), bb].concat());
            b.join(&a, &y);
            let u = b.vertex("u");
            b.join(&[u], &x);
            b.join(&[u], &a);
        }
        LegacyVariant::TwoK2A => {
            let x = b.block("X", n);
            let y = b.clique_block("Y", n);
            domination_edges(&mut b, gp, &x, &singletons(&y));
            for i in 1..=n {
                let z = b.block(&format!("Z_{i}"), k + 1);
                b.join(&z, &[y[i - 1]]);
            }
            let u = b.vertex("u");
            b.join(&[u], &x);
        }
        LegacyVariant::TwoK2B => {
            let x = b.clique_block("X", n);
            let y = b.block("Y", n);
            domination_edges(&mut b, gp, &x, &singletons(&y));
            for i in 1..=n {
                let z = b.block(&format!("Z_{i}"), k + 1);
                b.join(&z, &[x[i - 1]]);
            }
            let a = b.block("A", k + 1);
            let u = b.vertex("u");
            b.join(&[u], &a);
            b.join(&[u], &y);
        }
        LegacyVariant::K3K1 => {
            let x = b.block("X", n);
            let y = b.block("Y", n);
            domination_edges(&mut b, gp, &x, &singletons(&y));
            let z = b.block("Z", k + 1);
            b.join(&x, &z);
            let u = b.vertex("u");
            b.join(&[u], &x);
            b.join(&[u], &z);
        }
        LegacyVariant::T12 => {
            let x = b.clique_block("X", n);
            let y = b.clique_block("Y", n);
            domination_edges(&mut b, gp, &x, &singletons(&y));
            let a = b.clique_block("A", k + 1);
            let bb = b.clique_block("B", k + 1);
            let c = b.clique_block("C", k + 1);
            b.join(&a, &bb);
            b.join(&a, &y);
            b.join(&bb, &c);
            let u = b.vertex("u");
            b.join(&[u], &x);
            b.join(&[u], &a);
        }
        LegacyVariant::StarW(t) => {
            star_skeleton(&mut b, gp, k, t - 2);
        }
    }
    let head = Head::new(Construction::Legacy(variant), gp, Problem::DominatingSet, k, Problem::Hfc(variant.pattern()))
        .param("variant", variant)
        .param("k", k);
    Ok(b.finish(head, k))
}
