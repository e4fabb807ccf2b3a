use crate::error::{Error, Result};
use crate::graph::{build_pattern, Graph, Pattern};

use super::{guard, Builder, Construction, Head, LabeledReduction, Problem, ReductionOptions};

/// XFC(2K1) to XFC(K_{1,t}), t ≥ 3.
///
/// Cliques X, Y, X', Y' of k + 1 vertices are joined to all of V(G'), X to Y
/// and X' to Y'. Every vertex z of those cliques gets t − 2 private
/// (k+1)-cliques, all joined to z and labelled `Z_{z}`.
pub fn reduce_star_np(gp: &Graph, t: usize, k: usize) -> Result<LabeledReduction> {
    star_np(gp, t, k, &ReductionOptions::default())
}

pub(crate) fn star_np(gp: &Graph, t: usize, k: usize, opts: &ReductionOptions) -> Result<LabeledReduction> {
    if t < 3 {
        return Err(Error::BadParameter(format!("star reduction needs t >= 3 (got {t})")));
    }
    let (n, q) = (gp.n() as u128, k as u128 + 1);
    guard(n + 4 * q + 4 * (t as u128 - 2) * q * q, opts)?;
    let mut b = Builder::from_source(gp);
    let src: Vec<usize> = (0..gp.n()).collect();
    let mut hubs = Vec::new();
    for name in ["X", "Y", "X'", "Y'"] {
        let c = b.clique_block(name, k + 1);
        b.join(&c, &src);
        hubs.push(c);
    }
    b.join(&hubs[0], &hubs[1]);
    b.join(&hubs[2], &hubs[3]);
    for z in hubs.concat() {
        let label = format!("Z_{{{z}}}");
        for _ in 0..t - 2 {
            let c = b.clique_block(&label, k + 1);
            b.join(&c, &[z]);
        }
    }
    let head = Head::new(Construction::StarNp, gp, Problem::Hfc(Pattern::IndepSet(2)), k, Problem::Hfc(Pattern::Star(t)))
        .param("t", t)
        .param("k", k);
    Ok(b.finish(head, k))
}

/// XFC(2K1) to XFC(2K2): k + 1 pendant vertices `Z_{u}` on every vertex u.
pub fn reduce_2k2_pendant(gp: &Graph, k: usize) -> Result<LabeledReduction> {
    pendant_2k2(gp, k, &ReductionOptions::default())
}

pub(crate) fn pendant_2k2(gp: &Graph, k: usize, opts: &ReductionOptions) -> Result<LabeledReduction> {
    guard(gp.n() as u128 * (k as u128 + 2), opts)?;
    let mut b = Builder::from_source(gp);
    for u in 0..gp.n() {
        let z = b.block(&format!("Z_{{{u}}}"), k + 1);
        b.join(&z, &[u]);
    }
    let head = Head::new(Construction::TwoK2Pendant, gp, Problem::Hfc(Pattern::IndepSet(2)), k, Problem::Hfc(Pattern::Matching(2)))
        .param("k", k);
    Ok(b.finish(head, k))
}

/// XFC(H − v) to XFC(H) for an isolated vertex v of H: add one isolated vertex.
///
/// v is the least isolated vertex of H.
pub fn pad_plus_k1(gp: &Graph, k: usize, h: &Pattern) -> Result<LabeledReduction> {
    pad_k1(gp, k, h, &ReductionOptions::default())
}

pub(crate) fn pad_k1(gp: &Graph, k: usize, h: &Pattern, opts: &ReductionOptions) -> Result<LabeledReduction> {
    let hg = build_pattern(h)?;
    let v = *hg.isolated_vertices().first().ok_or(Error::NoIsolatedVertex)?;
    guard(gp.n() as u128 + 1, opts)?;
    let mut b = Builder::from_source(gp);
    b.vertex("v");
    let source = Pattern::Arbitrary(hg.without(&[v]).0);
    let head = Head::new(Construction::PadK1, gp, Problem::Hfc(source), k, Problem::Hfc(h.clone()))
        .param("h", h)
        .param("k", k);
    Ok(b.finish(head, k))
}

/// XFC((t−1)K2) to XFC(tK2), t ≥ 3: add a disjoint clique `K` of k + 2 vertices.
pub fn pad_plus_clique(gp: &Graph, k: usize, t: usize) -> Result<LabeledReduction> {
    pad_clique(gp, k, t, &ReductionOptions::default())
}

pub(crate) fn pad_clique(gp: &Graph, k: usize, t: usize, opts: &ReductionOptions) -> Result<LabeledReduction> {
    if t < 3 {
        return Err(Error::BadParameter(format!("matching padding needs t >= 3 (got {t})")));
    }
    guard(gp.n() as u128 + k as u128 + 2, opts)?;
    let mut b = Builder::from_source(gp);
    b.clique_block("K", k + 2);
    let head = Head::new(Construction::PadClique, gp, Problem::Hfc(Pattern::Matching(t - 1)), k, Problem::Hfc(Pattern::Matching(t)))
        .param("t", t)
        .param("k", k);
    Ok(b.finish(head, k))
}
