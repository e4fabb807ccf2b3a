use crate::error::{Error, Result};
use crate::graph::{build_pattern, universal_separator, Graph, Pattern};

use super::classify::min_degree_vertex;
use super::{guard, Builder, Construction, Head, LabeledReduction, Problem, ReductionOptions};

/// Vertex Cover to XFC(H) for connected, non-complete H without a universal
/// separator.
///
/// Every edge uv of `gp` is subdivided and the subdivision vertex blown up
/// into a copy of H adjacent to u and v; the copies share the vertex w.
/// Layout: V' (the source vertices, independent), w, then W_{u,v} for each
/// edge in lexicographic order.
pub fn reduce_vc(gp: &Graph, h: &Pattern, k: usize) -> Result<LabeledReduction> {
    vc(gp, h, k, &ReductionOptions::default())
}

pub(crate) fn vc(gp: &Graph, h: &Pattern, k: usize, opts: &ReductionOptions) -> Result<LabeledReduction> {
    let hg = build_pattern(h)?;
    if !hg.is_connected() {
        return Err(Error::BadPattern(format!("{h} is disconnected")));
    }
    if hg.is_complete() {
        return Err(Error::BadPattern(format!("{h} is complete")));
    }
    if universal_separator(&hg)?.exists() {
        return Err(Error::BadPattern(format!("{h} has a universal separator")));
    }
    if let Some(&v) = gp.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    let w = opts.w.unwrap_or_else(|| min_degree_vertex(&hg));
    if w >= hg.n() || hg.is_universal(w) {
        return Err(Error::BadParameter(format!("w = {w} is not a non-universal vertex of {h}")));
    }
    let n = gp.n();
    let edges = gp.edges();
    guard(n as u128 + (edges.len() * (hg.n() - 1)) as u128 + 1, opts)?;
    let mut b = Builder::new();
    let src = b.block("V'", n);
    let wv = b.vertex("w");
    b.join(&[wv], &src);
    let rest: Vec<usize> = (0..hg.n()).filter(|&p| p != w).collect();
    for &(u, v) in &edges {
        let copy = b.block(&format!("W_{{{u},{v}}}"), rest.len());
        let mut map = vec![wv; hg.n()];
        for (&p, &x) in rest.iter().zip(&copy) {
            map[p] = x;
        }
        for (p, q) in hg.edges() {
            b.edge(map[p], map[q]);
        }
        b.join(&copy, &[u, v]);
    }
    let head = Head::new(Construction::Vc, gp, Problem::VertexCover, k, Problem::Hfc(h.clone()))
        .param("h", h)
        .param("w", w)
        .param("k", k);
    Ok(b.finish(head, k))
}
