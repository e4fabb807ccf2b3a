use crate::error::{Error, Result};
use crate::graph::{Graph, Pattern};

use super::{dominates, guard, Builder, Construction, Head, LabeledReduction, Problem, ReductionOptions};

/// Removes universal vertices one at a time, lowering `d` by one for each.
/// Returns the reduced graph, the reduced target and the removed vertices
/// (original indices).
pub fn peel_universal_vertices(gp: &Graph, d: usize) -> (Graph, usize, Vec<usize>) {
    let mut g = gp.clone();
    let mut index: Vec<usize> = (0..gp.n()).collect();
    let mut d = d;
    let mut removed = Vec::new();
    while let Some(v) = (0..g.n()).find(|&v| g.is_universal(v)) {
        removed.push(index[v]);
        let (rest, kept) = g.without(&[v]);
        index = kept.iter().map(|&i| index[i]).collect();
        g = rest;
        d = d.saturating_sub(1);
    }
    (g, d, removed)
}

/// Domatic Number to XFC(K2+K1).
///
/// U is a d-clique joined to the independent set M = {m_i}; L is a clique
/// made of blocks L_1..L_n of n + 1 vertices, with m_i joined to L_j when v_i
/// dominates v_j. The budget is h = n(n+1) + d blocks, that is N − h
/// contractions.
pub fn reduce_k2k1_domatic(gp: &Graph, d: usize) -> Result<LabeledReduction> {
    k2k1(gp, d, &ReductionOptions::default())
}

pub(crate) fn k2k1(gp: &Graph, d: usize, opts: &ReductionOptions) -> Result<LabeledReduction> {
    let n = gp.n();
    if n < 2 {
        return Err(Error::TooSmall(format!("domatic reduction needs n >= 2 (got {n})")));
    }
    if let Some(v) = (0..n).find(|&v| gp.is_universal(v)) {
        return Err(Error::UniversalVertexPresent(v));
    }
    let big_n = n * (n + 1) + n + d;
    guard(big_n as u128, opts)?;
    let h = n * (n + 1) + d;
    let mut b = Builder::new();
    let u = b.clique_block("U", d);
    let m = b.block("M", n);
    b.join(&u, &m);
    let l: Vec<Vec<usize>> = (1..=n).map(|i| b.block(&format!("L_{i}"), n + 1)).collect();
    b.clique(&l.concat());
    for i in 0..n {
        for (j, lj) in l.iter().enumerate() {
            if dominates(gp, i, j) {
                b.join(&[m[i]], lj);
            }
        }
    }
    let head = Head::new(Construction::K2K1Domatic, gp, Problem::Domatic, d, Problem::Hfc(Pattern::K2PlusK1))
        .param("d", d)
        .param("N", big_n)
        .param("h", h);
    Ok(b.finish(head, h))
}
