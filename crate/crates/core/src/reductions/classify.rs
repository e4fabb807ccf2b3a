use crate::graph::{build_pattern, canonical_form, is_isomorphic, universal_separator, Graph, Pattern};

use super::unisep::{enforcer_for, Enforcer};

/// Which case of the NP-completeness induction handles a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// K1 or K2.
    PolyTrivial,
    CompleteKt(usize),
    /// Connected, non-complete, no universal separator; `w` is the vertex
    /// identified across copies.
    GeneralVc { w: usize },
    /// H − K has at least two non-isomorphic components. `j` is a smallest
    /// one, `c` counts the components isomorphic to it and `h_prime` is H with
    /// all of them removed.
    UniSepHetero { k: Vec<usize>, j: Graph, c: usize, h_prime: Graph },
    /// H − K is t copies of `j`.
    UniSepHomog { k: Vec<usize>, j: Graph, t: usize, enforcer: Enforcer },
    /// K_{1,t}, t ≥ 3.
    StarBranch(usize),
    /// H has the isolated vertex `v`; `rest` is H − v.
    IsolatedVertexPad { v: usize, rest: Graph },
    /// tK2, t ≥ 3.
    MatchingChain(usize),
    /// Disconnected with a component of at least three vertices.
    DisconnectedBigComponent { component: Vec<usize>, h_prime: Graph },
    /// 2K1, P3, 3K1, K2+K1 or 2K2.
    SmallBase(String),
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::PolyTrivial => "PolyTrivial",
            Classification::CompleteKt(_) => "CompleteKt",
            Classification::GeneralVc { .. } => "GeneralVC",
            Classification::UniSepHetero { .. } => "UniSepHetero",
            Classification::UniSepHomog { .. } => "UniSepHomog",
            Classification::StarBranch(_) => "StarBranch",
            Classification::IsolatedVertexPad { .. } => "IsolatedVertexPad",
            Classification::MatchingChain(_) => "MatchingChain",
            Classification::DisconnectedBigComponent { .. } => "DisconnectedBigComponent",
            Classification::SmallBase(_) => "SmallBase",
        }
    }
}

/// Lowest-index vertex of minimum degree.
pub(crate) fn min_degree_vertex(h: &Graph) -> usize {
    (0..h.n()).min_by_key(|&v| (h.degree(v), v)).unwrap_or(0)
}

pub(crate) fn is_star(h: &Graph) -> Option<usize> {
    let n = h.n();
    if n < 2 || !h.is_tree() {
        return None;
    }
    (0..n).any(|v| h.degree(v) == n - 1).then_some(n - 1)
}

/// Classifies H by the case analysis of the NP-completeness proof.
///
/// The order of tests: order at most three, complete, disconnected
/// (big component, isolated vertex, 2K2, tK2), connected without a universal
/// separator, star, heterogeneous, homogeneous.
pub fn classify_pattern(h: &Pattern) -> crate::Result<Classification> {
    Ok(classify_graph(&build_pattern(h)?))
}

pub(crate) fn classify_graph(h: &Graph) -> Classification {
    let n = h.n();
    let m = h.m();
    if n <= 2 {
        return if h.is_complete() { Classification::PolyTrivial } else { Classification::SmallBase("2K1".into()) };
    }
    if n == 3 {
        return match m {
            3 => Classification::CompleteKt(3),
            2 => Classification::SmallBase("P3".into()),
            1 => Classification::SmallBase("K2+K1".into()),
            _ => Classification::SmallBase("3K1".into()),
        };
    }
    if h.is_complete() {
        return Classification::CompleteKt(n);
    }
    let comps = h.components();
    if comps.len() > 1 {
        if let Some(c) = comps.iter().find(|c| c.len() >= 3) {
            return Classification::DisconnectedBigComponent { component: c.clone(), h_prime: h.induced(c) };
        }
        if let Some(&v) = h.isolated_vertices().first() {
            return Classification::IsolatedVertexPad { v, rest: h.without(&[v]).0 };
        }
        let t = comps.len();
        return if t == 2 { Classification::SmallBase("2K2".into()) } else { Classification::MatchingChain(t) };
    }
    let sep = universal_separator(h).expect("connected");
    if !sep.exists() {
        return Classification::GeneralVc { w: min_degree_vertex(h) };
    }
    if let Some(t) = is_star(h) {
        return Classification::StarBranch(t);
    }
    let k = sep.vertices.clone();
    let (rest, kept) = h.without(&k);
    let parts: Vec<Vec<usize>> = rest.components();
    let graphs: Vec<Graph> = parts.iter().map(|p| rest.induced(p)).collect();
    let j_idx = (0..graphs.len())
        .min_by(|&a, &b| {
            (graphs[a].n(), canonical_form(&graphs[a])).cmp(&(graphs[b].n(), canonical_form(&graphs[b])))
        })
        .expect("separator leaves components");
    let j = graphs[j_idx].clone();
    let same: Vec<usize> = (0..graphs.len()).filter(|&i| is_isomorphic(&graphs[i], &j)).collect();
    if same.len() < graphs.len() {
        let drop: Vec<usize> = same.iter().flat_map(|&i| parts[i].iter().map(|&x| kept[x])).collect();
        let h_prime = h.without(&drop).0;
        return Classification::UniSepHetero { k, j, c: same.len(), h_prime };
    }
    let enforcer = enforcer_for(h, &k);
    Classification::UniSepHomog { k, j, t: graphs.len(), enforcer }
}
