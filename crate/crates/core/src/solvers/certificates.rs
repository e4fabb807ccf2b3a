use crate::error::{Error, Result};
use crate::graph::{build_k1ab, build_k1abc, Graph, PatternMatcher, SearchScope, VertexSet};

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// An induced K_{1,t,k+1} in `g`; its presence shows that `g` cannot be made
/// K_{1,t}-free with `k` contractions.
pub fn star_no_certificate(g: &Graph, t: usize, k: usize) -> Result<Option<Vec<usize>>> {
    if t < 2 {
        return Err(Error::BadParameter("star certificate needs t >= 2".into()));
    }
    Ok(k1ab_copy(g, t, k))
}

fn k1ab_copy(g: &Graph, t: usize, k: usize) -> Option<Vec<usize>> {
    let h = build_k1ab(t.max(1), k + 1).ok()?;
    if h.n() > g.n() {
        return None;
    }
    PatternMatcher::new(&h).find(&g.dense(), &SearchScope::default()).map(sorted)
}

/// An induced K_{1,t,k+1,t'} whose pendant vertices have degree 1 in `g`; a
/// no-certificate for making `g` T_{t,t'}-free with `k` contractions. With
/// `t' = 0` this is the star certificate.
pub fn bistar_no_certificate(g: &Graph, t: usize, t2: usize, k: usize) -> Result<Option<Vec<usize>>> {
    if t < t2 {
        return Err(Error::BadParameter("bistar certificate needs t >= t'".into()));
    }
    if t2 == 0 {
        return Ok(k1ab_copy(g, t, k));
    }
    let h = build_k1abc(t, k + 1, t2)?;
    if h.n() > g.n() {
        return Ok(None);
    }
    let body = 1 + (t + 1) * (k + 1);
    let leaves = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| g.degree(v) == 1));
    let all = VertexSet::full(g.n());
    let domains = (0..h.n()).map(|p| if p >= body { leaves.clone() } else { all.clone() }).collect();
    let scope = SearchScope { domains: Some(domains), ..Default::default() };
    Ok(PatternMatcher::new(&h).find(&g.dense(), &scope).map(sorted))
}
