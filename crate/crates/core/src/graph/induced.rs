use super::{build_pattern, DenseGraph, Graph, Pattern, VertexSet};
use crate::error::Result;

/// Restrictions on where an embedding may land in the host.
#[derive(Clone, Debug, Default)]
pub struct SearchScope {
    /// Host vertices that may be used; all when absent.
    pub allowed: Option<VertexSet>,
    /// Host vertices every embedding must use.
    pub required: Vec<usize>,
    /// Per pattern vertex, the host vertices it may map to.
    pub domains: Option<Vec<VertexSet>>,
}

/// Precomputed search plan for one pattern graph.
///
/// Pattern vertices are placed so that each one after the first in its
/// component has a placed neighbor. Twin classes of the pattern are mapped
/// in increasing host order, which removes automorphic duplicates.
#[derive(Clone, Debug)]
pub struct PatternMatcher {
    k: usize,
    order: Vec<usize>,
    links: Vec<Vec<(usize, bool)>>,
    twins: Vec<Vec<(usize, bool)>>,
    degree: Vec<usize>,
}

fn twin(h: &Graph, p: usize, q: usize) -> bool {
    let strip = |a: usize, b: usize| -> Vec<usize> {
        h.neighbors(a).iter().copied().filter(|&x| x != b).collect()
    };
    strip(p, q) == strip(q, p)
}

impl PatternMatcher {
    pub fn new(h: &Graph) -> Self {
        let k = h.n();
        let mut placed = vec![false; k];
        let mut order = Vec::with_capacity(k);
        while order.len() < k {
            let next = (0..k)
                .filter(|&p| !placed[p])
                .max_by_key(|&p| {
                    let linked = h.neighbors(p).iter().filter(|&&q| placed[q]).count();
                    (linked, h.degree(p), std::cmp::Reverse(p))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let mut links = Vec::with_capacity(k);
        let mut twins = Vec::with_capacity(k);
        for (i, &p) in order.iter().enumerate() {
            links.push((0..i).map(|j| (j, h.has_edge(p, order[j]))).collect());
            twins.push(
                (0..i)
                    .filter(|&j| twin(h, p, order[j]))
                    .map(|j| (j, order[j] < p))
                    .collect(),
            );
        }
        let degree = order.iter().map(|&p| h.degree(p)).collect();
        PatternMatcher { k, order, links, twins, degree }
    }

    pub fn pattern_order(&self) -> usize {
        self.k
    }

    /// Calls `visit` with every embedding (indexed by pattern vertex) until it
    /// returns `false`. Embeddings differing only by a pattern automorphism
    /// that permutes twins are reported once.
    pub fn for_each<F: FnMut(&[usize]) -> bool>(&self, g: &DenseGraph, scope: &SearchScope, mut visit: F) {
        if self.k == 0 {
            if scope.required.is_empty() {
                visit(&[]);
            }
            return;
        }
        if self.k > g.n() {
            return;
        }
        let w = g.words();
        let n = g.n();
        let base = match &scope.allowed {
            Some(a) => a.words().to_vec(),
            None => VertexSet::full(n).words().to_vec(),
        };
        let mut required = vec![0u64; w];
        for &r in &scope.required {
            if r >= n || base[r / 64] & (1 << (r % 64)) == 0 {
                return;
            }
            required[r / 64] |= 1 << (r % 64);
        }
        let host_degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut st = State {
            img: vec![0; self.k],
            used: vec![0; w],
            missing: scope.required.len(),
            cand: vec![0; w * self.k],
        };
        let mut map = vec![0; self.k];
        self.step(0, g, scope, &base, &required, &host_degree, &mut st, &mut map, &mut visit);
    }

    pub fn find(&self, g: &DenseGraph, scope: &SearchScope) -> Option<Vec<usize>> {
        let mut out = None;
        self.for_each(g, scope, |m| {
            out = Some(m.to_vec());
            false
        });
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn step<F: FnMut(&[usize]) -> bool>(
        &self,
        i: usize,
        g: &DenseGraph,
        scope: &SearchScope,
        base: &[u64],
        required: &[u64],
        host_degree: &[usize],
        st: &mut State,
        map: &mut [usize],
        visit: &mut F,
    ) -> bool {
        if i == self.k {
            for (pos, &p) in self.order.iter().enumerate() {
                map[p] = st.img[pos];
            }
            return visit(map);
        }
        if st.missing > self.k - i {
            return true;
        }
        let w = g.words();
        let p = self.order[i];
        {
            let cand = &mut st.cand[i * w..(i + 1) * w];
            cand.copy_from_slice(base);
            if let Some(domains) = &scope.domains {
                for (c, d) in cand.iter_mut().zip(domains[p].words()) {
                    *c &= d;
                }
            }
            for (c, u) in cand.iter_mut().zip(&st.used) {
                *c &= !u;
            }
            for &(j, adjacent) in &self.links[i] {
                let row = g.row(st.img[j]);
                if adjacent {
                    for (c, r) in cand.iter_mut().zip(row) {
                        *c &= r;
                    }
                } else {
                    for (c, r) in cand.iter_mut().zip(row) {
                        *c &= !r;
                    }
                }
            }
            if st.missing == self.k - i {
                for (c, r) in cand.iter_mut().zip(required) {
                    *c &= r;
                }
            }
        }
        let mut lo = 0;
        let mut hi = g.n();
        for &(j, earlier_smaller) in &self.twins[i] {
            if earlier_smaller {
                lo = lo.max(st.img[j] + 1);
            } else {
                hi = hi.min(st.img[j]);
            }
        }
        for wi in 0..w {
            let mut word = st.cand[i * w + wi];
            while word != 0 {
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                let c = wi * 64 + b;
                if c < lo || host_degree[c] < self.degree[i] {
                    continue;
                }
                if c >= hi {
                    return true;
                }
                let is_req = required[wi] & (1 << b) != 0;
                st.img[i] = c;
                st.used[wi] |= 1 << b;
                if is_req {
                    st.missing -= 1;
                }
                let go_on = self.step(i + 1, g, scope, base, required, host_degree, st, map, visit);
                st.used[wi] &= !(1 << b);
                if is_req {
                    st.missing += 1;
                }
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
}

struct State {
    img: Vec<usize>,
    used: Vec<u64>,
    missing: usize,
    cand: Vec<u64>,
}

/// Calls `visit` with every induced embedding of `h` in `g` (see [`PatternMatcher::for_each`]).
pub fn for_each_induced<F: FnMut(&[usize]) -> bool>(g: &DenseGraph, h: &Graph, scope: &SearchScope, visit: F) {
    PatternMatcher::new(h).for_each(g, scope, visit)
}

/// Some induced embedding of `h` in `g`, indexed by pattern vertex.
pub fn find_induced(g: &DenseGraph, h: &Graph, scope: &SearchScope) -> Option<Vec<usize>> {
    PatternMatcher::new(h).find(g, scope)
}

/// Whether the subgraph of `g` induced by `alive` has no induced copy of `h`.
pub fn is_h_free(g: &DenseGraph, alive: &VertexSet, h: &Graph) -> bool {
    let scope = SearchScope { allowed: Some(alive.clone()), ..Default::default() };
    PatternMatcher::new(h).find(g, &scope).is_none()
}

/// Lexicographically least vertex set of `g` inducing a copy of `h`.
pub fn contains_induced_graph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let d = g.dense();
    let n = g.n();
    let matcher = PatternMatcher::new(h);
    let sorted = |m: Vec<usize>| {
        let mut m = m;
        m.sort_unstable();
        m
    };
    let mut best = sorted(matcher.find(&d, &SearchScope::default())?);
    let mut prefix: Vec<usize> = Vec::with_capacity(h.n());
    for j in 0..h.n() {
        let lo = prefix.last().map_or(0, |&x| x + 1);
        for v in lo..best[j] {
            let mut allowed = VertexSet::from_iter(n, prefix.iter().copied());
            for x in v..n {
                allowed.insert(x);
            }
            let mut required = prefix.clone();
            required.push(v);
            let scope = SearchScope { allowed: Some(allowed), required, domains: None };
            if let Some(m) = matcher.find(&d, &scope) {
                best = sorted(m);
                break;
            }
        }
        prefix.push(best[j]);
    }
    Some(best)
}

/// Lexicographically least vertex set of `g` inducing the pattern, if any.
pub fn contains_induced(g: &Graph, h: &Pattern) -> Result<Option<Vec<usize>>> {
    Ok(contains_induced_graph(g, &build_pattern(h)?))
}
