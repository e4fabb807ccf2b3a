use crate::error::{Error, Result};
use crate::graph::{build_pattern, Graph, Pattern};

use super::classify::{classify_graph, Classification};
use super::{guard, Builder, Construction, Head, LabeledReduction, Problem, ReductionOptions};

/// H_E: H with the edge uv subdivided by a new vertex w, where u lies in the
/// universal separator and v outside it. Contracting vw gives back H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enforcer {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
    /// Always the last vertex.
    pub w: usize,
}

/// u is the least separator vertex, v the least vertex outside the separator.
pub(crate) fn enforcer_for(h: &Graph, k: &[usize]) -> Enforcer {
    let u = k[0];
    let v = (0..h.n()).find(|x| !k.contains(x)).expect("separator leaves vertices");
    let mut g = h.clone();
    g.remove_edge(u, v);
    let w = g.add_vertex();
    g.add_edge(u, w);
    g.add_edge(v, w);
    Enforcer { graph: g, u, v, w }
}

/// The enforcer of a non-star pattern whose universal separator leaves
/// isomorphic components.
pub fn build_enforcer(h: &Pattern) -> Result<Enforcer> {
    match classify_graph(&build_pattern(h)?) {
        Classification::UniSepHomog { enforcer, .. } => Ok(enforcer),
        other => Err(Error::BadPattern(format!("{h} has no enforcer (case {})", other.name()))),
    }
}

/// Glues `k + 1` copies of `he` onto `g`, identifying `v` with `a` and `w` with
/// `b`. Returns the new graph and the fresh vertices of each copy.
pub fn attach_enforcers(
    g: &Graph,
    a: usize,
    b: usize,
    he: &Graph,
    v: usize,
    w: usize,
    k: usize,
) -> Result<(Graph, Vec<Vec<usize>>)> {
    if !g.has_edge(a, b) {
        return Err(Error::NonEdge(a, b));
    }
    let mut bld = Builder { g: g.clone(), labels: Default::default() };
    let copies = (1..=k + 1).map(|i| glue(&mut bld, &format!("S_{i}"), a, b, he, v, w)).collect();
    Ok((bld.g, copies))
}

fn glue(b: &mut Builder, label: &str, x: usize, y: usize, he: &Graph, v: usize, w: usize) -> Vec<usize> {
    let mut map = vec![usize::MAX; he.n()];
    map[v] = x;
    map[w] = y;
    let mut fresh = Vec::new();
    for p in 0..he.n() {
        if p != v && p != w {
            map[p] = b.vertex(label);
            fresh.push(map[p]);
        }
    }
    for (p, q) in he.edges() {
        b.edge(map[p], map[q]);
    }
    fresh
}

/// b-cliques of `g` as sorted vertex lists, in lexicographic order (b ∈ {1, 2}).
fn small_cliques(g: &Graph, b: usize) -> Vec<Vec<usize>> {
    if b == 1 {
        (0..g.n()).map(|v| vec![v]).collect()
    } else {
        g.edges().into_iter().map(|(u, v)| vec![u, v]).collect()
    }
}

fn set_name(s: &[usize]) -> String {
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// XFC(H′) to XFC(H) when H − K has non-isomorphic components: every b-clique
/// S of `gp` (b = |K|) receives k + c copies of J, each joined to all of S.
pub fn reduce_unisep_strip(gp: &Graph, h: &Pattern, k: usize) -> Result<LabeledReduction> {
    strip(gp, h, k, &ReductionOptions::default())
}

pub(crate) fn strip(gp: &Graph, h: &Pattern, k: usize, opts: &ReductionOptions) -> Result<LabeledReduction> {
    let hg = build_pattern(h)?;
    let Classification::UniSepHetero { k: sep, j, c, h_prime } = classify_graph(&hg) else {
        return Err(Error::BadPattern(format!("{h} is not a universal-separator pattern with distinct components")));
    };
    let sets = small_cliques(gp, sep.len());
    guard(gp.n() as u128 + (sets.len() * (k + c) * j.n()) as u128, opts)?;
    let mut b = Builder::from_source(gp);
    for s in &sets {
        let label = format!("W_{{{}}}", set_name(s));
        for _ in 0..k + c {
            let base = b.g.n();
            let copy = b.block(&label, j.n());
            for (p, q) in j.edges() {
                b.edge(base + p, base + q);
            }
            b.join(&copy, s);
        }
    }
    let head = Head::new(Construction::UnisepStrip, gp, Problem::Hfc(Pattern::Arbitrary(h_prime)), k, Problem::Hfc(h.clone()))
        .param("h", h)
        .param("b", sep.len())
        .param("c", c)
        .param("k", k);
    Ok(b.finish(head, k))
}

/// XFC(tJ) to XFC(H) when H − K is t copies of J: add a universal adjacent
/// pair y, z and protect every edge at y or z with k + 1 enforcers.
pub fn reduce_unisep_homog(gp: &Graph, h: &Pattern, k: usize) -> Result<LabeledReduction> {
    homog(gp, h, k, &ReductionOptions::default())
}

pub(crate) fn homog(gp: &Graph, h: &Pattern, k: usize, opts: &ReductionOptions) -> Result<LabeledReduction> {
    let hg = build_pattern(h)?;
    let Classification::UniSepHomog { k: sep, enforcer, .. } = classify_graph(&hg) else {
        return Err(Error::BadPattern(format!("{h} is not a non-star pattern with isomorphic separator components")));
    };
    let n = gp.n();
    let per_copy = (enforcer.graph.n() - 2) as u128;
    guard((n + 2) as u128 + (2 * n as u128 + 1) * (k as u128 + 1) * per_copy, opts)?;
    let mut b = Builder::from_source(gp);
    let y = b.vertex("y");
    let z = b.vertex("z");
    b.edge(y, z);
    let all: Vec<usize> = (0..n).collect();
    b.join(&all, &[y, z]);
    let (he, v, w) = (&enforcer.graph, enforcer.v, enforcer.w);
    let attach = |b: &mut Builder, p: usize, q: usize, tag: &str| {
        for i in 1..=k + 1 {
            glue(b, &format!("S_{{{tag};{i}}}"), p, q, he, v, w);
        }
    };
    for x in 0..n {
        attach(&mut b, x, y, &format!("{x},y"));
    }
    for x in 0..n {
        attach(&mut b, x, z, &format!("{x},z"));
    }
    attach(&mut b, y, z, "y,z");
    let source = hg.without(&sep).0;
    let head = Head::new(Construction::UnisepHomog, gp, Problem::Hfc(Pattern::Arbitrary(source)), k, Problem::Hfc(h.clone()))
        .param("h", h)
        .param("k", k);
    Ok(b.finish(head, k))
}
