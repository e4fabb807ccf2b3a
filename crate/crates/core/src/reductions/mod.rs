//! Instance transformations into H-free Contraction, the case analysis that
//! picks one for a given H, and witness lifting.

mod classify;
mod domatic;
mod dominating;
mod general;
mod small;
mod unisep;
mod witness;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use classify::{classify_pattern, Classification};
pub use domatic::{peel_universal_vertices, reduce_k2k1_domatic};
pub use dominating::{reduce_ds_bistar_asym, reduce_ds_bistar_sym, reduce_ds_legacy, reduce_ds_tree, LegacyVariant};
pub use general::reduce_vc;
pub use small::{pad_plus_clique, pad_plus_k1, reduce_2k2_pendant, reduce_star_np};
pub use unisep::{attach_enforcers, build_enforcer, reduce_unisep_homog, reduce_unisep_strip, Enforcer};
pub use witness::{backward_witness_vc, forward_witness, TargetWitness};

use crate::error::{Error, Result};
use crate::graph::{Graph, Pattern};
use crate::solvers::{
    solve_dominating_set, solve_domatic, solve_hfc_with, solve_vertex_cover, Decision, HfcOptions,
};

/// A decision problem on graphs, with its parameter supplied separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Problem {
    VertexCover,
    DominatingSet,
    /// At least d pairwise disjoint dominating sets.
    Domatic,
    /// H-free Contraction.
    Hfc(Pattern),
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::VertexCover => write!(f, "vc"),
            Problem::DominatingSet => write!(f, "ds"),
            Problem::Domatic => write!(f, "domatic"),
            Problem::Hfc(h) => write!(f, "hfc:{h}"),
        }
    }
}

impl Problem {
    /// Exact answer for `(g, parameter)`.
    pub fn solve(&self, g: &Graph, parameter: usize, opts: &HfcOptions) -> Result<Decision> {
        match self {
            Problem::VertexCover => Ok(solve_vertex_cover(g, parameter)),
            Problem::DominatingSet => Ok(solve_dominating_set(g, parameter)),
            Problem::Domatic => solve_domatic(g, parameter),
            Problem::Hfc(h) => solve_hfc_with(g, h, parameter, opts),
        }
    }
}

/// Identifier of a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Vc,
    UnisepStrip,
    UnisepHomog,
    StarNp,
    TwoK2Pendant,
    K2K1Domatic,
    PadK1,
    PadClique,
    DsTree,
    DsBistarAsym,
    DsBistarSym,
    Legacy(LegacyVariant),
}

impl Construction {
    pub const ALL: [Construction; 17] = [
        Construction::Vc,
        Construction::UnisepStrip,
        Construction::UnisepHomog,
        Construction::StarNp,
        Construction::TwoK2Pendant,
        Construction::K2K1Domatic,
        Construction::PadK1,
        Construction::PadClique,
        Construction::DsTree,
        Construction::DsBistarAsym,
        Construction::DsBistarSym,
        Construction::Legacy(LegacyVariant::Claw),
        Construction::Legacy(LegacyVariant::TwoK2A),
        Construction::Legacy(LegacyVariant::TwoK2B),
        Construction::Legacy(LegacyVariant::K3K1),
        Construction::Legacy(LegacyVariant::T12),
        Construction::Legacy(LegacyVariant::StarW(4)),
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Construction::Vc => "vc",
            Construction::UnisepStrip => "unisep-strip",
            Construction::UnisepHomog => "unisep-homog",
            Construction::StarNp => "star-np",
            Construction::TwoK2Pendant => "2k2-pendant",
            Construction::K2K1Domatic => "k2k1-domatic",
            Construction::PadK1 => "pad-k1",
            Construction::PadClique => "pad-clique",
            Construction::DsTree => "ds-tree",
            Construction::DsBistarAsym => "ds-bistar-asym",
            Construction::DsBistarSym => "ds-bistar-sym",
            Construction::Legacy(LegacyVariant::Claw) => "legacy-claw",
            Construction::Legacy(LegacyVariant::TwoK2A) => "legacy-2k2a",
            Construction::Legacy(LegacyVariant::TwoK2B) => "legacy-2k2b",
            Construction::Legacy(LegacyVariant::K3K1) => "legacy-k3k1",
            Construction::Legacy(LegacyVariant::T12) => "legacy-t12",
            Construction::Legacy(LegacyVariant::StarW(_)) => "legacy-starw",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Construction {
    type Err = Error;

    /// Parses an id; `legacy-starw` yields `StarW(4)`.
    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnsupportedReduction(format!("unknown construction {s:?}")))
    }
}

/// A constructed target instance with named vertex groups.
///
/// `labels` partitions the target's vertex set. Source vertices copied
/// verbatim into the target are listed under `"V'"`, in source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledReduction {
    pub construction: Construction,
    pub graph: Graph,
    /// k, or h for the domatic reduction.
    pub budget: usize,
    pub labels: BTreeMap<String, Vec<usize>>,
    pub source_graph: Graph,
    pub source_kind: Problem,
    pub source_parameter: usize,
    pub target_kind: Problem,
    /// Named integer parameters (k, t, t', d, N, h, w, ...).
    pub params: BTreeMap<String, usize>,
    pub provenance: String,
}

impl LabeledReduction {
    /// Contractions allowed in the target: N − h for the domatic reduction, the budget otherwise.
    pub fn contraction_budget(&self) -> usize {
        match self.construction {
            Construction::K2K1Domatic => self.graph.n() - self.budget,
            _ => self.budget,
        }
    }

    pub fn label(&self, name: &str) -> &[usize] {
        self.labels.get(name).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn solve_source(&self, opts: &HfcOptions) -> Result<Decision> {
        self.source_kind.solve(&self.source_graph, self.source_parameter, opts)
    }

    pub fn solve_target(&self, opts: &HfcOptions) -> Result<Decision> {
        self.target_kind.solve(&self.graph, self.contraction_budget(), opts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOptions {
    /// Largest target vertex count a construction may produce.
    pub max_vertices: usize,
    /// Overrides the distinguished pattern vertex w where a construction has one.
    pub w: Option<usize>,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions { max_vertices: 100_000, w: None }
    }
}

/// A construction together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Request {
    Vc { h: Pattern, k: usize },
    UnisepStrip { h: Pattern, k: usize },
    UnisepHomog { h: Pattern, k: usize },
    StarNp { t: usize, k: usize },
    TwoK2Pendant { k: usize },
    K2K1Domatic { d: usize },
    PadK1 { h: Pattern, k: usize },
    PadClique { t: usize, k: usize },
    DsTree { h: Pattern, k: usize },
    DsBistarAsym { t: usize, t2: usize, k: usize },
    DsBistarSym { t: usize, t2: usize, k: usize },
    Legacy { variant: LegacyVariant, k: usize },
}

/// Applies `req` to the source graph `gp`.
pub fn reduce(gp: &Graph, req: &Request, opts: &ReductionOptions) -> Result<LabeledReduction> {
    match req {
        Request::Vc { h, k } => general::vc(gp, h, *k, opts),
        Request::UnisepStrip { h, k } => unisep::strip(gp, h, *k, opts),
        Request::UnisepHomog { h, k } => unisep::homog(gp, h, *k, opts),
        Request::StarNp { t, k } => small::star_np(gp, *t, *k, opts),
        Request::TwoK2Pendant { k } => small::pendant_2k2(gp, *k, opts),
        Request::K2K1Domatic { d } => domatic::k2k1(gp, *d, opts),
        Request::PadK1 { h, k } => small::pad_k1(gp, *k, h, opts),
        Request::PadClique { t, k } => small::pad_clique(gp, *k, *t, opts),
        Request::DsTree { h, k } => dominating::tree(gp, h, *k, opts),
        Request::DsBistarAsym { t, t2, k } => dominating::bistar_asym(gp, *t, *t2, *k, opts),
        Request::DsBistarSym { t, t2, k } => dominating::bistar_sym(gp, *t, *t2, *k, opts),
        Request::Legacy { variant, k } => dominating::legacy(gp, *k, *variant, opts),
    }
}

pub(crate) fn guard(needed: u128, opts: &ReductionOptions) -> Result<()> {
    if needed > opts.max_vertices as u128 {
        Err(Error::SizeGuard { needed, limit: opts.max_vertices })
    } else {
        Ok(())
    }
}

/// Incremental construction of a labelled target graph.
pub(crate) struct Builder {
    pub g: Graph,
    pub labels: BTreeMap<String, Vec<usize>>,
}

impl Builder {
    pub fn new() -> Self {
        Builder { g: Graph::empty(0), labels: BTreeMap::new() }
    }

    /// Starts from a copy of `gp`, labelled `V'`.
    pub fn from_source(gp: &Graph) -> Self {
        let mut b = Builder { g: gp.clone(), labels: BTreeMap::new() };
        if gp.n() > 0 {
            b.labels.insert("V'".into(), (0..gp.n()).collect());
        }
        b
    }

    /// `size` fresh vertices appended to `label`.
    pub fn block(&mut self, label: &str, size: usize) -> Vec<usize> {
        let vs: Vec<usize> = (0..size).map(|_| self.g.add_vertex()).collect();
        self.labels.entry(label.to_string()).or_default().extend(&vs);
        vs
    }

    pub fn vertex(&mut self, label: &str) -> usize {
        self.block(label, 1)[0]
    }

    pub fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.g.add_edge(u, v);
            }
        }
    }

    pub fn clique_block(&mut self, label: &str, size: usize) -> Vec<usize> {
        let vs = self.block(label, size);
        self.clique(&vs);
        vs
    }

    pub fn join(&mut self, a: &[usize], b: &[usize]) {
        for &u in a {
            for &v in b {
                self.g.add_edge(u, v);
            }
        }
    }

    pub fn edge(&mut self, u: usize, v: usize) {
        self.g.add_edge(u, v);
    }

    pub fn finish(self, head: Head, budget: usize) -> LabeledReduction {
        let mut labels = self.labels;
        labels.retain(|_, vs| !vs.is_empty());
        let provenance = format!(
            "{}({})",
            head.construction.id(),
            head.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
        );
        LabeledReduction {
            construction: head.construction,
            graph: self.g,
            budget,
            labels,
            source_graph: head.source_graph,
            source_kind: head.source_kind,
            source_parameter: head.source_parameter,
            target_kind: head.target_kind,
            params: head.params.into_iter().filter_map(|(k, v)| v.parse().ok().map(|v| (k, v))).collect(),
            provenance,
        }
    }
}

/// Everything about a reduction except the target graph.
pub(crate) struct Head {
    pub construction: Construction,
    pub source_graph: Graph,
    pub source_kind: Problem,
    pub source_parameter: usize,
    pub target_kind: Problem,
    /// Parameters in provenance order; numeric ones also land in `params`.
    pub params: Vec<(String, String)>,
}

impl Head {
    pub fn new(construction: Construction, gp: &Graph, source_kind: Problem, source_parameter: usize, target_kind: Problem) -> Self {
        Head {
            construction,
            source_graph: gp.clone(),
            source_kind,
            source_parameter,
            target_kind,
            params: Vec::new(),
        }
    }

    pub fn param(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.params.push((name.to_string(), value.to_string()));
        self
    }
}

/// Closed-neighborhood relation of the source graph: `i == j` or `v_i v_j` is an edge.
pub(crate) fn dominates(gp: &Graph, i: usize, j: usize) -> bool {
    i == j || gp.has_edge(i, j)
}
