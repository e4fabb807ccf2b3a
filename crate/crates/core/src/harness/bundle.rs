use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::graph6::{emit_graph6, parse_graph6};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reductions::LabeledReduction;

pub const FORMAT_VERSION: &str = "contraction-lab/bundle/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphRecord {
    pub fn new(g: &Graph) -> Self {
        GraphRecord { graph6: emit_graph6(g), n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }

    /// Decodes the graph and checks that graph6 and edge list agree.
    pub fn graph(&self) -> Result<Graph> {
        let g = parse_graph6(&self.graph6)?;
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let listed = Graph::from_edges(self.n, &pairs)?;
        if g != listed {
            return Err(Error::MalformedGraph6(format!("{} disagrees with the edge list", self.graph6)));
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceRecord {
    /// vc, ds, domatic or hfc:<pattern>.
    pub kind: String,
    pub graph6: String,
    pub parameter: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub params: BTreeMap<String, usize>,
    /// `id(name=value,...)`, including non-numeric parameters.
    pub summary: String,
}

/// A reduction output as written to disk. Field order is the key order of the JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionBundle {
    pub format_version: String,
    pub graph: GraphRecord,
    pub budget: usize,
    /// Contractions allowed in the target (differs from `budget` for k2k1-domatic).
    pub contractions: usize,
    /// Target problem; absent for plain builder output.
    pub target: Option<String>,
    pub labels: BTreeMap<String, Vec<usize>>,
    pub source: Option<SourceRecord>,
    pub provenance: Provenance,
}

impl ReductionBundle {
    pub fn new(red: &LabeledReduction) -> Self {
        ReductionBundle {
            format_version: FORMAT_VERSION.to_string(),
            graph: GraphRecord::new(&red.graph),
            budget: red.budget,
            contractions: red.contraction_budget(),
            target: Some(red.target_kind.to_string()),
            labels: red.labels.clone(),
            source: Some(SourceRecord {
                kind: red.source_kind.to_string(),
                graph6: emit_graph6(&red.source_graph),
                parameter: red.source_parameter,
            }),
            provenance: Provenance {
                construction: red.construction.id().to_string(),
                params: red.params.clone(),
                summary: red.provenance.clone(),
            },
        }
    }

    /// A bare graph with labels, as produced by the canopy and pattern builders.
    pub fn for_graph(name: &str, g: &Graph, labels: BTreeMap<String, Vec<usize>>, params: BTreeMap<String, usize>) -> Self {
        let summary = params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",");
        ReductionBundle {
            format_version: FORMAT_VERSION.to_string(),
            graph: GraphRecord::new(g),
            budget: params.get("k").copied().unwrap_or(0),
            contractions: params.get("k").copied().unwrap_or(0),
            target: None,
            labels,
            source: None,
            provenance: Provenance { construction: name.to_string(), params, summary: format!("{name}({summary})") },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bundles always serialize")
    }

    /// Parses and validates a bundle: graph6 must match the edge list and
    /// labels must name sorted, in-range vertices.
    pub fn from_json(text: &str) -> Result<Self> {
        let b: ReductionBundle =
            serde_json::from_str(text).map_err(|e| Error::BadParameter(format!("bundle: {e}")))?;
        let g = b.graph.graph()?;
        if let Some(src) = &b.source {
            parse_graph6(&src.graph6)?;
        }
        for (name, vs) in &b.labels {
            if vs.windows(2).any(|w| w[0] >= w[1]) || vs.iter().any(|&v| v >= g.n()) {
                return Err(Error::BadParameter(format!("bundle: label {name} is unsorted or out of range")));
            }
        }
        Ok(b)
    }

    pub fn target_graph(&self) -> Result<Graph> {
        self.graph.graph()
    }

    pub fn source_graph(&self) -> Result<Option<Graph>> {
        self.source.as_ref().map(|s| parse_graph6(&s.graph6)).transpose()
    }
}
