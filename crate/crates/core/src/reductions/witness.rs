use crate::error::{Error, Result};
use crate::graph::{EdgeSet, VertexPartition};
use crate::solvers::{check_hfc_witness, is_dominating_set, is_domatic_partition, is_vertex_cover, Witness};

use super::{Construction, LabeledReduction, Problem};

/// A solution of the target instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetWitness {
    Edges(EdgeSet),
    Partition(VertexPartition),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidWitness(msg.into())
}

fn check_source(red: &LabeledReduction, source: &Witness) -> Result<()> {
    let g = &red.source_graph;
    let p = red.source_parameter;
    let ok = match (&red.source_kind, source) {
        (Problem::VertexCover, Witness::Vertices(t)) => t.len() <= p && is_vertex_cover(g, t),
        (Problem::DominatingSet, Witness::Vertices(d)) => d.len() <= p && is_dominating_set(g, d),
        (Problem::Domatic, Witness::Sets(s)) => is_domatic_partition(g, s, p),
        (Problem::Hfc(h), Witness::Edges(f)) => check_hfc_witness(g, &h.graph()?, p, f),
        _ => return Err(invalid(format!("witness kind does not fit a {} source", red.source_kind))),
    };
    if ok {
        Ok(())
    } else {
        Err(invalid(format!("not a solution of the {} source instance", red.source_kind)))
    }
}

fn single(red: &LabeledReduction, name: &str) -> Result<usize> {
    match red.label(name) {
        [v] => Ok(*v),
        _ => Err(invalid(format!("reduction has no single vertex labelled {name}"))),
    }
}

/// Lifts a source solution to a target solution.
///
/// Dominating sets D become {hub x_i : v_i ∈ D}, vertex covers T become
/// {w u : u ∈ T}, contraction sets of H-free sources carry over unchanged and
/// d dominating sets become the partition {M_i ∪ u_i} plus singletons.
pub fn forward_witness(red: &LabeledReduction, source: &Witness) -> Result<TargetWitness> {
    check_source(red, source)?;
    match (red.construction, source) {
        (Construction::Vc, Witness::Vertices(t)) => {
            let w = single(red, "w")?;
            let v = red.label("V'");
            Ok(TargetWitness::Edges(t.iter().map(|&u| (w, v[u])).collect()))
        }
        (Construction::DsTree | Construction::DsBistarAsym | Construction::DsBistarSym, Witness::Vertices(d)) => {
            let w = single(red, "w")?;
            let x = red.label("X");
            Ok(TargetWitness::Edges(d.iter().map(|&i| (w, x[i])).collect()))
        }
        (Construction::Legacy(variant), Witness::Vertices(d)) => {
            let hub = single(red, variant.hub())?;
            let spokes = red.label(variant.spokes());
            Ok(TargetWitness::Edges(d.iter().map(|&i| (hub, spokes[i])).collect()))
        }
        (Construction::K2K1Domatic, Witness::Sets(sets)) => {
            let u = red.label("U");
            let m = red.label("M");
            let d = u.len();
            let mut blocks: Vec<Vec<usize>> = (0..d).map(|i| vec![u[i]]).collect();
            let mut placed = vec![false; m.len()];
            for (i, s) in sets.iter().take(d).enumerate() {
                for &v in s {
                    blocks[i].push(m[v]);
                    placed[v] = true;
                }
            }
            if let Some(last) = blocks.last_mut() {
                last.extend((0..m.len()).filter(|&v| !placed[v]).map(|v| m[v]));
            }
            let lower = red.labels.iter().filter(|(k, _)| k.starts_with("L_")).flat_map(|(_, vs)| vs.iter());
            blocks.extend(lower.map(|&v| vec![v]));
            Ok(TargetWitness::Partition(VertexPartition::new(&red.graph, blocks)?))
        }
        (
            Construction::UnisepStrip
            | Construction::UnisepHomog
            | Construction::StarNp
            | Construction::TwoK2Pendant
            | Construction::PadK1
            | Construction::PadClique,
            Witness::Edges(f),
        ) => {
            let v = red.label("V'");
            Ok(TargetWitness::Edges(f.iter().map(|(a, b)| (v[a], v[b])).collect()))
        }
        (c, _) => Err(Error::UnsupportedReduction(format!("no forward witness for {c}"))),
    }
}

/// Reads a vertex cover of the source off a solution `f` of a `vc` target.
///
/// u joins T when wu ∈ F, or when F has an edge from u into W_{u,v}. After
/// that, every W_{u,v} touched by an edge inside it or from w adds its lower
/// endpoint unless u or v is already in T.
pub fn backward_witness_vc(red: &LabeledReduction, f: &EdgeSet) -> Result<Vec<usize>> {
    if red.construction != Construction::Vc {
        return Err(Error::UnsupportedReduction(format!("backward witness is defined for vc, not {}", red.construction)));
    }
    f.check_in(&red.graph).map_err(|e| invalid(e.to_string()))?;
    let n = red.source_graph.n();
    let w = single(red, "w")?;
    let mut owner = vec![None; red.graph.n()];
    for (u, v) in red.source_graph.edges() {
        for &x in red.label(&format!("W_{{{u},{v}}}")) {
            owner[x] = Some((u, v));
        }
    }
    let mut in_t = vec![false; n];
    for (a, b) in f.iter() {
        for (s, o) in [(a, b), (b, a)] {
            if s < n && o == w {
                in_t[s] = true;
            }
            if s < n && owner[o].is_some_and(|(u, v)| u == s || v == s) {
                in_t[s] = true;
            }
        }
    }
    for (a, b) in f.iter() {
        let touched = match (owner[a], owner[b]) {
            (Some(e1), Some(e2)) if e1 == e2 => Some(e1),
            (Some(e), None) if b == w => Some(e),
            (None, Some(e)) if a == w => Some(e),
            _ => None,
        };
        if let Some((u, v)) = touched {
            if !in_t[u] && !in_t[v] {
                in_t[u] = true;
            }
        }
    }
    Ok((0..n).filter(|&u| in_t[u]).collect())
}
