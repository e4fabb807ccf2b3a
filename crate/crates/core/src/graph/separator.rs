use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeparatorKind {
    UniversalK1,
    UniversalK2,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeparatorWitness {
    pub kind: SeparatorKind,
    pub vertices: Vec<usize>,
}

impl SeparatorWitness {
    pub fn none() -> Self {
        SeparatorWitness { kind: SeparatorKind::None, vertices: Vec::new() }
    }

    pub fn exists(&self) -> bool {
        self.kind != SeparatorKind::None
    }
}

/// The universal K1 or K2 separator of a connected graph, if any.
///
/// Every separator vertex is adjacent to everything outside the separator, so
/// candidates are universal vertices; singletons are tried before pairs, each
/// in index order.
pub fn universal_separator(h: &Graph) -> Result<SeparatorWitness> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let universal: Vec<usize> = (0..h.n()).filter(|&v| h.is_universal(v)).collect();
    let splits = |k: &[usize]| h.without(k).0.components().len() >= 2;
    for &v in &universal {
        if splits(&[v]) {
            return Ok(SeparatorWitness { kind: SeparatorKind::UniversalK1, vertices: vec![v] });
        }
    }
    for (i, &u) in universal.iter().enumerate() {
        for &v in &universal[i + 1..] {
            if splits(&[u, v]) {
                return Ok(SeparatorWitness { kind: SeparatorKind::UniversalK2, vertices: vec![u, v] });
            }
        }
    }
    Ok(SeparatorWitness::none())
}
