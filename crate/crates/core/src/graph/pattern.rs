use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// A forbidden graph H.
///
/// `Star(0)`, `IndepSet(1)` and `Matching(1)` are accepted and realize K1, K1
/// and K2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// K_{1,t}
    Star(usize),
    /// T_{t,t'}: adjacent centers with t and t' leaves.
    Bistar(usize, usize),
    /// tK1
    IndepSet(usize),
    /// tK2
    Matching(usize),
    K2PlusK1,
    K3PlusK1,
    Claw,
    Paw,
    Diamond,
    Arbitrary(Graph),
}

fn need(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::BadParameter(msg.to_string()))
    }
}

/// Canonical realization of a pattern.
///
/// Stars and bistars put centers first (`Bistar(t, t')`: centers 0 and 1, then
/// the t leaves of 0, then the t' leaves of 1). The paw has its hub at 0 and
/// pendant at 3; the diamond has its degree-3 vertices at 0 and 1.
pub fn build_pattern(p: &Pattern) -> Result<Graph> {
    let g = match *p {
        Pattern::Complete(t) => {
            need(t >= 1, "Complete(t) needs t >= 1")?;
            Graph::complete(t)
        }
        Pattern::Path(t) => {
            need(t >= 1, "Path(t) needs t >= 1")?;
            Graph::path(t)
        }
        Pattern::Cycle(t) => {
            need(t >= 3, "Cycle(t) needs t >= 3")?;
            Graph::cycle(t)
        }
        Pattern::Star(t) => {
            let edges: Vec<_> = (1..=t).map(|v| (0, v)).collect();
            Graph::from_edges(t + 1, &edges)?
        }
        Pattern::Bistar(t, t2) => {
            need(t >= t2, "Bistar(t, t') needs t >= t'")?;
            let mut edges = vec![(0, 1)];
            edges.extend((0..t).map(|i| (0, 2 + i)));
            edges.extend((0..t2).map(|i| (1, 2 + t + i)));
            Graph::from_edges(t + t2 + 2, &edges)?
        }
        Pattern::IndepSet(t) => {
            need(t >= 1, "IndepSet(t) needs t >= 1")?;
            Graph::empty(t)
        }
        Pattern::Matching(t) => {
            need(t >= 1, "Matching(t) needs t >= 1")?;
            let edges: Vec<_> = (0..t).map(|i| (2 * i, 2 * i + 1)).collect();
            Graph::from_edges(2 * t, &edges)?
        }
        Pattern::K2PlusK1 => Graph::from_edges(3, &[(0, 1)])?,
        Pattern::K3PlusK1 => Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2)])?,
        Pattern::Claw => build_pattern(&Pattern::Star(3))?,
        Pattern::Paw => Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)])?,
        Pattern::Diamond => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])?,
        Pattern::Arbitrary(ref g) => {
            need(g.n() >= 1, "Arbitrary pattern must be nonempty")?;
            g.clone()
        }
    };
    Ok(g)
}

impl Pattern {
    pub fn graph(&self) -> Result<Graph> {
        build_pattern(self)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Complete(t) => write!(f, "K{t}"),
            Pattern::Path(t) => write!(f, "P{t}"),
            Pattern::Cycle(t) => write!(f, "C{t}"),
            Pattern::Star(t) => write!(f, "K1,{t}"),
            Pattern::Bistar(a, b) => write!(f, "T{a},{b}"),
            Pattern::IndepSet(t) => write!(f, "{t}K1"),
            Pattern::Matching(t) => write!(f, "{t}K2"),
            Pattern::K2PlusK1 => write!(f, "K2+K1"),
            Pattern::K3PlusK1 => write!(f, "K3+K1"),
            Pattern::Claw => write!(f, "claw"),
            Pattern::Paw => write!(f, "paw"),
            Pattern::Diamond => write!(f, "diamond"),
            Pattern::Arbitrary(g) => write!(f, "g6:{}", crate::harness::graph6::emit_graph6(g)),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts `K3`, `P4`, `C5`, `K1,3`, `T3,1`, `2K1`, `3K2`, `K2+K1`,
    /// `K3+K1`, `claw`, `paw`, `diamond` and `g6:<graph6>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadPattern(format!("cannot parse pattern {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let s = s.trim();
        if let Some(code) = s.strip_prefix("g6:") {
            return Ok(Pattern::Arbitrary(crate::harness::graph6::parse_graph6(code)?));
        }
        match s.to_ascii_lowercase().as_str() {
            "claw" => return Ok(Pattern::Claw),
            "paw" => return Ok(Pattern::Paw),
            "diamond" => return Ok(Pattern::Diamond),
            "k2+k1" => return Ok(Pattern::K2PlusK1),
            "k3+k1" => return Ok(Pattern::K3PlusK1),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("K1,") {
            return Ok(Pattern::Star(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix('T') {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            return Ok(Pattern::Bistar(num(a)?, num(b)?));
        }
        if let Some(t) = s.strip_suffix("K1") {
            if !t.is_empty() {
                return Ok(Pattern::IndepSet(num(t)?));
            }
        }
        if let Some(t) = s.strip_suffix("K2") {
            if !t.is_empty() {
                return Ok(Pattern::Matching(num(t)?));
            }
        }
        let (head, tail) = s.split_at(1.min(s.len()));
        match head {
            "K" => Ok(Pattern::Complete(num(tail)?)),
            "P" => Ok(Pattern::Path(num(tail)?)),
            "C" => Ok(Pattern::Cycle(num(tail)?)),
            _ => Err(bad()),
        }
    }
}
