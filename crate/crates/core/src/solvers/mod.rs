//! Exact reference solvers and quick no-certificates.

mod certificates;
mod domatic;
mod domination;
mod hfc;

pub use certificates::{bistar_no_certificate, star_no_certificate};
pub use domatic::{is_domatic_partition, solve_domatic};
pub use domination::{is_dominating_set, is_vertex_cover, solve_dominating_set, solve_vertex_cover};
pub use hfc::{
    check_hfc_witness, default_ceiling, solve_hfc, solve_hfc_graph, solve_hfc_with, Engine,
    HfcOptions, BUDGET_ENV,
};

use crate::graph::EdgeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Edges(EdgeSet),
    Vertices(Vec<usize>),
    Sets(Vec<Vec<usize>>),
}

/// Answer of a decision problem, with a witness for yes-answers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub answer: bool,
    pub witness: Option<Witness>,
}

impl Decision {
    pub fn yes(witness: Witness) -> Self {
        Decision { answer: true, witness: Some(witness) }
    }

    pub fn no() -> Self {
        Decision { answer: false, witness: None }
    }

    pub fn edges(&self) -> Option<&EdgeSet> {
        match &self.witness {
            Some(Witness::Edges(f)) => Some(f),
            _ => None,
        }
    }

    pub fn vertices(&self) -> Option<&[usize]> {
        match &self.witness {
            Some(Witness::Vertices(v)) => Some(v),
            _ => None,
        }
    }

    pub fn sets(&self) -> Option<&[Vec<usize>]> {
        match &self.witness {
            Some(Witness::Sets(s)) => Some(s),
            _ => None,
        }
    }
}

/// Calls `f` on every `s`-subset of `0..n` in lexicographic order until it returns `true`.
pub(crate) fn first_subset<F: FnMut(&[usize]) -> bool>(n: usize, s: usize, mut f: F) -> Option<Vec<usize>> {
    if s > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        if f(&idx) {
            return Some(idx);
        }
        let mut i = s;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - s + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub(crate) fn binomial_sum(m: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for i in 0..=k.min(m) {
        total = total.saturating_add(c);
        c = c.saturating_mul((m - i) as u128) / (i as u128 + 1);
    }
    total
}
