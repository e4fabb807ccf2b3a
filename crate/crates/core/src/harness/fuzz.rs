use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::bundle::ReductionBundle;
use crate::error::{Error, Result};
use crate::graph::{Graph, Pattern};
use crate::reductions::{forward_witness, reduce, Construction, LabeledReduction, Problem, ReductionOptions, Request, TargetWitness};
use crate::solvers::{bistar_no_certificate, check_hfc_witness, star_no_certificate, Engine, HfcOptions};

/// Trial `i` draws from ChaCha8 seeded with `seed_from_u64(seed)` on stream `i`.
pub const RNG_ID: &str = "rand_chacha::ChaCha8Rng/seed_from_u64(seed)/stream=trial";

const MAX_ATTEMPTS: usize = 10_000;

/// The six-vertex spider used for ds-tree: centre 0 with legs 1-2, 3 and 4-5.
pub fn spider_tree() -> Pattern {
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (0, 4), (4, 5)]).expect("valid tree");
    Pattern::Arbitrary(g)
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub construction: Construction,
    /// H for vc, unisep-strip, unisep-homog, pad-k1 and ds-tree.
    pub pattern: Option<Pattern>,
    /// t for star-np, pad-clique and the bistar constructions.
    pub t: usize,
    /// t' for the bistar constructions.
    pub t2: usize,
    pub trials: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Upper end of k (of d − 1 for k2k1-domatic).
    pub k_max: usize,
    /// Samples with this many target vertices or more are redrawn.
    pub max_target: usize,
    pub seed: u64,
    pub engine: Engine,
}

impl FuzzConfig {
    /// Defaults: H = P4 for vc, paw for unisep-strip, diamond for
    /// unisep-homog, K3+K1 for pad-k1, the spider for ds-tree; t = 3, t' = 1
    /// (t' = 3 for ds-bistar-sym).
    pub fn new(construction: Construction) -> Self {
        let pattern = match construction {
            Construction::Vc => Some(Pattern::Path(4)),
            Construction::UnisepStrip => Some(Pattern::Paw),
            Construction::UnisepHomog => Some(Pattern::Diamond),
            Construction::PadK1 => Some(Pattern::K3PlusK1),
            Construction::DsTree => Some(spider_tree()),
            _ => None,
        };
        let t2 = if construction == Construction::DsBistarSym { 3 } else { 1 };
        FuzzConfig {
            construction,
            pattern,
            t: 3,
            t2,
            trials: 200,
            n_min: 1,
            n_max: 4,
            k_max: 1,
            max_target: 40,
            seed: 0,
            engine: Engine::Branch,
        }
    }

    fn pattern(&self) -> Result<Pattern> {
        self.pattern
            .clone()
            .ok_or_else(|| Error::BadParameter(format!("{} needs a pattern", self.construction)))
    }

    /// The request for parameter `k`.
    pub fn request(&self, k: usize) -> Result<Request> {
        let (t, t2) = (self.t, self.t2);
        Ok(match self.construction {
            Construction::Vc => Request::Vc { h: self.pattern()?, k },
            Construction::UnisepStrip => Request::UnisepStrip { h: self.pattern()?, k },
            Construction::UnisepHomog => Request::UnisepHomog { h: self.pattern()?, k },
            Construction::StarNp => Request::StarNp { t, k },
            Construction::TwoK2Pendant => Request::TwoK2Pendant { k },
            Construction::K2K1Domatic => Request::K2K1Domatic { d: k + 1 },
            Construction::PadK1 => Request::PadK1 { h: self.pattern()?, k },
            Construction::PadClique => Request::PadClique { t, k },
            Construction::DsTree => Request::DsTree { h: self.pattern()?, k },
            Construction::DsBistarAsym => Request::DsBistarAsym { t, t2, k },
            Construction::DsBistarSym => Request::DsBistarSym { t, t2, k },
            Construction::Legacy(variant) => Request::Legacy { variant, k },
        })
    }

    fn hfc_options(&self) -> HfcOptions {
        HfcOptions::with_engine(self.engine)
    }
}

/// Erdős–Rényi graph on a uniform n in `n_min..=n_max` with a uniform edge probability.
pub fn sample_graph<R: Rng>(rng: &mut R, n_min: usize, n_max: usize) -> Graph {
    let n = rng.gen_range(n_min..=n_max.max(n_min));
    let p: f64 = rng.gen();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// The rng of trial `trial`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn rejected(e: &Error) -> bool {
    !matches!(e, Error::SearchBudgetExceeded { .. } | Error::UnsupportedReduction(_))
}

/// Draws source instances until the construction accepts one whose target stays below `max_target`.
/// Returns the reduction and the number of rejected draws.
pub fn sample_reduction<R: Rng>(cfg: &FuzzConfig, rng: &mut R) -> Result<(LabeledReduction, usize)> {
    for attempt in 0..MAX_ATTEMPTS {
        let g = sample_graph(rng, cfg.n_min, cfg.n_max);
        let k = rng.gen_range(0..=cfg.k_max);
        match reduce(&g, &cfg.request(k)?, &ReductionOptions { max_vertices: cfg.max_target.saturating_sub(1), w: None }) {
            Ok(red) if red.graph.n() < cfg.max_target => return Ok((red, attempt)),
            Ok(_) => continue,
            Err(e) if rejected(&e) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::BadParameter(format!("no admissible {} instance in {MAX_ATTEMPTS} draws", cfg.construction)))
}

/// A no-certificate check on a target whose H is a star or bistar.
fn certificate(red: &LabeledReduction) -> Option<bool> {
    let k = red.contraction_budget();
    let found = match &red.target_kind {
        Problem::Hfc(Pattern::Star(t)) => star_no_certificate(&red.graph, *t, k),
        Problem::Hfc(Pattern::Bistar(t, t2)) => bistar_no_certificate(&red.graph, *t, *t2, k),
        _ => return None,
    };
    found.ok().map(|c| c.is_some())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub source_answer: bool,
    pub target_answer: bool,
    pub bundle: ReductionBundle,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CertificateStats {
    /// Trials whose target pattern has a certificate.
    pub checked: usize,
    pub fired: usize,
    /// Fired although the target is a yes-instance.
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzReport {
    pub construction: String,
    pub rng: String,
    pub seed: u64,
    pub n_max: usize,
    pub k_max: usize,
    pub trials: usize,
    pub agreements: usize,
    /// Sorted by their JSON.
    pub disagreements: Vec<Disagreement>,
    /// Draws redrawn for failing a precondition or the size bound.
    pub rejected_draws: usize,
    /// Yes-witnesses (target, or lifted from the source) that failed to verify.
    pub witness_failures: usize,
    pub certificates: CertificateStats,
    pub wall_time_ms: u128,
}

impl FuzzReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty() && self.agreements == self.trials
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

struct Outcome {
    disagreement: Option<Disagreement>,
    rejected: usize,
    witness_failures: usize,
    cert: CertificateStats,
}

fn trial(cfg: &FuzzConfig, i: usize) -> Result<Outcome> {
    let mut rng = trial_rng(cfg.seed, i as u64);
    let (red, rejected) = sample_reduction(cfg, &mut rng)?;
    let opts = cfg.hfc_options();
    let source = red.solve_source(&opts)?;
    let target = red.solve_target(&opts)?;
    let Problem::Hfc(h) = &red.target_kind else {
        return Err(Error::UnsupportedReduction(format!("{} does not target H-free contraction", red.construction)));
    };
    let hg = h.graph()?;
    let k = red.contraction_budget();
    let mut witness_failures = 0;
    if let Some(f) = target.edges() {
        witness_failures += usize::from(!check_hfc_witness(&red.graph, &hg, k, f));
    }
    if let Some(w) = &source.witness {
        match forward_witness(&red, w) {
            Ok(TargetWitness::Edges(f)) => witness_failures += usize::from(!check_hfc_witness(&red.graph, &hg, k, &f)),
            Ok(TargetWitness::Partition(_)) | Err(Error::UnsupportedReduction(_)) => {}
            Err(_) => witness_failures += 1,
        }
    }
    let mut cert = CertificateStats::default();
    if let Some(fired) = certificate(&red) {
        cert.checked = 1;
        cert.fired = usize::from(fired);
        cert.violations = usize::from(fired && target.answer);
    }
    let disagreement = (source.answer != target.answer).then(|| Disagreement {
        source_answer: source.answer,
        target_answer: target.answer,
        bundle: ReductionBundle::new(&red),
    });
    Ok(Outcome { disagreement, rejected, witness_failures, cert })
}

/// Runs `cfg.trials` independent trials in parallel and compares the brute
/// force answers of source and target.
pub fn run_fuzz(cfg: &FuzzConfig) -> Result<FuzzReport> {
    let start = Instant::now();
    let outcomes: Vec<Outcome> = (0..cfg.trials).into_par_iter().map(|i| trial(cfg, i)).collect::<Result<_>>()?;
    let mut disagreements: Vec<Disagreement> = Vec::new();
    let mut rejected_draws = 0;
    let mut witness_failures = 0;
    let mut certificates = CertificateStats::default();
    for o in outcomes {
        rejected_draws += o.rejected;
        witness_failures += o.witness_failures;
        certificates.checked += o.cert.checked;
        certificates.fired += o.cert.fired;
        certificates.violations += o.cert.violations;
        disagreements.extend(o.disagreement);
    }
    disagreements.sort_by_cached_key(|d| serde_json::to_string(d).expect("serializable"));
    Ok(FuzzReport {
        construction: cfg.construction.id().to_string(),
        rng: RNG_ID.to_string(),
        seed: cfg.seed,
        n_max: cfg.n_max,
        k_max: cfg.k_max,
        trials: cfg.trials,
        agreements: cfg.trials - disagreements.len(),
        disagreements,
        rejected_draws,
        witness_failures,
        certificates,
        wall_time_ms: start.elapsed().as_millis(),
    })
}
