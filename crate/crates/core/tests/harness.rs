mod common;

use common::*;
use contraction_lab::graph::*;
use contraction_lab::harness::fuzz::*;
use contraction_lab::harness::*;
use contraction_lab::reductions::*;
use proptest::prelude::*;

fn vc_bundle() -> ReductionBundle {
    let red = reduce_vc(&Graph::complete(3), &Pattern::Path(4), 2).unwrap();
    ReductionBundle::new(&red)
}

fn without_time(mut r: FuzzReport) -> FuzzReport {
    r.wall_time_ms = 0;
    r
}

#[test]
fn bundle_carries_the_reduction() {
    let b = vc_bundle();
    assert_eq!(b.graph.n, 13);
    assert_eq!(b.target_graph().unwrap().m(), b.graph.edges.len());
    assert_eq!(b.budget, 2);
    assert_eq!(b.contractions, 2);
    let src = b.source.as_ref().unwrap();
    assert_eq!((src.kind.as_str(), src.graph6.as_str(), src.parameter), ("vc", "Bw", 2));
    assert_eq!(b.target.as_deref(), Some("hfc:P4"));
    assert_eq!(b.provenance.construction, "vc");
    assert_eq!(b.provenance.params["k"], 2);
    assert_eq!(b.labels["w"].len(), 1);
    assert_eq!(b.labels.values().map(Vec::len).sum::<usize>(), 13);
}

#[test]
fn bundle_json_round_trips_bit_exactly() {
    let text = vc_bundle().to_json();
    let back = ReductionBundle::from_json(&text).unwrap();
    assert_eq!(back, vc_bundle());
    assert_eq!(back.to_json(), text);
    let keys: Vec<usize> = ["format_version", "graph", "budget", "contractions", "target", "labels", "source", "provenance"]
        .iter()
        .map(|k| text.find(&format!("\"{k}\"")).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn k2k1_bundle_reports_blocks_and_contractions() {
    let b = ReductionBundle::new(&reduce_k2k1_domatic(&Graph::path(5), 2).unwrap());
    assert_eq!(b.graph.n, 37);
    assert_eq!(b.budget, 32);
    assert_eq!(b.contractions, 5);
    assert_eq!(b.provenance.params["h"], 32);
}

#[test]
fn tampered_bundles_are_rejected() {
    let mut b = vc_bundle();
    b.graph.edges.pop();
    assert_eq!(ReductionBundle::from_json(&b.to_json()).unwrap_err().name(), "MalformedGraph6");
    let mut b = vc_bundle();
    b.labels.insert("bad".into(), vec![99]);
    assert_eq!(ReductionBundle::from_json(&b.to_json()).unwrap_err().name(), "BadParameter");
    assert!(ReductionBundle::from_json("{").is_err());
}

#[test]
fn canopy_bundle_has_levels() {
    let c = build_canopy(3, 3).unwrap();
    let labels = c.levels.iter().enumerate().map(|(i, l)| (format!("L_{i}"), l.clone())).collect();
    let params = [("t".to_string(), 3), ("k".to_string(), 3)].into_iter().collect();
    let b = ReductionBundle::for_graph("canopy", &c.graph, labels, params);
    assert_eq!(b.graph.n, 65);
    assert_eq!(b.provenance.summary, "canopy(k=3,t=3)");
    assert_eq!(ReductionBundle::from_json(&b.to_json()).unwrap(), b);
    assert!(b.source_graph().unwrap().is_none());
}

#[test]
fn zero_trials_give_an_empty_report() {
    let mut cfg = FuzzConfig::new(Construction::Vc);
    cfg.trials = 0;
    let r = run_fuzz(&cfg).unwrap();
    assert_eq!((r.trials, r.agreements, r.disagreements.len()), (0, 0, 0));
    assert!(r.all_agree());
}

#[test]
fn fuzzing_is_reproducible_under_a_seed() {
    let mut cfg = FuzzConfig::new(Construction::Legacy(LegacyVariant::TwoK2A));
    cfg.trials = 120;
    cfg.seed = 11;
    let a = without_time(run_fuzz(&cfg).unwrap());
    let b = without_time(run_fuzz(&cfg).unwrap());
    assert_eq!(a, b);
    assert_eq!(a.agreements + a.disagreements.len(), a.trials);
    assert_eq!(a.rng, RNG_ID);
    let keys: Vec<String> = a.disagreements.iter().map(|d| serde_json::to_string(d).unwrap()).collect();
    assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    cfg.seed = 12;
    let c = without_time(run_fuzz(&cfg).unwrap());
    assert_ne!(a.rejected_draws, c.rejected_draws);
}

#[test]
fn fuzz_disagreements_are_real() {
    let mut cfg = FuzzConfig::new(Construction::Legacy(LegacyVariant::K3K1));
    cfg.trials = 200;
    let r = run_fuzz(&cfg).unwrap();
    assert!(!r.disagreements.is_empty());
    for d in &r.disagreements {
        let gp = d.bundle.source_graph().unwrap().unwrap();
        assert_eq!(brute_min_ds(&gp) <= d.bundle.source.as_ref().unwrap().parameter, d.source_answer);
        assert!(d.target_answer && !d.source_answer);
    }
}

#[test]
fn sampled_instances_meet_preconditions() {
    let cfg = FuzzConfig::new(Construction::Vc);
    for i in 0..100 {
        let (red, _) = sample_reduction(&cfg, &mut trial_rng(3, i)).unwrap();
        assert!(red.source_graph.isolated_vertices().is_empty());
        assert!(red.graph.n() < cfg.max_target);
    }
    let cfg = FuzzConfig::new(Construction::Legacy(LegacyVariant::Claw));
    for i in 0..100 {
        let (red, _) = sample_reduction(&cfg, &mut trial_rng(3, i)).unwrap();
        assert!(red.source_graph.is_connected() && !red.source_graph.is_complete());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trips_up_to_twenty_vertices(g in arb_graph(20)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn trial_rngs_are_deterministic(seed in any::<u64>(), trial in 0u64..1000) {
        let a = sample_graph(&mut trial_rng(seed, trial), 1, 8);
        let b = sample_graph(&mut trial_rng(seed, trial), 1, 8);
        prop_assert_eq!(a, b);
    }
}
