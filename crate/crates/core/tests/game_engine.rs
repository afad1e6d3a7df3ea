use catmouse::cats::{sqrt_cat, CatSpec, StayCat, SweepCat};
use catmouse::game::{belief_update, feedback_bit, play, run_game, BeliefSet, GameError, GameOptions, Transcript};
use catmouse::graph::{gen_family, gen_spider, set_radius, DistanceOracle, Family, SpiderSpec};
use catmouse::mice::{MouseSpec, RandomWalkMouse, ScriptedMouse, SpiderMouse, StationaryMouse};

fn oracle(f: Family) -> DistanceOracle {
    DistanceOracle::from_graph(gen_family(&f, 3).unwrap())
}

#[test]
fn feedback_bit_examples() {
    assert!(feedback_bit(3, 3));
    assert!(!feedback_bit(3, 4));
    assert!(!feedback_bit(0, 1));
}

#[test]
fn sweep_closes_in_on_a_stationary_mouse() {
    let o = oracle(Family::Path { n: 5 });
    let tr = run_game(&o, &mut SweepCat::new(5), &mut StationaryMouse::at(4), 5, false).unwrap();
    assert_eq!(tr.cat_queries, vec![0, 1, 2, 3, 4]);
    assert_eq!(tr.bits, vec![None, Some(true), Some(true), Some(true), Some(true)]);
}

#[test]
fn querying_the_mouse_vertex_gives_ones() {
    let o = oracle(Family::Grid { rows: 3, cols: 3 });
    let tr = run_game(&o, &mut StayCat, &mut StationaryMouse::at(0), 8, false).unwrap();
    assert!(tr.bits[1..].iter().all(|&b| b == Some(true)));
}

#[test]
fn horizon_one_radius_is_the_graph_radius() {
    let o = oracle(Family::RandomTree { n: 40 });
    let all: Vec<usize> = (0..40).collect();
    let tr = run_game(&o, &mut SweepCat::new(40), &mut StationaryMouse::new(1), 1, true).unwrap();
    assert_eq!(tr.radius(1), Some(set_radius(&o, &all).unwrap().0));
    assert_eq!(tr.localization_report(-1).unwrap().first_success_step, None);
    let r = tr.radius(1).unwrap() as i64;
    assert_eq!(tr.localization_report(r).unwrap().first_success_step, Some(1));
}

#[test]
fn illegal_moves_are_reported_with_the_step() {
    let o = oracle(Family::Path { n: 5 });
    let err = run_game(&o, &mut StayCat, &mut ScriptedMouse::new(vec![0, 1, 3]), 3, false).unwrap_err();
    assert_eq!(err, GameError::RuleViolation { step: 3, from: 1, to: 3 });
    let err = run_game(&o, &mut StayCat, &mut ScriptedMouse::new(vec![7]), 3, false).unwrap_err();
    assert!(matches!(err, GameError::OutOfRange { step: 1, .. }));
    assert_eq!(run_game(&o, &mut StayCat, &mut StationaryMouse::at(0), 0, false).unwrap_err(), GameError::InvalidHorizon);
}

#[test]
fn untracked_reports_are_an_error() {
    let o = oracle(Family::Path { n: 5 });
    let tr = run_game(&o, &mut StayCat, &mut StationaryMouse::at(0), 3, false).unwrap();
    assert_eq!(tr.localization_report(1).unwrap_err(), GameError::MissingBeliefs);
}

fn games() -> Vec<(DistanceOracle, Transcript)> {
    let mut out = Vec::new();
    for f in [Family::Path { n: 30 }, Family::Grid { rows: 5, cols: 6 }, Family::RandomTree { n: 50 }] {
        let o = oracle(f);
        for seed in 0..6 {
            let cat = [CatSpec::Sqrt, CatSpec::Thin { k: None }, CatSpec::Random { seed }][seed as usize % 3];
            let mouse = MouseSpec::RandomWalk { seed };
            let mut c = cat.build(&o).unwrap();
            let mut m = mouse.build(o.graph()).unwrap();
            let opts = GameOptions { keep_belief_sets: true, ..GameOptions::tracked(40) };
            let tr = play(&o, c.as_mut(), m.as_mut(), &opts).unwrap();
            out.push((DistanceOracle::new(o.shared_graph()), tr));
        }
    }
    out
}

#[test]
fn true_position_is_always_consistent_and_bits_replay() {
    for (o, tr) in games() {
        for i in 1..=tr.steps() {
            assert!(tr.belief_set(i).unwrap().contains(tr.m(i)));
        }
        assert_eq!(tr.replay_bits(&o), tr.bits);
    }
}

#[test]
fn side_information_only_shrinks_the_belief() {
    // Extra knowledge (here: the parity of the mouse's vertex id, revealed
    // every step) gives a subset of the bits-only belief.
    for (o, tr) in games() {
        let n = o.n();
        let mut informed = BeliefSet::full(n);
        let parity = tr.m(1) % 2;
        informed.restrict(|v| v % 2 == parity);
        for i in 2..=tr.steps() {
            informed = match belief_update(&o, &informed, tr.c(i - 1), tr.c(i), tr.b(i).unwrap()) {
                Ok(next) => next,
                Err(_) => break,
            };
            let parity = tr.m(i) % 2;
            informed.restrict(|v| v % 2 == parity);
            assert!(informed.is_subset(tr.belief_set(i).unwrap()));
        }
    }
}

#[test]
fn identical_setups_give_identical_transcripts() {
    let o = oracle(Family::Grid { rows: 6, cols: 6 });
    let run = || {
        let mut cat = CatSpec::Random { seed: 9 }.build(&o).unwrap();
        let tr = run_game(&o, cat.as_mut(), &mut RandomWalkMouse::new(4), 50, true).unwrap();
        tr.to_json()
    };
    assert_eq!(run(), run());
}

#[test]
fn transcript_json_is_one_indexed_and_round_trips() {
    let o = oracle(Family::Path { n: 5 });
    let tr = run_game(&o, &mut SweepCat::new(5), &mut StationaryMouse::at(4), 3, true).unwrap();
    let json = tr.to_json();
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["c"], serde_json::json!([null, 0, 1, 2]));
    assert_eq!(value["b"], serde_json::json!([null, null, 1, 1]));
    assert_eq!(value["belief_radius"][0], serde_json::Value::Null);
    assert_eq!(Transcript::from_json(&json).unwrap(), tr);
}

#[test]
fn spider_mouse_is_never_localized_by_the_sqrt_cat() {
    let o = DistanceOracle::from_graph(gen_spider(SpiderSpec { t: 12, extra: 0 }).unwrap());
    let mut cat = sqrt_cat(&o).unwrap();
    let mut mouse = SpiderMouse::new(o.graph(), 12).unwrap();
    let tr = run_game(&o, &mut cat, &mut mouse, 300, true).unwrap();
    let rep = tr.localization_report(1).unwrap();
    assert_eq!(rep.first_success_step, None);
    assert!(rep.min_radius >= 2);
}
