use catmouse::cats::{SeededRandomCat, SweepCat};
use catmouse::game::{play, CatStrategy, GameOptions};
use catmouse::graph::{gen_family, DistanceOracle, Family, Graph};
use catmouse::harness::{
    brute_force_beliefs, connected_graphs, exhaustive_game_value, lazy_walks, GameValue,
};
use catmouse::mice::{MouseSpec, ScriptedMouse};

fn graph(f: Family) -> Graph {
    gen_family(&f, 0).unwrap()
}

#[test]
fn catalog_sizes_match_the_known_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
}

#[test]
fn moving_away_from_a_fixed_query_on_p5() {
    let sets = brute_force_beliefs(&graph(Family::Path { n: 5 }), &[0, 0], &[None, Some(false)]).unwrap();
    assert_eq!(sets[0], vec![0, 1, 2, 3, 4]);
    assert_eq!(sets[1], vec![1, 2, 3, 4]);
}

fn engine_matches_brute_force(g: &Graph, cat: &mut dyn CatStrategy, spec: MouseSpec, horizon: usize) {
    let o = DistanceOracle::from_graph(g.clone());
    let mut mouse = spec.build(g).unwrap();
    let opts = GameOptions { keep_belief_sets: true, ..GameOptions::tracked(horizon) };
    let tr = play(&o, cat, mouse.as_mut(), &opts).unwrap();
    let sets = brute_force_beliefs(g, &tr.cat_queries, &tr.bits).unwrap();
    for (i, expected) in sets.iter().enumerate() {
        assert_eq!(&tr.belief_set(i + 1).unwrap().to_vec(), expected, "step {}", i + 1);
    }
}

#[test]
fn beliefs_are_exact_on_seven_vertex_graphs() {
    let mut graphs: Vec<Graph> = (0..20).map(|s| gen_family(&Family::RandomTree { n: 7 }, s).unwrap()).collect();
    graphs.push(graph(Family::Cycle { n: 7 }));
    graphs.push(graph(Family::Path { n: 7 }));
    graphs.push(graph(Family::Star { leaves: 6 }));
    for g in &graphs {
        for seed in 0..5 {
            for spec in [MouseSpec::RandomWalk { seed }, MouseSpec::Greedy { seed }] {
                engine_matches_brute_force(g, &mut SeededRandomCat::new(7, seed), spec, 12);
                engine_matches_brute_force(g, &mut SweepCat::new(7), spec, 12);
            }
        }
    }
}

#[test]
fn minimax_cat_wins_against_every_walk() {
    for (g, d) in [(graph(Family::Path { n: 4 }), 0), (graph(Family::Cycle { n: 4 }), 1), (graph(Family::Star { leaves: 3 }), 0)] {
        let sol = exhaustive_game_value(&g, 8, d).unwrap();
        let o = DistanceOracle::from_graph(g.clone());
        let walks = lazy_walks(&g, 8, 1 << 16).unwrap();
        let mut worst = 0;
        for walk in walks {
            let mut cat = sol.cat();
            let tr = play(&o, &mut cat, &mut ScriptedMouse::new(walk), &GameOptions::tracked(8)).unwrap();
            let hit = tr.localization_report(d).unwrap().first_success_step.is_some();
            if sol.value == GameValue::CatWins {
                assert!(hit, "d = {d}: {:?}", tr.cat_queries);
            }
            worst = worst.max(usize::from(!hit));
        }
        if sol.value == GameValue::MouseWins {
            assert_eq!(worst, 1, "a losing cat should miss some walk");
        }
    }
}
