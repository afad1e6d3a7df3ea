use catmouse::bounds;
use catmouse::cats::ScriptedCat;
use catmouse::game::{play, GameOptions};
use catmouse::graph::{
    diameter, gen_spider, parse_graph, scattered_cover, set_radius, thin_level, write_graph, DistanceOracle, Graph,
    SpiderSpec,
};
use catmouse::harness::{brute_force_beliefs, TinyGame};
use catmouse::mice::MouseSpec;
use proptest::prelude::*;

/// A random connected graph: a random tree plus a few extra edges.
fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            let extra = prop::collection::vec((0..n, 0..n), 0..=n);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            for (u, v) in extra {
                let e = (u.min(v), u.max(v));
                if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
                    edges.push(e);
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distances_form_a_metric(g in connected(24)) {
        let o = DistanceOracle::from_graph(g.clone());
        let tiny = TinyGame::new(&g).unwrap();
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(o.dist(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(o.dist(u, v), tiny.dist(u, v));
                prop_assert_eq!(o.dist(u, v), o.dist(v, u));
                prop_assert_eq!(o.dist(u, v) == 1, g.is_adjacent(u, v));
                for w in 0..n {
                    prop_assert!(o.dist(u, w) <= o.dist(u, v) + o.dist(v, w));
                }
            }
        }
        prop_assert_eq!(o.diameter(), diameter(&g));
    }

    #[test]
    fn radius_is_the_min_max(g in connected(16), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        let o = DistanceOracle::from_graph(g.clone());
        let mut members: Vec<usize> = picks.iter().map(|i| i.index(g.n())).collect();
        members.sort_unstable();
        members.dedup();
        let (r, center) = set_radius(&o, &members).unwrap();
        let brute = TinyGame::new(&g).unwrap().radius(|v| members.contains(&v)).unwrap();
        prop_assert_eq!(r, brute);
        let first = (0..g.n()).find(|&c| members.iter().all(|&m| o.dist(c, m) <= r)).unwrap();
        prop_assert_eq!(center, first);
    }

    #[test]
    fn scattered_covers_cover_and_scatter(g in connected(40), sep in 1u32..8) {
        let o = DistanceOracle::from_graph(g);
        let cover = scattered_cover(&o, sep).unwrap();
        prop_assert!(cover.covers(&o));
        prop_assert!(cover.is_separated(&o));
        prop_assert_eq!(cover.radius_k, sep - 1);
        prop_assert_eq!(cover.centers[0], 0);
    }

    #[test]
    fn sqrt_cover_is_small(g in connected(60)) {
        let o = DistanceOracle::from_graph(g.clone());
        let cover = scattered_cover(&o, bounds::sqrt_8n(g.n())).unwrap();
        prop_assert!((cover.count() as f64) <= (g.n() as f64 / 2.0).sqrt().max(1.0) + 1e-9);
    }

    #[test]
    fn thin_levels_exist_below_three_root_n(g in connected(60)) {
        prop_assume!(g.n() >= 9);
        let o = DistanceOracle::from_graph(g.clone());
        let k = bounds::three_sqrt_n(g.n());
        for v in 0..g.n() {
            let ell = thin_level(&o, v, k);
            prop_assert!(ell.is_some(), "vertex {} has no level below {}", v, k);
            let ell = ell.unwrap();
            let size = (0..g.n()).filter(|&u| o.dist(v, u) == ell).count();
            prop_assert!(4 * size < ell as usize);
        }
    }

    #[test]
    fn edge_lists_round_trip(g in connected(30)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn spiders_have_the_stated_shape(t in 1usize..14, extra in 0usize..40) {
        let g = gen_spider(SpiderSpec { t, extra }).unwrap();
        prop_assert_eq!(g.n(), t * t + 1 + extra);
        prop_assert_eq!(g.edge_count(), g.n() - 1);
        // The two longest legs meet at the center.
        let second = if t > 1 || extra > 0 { t } else { 0 };
        prop_assert_eq!(diameter(&g) as usize, t.max(extra) + second);
    }

    #[test]
    fn engine_beliefs_match_brute_force(
        g in connected(10),
        raw in prop::collection::vec(any::<prop::sample::Index>(), 1..14),
        seed in any::<u64>(),
    ) {
        let o = DistanceOracle::from_graph(g.clone());
        let queries: Vec<usize> = raw.iter().map(|i| i.index(g.n())).collect();
        let mut cat = ScriptedCat::new(queries.clone());
        let mut mouse = MouseSpec::RandomWalk { seed }.build(&g).unwrap();
        let opts = GameOptions { keep_belief_sets: true, ..GameOptions::tracked(queries.len()) };
        let tr = play(&o, &mut cat, mouse.as_mut(), &opts).unwrap();
        let sets = brute_force_beliefs(&g, &tr.cat_queries, &tr.bits).unwrap();
        for (i, expected) in sets.iter().enumerate() {
            let got = tr.belief_set(i + 1).unwrap().to_vec();
            prop_assert_eq!(&got, expected);
            prop_assert!(got.contains(&tr.m(i + 1)));
            prop_assert_eq!(tr.radius(i + 1).unwrap(), TinyGame::new(&g).unwrap().radius(|v| expected.contains(&v)).unwrap());
        }
    }
}
