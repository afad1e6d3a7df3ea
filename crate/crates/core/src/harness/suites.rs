use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    brute_force_beliefs, check_fat_claim, check_spider_run, check_thin_phases, exhaustive_game_value,
    lazy_walks, small_catalog, GameValue, HarnessError,
};
use crate::bounds;
use crate::cats::{fat_cat_with_c, sqrt_cat, CatSpec, FatCat, ThinCat};
use crate::game::{play, CatStrategy, GameOptions, MouseStrategy, Transcript};
use crate::graph::{
    bfs_distances, diameter, parse_graph, scattered_cover, thin_level, write_graph, BallCover, DistanceOracle,
    Graph, GraphSpec, SpiderLayout, SpiderSpec, Vertex,
};
use crate::mice::{MouseSpec, ScriptedMouse, SpiderMouse};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteName {
    Oracle,
    Fat,
    Thin,
    Sqrt,
    Lower,
    Minimax,
    Structure,
    All,
}

impl FromStr for SuiteName {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        Ok(match s {
            "oracle" => SuiteName::Oracle,
            "fat" => SuiteName::Fat,
            "thin" => SuiteName::Thin,
            "sqrt" => SuiteName::Sqrt,
            "lower" => SuiteName::Lower,
            "minimax" => SuiteName::Minimax,
            "structure" => SuiteName::Structure,
            "all" => SuiteName::All,
            other => return Err(HarnessError::Input(format!("unknown suite `{other}`"))),
        })
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SuiteName::Oracle => "oracle",
            SuiteName::Fat => "fat",
            SuiteName::Thin => "thin",
            SuiteName::Sqrt => "sqrt",
            SuiteName::Lower => "lower",
            SuiteName::Minimax => "minimax",
            SuiteName::Structure => "structure",
            SuiteName::All => "all",
        };
        f.write_str(s)
    }
}

/// The acceptance criteria, numbered 1 to 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Criterion {
    BeliefOracle,
    FatBound,
    ThinBound,
    SqrtLocalization,
    ThinLocalization,
    SpiderLowerBound,
    MinimaxConsistency,
    Structure,
}

impl Criterion {
    pub const ALL: [Criterion; 8] = [
        Criterion::BeliefOracle,
        Criterion::FatBound,
        Criterion::ThinBound,
        Criterion::SqrtLocalization,
        Criterion::ThinLocalization,
        Criterion::SpiderLowerBound,
        Criterion::MinimaxConsistency,
        Criterion::Structure,
    ];

    pub fn number(self) -> u8 {
        Criterion::ALL.iter().position(|&c| c == self).unwrap() as u8 + 1
    }

    pub fn title(self) -> &'static str {
        match self {
            Criterion::BeliefOracle => "belief DP equals brute force",
            Criterion::FatBound => "ball-cover cat within 4L+k",
            Criterion::ThinBound => "sphere-walk cat within ceil(3K/2)",
            Criterion::SqrtLocalization => "sqrt cat: ceil(sqrt(32n)) by ceil(sqrt(2n))",
            Criterion::ThinLocalization => "thin cat: ceil(9/2 sqrt(n)) by time n",
            Criterion::SpiderLowerBound => "spider mouse keeps rad > t/12",
            Criterion::MinimaxConsistency => "implemented cats agree with minimax",
            Criterion::Structure => "structural properties",
        }
    }
}

/// Criteria run by each named suite.
pub fn criteria(suite: SuiteName) -> Vec<Criterion> {
    use Criterion::*;
    match suite {
        SuiteName::Oracle => vec![BeliefOracle],
        SuiteName::Fat => vec![FatBound],
        SuiteName::Thin => vec![ThinBound, ThinLocalization],
        SuiteName::Sqrt => vec![SqrtLocalization],
        SuiteName::Lower => vec![SpiderLowerBound],
        SuiteName::Minimax => vec![MinimaxConsistency],
        SuiteName::Structure => vec![Structure],
        SuiteName::All => Criterion::ALL.to_vec(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub criterion: u8,
    pub title: String,
    pub pass: bool,
    pub checks: u64,
    pub failure_count: u64,
    /// The first few failures.
    pub failures: Vec<String>,
    pub detail: String,
    pub seconds: f64,
}

impl Verdict {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}]: {} ({} checks, {} failures; {})",
            self.criterion,
            self.title,
            if self.pass { "PASS" } else { "FAIL" },
            self.checks,
            self.failure_count,
            self.detail
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub pass: bool,
    pub verdicts: Vec<Verdict>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite report serializes")
    }
}

pub fn verify_suite(name: SuiteName) -> SuiteReport {
    let verdicts: Vec<Verdict> = criteria(name).into_iter().map(run_criterion).collect();
    SuiteReport { suite: name, pass: verdicts.iter().all(|v| v.pass), verdicts }
}

pub fn run_criterion(c: Criterion) -> Verdict {
    let start = Instant::now();
    let (tally, detail) = match c {
        Criterion::BeliefOracle => belief_oracle(),
        Criterion::FatBound => fat_bound(),
        Criterion::ThinBound => thin_bound(),
        Criterion::SqrtLocalization => sqrt_localization(),
        Criterion::ThinLocalization => thin_localization(),
        Criterion::SpiderLowerBound => spider_lower_bound(),
        Criterion::MinimaxConsistency => minimax_consistency(),
        Criterion::Structure => structure(),
    };
    Verdict {
        criterion: c.number(),
        title: c.title().to_string(),
        pass: tally.failure_count == 0 && tally.checks > 0,
        checks: tally.checks,
        failure_count: tally.failure_count,
        failures: tally.failures,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

const KEPT_FAILURES: usize = 10;

#[derive(Debug, Default)]
struct Tally {
    checks: u64,
    failure_count: u64,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, result: Result<(), String>, context: impl FnOnce() -> String) {
        self.checks += 1;
        if let Err(e) = result {
            self.failure_count += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(format!("{}: {e}", context()));
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self.failures.truncate(KEPT_FAILURES);
        self
    }
}

fn build(spec: &str) -> (GraphSpec, DistanceOracle) {
    let spec: GraphSpec = spec.parse().expect("suite graph specs are valid");
    let g = spec.build().expect("suite graphs build");
    (spec, DistanceOracle::from_graph(g))
}

fn seeded_mouse(kind: u64, seed: u64) -> MouseSpec {
    match kind % 3 {
        0 => MouseSpec::Stationary { seed },
        1 => MouseSpec::RandomWalk { seed },
        _ => MouseSpec::Greedy { seed },
    }
}

/// Every implemented cat: the three bound-carrying strategies and the baselines.
fn cat_roster() -> Vec<CatSpec> {
    let mut cats = vec![CatSpec::Sqrt, CatSpec::Thin { k: None }, CatSpec::Fat { c: 2.0 }, CatSpec::Sweep, CatSpec::Stay];
    cats.extend((1..=5).map(|seed| CatSpec::Random { seed }));
    cats
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn tracked(horizon: usize) -> GameOptions {
    GameOptions::tracked(horizon)
}

// Criterion 1.
fn belief_oracle() -> (Tally, String) {
    let graphs = small_catalog(6);
    let kinds = [CatSpec::Sqrt, CatSpec::Thin { k: None }, CatSpec::Fat { c: 2.0 }, CatSpec::Sweep, CatSpec::Random { seed: 0 }, CatSpec::Stay];
    let tally = graphs
        .par_iter()
        .map(|g| {
            let o = DistanceOracle::from_graph(g.clone());
            let mut tally = Tally::default();
            for s in 0..50u64 {
                let cat_spec = kinds[s as usize % kinds.len()].with_seed(s);
                let mouse_spec = seeded_mouse(s / kinds.len() as u64, s);
                let result = (|| -> Result<(), String> {
                    let mut cat = cat_spec.build(&o).map_err(err)?;
                    let mut mouse = mouse_spec.build(g).map_err(err)?;
                    let opts = GameOptions { keep_belief_sets: true, ..tracked(6) };
                    let tr = play(&o, cat.as_mut(), mouse.as_mut(), &opts).map_err(err)?;
                    let brute = brute_force_beliefs(g, &tr.cat_queries, &tr.bits).map_err(err)?;
                    for (i, expect) in brute.iter().enumerate() {
                        let got = tr.belief_set(i + 1).unwrap().to_vec();
                        if &got != expect {
                            return Err(format!("M_{}: engine {got:?}, brute force {expect:?}", i + 1));
                        }
                    }
                    Ok(())
                })();
                tally.record(result, || format!("n = {}, edges {:?}, {cat_spec} vs {mouse_spec}", g.n(), g.edges().collect::<Vec<_>>()));
            }
            tally
        })
        .reduce(Tally::default, Tally::merge);
    let detail = format!("{} connected graphs with n <= 6 x 50 seeded pairs x horizon 6", graphs.len());
    (tally, detail)
}

fn fat_game(o: &DistanceOracle, mut fat: FatCat, mouse: &mut dyn MouseStrategy, horizon: usize) -> Result<(), String> {
    let tr = play(o, &mut fat, mouse, &tracked(horizon)).map_err(err)?;
    check_fat_claim(o, &fat, &tr)
}

// Criterion 2.
fn fat_bound() -> (Tally, String) {
    let fixed: [(&str, &[Vertex]); 5] = [
        ("path:9", &[2, 6]),
        ("path:10", &[1, 5, 8]),
        ("cycle:10", &[0, 5]),
        ("grid:3x3", &[0, 4, 8]),
        ("spider:t=3,extra=0", &[1, 4, 7]),
    ];
    let mut tally = Tally::default();
    let mut walks_total = 0;
    for (spec, centers) in fixed {
        let (_, o) = build(spec);
        let cover = BallCover::from_centers(&o, centers.to_vec()).expect("fixed covers are valid");
        let l = cover.count();
        let walks = match lazy_walks(o.graph(), 2 * l, 1_000_000) {
            Ok(w) => w,
            Err(e) => {
                tally.record(Err(e.to_string()), || spec.to_string());
                continue;
            }
        };
        walks_total += walks.len();
        let part = walks
            .par_iter()
            .map(|walk| {
                let mut t = Tally::default();
                let fat = FatCat::new(&cover).expect("non-empty cover");
                let result = fat_game(&o, fat, &mut ScriptedMouse::new(walk.clone()), 2 * l);
                t.record(result, || format!("{spec} (L = {l}, k = {}), walk {walk:?}", cover.radius_k));
                t
            })
            .reduce(Tally::default, Tally::merge);
        tally = tally.merge(part);
    }

    let scaled = ["path:2000", "path:500", "grid:40x50", "grid:20x20", "rt:n=1000,seed=1", "rt:n=2000,seed=2", "spider:t=12,extra=0"];
    for spec in scaled {
        let (_, o) = build(spec);
        for (label, fat) in [("sqrt", sqrt_cat(&o)), ("fat:c=2", fat_cat_with_c(&o, 2.0))] {
            let fat = fat.expect("scattered covers are non-empty");
            let part = (0..100u64)
                .into_par_iter()
                .map(|s| {
                    let mut t = Tally::default();
                    let mouse_spec = seeded_mouse(s, s);
                    let result = (|| {
                        let mut mouse = mouse_spec.build(o.graph()).map_err(err)?;
                        fat_game(&o, fat.clone(), mouse.as_mut(), fat.decision_step())
                    })();
                    t.record(result, || format!("{spec}, {label} vs {mouse_spec}"));
                    t
                })
                .reduce(Tally::default, Tally::merge);
            tally = tally.merge(part);
        }
    }
    let detail = format!(
        "exhaustive: {walks_total} lazy walks on 5 graphs with L in {{2,3}}; randomized: {} graphs x 2 covers x 100 mice",
        scaled.len()
    );
    (tally, detail)
}

// Criterion 3.
fn thin_bound() -> (Tally, String) {
    let corpus = ["path:50", "cycle:50", "path:2000", "cycle:2000", "spider:t=12,extra=0", "spider:t=44,extra=63"];
    let mut tally = Tally::default();
    let mut transitions = 0;
    let mut settled = 0;
    for spec in corpus {
        let (_, o) = build(spec);
        let k = bounds::three_sqrt_n(o.n());
        let thin = match ThinCat::new(&o, k) {
            Ok(t) => t,
            Err(e) => {
                tally.record(Err(e.to_string()), || spec.to_string());
                continue;
            }
        };
        let horizon = 2 * (thin.target_pairs() + k as usize) + 2;
        let (part, tr_count, st_count) = (0..100u64)
            .into_par_iter()
            .map(|s| {
                let mut t = Tally::default();
                let mouse_spec = seeded_mouse(s, s);
                let mut counts = (0, 0);
                let result = (|| {
                    let mut cat = thin.clone();
                    let mut mouse = mouse_spec.build(o.graph()).map_err(err)?;
                    let tr = play(&o, &mut cat, mouse.as_mut(), &GameOptions::new(horizon)).map_err(err)?;
                    let check = check_thin_phases(&o, &cat, &tr)?;
                    counts = (check.transitions, check.settled);
                    if check.settled == 0 {
                        return Err("no phase settled within the horizon".into());
                    }
                    Ok(())
                })();
                t.record(result, || format!("{spec} (K = {k}) vs {mouse_spec}"));
                (t, counts.0, counts.1)
            })
            .reduce(|| (Tally::default(), 0, 0), |a, b| (a.0.merge(b.0), a.1 + b.1, a.2 + b.2));
        tally = tally.merge(part);
        transitions += tr_count;
        settled += st_count;
    }
    let detail = format!(
        "{} graphs x 100 mice, K = ceil(3 sqrt(n)); {transitions} phase transitions and {settled} settled phases checked",
        corpus.len()
    );
    (tally, detail)
}

const LOCALIZATION_CORPUS: [&str; 4] = ["spider:t=12,extra=0", "path:2000", "grid:45x45", "rt:n=1000,seed=1"];

fn corpus_mice(spec: &GraphSpec, seed: u64) -> Vec<MouseSpec> {
    let mut mice: Vec<MouseSpec> = (0..3).map(|k| seeded_mouse(k, seed)).collect();
    if let Some(SpiderSpec { t, .. }) = spec.spider() {
        if t % 12 == 0 {
            mice.push(MouseSpec::Spider { t });
        }
    }
    mice
}

/// Runs `make_cat` against the localization corpus and reports, per run, the first
/// step with radius at most `d(n)` (or `None`).
fn corpus_runs(
    make_cat: impl Fn(&DistanceOracle) -> Result<Box<dyn CatStrategy>, String> + Sync,
    d: impl Fn(usize) -> u32 + Sync,
    horizon: impl Fn(usize) -> usize + Sync,
) -> Vec<(String, usize, Result<Option<usize>, String>)> {
    let mut out = Vec::new();
    for spec in LOCALIZATION_CORPUS {
        let (gspec, o) = build(spec);
        let n = o.n();
        let cat = match make_cat(&o) {
            Ok(c) => c,
            Err(e) => {
                out.push((spec.to_string(), n, Err(e)));
                continue;
            }
        };
        let jobs: Vec<MouseSpec> = (1..=20u64).flat_map(|s| corpus_mice(&gspec, s)).collect();
        let runs: Vec<_> = jobs
            .par_iter()
            .map(|mouse_spec| {
                let result = (|| {
                    let mut cat = cat.snapshot();
                    let mut mouse = mouse_spec.build(o.graph()).map_err(err)?;
                    let opts = GameOptions { stop_at_radius: Some(d(n)), ..tracked(horizon(n)) };
                    let tr: Transcript = play(&o, cat.as_mut(), mouse.as_mut(), &opts).map_err(err)?;
                    Ok(tr.localization_report(d(n) as i64).map_err(err)?.first_success_step)
                })();
                (format!("{spec} vs {mouse_spec}"), n, result)
            })
            .collect();
        out.extend(runs);
    }
    out
}

// Criterion 4.
fn sqrt_localization() -> (Tally, String) {
    const SLACK: usize = 2;
    let runs = corpus_runs(
        |o| sqrt_cat(o).map(|c| Box::new(c) as Box<dyn CatStrategy>).map_err(err),
        bounds::sqrt_32n,
        |n| bounds::sqrt_2n(n) as usize + SLACK,
    );
    let mut tally = Tally::default();
    let mut used = 0;
    for (label, n, result) in runs {
        let deadline = bounds::sqrt_2n(n) as usize;
        let result = result.and_then(|first| match first {
            Some(i) if i <= deadline + SLACK => {
                used = used.max(i.saturating_sub(deadline));
                Ok(())
            }
            _ => Err(format!("rad never <= {} by step {}", bounds::sqrt_32n(n), deadline + SLACK)),
        });
        tally.record(result, || label);
    }
    let detail = format!("4 graphs x mice x 20 seeds; allowed slack {SLACK}, largest slack used {used}");
    (tally, detail)
}

// Criterion 5.
fn thin_localization() -> (Tally, String) {
    let runs = corpus_runs(
        |o| {
            ThinCat::new(o, bounds::three_sqrt_n(o.n())).map(|c| Box::new(c) as Box<dyn CatStrategy>).map_err(err)
        },
        bounds::nine_halves_sqrt_n,
        |n| n,
    );
    let mut tally = Tally::default();
    let mut latest = 0;
    for (label, n, result) in runs {
        let result = result.and_then(|first| match first {
            Some(i) => {
                latest = latest.max(i);
                Ok(())
            }
            None => Err(format!("rad never <= {} by step {n}", bounds::nine_halves_sqrt_n(n))),
        });
        tally.record(result, || label);
    }
    let detail = format!("4 graphs x mice x 20 seeds, K = ceil(3 sqrt(n)); latest success at step {latest}");
    (tally, detail)
}

// Criterion 6.
fn spider_lower_bound() -> (Tally, String) {
    let spiders = [(12, 0), (12, 7), (24, 0)];
    let mut tally = Tally::default();
    for (t, extra) in spiders {
        let (_, o) = build(&format!("spider:t={t},extra={extra}"));
        let horizon = 25 * t;
        let part = cat_roster()
            .par_iter()
            .map(|cat_spec| {
                let mut tally = Tally::default();
                let result = (|| {
                    let mut cat = cat_spec.build(&o).map_err(err)?;
                    let mut mouse = SpiderMouse::new(o.graph(), t).map_err(err)?;
                    let opts = GameOptions { keep_belief_sets: true, ..tracked(horizon) };
                    let tr = play(&o, cat.as_mut(), &mut mouse, &opts).map_err(err)?;
                    check_spider_run(&o, &mouse, &tr)?;
                    let cycles = mouse.drift_end_gaps().len();
                    if cycles < 5 {
                        return Err(format!("only {cycles} mouse cycles within horizon {horizon}"));
                    }
                    Ok(())
                })();
                tally.record(result, || format!("spider({t},{extra}) vs {cat_spec}"));
                tally
            })
            .reduce(Tally::default, Tally::merge);
        tally = tally.merge(part);
    }
    let detail = "3 spiders x 10 implemented cats, horizon 25t; covers the implemented roster only, \
                  while the lower bound quantifies over all cats"
        .to_string();
    (tally, detail)
}

fn localizes(o: &DistanceOracle, cat: &dyn CatStrategy, walk: &[Vertex], d: i64) -> Result<bool, String> {
    let mut cat = cat.snapshot();
    let mut mouse = ScriptedMouse::new(walk.to_vec());
    let tr = play(o, cat.as_mut(), &mut mouse, &tracked(walk.len())).map_err(err)?;
    Ok(tr.localization_report(d).map_err(err)?.first_success_step.is_some())
}

// Criterion 7.
fn minimax_consistency() -> (Tally, String) {
    let graphs = ["path:3", "path:4", "cycle:4", "star:3"];
    let instances: Vec<(&str, i64, usize)> = graphs
        .iter()
        .flat_map(|&g| (0..=2).flat_map(move |d| (1..=8).map(move |h| (g, d, h))))
        .collect();
    let results: Vec<(Tally, bool)> = instances
        .par_iter()
        .map(|&(spec, d, h)| {
            let mut tally = Tally::default();
            let (_, o) = build(spec);
            let mut cat_won = false;
            let result = (|| -> Result<(), String> {
                let sol = exhaustive_game_value(o.graph(), h, d).map_err(err)?;
                let walks = lazy_walks(o.graph(), h, 1_000_000).map_err(err)?;
                match sol.value {
                    GameValue::CatWins => {
                        cat_won = true;
                        let cat = sol.cat();
                        if let Some(w) = walks.iter().find(|w| !localizes(&o, &cat, w, d).unwrap_or(false)) {
                            return Err(format!("extracted strategy misses the walk {w:?}"));
                        }
                    }
                    GameValue::MouseWins => {
                        for spec in cat_roster() {
                            let cat = spec.build(&o).map_err(err)?;
                            let mut escaped = false;
                            for w in &walks {
                                if !localizes(&o, cat.as_ref(), w, d)? {
                                    escaped = true;
                                    break;
                                }
                            }
                            if !escaped {
                                return Err(format!("{spec} localizes every walk though the solver says the mouse wins"));
                            }
                        }
                    }
                }
                Ok(())
            })();
            tally.record(result, || format!("{spec}, d = {d}, horizon {h}"));
            (tally, cat_won)
        })
        .collect();
    let wins = results.iter().filter(|r| r.1).count();
    let tally = results.into_iter().map(|r| r.0).fold(Tally::default(), Tally::merge);
    let detail = format!(
        "P3, P4, C4, K1,3 x d in {{0,1,2}} x horizon 1..=8: {wins} cat wins replayed, {} mouse wins checked against 10 cats",
        instances.len() - wins
    );
    (tally, detail)
}

fn structure_checks(spec: &str, g: &Graph) -> Vec<(String, Result<(), String>)> {
    let o = DistanceOracle::from_graph(g.clone());
    let n = g.n();
    let diam = diameter(g);
    let mut out = Vec::new();
    let mut seps = vec![1, 2, 3, bounds::sqrt_8n(n), 2 * bounds::ceil_sqrt(n as u64) as u32, diam + 1];
    seps.dedup();
    for sep in seps {
        let result = (|| {
            let c = scattered_cover(&o, sep).map_err(err)?;
            if !c.covers(&o) {
                return Err("does not cover".into());
            }
            if !c.is_separated(&o) {
                return Err("centers closer than the separation".into());
            }
            if c.radius_k != sep - 1 {
                return Err(format!("radius {} != separation - 1", c.radius_k));
            }
            if c.count() > 1 && c.count() * sep as usize > 2 * n {
                return Err(format!("{} centers exceed max(1, 2n/s)", c.count()));
            }
            Ok(())
        })();
        out.push((format!("{spec}: cover with separation {sep}"), result));
    }
    if n >= 9 {
        let k = bounds::three_sqrt_n(n);
        let missing = (0..n).find(|&v| thin_level(&o, v, k).is_none());
        out.push((
            format!("{spec}: thin levels below K = {k}"),
            missing.map_or(Ok(()), |v| Err(format!("vertex {v} has no level"))),
        ));
    }
    let round = parse_graph(&write_graph(g)).map_err(err).and_then(|h| {
        if &h == g {
            Ok(())
        } else {
            Err("graph changed".into())
        }
    });
    out.push((format!("{spec}: parse/write round trip"), round));
    out
}

fn spider_shape(t: usize, extra: usize) -> Result<(), String> {
    let spec = SpiderSpec { t, extra };
    let g = crate::graph::gen_spider(spec).map_err(err)?;
    let n = t * t + 1 + extra;
    if g.n() != n || g.edge_count() != n - 1 {
        return Err(format!("n = {}, edges = {}", g.n(), g.edge_count()));
    }
    let layout = SpiderLayout::new(spec);
    let dist = bfs_distances(&g, SpiderLayout::CENTER).map_err(err)?;
    let mut per_branch = vec![0; t + 2];
    for (v, &dv) in dist.iter().enumerate().skip(1) {
        let b = layout.branch_of(v).ok_or("vertex off every branch")?;
        per_branch[b] += 1;
        if dv as usize != layout.depth(v) {
            return Err(format!("vertex {v} at depth {} but distance {dv}", layout.depth(v)));
        }
    }
    if per_branch[1..=t].iter().any(|&c| c != t) || per_branch[t + 1] != extra {
        return Err(format!("branch sizes {per_branch:?}"));
    }
    Ok(())
}

// Criterion 8.
fn structure() -> (Tally, String) {
    let named = [
        "path:100",
        "cycle:50",
        "grid:10x10",
        "star:20",
        "rt:n=300,seed=4",
        "spider:t=12,extra=0",
        "spider:t=12,extra=7",
        "spider:t=24,extra=0",
        "path:2000",
        "grid:45x45",
        "rt:n=1000,seed=1",
    ];
    let mut graphs: Vec<(String, Graph)> =
        small_catalog(5).into_iter().enumerate().map(|(i, g)| (format!("catalog #{i}"), g)).collect();
    graphs.extend(named.iter().map(|s| (s.to_string(), build(s).1.graph().clone())));
    let mut tally = graphs
        .par_iter()
        .map(|(spec, g)| {
            let mut t = Tally::default();
            for (label, result) in structure_checks(spec, g) {
                t.record(result, || label);
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    let spiders = [(1, 0), (3, 2), (12, 0), (12, 7), (24, 0), (44, 63)];
    for (t, extra) in spiders {
        tally.record(spider_shape(t, extra), || format!("spider({t},{extra}) shape"));
    }
    let detail = format!("{} graphs (catalog n <= 5 plus named corpus), {} spider shapes", graphs.len(), spiders.len());
    (tally, detail)
}
