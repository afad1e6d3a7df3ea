use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::HarnessError;
use crate::bounds;
use crate::cats::{fat_cat_with_c, sqrt_cat, CatSpec, ThinCat};
use crate::game::{play, GameOptions, Transcript};
use crate::graph::{DistanceOracle, GraphSpec};
use crate::mice::MouseSpec;
use crate::rng;

/// Version tag written as the first line of every CSV summary.
pub const CSV_VERSION: &str = "catmouse-report v1";

const CSV_COLUMNS: [&str; 8] =
    ["config_hash", "seed", "first_success_step", "min_radius", "argmin_step", "bound_d", "bound_t", "pass"];

const LOWER_NOTE: &str = "lower-bound rows check the configured cat only; the lower bound quantifies over all cats";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// Pass iff `rad_G(M_i) <= d` at some step `i <= t`.
    Upper,
    /// Pass iff no step within the horizon has `rad_G(M_i) <= d`.
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundTag {
    Sqrt32n,
    Sqrt2n,
    FourLPlusK,
    ThreeHalvesK,
    TOver12,
}

impl FromStr for BoundTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "sqrt32n" => BoundTag::Sqrt32n,
            "sqrt2n" => BoundTag::Sqrt2n,
            "fourLplusK" => BoundTag::FourLPlusK,
            "threeHalvesK" => BoundTag::ThreeHalvesK,
            "tOver12" => BoundTag::TOver12,
            other => return Err(format!("unknown bound tag `{other}`")),
        })
    }
}

/// An explicit integer or a formula tag such as `"sqrt32n"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoundValue {
    Int(i64),
    Tag(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundSpec {
    pub kind: BoundKind,
    pub d: BoundValue,
    /// Deadline for upper bounds; defaults to the horizon.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<BoundValue>,
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub graph: String,
    pub cat: String,
    pub mouse: String,
    pub horizon: usize,
    pub seeds: Vec<u64>,
    #[serde(default = "one")]
    pub repetitions: usize,
    pub bound: BoundSpec,
    /// Write one transcript per row next to the report.
    #[serde(default)]
    pub transcripts: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResolvedBounds {
    pub kind: BoundKind,
    pub d: i64,
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub seed: u64,
    pub repetition: usize,
    pub first_success_step: Option<usize>,
    pub min_radius: Option<u32>,
    pub argmin_step: Option<usize>,
    pub bound_d: i64,
    pub bound_t: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Aggregate {
    pub runs: usize,
    pub passed: usize,
    pub pass_rate: f64,
    pub worst_min_radius: Option<u32>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub version: String,
    pub config: ExperimentConfig,
    pub config_hash: String,
    pub graph: String,
    pub n: usize,
    pub resolved: ResolvedBounds,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub rows: Vec<ReportRow>,
    pub aggregate: Aggregate,
}

struct Parsed {
    graph: GraphSpec,
    cat: CatSpec,
    mouse: MouseSpec,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self, HarnessError> {
        toml::from_str(text).map_err(|e| HarnessError::Config(vec![e.to_string()]))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Short content hash of the config.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("config serializes");
        hex::encode(&Sha256::digest(json.as_bytes())[..8])
    }

    fn parse(&self) -> Result<Parsed, HarnessError> {
        let mut errors = Vec::new();
        let graph = self.graph.parse::<GraphSpec>().map_err(|e| errors.push(format!("graph: {e}"))).ok();
        let cat = self.cat.parse::<CatSpec>().map_err(|e| errors.push(format!("cat: {e}"))).ok();
        let mouse = self.mouse.parse::<MouseSpec>().map_err(|e| errors.push(format!("mouse: {e}"))).ok();
        if self.horizon == 0 {
            errors.push("horizon: must be at least 1".into());
        }
        if self.seeds.is_empty() {
            errors.push("seeds: list is empty".into());
        }
        if self.repetitions == 0 {
            errors.push("repetitions: must be at least 1".into());
        }
        for (field, value) in [("bound.d", Some(&self.bound.d)), ("bound.t", self.bound.t.as_ref())] {
            if let Some(BoundValue::Tag(tag)) = value {
                if let Err(e) = tag.parse::<BoundTag>() {
                    errors.push(format!("{field}: {e}"));
                }
            }
        }
        match (graph, cat, mouse) {
            (Some(graph), Some(cat), Some(mouse)) if errors.is_empty() => Ok(Parsed { graph, cat, mouse }),
            _ => Err(HarnessError::Config(errors)),
        }
    }

    fn resolve(&self, parsed: &Parsed, oracle: &DistanceOracle) -> Result<ResolvedBounds, HarnessError> {
        let n = oracle.n();
        let eval = |field: &str, v: &BoundValue| -> Result<i64, String> {
            let tag = match v {
                BoundValue::Int(x) => return Ok(*x),
                BoundValue::Tag(s) => s.parse::<BoundTag>()?,
            };
            let value = match tag {
                BoundTag::Sqrt32n => bounds::sqrt_32n(n),
                BoundTag::Sqrt2n => bounds::sqrt_2n(n),
                BoundTag::FourLPlusK => {
                    let cat = match parsed.cat {
                        CatSpec::Sqrt => sqrt_cat(oracle),
                        CatSpec::Fat { c } => fat_cat_with_c(oracle, c),
                        _ => return Err(format!("{field}: fourLplusK needs a fat or sqrt cat")),
                    };
                    cat.map_err(|e| format!("{field}: {e}"))?.guarantee()
                }
                BoundTag::ThreeHalvesK => match parsed.cat {
                    CatSpec::Thin { k } => bounds::three_halves(k.unwrap_or_else(|| ThinCat::auto_k(oracle))),
                    _ => return Err(format!("{field}: threeHalvesK needs a thin cat")),
                },
                BoundTag::TOver12 => match parsed.graph.spider() {
                    Some(s) if s.t % 12 == 0 => (s.t / 12) as u32,
                    _ => return Err(format!("{field}: tOver12 needs a spider with 12 | t")),
                },
            };
            Ok(value as i64)
        };
        let mut errors = Vec::new();
        let d = eval("bound.d", &self.bound.d).map_err(|e| errors.push(e)).unwrap_or(0);
        let t = match (&self.bound.t, self.bound.kind) {
            (_, BoundKind::Lower) | (None, _) => self.horizon as i64,
            (Some(v), BoundKind::Upper) => eval("bound.t", v).map_err(|e| errors.push(e)).unwrap_or(0),
        };
        if t < 0 {
            errors.push(format!("bound.t: resolved to negative {t}"));
        }
        if !errors.is_empty() {
            return Err(HarnessError::Config(errors));
        }
        Ok(ResolvedBounds { kind: self.bound.kind, d, t: t as usize })
    }
}

type RowOutcome = (ReportRow, Option<Transcript>);

fn run_row(
    cfg: &ExperimentConfig,
    parsed: &Parsed,
    oracle: &DistanceOracle,
    bounds: ResolvedBounds,
    base_seed: u64,
    repetition: usize,
) -> RowOutcome {
    let seed = if repetition == 0 { base_seed } else { rng::split(base_seed, "repetition", repetition as u64) };
    let mut row = ReportRow {
        seed,
        repetition,
        first_success_step: None,
        min_radius: None,
        argmin_step: None,
        bound_d: bounds.d,
        bound_t: bounds.t,
        pass: false,
        error: None,
    };
    let played = (|| -> Result<Transcript, HarnessError> {
        let mut cat = parsed.cat.with_seed(seed).build(oracle)?;
        let mut mouse = parsed.mouse.with_seed(seed).build(oracle.graph())?;
        let opts = GameOptions {
            horizon: cfg.horizon,
            track_belief: true,
            keep_belief_sets: false,
            stop_at_radius: u32::try_from(bounds.d).ok(),
        };
        let mut tr = play(oracle, cat.as_mut(), mouse.as_mut(), &opts)?;
        tr.graph_spec = parsed.graph.to_string();
        tr.meta.seed = Some(seed);
        Ok(tr)
    })();
    match played {
        Ok(tr) => {
            let rep = tr.localization_report(bounds.d).expect("beliefs were tracked");
            row.first_success_step = rep.first_success_step;
            row.min_radius = Some(rep.min_radius);
            row.argmin_step = Some(rep.argmin_step);
            row.pass = match bounds.kind {
                BoundKind::Upper => rep.first_success_step.is_some_and(|s| s <= bounds.t),
                BoundKind::Lower => rep.first_success_step.is_none(),
            };
            (row, cfg.transcripts.then_some(tr))
        }
        Err(e) => {
            row.error = Some(e.to_string());
            (row, None)
        }
    }
}

/// Runs every `(seed, repetition)` row, optionally writing `report.csv`,
/// `report.json` and per-row transcripts into `out_dir`. Row failures
/// (including rule violations) fail the row, not the call.
pub fn run_experiment(cfg: &ExperimentConfig, out_dir: Option<&Path>) -> Result<Report, HarnessError> {
    let parsed = cfg.parse()?;
    let oracle = Arc::new(DistanceOracle::from_graph(parsed.graph.build()?));
    let bounds = cfg.resolve(&parsed, &oracle)?;
    let jobs: Vec<(u64, usize)> =
        cfg.seeds.iter().flat_map(|&s| (0..cfg.repetitions).map(move |r| (s, r))).collect();
    let mut results: Vec<((u64, usize), RowOutcome)> = jobs
        .par_iter()
        .map(|&(s, r)| ((s, r), run_row(cfg, &parsed, &oracle, bounds, s, r)))
        .collect();
    results.sort_by_key(|(key, _)| *key);

    let rows: Vec<ReportRow> = results.iter().map(|(_, (row, _))| row.clone()).collect();
    let passed = rows.iter().filter(|r| r.pass).count();
    let aggregate = Aggregate {
        runs: rows.len(),
        passed,
        pass_rate: passed as f64 / rows.len() as f64,
        worst_min_radius: match bounds.kind {
            BoundKind::Upper => rows.iter().filter_map(|r| r.min_radius).max(),
            BoundKind::Lower => rows.iter().filter_map(|r| r.min_radius).min(),
        },
        pass: passed == rows.len(),
    };
    let report = Report {
        version: CSV_VERSION.to_string(),
        config: cfg.clone(),
        config_hash: cfg.hash(),
        graph: parsed.graph.to_string(),
        n: oracle.n(),
        resolved: bounds,
        note: (bounds.kind == BoundKind::Lower).then(|| LOWER_NOTE.to_string()),
        rows,
        aggregate,
    };

    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("report.csv"), report.to_csv())?;
        fs::write(dir.join("report.json"), report.to_json())?;
        if cfg.transcripts {
            let tdir = dir.join("transcripts");
            fs::create_dir_all(&tdir)?;
            for ((seed, rep), (_, tr)) in &results {
                if let Some(tr) = tr {
                    fs::write(tdir.join(format!("seed-{seed}-rep-{rep}.json")), tr.to_json())?;
                }
            }
        }
    }
    Ok(report)
}

impl Report {
    pub fn pass(&self) -> bool {
        self.aggregate.pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Version line, optional note line, then the fixed columns.
    pub fn to_csv(&self) -> String {
        let mut out = format!("# {CSV_VERSION}\n");
        if let Some(note) = &self.note {
            out.push_str(&format!("# {note}\n"));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS).expect("in-memory write");
        let opt = |x: Option<String>| x.unwrap_or_default();
        for r in &self.rows {
            w.write_record([
                self.config_hash.clone(),
                r.seed.to_string(),
                opt(r.first_success_step.map(|s| s.to_string())),
                opt(r.min_radius.map(|s| s.to_string())),
                opt(r.argmin_step.map(|s| s.to_string())),
                r.bound_d.to_string(),
                r.bound_t.to_string(),
                r.pass.to_string(),
            ])
            .expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8"));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> ExperimentConfig {
        ExperimentConfig::from_toml(text).unwrap()
    }

    const UPPER: &str = r#"
        graph = "spider:t=12"
        cat = "sqrt"
        mouse = "stationary"
        horizon = 18
        seeds = [1, 2, 3]
        [bound]
        kind = "upper"
        d = "sqrt32n"
    "#;

    #[test]
    fn sqrt_cat_meets_its_bound_on_the_small_spider() {
        let report = run_experiment(&cfg(UPPER), None).unwrap();
        assert_eq!(report.resolved, ResolvedBounds { kind: BoundKind::Upper, d: 69, t: 18 });
        assert!(report.pass());
        assert_eq!(report.rows.len(), 3);
        assert!(report.rows.windows(2).all(|w| w[0].seed < w[1].seed));
    }

    #[test]
    fn spider_mouse_holds_the_lower_bound() {
        let c = cfg(r#"
            graph = "spider:t=12"
            cat = "sweep"
            mouse = "spider:t=12"
            horizon = 300
            seeds = [0]
            [bound]
            kind = "lower"
            d = "tOver12"
        "#);
        let report = run_experiment(&c, None).unwrap();
        assert_eq!(report.resolved.d, 1);
        assert!(report.pass(), "{:?}", report.rows);
        assert!(report.to_csv().lines().nth(1).unwrap().contains("all cats"));
    }

    #[test]
    fn csv_is_deterministic() {
        let a = run_experiment(&cfg(UPPER), None).unwrap().to_csv();
        let b = run_experiment(&cfg(UPPER), None).unwrap().to_csv();
        assert_eq!(a, b);
        let mut lines = a.lines();
        assert_eq!(lines.next(), Some("# catmouse-report v1"));
        assert_eq!(lines.next(), Some(CSV_COLUMNS.join(",").as_str()));
    }

    #[test]
    fn input_errors_name_every_field() {
        let mut c = cfg(UPPER);
        c.seeds.clear();
        c.cat = "dog".into();
        c.bound.d = BoundValue::Tag("sqrt99n".into());
        let err = run_experiment(&c, None).unwrap_err();
        let HarnessError::Config(fields) = err else { panic!("expected config error") };
        assert_eq!(fields.len(), 3, "{fields:?}");
        assert!(fields.iter().any(|f| f.starts_with("seeds")));
        assert!(fields.iter().any(|f| f.starts_with("cat")));
        assert!(fields.iter().any(|f| f.starts_with("bound.d")));
    }

    #[test]
    fn tags_need_matching_strategies() {
        let mut c = cfg(UPPER);
        c.bound.d = BoundValue::Tag("threeHalvesK".into());
        assert!(matches!(run_experiment(&c, None), Err(HarnessError::Config(_))));
        c.cat = "thin:K=40".into();
        let report = run_experiment(&c, None).unwrap();
        assert_eq!(report.resolved.d, 60);
    }

    #[test]
    fn rule_violations_fail_the_row() {
        // The spider mouse refuses a path, so every row errors.
        let mut c = cfg(UPPER);
        c.graph = "path:10".into();
        c.mouse = "spider:t=12".into();
        let report = run_experiment(&c, None).unwrap();
        assert!(!report.pass());
        assert!(report.rows.iter().all(|r| r.error.is_some()));
    }

    #[test]
    fn writes_artifacts() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = cfg(UPPER);
        c.transcripts = true;
        run_experiment(&c, Some(dir.path())).unwrap();
        assert!(dir.path().join("report.csv").exists());
        let json = fs::read_to_string(dir.path().join("report.json")).unwrap();
        assert!(json.contains("\"d\": 69"));
        let tr = fs::read_to_string(dir.path().join("transcripts/seed-1-rep-0.json")).unwrap();
        assert!(Transcript::from_json(&tr).unwrap().steps() >= 1);
    }
}
