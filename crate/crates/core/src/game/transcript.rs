use serde::{Deserialize, Serialize};

use super::{feedback_bit, BeliefSet, GameError};
use crate::graph::{DistanceOracle, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptMeta {
    pub cat: String,
    pub mouse: String,
    pub seed: Option<u64>,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BeliefTrack {
    pub radius: Vec<u32>,
    pub center: Vec<Vertex>,
}

/// The full record of one game. Vectors are stored 0-based (entry 0 is time
/// 1); the accessors and the JSON form are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub graph_spec: String,
    pub horizon: usize,
    pub cat_queries: Vec<Vertex>,
    pub positions: Vec<Vertex>,
    pub bits: Vec<Option<bool>>,
    pub beliefs: Option<BeliefTrack>,
    /// Only filled when the game was played with `keep_belief_sets`.
    pub belief_sets: Vec<BeliefSet>,
    pub meta: TranscriptMeta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizationReport {
    pub first_success_step: Option<usize>,
    pub min_radius: u32,
    pub argmin_step: usize,
}

impl Transcript {
    pub(crate) fn empty(horizon: usize, cat: String, mouse: String) -> Self {
        Transcript {
            graph_spec: String::new(),
            horizon,
            cat_queries: Vec::with_capacity(horizon),
            positions: Vec::with_capacity(horizon),
            bits: Vec::with_capacity(horizon),
            beliefs: None,
            belief_sets: Vec::new(),
            meta: TranscriptMeta {
                cat,
                mouse,
                seed: None,
                version: env!("CARGO_PKG_VERSION").to_string(),
            },
        }
    }

    pub(crate) fn push_belief(&mut self, radius: u32, center: Vertex) {
        let track = self.beliefs.get_or_insert_with(BeliefTrack::default);
        track.radius.push(radius);
        track.center.push(center);
    }

    /// Number of steps actually played (less than the horizon after an early stop).
    pub fn steps(&self) -> usize {
        self.positions.len()
    }

    pub fn c(&self, i: usize) -> Vertex {
        self.cat_queries[i - 1]
    }

    pub fn m(&self, i: usize) -> Vertex {
        self.positions[i - 1]
    }

    pub fn b(&self, i: usize) -> Option<bool> {
        self.bits[i - 1]
    }

    pub fn radius(&self, i: usize) -> Option<u32> {
        self.beliefs.as_ref().map(|t| t.radius[i - 1])
    }

    pub fn belief_set(&self, i: usize) -> Option<&BeliefSet> {
        self.belief_sets.get(i - 1)
    }

    /// First step with `rad_G(M_i) <= d`, plus the overall minimum radius and
    /// the first step attaining it.
    pub fn localization_report(&self, d: i64) -> Result<LocalizationReport, GameError> {
        let track = self.beliefs.as_ref().ok_or(GameError::MissingBeliefs)?;
        let (argmin, &min_radius) = track
            .radius
            .iter()
            .enumerate()
            .min_by_key(|&(i, &r)| (r, i))
            .ok_or(GameError::MissingBeliefs)?;
        let first_success_step = track.radius.iter().position(|&r| (r as i64) <= d).map(|i| i + 1);
        Ok(LocalizationReport { first_success_step, min_radius, argmin_step: argmin + 1 })
    }

    /// Recomputes every bit from the recorded queries and positions.
    pub fn replay_bits(&self, oracle: &DistanceOracle) -> Vec<Option<bool>> {
        (0..self.steps())
            .map(|i| {
                (i > 0).then(|| {
                    feedback_bit(
                        oracle.dist(self.cat_queries[i - 1], self.positions[i - 1]),
                        oracle.dist(self.cat_queries[i], self.positions[i]),
                    )
                })
            })
            .collect()
    }

    pub fn to_record(&self) -> TranscriptRecord {
        fn padded<T: Copy>(xs: impl Iterator<Item = Option<T>>) -> Vec<Option<T>> {
            std::iter::once(None).chain(xs).collect()
        }
        let track = self.beliefs.as_ref();
        TranscriptRecord {
            graph_spec: self.graph_spec.clone(),
            horizon: self.horizon,
            c: padded(self.cat_queries.iter().map(|&v| Some(v))),
            m: padded(self.positions.iter().map(|&v| Some(v))),
            b: padded(self.bits.iter().map(|b| b.map(u8::from))),
            belief_radius: padded(track.into_iter().flat_map(|t| t.radius.iter().map(|&r| Some(r)))),
            belief_center: padded(track.into_iter().flat_map(|t| t.center.iter().map(|&v| Some(v)))),
            meta: self.meta.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("transcript serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        let rec: TranscriptRecord = serde_json::from_str(text)?;
        Ok(rec.into_transcript())
    }
}

/// JSON shape of a transcript: arrays are 1-indexed with a `null` at index 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptRecord {
    pub graph_spec: String,
    pub horizon: usize,
    pub c: Vec<Option<Vertex>>,
    pub m: Vec<Option<Vertex>>,
    pub b: Vec<Option<u8>>,
    pub belief_radius: Vec<Option<u32>>,
    pub belief_center: Vec<Option<Vertex>>,
    pub meta: TranscriptMeta,
}

impl TranscriptRecord {
    pub fn into_transcript(self) -> Transcript {
        let body = |v: Vec<Option<Vertex>>| v.into_iter().skip(1).flatten().collect::<Vec<_>>();
        let radius: Vec<u32> = self.belief_radius.into_iter().skip(1).flatten().collect();
        let beliefs = (!radius.is_empty()).then(|| BeliefTrack {
            radius,
            center: body(self.belief_center.clone()),
        });
        Transcript {
            graph_spec: self.graph_spec,
            horizon: self.horizon,
            cat_queries: body(self.c),
            positions: body(self.m),
            bits: self.b.into_iter().skip(1).map(|b| b.map(|x| x == 1)).collect(),
            beliefs,
            belief_sets: Vec::new(),
            meta: self.meta,
        }
    }
}
