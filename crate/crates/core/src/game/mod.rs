//! Rules of the game: turn order, feedback bits, exact belief tracking and
//! transcripts.

mod belief;
mod engine;
mod strategy;
mod transcript;

use thiserror::Error;

use crate::graph::{GraphError, Vertex};

pub use belief::{belief_update, feedback_bit, BeliefSet};
pub use engine::{play, run_game, GameOptions};
pub use strategy::{CatLookahead, CatStrategy, MouseStrategy, MouseView, StrategyError};
pub use transcript::{BeliefTrack, LocalizationReport, Transcript, TranscriptMeta, TranscriptRecord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("horizon must be at least 1")]
    InvalidHorizon,
    #[error("step {step}: mouse moved from {from} to non-adjacent vertex {to}")]
    RuleViolation { step: usize, from: Vertex, to: Vertex },
    #[error("step {step}: {who} chose vertex {vertex} outside the graph")]
    OutOfRange { step: usize, who: &'static str, vertex: Vertex },
    #[error("step {step}: feedback bit leaves no consistent mouse position")]
    IllegalFeedback { step: usize },
    #[error("step {step}: strategy failed: {source}")]
    Strategy { step: usize, source: StrategyError },
    #[error("transcript has no belief track")]
    MissingBeliefs,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
