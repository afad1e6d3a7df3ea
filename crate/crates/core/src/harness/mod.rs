//! Verification harness: independent brute-force oracles, the tiny-game
//! minimax solver, experiment configs and reports, and the named acceptance
//! suites.

mod catalog;
mod checks;
mod experiment;
mod minimax;
mod suites;
mod tiny;

use thiserror::Error;

use crate::cats::CatError;
use crate::game::GameError;
use crate::graph::GraphError;
use crate::mice::MouseError;

pub use catalog::{connected_graphs, small_catalog};
pub use checks::{check_fat_claim, check_spider_run, check_thin_phases, ThinCheck};
pub use experiment::{
    run_experiment, BoundKind, BoundSpec, BoundTag, BoundValue, ExperimentConfig, Report, ReportRow,
    ResolvedBounds, CSV_VERSION,
};
pub use minimax::{exhaustive_game_value, GameValue, MinimaxCat, MinimaxSolution};
pub use suites::{criteria, run_criterion, verify_suite, Criterion, SuiteName, SuiteReport, Verdict};
pub use tiny::{brute_force_beliefs, lazy_walks, TinyGame};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invalid experiment config:\n  {}", .0.join("\n  "))]
    Config(Vec<String>),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Mouse(#[from] MouseError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
