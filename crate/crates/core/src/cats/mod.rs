//! Cat strategies: ball-cover elimination, sphere-walk descent, their
//! `sqrt(n)` composition, and deterministic baselines.

mod baseline;
mod fat;
mod spec;
mod thin;

use thiserror::Error;

use crate::graph::{GraphError, Vertex};

pub use baseline::{ScriptedCat, SeededRandomCat, StayCat, SweepCat};
pub use fat::{fat_cat_with_c, sqrt_cat, FatCat};
pub use spec::CatSpec;
pub use thin::{PhaseRecord, ThinCat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("ball cover has no centers")]
    EmptyCover,
    #[error("vertex {vertex} has no thin level below K = {k}")]
    NoThinLevel { vertex: Vertex, k: u32 },
    #[error("invalid cat spec `{spec}`: {reason}")]
    InvalidSpec { spec: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
