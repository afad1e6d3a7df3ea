//! Mouse strategies: the adversarial spider mouse with its shadow
//! trajectory, seeded baselines, and a scripted replay mouse.

mod baseline;
mod scripted;
mod spec;
mod spider;

use thiserror::Error;

pub use baseline::{GreedyAwayMouse, RandomWalkMouse, StationaryMouse};
pub use scripted::ScriptedMouse;
pub use spec::MouseSpec;
pub use spider::{lowest_unqueried_branch, ProtectedWindow, SpiderMouse, SpiderPlan, Stage};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MouseError {
    #[error("graph is not the spider with t = {t}")]
    NotASpider { t: usize },
    #[error("{0}")]
    BadParameter(String),
    #[error("branch window {window} must be below t = {t}")]
    WindowTooLarge { window: usize, t: usize },
    #[error("no safe branch at step {step} for a window of {window}")]
    NoSafeBranch { step: usize, window: usize },
    #[error("invalid mouse spec `{spec}`: {reason}")]
    InvalidSpec { spec: String, reason: String },
}
