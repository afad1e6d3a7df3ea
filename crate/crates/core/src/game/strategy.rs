use thiserror::Error;

use crate::graph::{DistanceOracle, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct StrategyError(pub String);

/// A deterministic cat: its queries are a function of the bit history alone.
///
/// `first_query` yields `c_1`; `next_query` yields `c_i` for `i >= 2` and
/// receives `b_{i-1}`, which is `None` for `i = 2` because no bit exists yet.
/// `snapshot` is a full copy of the current state; restoring means replacing
/// the live strategy with a snapshot.
pub trait CatStrategy: Send + Sync {
    fn name(&self) -> String;
    fn first_query(&mut self) -> Vertex;
    fn next_query(&mut self, prev_bit: Option<bool>) -> Vertex;
    fn snapshot(&self) -> Box<dyn CatStrategy>;
}

/// A private copy of a cat that can be stepped forward without touching the
/// live one.
pub struct CatLookahead {
    cat: Box<dyn CatStrategy>,
    started: bool,
}

impl CatLookahead {
    /// `started` tells whether `first_query` was already consumed.
    pub fn new(cat: &dyn CatStrategy, started: bool) -> Self {
        CatLookahead { cat: cat.snapshot(), started }
    }

    pub fn query(&mut self, prev_bit: Option<bool>) -> Vertex {
        if self.started {
            self.cat.next_query(prev_bit)
        } else {
            self.started = true;
            self.cat.first_query()
        }
    }
}

/// Everything the mouse may look at before its move at `step`: the graph,
/// the complete history so far, and the cat itself (for simulation).
pub struct MouseView<'a> {
    pub oracle: &'a DistanceOracle,
    pub cat: &'a dyn CatStrategy,
    /// The step about to be played, 1-based.
    pub step: usize,
    /// `c_1..c_{step-1}`.
    pub cat_queries: &'a [Vertex],
    /// `m_1..m_{step-1}`.
    pub positions: &'a [Vertex],
    /// `b_1..b_{step-1}`; `b_1` is always `None`.
    pub bits: &'a [Option<bool>],
}

impl MouseView<'_> {
    pub fn graph(&self) -> &Graph {
        self.oracle.graph()
    }

    pub fn current(&self) -> Option<Vertex> {
        self.positions.last().copied()
    }

    pub fn last_query(&self) -> Option<Vertex> {
        self.cat_queries.last().copied()
    }

    /// The bit the cat will receive with its next query.
    pub fn pending_bit(&self) -> Option<bool> {
        self.bits.last().copied().flatten()
    }

    /// A cat copy positioned right before it chooses `c_step`; feed it
    /// `pending_bit()` first.
    pub fn lookahead(&self) -> CatLookahead {
        CatLookahead::new(self.cat, self.step > 1)
    }

    /// `c_step`, obtained by simulation.
    pub fn upcoming_query(&self) -> Vertex {
        self.lookahead().query(self.pending_bit())
    }
}

pub trait MouseStrategy: Send {
    fn name(&self) -> String;
    fn first_position(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError>;
    fn next_move(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError>;
}
