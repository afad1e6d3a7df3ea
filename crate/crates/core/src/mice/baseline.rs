use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::game::{MouseStrategy, MouseView, StrategyError};
use crate::graph::Vertex;
use crate::rng;

fn seeded_start(seed: u64, n: usize) -> Vertex {
    rng::stream(seed, "mouse/start").gen_range(0..n)
}

/// Never moves. Starts at `start`, or at a seed-derived vertex.
#[derive(Debug, Clone)]
pub struct StationaryMouse {
    seed: u64,
    start: Option<Vertex>,
}

impl StationaryMouse {
    pub fn new(seed: u64) -> Self {
        StationaryMouse { seed, start: None }
    }

    pub fn at(v: Vertex) -> Self {
        StationaryMouse { seed: 0, start: Some(v) }
    }
}

impl MouseStrategy for StationaryMouse {
    fn name(&self) -> String {
        match self.start {
            Some(v) => format!("stationary:at={v}"),
            None => format!("stationary:seed={}", self.seed),
        }
    }

    fn first_position(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError> {
        Ok(self.start.unwrap_or_else(|| seeded_start(self.seed, view.oracle.n())))
    }

    fn next_move(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError> {
        Ok(view.current().expect("mouse has a position"))
    }
}

/// Lazy random walk: a uniform choice from the closed neighbourhood.
#[derive(Debug, Clone)]
pub struct RandomWalkMouse {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomWalkMouse {
    pub fn new(seed: u64) -> Self {
        RandomWalkMouse { seed, rng: rng::stream(seed, "mouse/random_walk") }
    }
}

impl MouseStrategy for RandomWalkMouse {
    fn name(&self) -> String {
        format!("rw:seed={}", self.seed)
    }

    fn first_position(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError> {
        Ok(seeded_start(self.seed, view.oracle.n()))
    }

    fn next_move(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError> {
        let here = view.current().expect("mouse has a position");
        let g = view.graph();
        let k = self.rng.gen_range(0..=g.degree(here));
        Ok(if k == g.degree(here) { here } else { g.neighbors(here)[k] })
    }
}

/// Moves to the closed-neighbourhood vertex farthest from the cat's last
/// query; ties go to the lowest id.
#[derive(Debug, Clone)]
pub struct GreedyAwayMouse {
    seed: u64,
    start: Option<Vertex>,
}

impl GreedyAwayMouse {
    pub fn new(seed: u64) -> Self {
        GreedyAwayMouse { seed, start: None }
    }

    pub fn at(v: Vertex) -> Self {
        GreedyAwayMouse { seed: 0, start: Some(v) }
    }
}

impl MouseStrategy for GreedyAwayMouse {
    fn name(&self) -> String {
        match self.start {
            Some(v) => format!("greedy:at={v}"),
            None => format!("greedy:seed={}", self.seed),
        }
    }

    fn first_position(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError> {
        Ok(self.start.unwrap_or_else(|| seeded_start(self.seed, view.oracle.n())))
    }

    fn next_move(&mut self, view: &MouseView<'_>) -> Result<Vertex, StrategyError> {
        let here = view.current().expect("mouse has a position");
        let cat = view.last_query().expect("cat has queried");
        let row = view.oracle.row(cat);
        let best = view
            .graph()
            .closed_neighborhood(here)
            .into_iter()
            .max_by_key(|&v| (row[v], std::cmp::Reverse(v)))
            .unwrap();
        Ok(best)
    }
}
