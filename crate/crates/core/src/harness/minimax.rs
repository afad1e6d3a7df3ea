use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::{HarnessError, TinyGame};
use crate::game::CatStrategy;
use crate::graph::{Graph, Vertex};

/// Largest instance the solver accepts.
pub const MAX_N: usize = 10;
pub const MAX_HORIZON: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GameValue {
    CatWins,
    MouseWins,
}

/// Key: (belief mask `M_i`, last query `c_i`, step `i`).
type State = (u32, Vertex, usize);

#[derive(Debug)]
struct Policy {
    game: TinyGame,
    first: Vertex,
    /// A winning next query for every winning non-terminal state reached.
    moves: HashMap<State, Vertex>,
}

/// The solved game, with a winning cat strategy when there is one.
#[derive(Debug, Clone)]
pub struct MinimaxSolution {
    pub value: GameValue,
    pub horizon: usize,
    pub d: i64,
    /// Number of distinct states explored.
    pub states: usize,
    policy: Arc<Policy>,
}

impl MinimaxSolution {
    /// The extracted cat; only meaningful when `value` is `CatWins`.
    pub fn cat(&self) -> MinimaxCat {
        MinimaxCat { policy: Arc::clone(&self.policy), mask: 0, prev: None, cur: 0, step: 0 }
    }
}

struct Solver<'a> {
    game: &'a TinyGame,
    horizon: usize,
    d: i64,
    full: u32,
    memo: HashMap<State, Option<Vertex>>,
    radius: HashMap<u32, u32>,
}

impl Solver<'_> {
    fn localized(&mut self, mask: u32) -> bool {
        let game = self.game;
        let r = *self.radius.entry(mask).or_insert_with(|| game.radius(|v| mask >> v & 1 == 1).unwrap());
        r as i64 <= self.d
    }

    /// Whether the cat can force localization from `M_i = mask` after
    /// having queried `c_i = last`.
    fn wins(&mut self, mask: u32, last: Vertex, step: usize) -> bool {
        if self.localized(mask) {
            return true;
        }
        if step == self.horizon {
            return false;
        }
        if let Some(known) = self.memo.get(&(mask, last, step)) {
            return known.is_some();
        }
        let mut choice = None;
        for c in 0..self.game.n() {
            let mut all = true;
            for bit in [false, true] {
                let next = self.game.advance_mask(mask, last, c, bit);
                if next != 0 && !self.wins(next, c, step + 1) {
                    all = false;
                    break;
                }
            }
            if all {
                choice = Some(c);
                break;
            }
        }
        self.memo.insert((mask, last, step), choice);
        choice.is_some()
    }
}

/// Solves the game on a tiny graph: can some cat force `rad_G(M_i) <= d` at
/// some step `i <= horizon` against every mouse?
pub fn exhaustive_game_value(g: &Graph, horizon: usize, d: i64) -> Result<MinimaxSolution, HarnessError> {
    if g.n() > MAX_N || horizon > MAX_HORIZON {
        return Err(HarnessError::TooLarge(format!(
            "minimax needs n <= {MAX_N} and horizon <= {MAX_HORIZON}, got n = {}, horizon = {horizon}",
            g.n()
        )));
    }
    if horizon == 0 {
        return Err(HarnessError::Input("horizon must be at least 1".into()));
    }
    let game = TinyGame::new(g)?;
    let full = (1u32 << g.n()) - 1;
    let mut solver =
        Solver { game: &game, horizon, d, full, memo: HashMap::new(), radius: HashMap::new() };
    let first = (0..g.n()).find(|&c| solver.wins(solver.full, c, 1));
    let value = if first.is_some() { GameValue::CatWins } else { GameValue::MouseWins };
    let states = solver.memo.len();
    let moves = solver.memo.into_iter().filter_map(|(k, v)| v.map(|c| (k, c))).collect();
    let policy = Arc::new(Policy { game, first: first.unwrap_or(0), moves });
    Ok(MinimaxSolution { value, horizon, d, states, policy })
}

/// The solver's strategy as a playable cat. It tracks `M_i` from its own
/// queries and the bits, then looks up the stored winning move; outside the
/// table it repeats its last query.
#[derive(Debug, Clone)]
pub struct MinimaxCat {
    policy: Arc<Policy>,
    mask: u32,
    prev: Option<Vertex>,
    cur: Vertex,
    step: usize,
}

impl CatStrategy for MinimaxCat {
    fn name(&self) -> String {
        "minimax".into()
    }

    fn first_query(&mut self) -> Vertex {
        self.mask = (1u32 << self.policy.game.n()) - 1;
        self.prev = None;
        self.cur = self.policy.first;
        self.step = 1;
        self.cur
    }

    fn next_query(&mut self, prev_bit: Option<bool>) -> Vertex {
        if let (Some(prev), Some(bit)) = (self.prev, prev_bit) {
            self.mask = self.policy.game.advance_mask(self.mask, prev, self.cur, bit);
        }
        let next = self.policy.moves.get(&(self.mask, self.cur, self.step)).copied().unwrap_or(self.cur);
        self.prev = Some(self.cur);
        self.cur = next;
        self.step += 1;
        next
    }

    fn snapshot(&self) -> Box<dyn CatStrategy> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_family, Family};

    fn graph(f: Family) -> Graph {
        gen_family(&f, 0).unwrap()
    }

    #[test]
    fn trivial_values() {
        let p4 = graph(Family::Path { n: 4 });
        // rad(V) = 2 for P4.
        assert_eq!(exhaustive_game_value(&p4, 1, 2).unwrap().value, GameValue::CatWins);
        assert_eq!(exhaustive_game_value(&p4, 8, -1).unwrap().value, GameValue::MouseWins);
        assert_eq!(exhaustive_game_value(&p4, 1, 1).unwrap().value, GameValue::MouseWins);
    }

    #[test]
    fn guards() {
        let big = graph(Family::Path { n: 11 });
        assert!(exhaustive_game_value(&big, 3, 0).is_err());
        assert!(exhaustive_game_value(&graph(Family::Path { n: 3 }), 9, 0).is_err());
    }

    #[test]
    fn more_time_never_hurts_the_cat() {
        let c4 = graph(Family::Cycle { n: 4 });
        for d in 0..=2 {
            let mut won = false;
            for h in 1..=6 {
                let v = exhaustive_game_value(&c4, h, d).unwrap().value == GameValue::CatWins;
                assert!(v || !won, "d = {d}, h = {h}");
                won |= v;
            }
        }
    }
}
