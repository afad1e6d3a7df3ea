use super::{belief_update, feedback_bit, BeliefSet, CatStrategy, GameError, MouseStrategy, MouseView, Transcript};
use crate::graph::{set_radius, DistanceOracle};

#[derive(Debug, Clone, Default)]
pub struct GameOptions {
    pub horizon: usize,
    /// Compute `M_i` and `rad_G(M_i)` every step.
    pub track_belief: bool,
    /// Also keep every `M_i` in the transcript (memory heavy).
    pub keep_belief_sets: bool,
    /// Stop as soon as `rad_G(M_i)` is at most this value.
    pub stop_at_radius: Option<u32>,
}

impl GameOptions {
    pub fn new(horizon: usize) -> Self {
        GameOptions { horizon, ..Default::default() }
    }

    pub fn tracked(horizon: usize) -> Self {
        GameOptions { horizon, track_belief: true, ..Default::default() }
    }
}

pub fn run_game(
    oracle: &DistanceOracle,
    cat: &mut dyn CatStrategy,
    mouse: &mut dyn MouseStrategy,
    horizon: usize,
    track_belief: bool,
) -> Result<Transcript, GameError> {
    play(oracle, cat, mouse, &GameOptions { horizon, track_belief, ..Default::default() })
}

/// Plays up to `opts.horizon` time steps. Each step the mouse moves first
/// (it may simulate the cat through the view), then the cat queries, then
/// `b_i` is computed; the cat receives it with its next query.
pub fn play(
    oracle: &DistanceOracle,
    cat: &mut dyn CatStrategy,
    mouse: &mut dyn MouseStrategy,
    opts: &GameOptions,
) -> Result<Transcript, GameError> {
    if opts.horizon == 0 {
        return Err(GameError::InvalidHorizon);
    }
    let g = oracle.graph();
    let n = g.n();
    let mut tr = Transcript::empty(opts.horizon, cat.name(), mouse.name());
    let track = opts.track_belief || opts.keep_belief_sets || opts.stop_at_radius.is_some();
    let mut belief: Option<BeliefSet> = None;

    for step in 1..=opts.horizon {
        let view = MouseView {
            oracle,
            cat: &*cat,
            step,
            cat_queries: &tr.cat_queries,
            positions: &tr.positions,
            bits: &tr.bits,
        };
        let pending = view.pending_bit();
        let moved = if step == 1 { mouse.first_position(&view) } else { mouse.next_move(&view) };
        let m = moved.map_err(|source| GameError::Strategy { step, source })?;
        if m >= n {
            return Err(GameError::OutOfRange { step, who: "mouse", vertex: m });
        }
        if let Some(&prev) = tr.positions.last() {
            if !g.in_closed_neighborhood(prev, m) {
                return Err(GameError::RuleViolation { step, from: prev, to: m });
            }
        }
        let c = if step == 1 { cat.first_query() } else { cat.next_query(pending) };
        if c >= n {
            return Err(GameError::OutOfRange { step, who: "cat", vertex: c });
        }
        let bit = match (tr.cat_queries.last(), tr.positions.last()) {
            (Some(&cp), Some(&mp)) => Some(feedback_bit(oracle.dist(cp, mp), oracle.dist(c, m))),
            _ => None,
        };

        if track {
            let next = match (belief.take(), bit) {
                (Some(prev), Some(b)) => {
                    belief_update(oracle, &prev, *tr.cat_queries.last().unwrap(), c, b)?
                }
                _ => BeliefSet::full(n),
            };
            debug_assert!(next.contains(m), "true position must stay consistent");
            let (radius, center) = set_radius(oracle, &next.to_vec())?;
            tr.push_belief(radius, center);
            if opts.keep_belief_sets {
                tr.belief_sets.push(next.clone());
            }
            belief = Some(next);
        }
        tr.cat_queries.push(c);
        tr.positions.push(m);
        tr.bits.push(bit);

        if let (Some(limit), Some(track)) = (opts.stop_at_radius, &tr.beliefs) {
            if track.radius.last().is_some_and(|&r| r <= limit) {
                break;
            }
        }
    }
    Ok(tr)
}
