use fixedbitset::FixedBitSet;

use super::GameError;
use crate::graph::{DistanceOracle, Vertex};

/// `b_i`: true iff the cat is no further from the mouse than one step ago.
pub fn feedback_bit(d_prev: u32, d_cur: u32) -> bool {
    d_cur <= d_prev
}

/// The set `M_i` of mouse positions consistent with every bit up to step `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeliefSet {
    members: FixedBitSet,
    step: usize,
}

impl BeliefSet {
    /// `M_1 = V`: nothing is known before the first bit.
    pub fn full(n: usize) -> Self {
        let mut members = FixedBitSet::with_capacity(n);
        members.insert_range(..);
        BeliefSet { members, step: 1 }
    }

    pub fn from_members(n: usize, step: usize, members: impl IntoIterator<Item = Vertex>) -> Self {
        let mut set = FixedBitSet::with_capacity(n);
        set.extend(members);
        BeliefSet { members: set, step }
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(v)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &BeliefSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Keeps only members allowed by extra side information.
    pub fn restrict(&mut self, keep: impl Fn(Vertex) -> bool) {
        let drop: Vec<Vertex> = self.iter().filter(|&v| !keep(v)).collect();
        for v in drop {
            self.members.set(v, false);
        }
    }
}

/// One step of the belief recursion: `v` survives iff some `u` in the
/// previous set has `v` in its closed neighbourhood and the move `u -> v`
/// reproduces the observed bit. The consistency condition couples only
/// consecutive positions, so this is exact.
pub fn belief_update(
    oracle: &DistanceOracle,
    prev: &BeliefSet,
    c_prev: Vertex,
    c_cur: Vertex,
    bit: bool,
) -> Result<BeliefSet, GameError> {
    let g = oracle.graph();
    let from_prev = oracle.row(c_prev);
    let from_cur = oracle.row(c_cur);
    let mut next = FixedBitSet::with_capacity(g.n());
    for u in prev.iter() {
        let before = from_prev[u];
        if feedback_bit(before, from_cur[u]) == bit {
            next.insert(u);
        }
        for &v in g.neighbors(u) {
            if feedback_bit(before, from_cur[v]) == bit {
                next.insert(v);
            }
        }
    }
    let step = prev.step + 1;
    if next.is_clear() {
        return Err(GameError::IllegalFeedback { step });
    }
    Ok(BeliefSet { members: next, step })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_family, Family};

    fn p5() -> DistanceOracle {
        DistanceOracle::from_graph(gen_family(&Family::Path { n: 5 }, 0).unwrap())
    }

    #[test]
    fn bit_examples() {
        assert!(feedback_bit(3, 3));
        assert!(!feedback_bit(3, 4));
        assert!(!feedback_bit(0, 1));
    }

    #[test]
    fn staying_put_keeps_everything() {
        let o = p5();
        let next = belief_update(&o, &BeliefSet::full(5), 0, 0, true).unwrap();
        assert_eq!(next.to_vec(), vec![0, 1, 2, 3, 4]);
        assert_eq!(next.step(), 2);
    }

    #[test]
    fn moving_away_from_zero() {
        let o = p5();
        let next = belief_update(&o, &BeliefSet::full(5), 0, 0, false).unwrap();
        assert_eq!(next.to_vec(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn stationary_mouse_survives() {
        let o = p5();
        for u in 0..5 {
            for (cp, cc) in [(0, 4), (2, 2), (4, 1)] {
                let bit = feedback_bit(o.dist(cp, u), o.dist(cc, u));
                let single = BeliefSet::from_members(5, 1, [u]);
                assert!(belief_update(&o, &single, cp, cc, bit).unwrap().contains(u));
            }
        }
    }

    #[test]
    fn impossible_bit_is_an_error() {
        // A mouse at 4 seen from 4 cannot get closer once the cat jumps to 0.
        let o = p5();
        let single = BeliefSet::from_members(5, 3, [4]);
        assert_eq!(
            belief_update(&o, &single, 4, 0, true),
            Err(GameError::IllegalFeedback { step: 4 })
        );
    }
}
