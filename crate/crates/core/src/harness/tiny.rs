use super::HarnessError;
use crate::graph::{Graph, Vertex};

/// Largest graph the brute-force tools accept.
pub const MAX_TINY_N: usize = 256;

const INF: u32 = u32::MAX / 2;

/// A small graph with an all-pairs table computed by Floyd-Warshall, kept
/// apart from the engine's BFS oracle so the two can check each other.
#[derive(Debug, Clone)]
pub struct TinyGame {
    n: usize,
    dist: Vec<u32>,
}

impl TinyGame {
    pub fn new(g: &Graph) -> Result<Self, HarnessError> {
        let n = g.n();
        if n > MAX_TINY_N {
            return Err(HarnessError::TooLarge(format!("n = {n} exceeds {MAX_TINY_N}")));
        }
        let mut dist = vec![INF; n * n];
        for v in 0..n {
            dist[v * n + v] = 0;
        }
        for (u, v) in g.edges() {
            dist[u * n + v] = 1;
            dist[v * n + u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                let dik = dist[i * n + k];
                if dik == INF {
                    continue;
                }
                for j in 0..n {
                    let via = dik + dist[k * n + j];
                    if via < dist[i * n + j] {
                        dist[i * n + j] = via;
                    }
                }
            }
        }
        Ok(TinyGame { n, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Positions at step `i` reachable from `prev` (positions at step
    /// `i - 1`) by one lazy move whose distances to `c_prev`, `c_cur` give `bit`.
    pub fn advance(&self, prev: &[bool], c_prev: Vertex, c_cur: Vertex, bit: bool) -> Vec<bool> {
        let mut next = vec![false; self.n];
        for u in (0..self.n).filter(|&u| prev[u]) {
            let before = self.dist(c_prev, u);
            for (v, slot) in next.iter_mut().enumerate() {
                if !*slot && self.dist(u, v) <= 1 && (self.dist(c_cur, v) <= before) == bit {
                    *slot = true;
                }
            }
        }
        next
    }

    /// Bitmask form of [`advance`](Self::advance) for `n <= 32`.
    pub fn advance_mask(&self, prev: u32, c_prev: Vertex, c_cur: Vertex, bit: bool) -> u32 {
        let mut next = 0u32;
        for u in (0..self.n).filter(|&u| prev >> u & 1 == 1) {
            let before = self.dist(c_prev, u);
            for v in 0..self.n {
                if self.dist(u, v) <= 1 && (self.dist(c_cur, v) <= before) == bit {
                    next |= 1 << v;
                }
            }
        }
        next
    }

    /// `min_v max_{w in set} d(v, w)` by exhaustive scan; `None` for the empty set.
    pub fn radius(&self, members: impl Fn(Vertex) -> bool) -> Option<u32> {
        let set: Vec<Vertex> = (0..self.n).filter(|&w| members(w)).collect();
        if set.is_empty() {
            return None;
        }
        (0..self.n).map(|v| set.iter().map(|&w| self.dist(v, w)).max().unwrap()).min()
    }
}

/// The exact belief sets `M_1, ..., M_h` for queries `c` and bits `b`
/// (`b[0]` is ignored), by forward reachability over (step, vertex) pairs.
pub fn brute_force_beliefs(g: &Graph, c: &[Vertex], b: &[Option<bool>]) -> Result<Vec<Vec<Vertex>>, HarnessError> {
    let game = TinyGame::new(g)?;
    let h = c.len();
    if b.len() != h {
        return Err(HarnessError::Input(format!("{} queries but {} bits", h, b.len())));
    }
    if game.n() * h > 1_000_000 {
        return Err(HarnessError::TooLarge(format!("n * horizon = {}", game.n() * h)));
    }
    if let Some(&v) = c.iter().find(|&&v| v >= game.n()) {
        return Err(HarnessError::Input(format!("query {v} outside the graph")));
    }
    let mut layers = Vec::with_capacity(h);
    let mut reach = vec![true; game.n()];
    for i in 0..h {
        if i > 0 {
            let bit = b[i].ok_or_else(|| HarnessError::Input(format!("missing bit at step {}", i + 1)))?;
            reach = game.advance(&reach, c[i - 1], c[i], bit);
        }
        layers.push((0..game.n()).filter(|&v| reach[v]).collect());
    }
    Ok(layers)
}

/// Every lazy walk of length `horizon`, in lexicographic order.
pub fn lazy_walks(g: &Graph, horizon: usize, limit: usize) -> Result<Vec<Vec<Vertex>>, HarnessError> {
    fn extend(g: &Graph, walk: &mut Vec<Vertex>, horizon: usize, out: &mut Vec<Vec<Vertex>>, limit: usize) -> bool {
        if walk.len() == horizon {
            out.push(walk.clone());
            return out.len() <= limit;
        }
        let here = *walk.last().unwrap();
        for v in g.closed_neighborhood(here) {
            walk.push(v);
            let ok = extend(g, walk, horizon, out, limit);
            walk.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    if horizon == 0 {
        return Ok(out);
    }
    for start in 0..g.n() {
        if !extend(g, &mut vec![start], horizon, &mut out, limit) {
            return Err(HarnessError::TooLarge(format!("more than {limit} lazy walks of length {horizon}")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_family, Family};

    fn p5() -> Graph {
        gen_family(&Family::Path { n: 5 }, 0).unwrap()
    }

    #[test]
    fn horizon_one_is_everything() {
        assert_eq!(brute_force_beliefs(&p5(), &[3], &[None]).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn p5_bit_zero_at_the_end() {
        let layers = brute_force_beliefs(&p5(), &[0, 0], &[None, Some(false)]).unwrap();
        assert_eq!(layers[1], vec![1, 2, 3, 4]);
    }

    #[test]
    fn reachability_matches_trajectory_enumeration() {
        // Endpoints of walks whose every bit agrees, enumerated in full.
        let g = gen_family(&Family::Star { leaves: 3 }, 0).unwrap();
        let game = TinyGame::new(&g).unwrap();
        let c = [1, 2, 0, 3];
        let walks = lazy_walks(&g, c.len(), 10_000).unwrap();
        for bits in 0..8u32 {
            let b: Vec<Option<bool>> =
                std::iter::once(None).chain((0..3).map(|k| Some(bits >> k & 1 == 1))).collect();
            let mut expect = vec![Vec::new(); c.len()];
            for w in &walks {
                for i in 0..c.len() {
                    let ok = (1..=i).all(|j| (game.dist(c[j], w[j]) <= game.dist(c[j - 1], w[j - 1])) == b[j].unwrap());
                    if ok && !expect[i].contains(&w[i]) {
                        expect[i].push(w[i]);
                    }
                }
            }
            expect.iter_mut().for_each(|e| e.sort_unstable());
            assert_eq!(brute_force_beliefs(&g, &c, &b).unwrap(), expect, "bits {bits:03b}");
        }
    }

    #[test]
    fn walk_counts() {
        // P3: closed degrees 2, 3, 2.
        let g = gen_family(&Family::Path { n: 3 }, 0).unwrap();
        assert_eq!(lazy_walks(&g, 1, 100).unwrap().len(), 3);
        assert_eq!(lazy_walks(&g, 2, 100).unwrap().len(), 7);
        assert!(lazy_walks(&g, 6, 10).is_err());
    }

    #[test]
    fn floyd_agrees_with_radius_examples() {
        let game = TinyGame::new(&p5()).unwrap();
        assert_eq!(game.dist(0, 4), 4);
        assert_eq!(game.radius(|v| v == 0 || v == 4), Some(2));
        assert_eq!(game.radius(|_| false), None);
    }
}
