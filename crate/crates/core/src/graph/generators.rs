use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Vertex};
use crate::rng;

/// A star `K_{1,t}` with every edge subdivided `t - 1` times, plus an optional
/// padding branch of `extra` vertices hanging off the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpiderSpec {
    pub t: usize,
    pub extra: usize,
}

impl SpiderSpec {
    pub fn order(&self) -> usize {
        self.t * self.t + 1 + self.extra
    }
}

/// Fixed id layout of a generated spider: center 0, main branch `j`
/// (1-based) at ids `1 + (j-1)t ..= jt` ordered outward, padding branch last.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpiderLayout {
    pub t: usize,
    pub extra: usize,
}

impl SpiderLayout {
    pub const CENTER: Vertex = 0;

    pub fn new(spec: SpiderSpec) -> Self {
        SpiderLayout { t: spec.t, extra: spec.extra }
    }

    /// Branch id used for the padding branch.
    pub fn padding_branch(&self) -> usize {
        self.t + 1
    }

    /// Vertex at distance `depth` (>= 1) from the center on main branch `branch`.
    pub fn vertex(&self, branch: usize, depth: usize) -> Vertex {
        debug_assert!((1..=self.t).contains(&branch) && (1..=self.t).contains(&depth));
        1 + (branch - 1) * self.t + (depth - 1)
    }

    /// The center is on no branch; padding vertices report `padding_branch()`.
    pub fn branch_of(&self, v: Vertex) -> Option<usize> {
        let main = self.t * self.t;
        match v {
            0 => None,
            v if v <= main => Some((v - 1) / self.t + 1),
            _ => Some(self.padding_branch()),
        }
    }

    pub fn depth(&self, v: Vertex) -> usize {
        let main = self.t * self.t;
        match v {
            0 => 0,
            v if v <= main => (v - 1) % self.t + 1,
            v => v - main,
        }
    }
}

pub fn gen_spider(spec: SpiderSpec) -> Result<Graph, GraphError> {
    if spec.t == 0 {
        return Err(GraphError::InvalidParams("spider needs t >= 1".into()));
    }
    let t = spec.t;
    let mut edges = Vec::with_capacity(spec.order() - 1);
    let attach_branch = |start: Vertex, len: usize, edges: &mut Vec<(Vertex, Vertex)>| {
        let mut prev = 0;
        for v in start..start + len {
            edges.push((prev, v));
            prev = v;
        }
    };
    for j in 0..t {
        attach_branch(1 + j * t, t, &mut edges);
    }
    if spec.extra > 0 {
        attach_branch(t * t + 1, spec.extra, &mut edges);
    }
    Graph::from_edges(spec.order(), edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Grid { rows: usize, cols: usize },
    /// Uniform random attachment: vertex `i` joins a uniform earlier vertex.
    RandomTree { n: usize },
    Star { leaves: usize },
}

pub fn gen_family(family: &Family, seed: u64) -> Result<Graph, GraphError> {
    let invalid = |msg: &str| Err(GraphError::InvalidParams(msg.to_string()));
    match *family {
        Family::Path { n } => {
            if n < 2 {
                return invalid("path needs n >= 2");
            }
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        Family::Cycle { n } => {
            if n < 3 {
                return invalid("cycle needs n >= 3");
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::Grid { rows, cols } => {
            if rows == 0 || cols == 0 || rows * cols < 2 {
                return invalid("grid needs rows, cols >= 1 and at least 2 vertices");
            }
            let id = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            Graph::from_edges(rows * cols, edges)
        }
        Family::RandomTree { n } => {
            if n < 2 {
                return invalid("random tree needs n >= 2");
            }
            let mut r = rng::stream(seed, "random_tree");
            Graph::from_edges(n, (1..n).map(|v| (r.gen_range(0..v), v)).collect::<Vec<_>>())
        }
        Family::Star { leaves } => {
            if leaves == 0 {
                return invalid("star needs at least one leaf");
            }
            Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spider_counts() {
        let g = gen_spider(SpiderSpec { t: 12, extra: 0 }).unwrap();
        assert_eq!(g.n(), 145);
        assert_eq!(g.edge_count(), 144);
        let p2 = gen_spider(SpiderSpec { t: 1, extra: 0 }).unwrap();
        assert_eq!(p2, gen_family(&Family::Path { n: 2 }, 0).unwrap());
        let padded = gen_spider(SpiderSpec { t: 12, extra: 7 }).unwrap();
        assert_eq!(padded.n(), 152);
        assert_eq!(padded.degree(0), 13);
    }

    #[test]
    fn spider_layout_roundtrip() {
        let spec = SpiderSpec { t: 5, extra: 3 };
        let g = gen_spider(spec).unwrap();
        let layout = SpiderLayout::new(spec);
        for b in 1..=5 {
            for d in 1..=5 {
                let v = layout.vertex(b, d);
                assert_eq!((layout.branch_of(v), layout.depth(v)), (Some(b), d));
            }
            assert!(g.is_adjacent(0, layout.vertex(b, 1)));
        }
        assert_eq!(layout.branch_of(0), None);
        assert_eq!(layout.branch_of(27), Some(6));
        assert_eq!(layout.depth(28), 3);
    }

    #[test]
    fn families() {
        let grid = gen_family(&Family::Grid { rows: 3, cols: 3 }, 0).unwrap();
        assert_eq!((grid.n(), grid.edge_count()), (9, 12));
        let a = gen_family(&Family::RandomTree { n: 100 }, 1).unwrap();
        let b = gen_family(&Family::RandomTree { n: 100 }, 1).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        assert_eq!(a.edge_count(), 99);
        assert!(gen_family(&Family::Path { n: 1 }, 0).is_err());
        assert!(gen_family(&Family::Cycle { n: 2 }, 0).is_err());
    }
}
