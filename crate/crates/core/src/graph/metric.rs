use std::collections::VecDeque;
use std::num::NonZeroUsize;
use std::ops::Deref;
use std::sync::{Arc, Mutex};

use lru::LruCache;
use rayon::prelude::*;

use super::{Graph, GraphError, Vertex};

/// Graphs up to this order get a full all-pairs table at construction.
pub const DEFAULT_DENSE_THRESHOLD: usize = 4096;

const UNREACHED: u32 = u32::MAX;

/// Single-source BFS distances from `source`.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<Vec<u32>, GraphError> {
    g.check_vertex(source)?;
    let mut dist = vec![UNREACHED; g.n()];
    bfs_into(g, source, &mut dist);
    Ok(dist)
}

fn bfs_into(g: &Graph, source: Vertex, dist: &mut [u32]) {
    dist.fill(UNREACHED);
    dist[source] = 0;
    let mut queue = VecDeque::with_capacity(g.n());
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHED {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
}

/// Eccentricity maximum over all vertices, by one BFS per vertex.
pub fn diameter(g: &Graph) -> u32 {
    (0..g.n())
        .into_par_iter()
        .map_init(
            || vec![0u32; g.n()],
            |buf, s| {
                bfs_into(g, s, buf);
                buf.iter().copied().max().unwrap_or(0)
            },
        )
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Precompute all pairs when `n <= dense_threshold`.
    pub dense_threshold: usize,
    /// LRU capacity (rows) for larger graphs.
    pub cache_rows: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { dense_threshold: DEFAULT_DENSE_THRESHOLD, cache_rows: 1024 }
    }
}

enum Store {
    Dense(Vec<u32>),
    Lazy(Mutex<LruCache<Vertex, Arc<[u32]>>>),
}

/// Shortest-path distances over a shared graph.
///
/// Small graphs are fully tabulated up front; larger ones fill single-source
/// rows on demand behind a mutex-guarded LRU, so concurrent readers always
/// see complete rows.
pub struct DistanceOracle {
    graph: Arc<Graph>,
    store: Store,
}

/// A borrowed or shared distance row; index it by target vertex.
pub enum Row<'a> {
    Borrowed(&'a [u32]),
    Shared(Arc<[u32]>),
}

impl Deref for Row<'_> {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        match self {
            Row::Borrowed(s) => s,
            Row::Shared(a) => a,
        }
    }
}

impl DistanceOracle {
    pub fn new(graph: Arc<Graph>) -> Self {
        Self::with_config(graph, OracleConfig::default())
    }

    pub fn with_config(graph: Arc<Graph>, cfg: OracleConfig) -> Self {
        let n = graph.n();
        let store = if n <= cfg.dense_threshold {
            let mut table = vec![0u32; n * n];
            table
                .par_chunks_mut(n)
                .enumerate()
                .for_each(|(s, row)| bfs_into(&graph, s, row));
            Store::Dense(table)
        } else {
            let cap = NonZeroUsize::new(cfg.cache_rows.max(1)).unwrap();
            Store::Lazy(Mutex::new(LruCache::new(cap)))
        };
        DistanceOracle { graph, store }
    }

    pub fn from_graph(graph: Graph) -> Self {
        Self::new(Arc::new(graph))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.store, Store::Dense(_))
    }

    pub fn row(&self, v: Vertex) -> Row<'_> {
        match &self.store {
            Store::Dense(table) => {
                let n = self.graph.n();
                Row::Borrowed(&table[v * n..(v + 1) * n])
            }
            Store::Lazy(cache) => {
                if let Some(row) = cache.lock().unwrap().get(&v) {
                    return Row::Shared(Arc::clone(row));
                }
                // BFS outside the lock; a racing fill computes the same row.
                let mut buf = vec![0u32; self.graph.n()];
                bfs_into(&self.graph, v, &mut buf);
                let row: Arc<[u32]> = buf.into();
                cache.lock().unwrap().put(v, Arc::clone(&row));
                Row::Shared(row)
            }
        }
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        self.row(u)[v]
    }

    pub fn eccentricity(&self, v: Vertex) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n()).into_par_iter().map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }
}

/// Vertices at distance exactly `ell` from `v`, ascending.
pub fn sphere(oracle: &DistanceOracle, v: Vertex, ell: u32) -> Vec<Vertex> {
    let row = oracle.row(v);
    row.iter().enumerate().filter(|&(_, &d)| d == ell).map(|(w, _)| w).collect()
}

const MAX_WITNESSES: usize = 16;

/// `rad_G(W)`: the minimum over every vertex of `G` of its largest distance to
/// `W`, with the lowest-id minimiser as center.
///
/// Candidates are scanned in id order and pruned against a small set of far
/// apart witnesses from `W`; the scan stops as soon as a candidate meets the
/// lower bound `ceil(d(a, b) / 2)` of a double sweep.
pub fn set_radius(oracle: &DistanceOracle, members: &[Vertex]) -> Result<(u32, Vertex), GraphError> {
    let first = *members.first().ok_or(GraphError::EmptySet)?;
    for &w in members {
        oracle.graph().check_vertex(w)?;
    }
    if members.len() == 1 {
        return Ok((0, first));
    }
    let farthest = |from: Vertex| {
        let row = oracle.row(from);
        let mut best = first;
        for &w in members {
            if row[w] > row[best] {
                best = w;
            }
        }
        (best, row[best])
    };
    let (a, _) = farthest(first);
    let (b, span) = farthest(a);
    let lower = span.div_ceil(2);

    let mut witnesses = vec![a, b];
    let mut best = (u32::MAX, usize::MAX);
    'candidates: for v in 0..oracle.n() {
        let row = oracle.row(v);
        if witnesses.iter().any(|&w| row[w] >= best.0) {
            continue;
        }
        let mut ecc = 0;
        for &w in members {
            let d = row[w];
            if d >= best.0 {
                if witnesses.len() < MAX_WITNESSES {
                    witnesses.push(w);
                }
                continue 'candidates;
            }
            ecc = ecc.max(d);
        }
        best = (ecc, v);
        if ecc == lower {
            break;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_family, gen_spider, Family, SpiderSpec};

    fn path(n: usize) -> Graph {
        gen_family(&Family::Path { n }, 0).unwrap()
    }

    #[test]
    fn bfs_on_path() {
        assert_eq!(bfs_distances(&path(3), 0).unwrap(), vec![0, 1, 2]);
        assert!(bfs_distances(&path(3), 3).is_err());
    }

    #[test]
    fn radius_examples() {
        let o = DistanceOracle::from_graph(path(5));
        assert_eq!(set_radius(&o, &[3]).unwrap(), (0, 3));
        assert_eq!(set_radius(&o, &[0, 4]).unwrap(), (2, 2));
        assert_eq!(set_radius(&o, &[0, 1, 2, 3, 4]).unwrap(), (2, 2));
        assert_eq!(set_radius(&o, &[]), Err(GraphError::EmptySet));
    }

    #[test]
    fn radius_center_may_lie_outside_set() {
        // Star K_{1,3}: leaves {1,2,3} are centred at 0.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let o = DistanceOracle::from_graph(g);
        assert_eq!(set_radius(&o, &[1, 2, 3]).unwrap(), (1, 0));
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&path(5)), 4);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(diameter(&star), 2);
        let spider = gen_spider(SpiderSpec { t: 12, extra: 0 }).unwrap();
        assert_eq!(diameter(&spider), 24);
        assert_eq!(DistanceOracle::from_graph(spider).diameter(), 24);
    }

    #[test]
    fn spheres() {
        let o = DistanceOracle::from_graph(gen_family(&Family::Cycle { n: 10 }, 0).unwrap());
        assert_eq!(sphere(&o, 4, 0), vec![4]);
        assert_eq!(sphere(&o, 4, 3).len(), 2);
        let p = DistanceOracle::from_graph(path(5));
        assert!(sphere(&p, 0, 10).is_empty());
    }

    #[test]
    fn lazy_store_matches_dense() {
        let g = Arc::new(gen_family(&Family::Grid { rows: 6, cols: 7 }, 0).unwrap());
        let dense = DistanceOracle::new(Arc::clone(&g));
        let lazy = DistanceOracle::with_config(g, OracleConfig { dense_threshold: 0, cache_rows: 3 });
        assert!(dense.is_dense() && !lazy.is_dense());
        for u in 0..42 {
            for v in 0..42 {
                assert_eq!(dense.dist(u, v), lazy.dist(u, v));
            }
        }
    }
}
