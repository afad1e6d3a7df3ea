//! Immutable connected graphs and everything measured on them: the
//! shortest-path metric, spheres, ball covers, thin levels, generators and
//! the edge-list text format.

mod cover;
mod generators;
mod io;
mod metric;
mod spec;

use std::collections::VecDeque;

use thiserror::Error;

pub use cover::{scattered_cover, thin_level, BallCover};
pub use generators::{gen_family, gen_spider, Family, SpiderLayout, SpiderSpec};
pub use io::{parse_graph, write_graph, ParseError};
pub use metric::{
    bfs_distances, diameter, set_radius, sphere, DistanceOracle, OracleConfig, Row,
    DEFAULT_DENSE_THRESHOLD,
};
pub use spec::{spec_key_values, GraphSpec};

/// Vertex ids are dense, `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is disconnected: vertex {unreached} not reachable from 0")]
    Disconnected { unreached: Vertex },
    #[error("empty vertex set")]
    EmptySet,
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("invalid graph spec `{spec}`: {reason}")]
    InvalidSpec { spec: String, reason: String },
}

/// Simple, undirected, connected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, parallel edges,
    /// out-of-range endpoints and disconnected inputs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let graph = Graph { adj, edge_count };
        if let Some(unreached) = graph.first_unreachable() {
            return Err(GraphError::Disconnected { unreached });
        }
        Ok(graph)
    }

    fn first_unreachable(&self) -> Option<Vertex> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// `v` itself or one of its neighbours: the legal lazy-walk moves from `v`.
    pub fn in_closed_neighborhood(&self, from: Vertex, to: Vertex) -> bool {
        from == to || self.is_adjacent(from, to)
    }

    /// Closed neighbourhood of `v` in ascending id order.
    pub fn closed_neighborhood(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let split = self.adj[v].partition_point(|&w| w < v);
        out.extend_from_slice(&self.adj[v][..split]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][split..]);
        out
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(2, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(4, [(0, 1), (2, 3)]),
            Err(GraphError::Disconnected { unreached: 2 })
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn closed_neighborhood_is_sorted() {
        let g = Graph::from_edges(4, [(2, 0), (2, 3), (2, 1)]).unwrap();
        assert_eq!(g.closed_neighborhood(2), vec![0, 1, 2, 3]);
        assert_eq!(g.closed_neighborhood(3), vec![2, 3]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2), (2, 3)]);
    }
}
