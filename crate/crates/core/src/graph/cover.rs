use serde::{Deserialize, Serialize};

use super::{DistanceOracle, GraphError, Vertex};

/// Centers `u_1..u_L` whose radius-`k` balls cover every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallCover {
    pub centers: Vec<Vertex>,
    pub radius_k: u32,
    /// Minimum pairwise separation the centers were built with (1 for
    /// hand-picked covers).
    pub separation: u32,
}

impl BallCover {
    /// A cover from hand-picked centers; `k` is their exact covering radius.
    pub fn from_centers(oracle: &DistanceOracle, centers: Vec<Vertex>) -> Result<Self, GraphError> {
        if centers.is_empty() {
            return Err(GraphError::EmptySet);
        }
        for &c in &centers {
            oracle.graph().check_vertex(c)?;
        }
        let radius_k = (0..oracle.n())
            .map(|v| {
                let row = oracle.row(v);
                centers.iter().map(|&c| row[c]).min().unwrap()
            })
            .max()
            .unwrap_or(0);
        Ok(BallCover { centers, radius_k, separation: 1 })
    }

    pub fn count(&self) -> usize {
        self.centers.len()
    }

    /// Every vertex lies within `radius_k` of some center.
    pub fn covers(&self, oracle: &DistanceOracle) -> bool {
        (0..oracle.n()).all(|v| {
            let row = oracle.row(v);
            self.centers.iter().any(|&c| row[c] <= self.radius_k)
        })
    }

    /// Centers pairwise at least `separation` apart.
    pub fn is_separated(&self, oracle: &DistanceOracle) -> bool {
        self.centers.iter().enumerate().all(|(i, &a)| {
            let row = oracle.row(a);
            self.centers[i + 1..].iter().all(|&b| row[b] >= self.separation)
        })
    }
}

/// Greedy maximal scattered set: scan ids ascending and keep every vertex at
/// distance `>= separation` from all centers kept so far. Maximality puts
/// every vertex within `separation - 1` of a center.
pub fn scattered_cover(oracle: &DistanceOracle, separation: u32) -> Result<BallCover, GraphError> {
    if separation == 0 {
        return Err(GraphError::InvalidParams("separation must be at least 1".into()));
    }
    let mut to_nearest = vec![u32::MAX; oracle.n()];
    let mut centers = Vec::new();
    for v in 0..oracle.n() {
        if to_nearest[v] >= separation {
            centers.push(v);
            let row = oracle.row(v);
            for (m, &d) in to_nearest.iter_mut().zip(row.iter()) {
                *m = (*m).min(d);
            }
        }
    }
    Ok(BallCover { centers, radius_k: separation - 1, separation })
}

/// Smallest `ell` in `1..k_limit` whose sphere around `v` has fewer than
/// `ell / 4` vertices (compared exactly as `4 * |sphere| < ell`).
pub fn thin_level(oracle: &DistanceOracle, v: Vertex, k_limit: u32) -> Option<u32> {
    let row = oracle.row(v);
    let ecc = row.iter().copied().max().unwrap_or(0) as usize;
    let mut sizes = vec![0usize; ecc + 1];
    for &d in row.iter() {
        sizes[d as usize] += 1;
    }
    (1..k_limit).find(|&ell| {
        let size = sizes.get(ell as usize).copied().unwrap_or(0);
        4 * size < ell as usize
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_family, Family};

    fn oracle(f: Family) -> DistanceOracle {
        DistanceOracle::from_graph(gen_family(&f, 0).unwrap())
    }

    #[test]
    fn unit_separation_takes_everything() {
        let o = oracle(Family::Grid { rows: 3, cols: 3 });
        let c = scattered_cover(&o, 1).unwrap();
        assert_eq!(c.centers, (0..9).collect::<Vec<_>>());
        assert_eq!(c.radius_k, 0);
        assert!(scattered_cover(&o, 0).is_err());
    }

    #[test]
    fn path_of_hundred() {
        let o = oracle(Family::Path { n: 100 });
        let c = scattered_cover(&o, 10).unwrap();
        assert_eq!(c.centers, (0..10).map(|i| 10 * i).collect::<Vec<_>>());
        assert_eq!((c.count(), c.radius_k), (10, 9));
        assert!(c.covers(&o) && c.is_separated(&o));
    }

    #[test]
    fn separation_beyond_diameter_is_one_ball() {
        let o = oracle(Family::Cycle { n: 17 });
        let c = scattered_cover(&o, o.diameter() + 1).unwrap();
        assert_eq!(c.centers, vec![0]);
    }

    #[test]
    fn thin_levels() {
        let p = oracle(Family::Path { n: 50 });
        assert_eq!(thin_level(&p, 0, 50), Some(5));
        let c = oracle(Family::Cycle { n: 50 });
        for v in [0, 17, 49] {
            assert_eq!(thin_level(&c, v, 50), Some(9));
        }
        assert_eq!(thin_level(&c, 0, 1), None);
        assert_eq!(thin_level(&c, 0, 9), None);
    }

    #[test]
    fn hand_picked_cover_radius() {
        let o = oracle(Family::Path { n: 9 });
        let c = BallCover::from_centers(&o, vec![2, 6]).unwrap();
        assert_eq!(c.radius_k, 2);
        assert!(c.covers(&o));
    }
}
