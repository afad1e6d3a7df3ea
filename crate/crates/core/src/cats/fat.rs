use std::sync::Arc;

use super::CatError;
use crate::bounds;
use crate::game::CatStrategy;
use crate::graph::{scattered_cover, BallCover, DistanceOracle, Vertex};

/// Ball-cover elimination.
///
/// Round `i` (times `2i-1`, `2i`) queries the current champion `u_{w_i}` and
/// then the challenger `u_{i+1}`; bit `b_{2i} = 1` crowns the challenger.
/// After round `L-1` the final champion `u_{w_L}` is queried forever. Every
/// lazy-walk mouse then satisfies `d(m_{2L-1}, u_{w_L}) <= 4L + k`.
#[derive(Debug, Clone)]
pub struct FatCat {
    centers: Arc<[Vertex]>,
    radius_k: u32,
    issued: usize,
    champion: usize,
    /// `w_1, w_2, ...` as 0-based indices into `centers`.
    champions: Vec<usize>,
    label: String,
}

impl FatCat {
    pub fn new(cover: &BallCover) -> Result<Self, CatError> {
        if cover.centers.is_empty() {
            return Err(CatError::EmptyCover);
        }
        Ok(FatCat {
            centers: cover.centers.clone().into(),
            radius_k: cover.radius_k,
            issued: 0,
            champion: 0,
            champions: vec![0],
            label: "fat".into(),
        })
    }

    pub(crate) fn labelled(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn count(&self) -> usize {
        self.centers.len()
    }

    pub fn radius_k(&self) -> u32 {
        self.radius_k
    }

    pub fn centers(&self) -> &[Vertex] {
        &self.centers
    }

    /// `4L + k`.
    pub fn guarantee(&self) -> u32 {
        4 * self.count() as u32 + self.radius_k
    }

    /// `2L - 1`, the step at which the final champion is known.
    pub fn decision_step(&self) -> usize {
        2 * self.count() - 1
    }

    /// Champion index history `w_1..w_i` (0-based center indices).
    pub fn champion_history(&self) -> &[usize] {
        &self.champions
    }

    /// `u_{w_L}` once all rounds are decided.
    pub fn final_champion(&self) -> Option<Vertex> {
        (self.champions.len() == self.count()).then(|| self.centers[self.champion])
    }

    fn query_at(&mut self, time: usize, prev_bit: Option<bool>) -> Vertex {
        let l = self.count();
        let round = time.div_ceil(2);
        if time % 2 == 1 {
            if (2..=l).contains(&round) {
                if prev_bit == Some(true) {
                    self.champion = round - 1;
                }
                self.champions.push(self.champion);
            }
            self.centers[self.champion]
        } else if round < l {
            self.centers[round]
        } else {
            self.centers[self.champion]
        }
    }
}

impl CatStrategy for FatCat {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn first_query(&mut self) -> Vertex {
        self.issued = 1;
        self.query_at(1, None)
    }

    fn next_query(&mut self, prev_bit: Option<bool>) -> Vertex {
        self.issued += 1;
        self.query_at(self.issued, prev_bit)
    }

    fn snapshot(&self) -> Box<dyn CatStrategy> {
        Box::new(self.clone())
    }
}

/// Elimination over the greedy scattered cover with separation `ceil(sqrt(8n))`.
pub fn sqrt_cat(oracle: &DistanceOracle) -> Result<FatCat, CatError> {
    let cover = scattered_cover(oracle, bounds::sqrt_8n(oracle.n()))?;
    Ok(FatCat::new(&cover)?.labelled("sqrt"))
}

/// Elimination over the scattered cover with separation `ceil(c sqrt(n))`.
pub fn fat_cat_with_c(oracle: &DistanceOracle, c: f64) -> Result<FatCat, CatError> {
    let cover = scattered_cover(oracle, bounds::ceil_c_sqrt(c, oracle.n()))?;
    Ok(FatCat::new(&cover)?.labelled(format!("fat:c={c}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_family, Family};

    fn drive(cat: &mut FatCat, bits: &[Option<bool>]) -> Vec<Vertex> {
        let mut out = vec![cat.first_query()];
        for &b in bits {
            out.push(cat.next_query(b));
        }
        out
    }

    #[test]
    fn single_ball_repeats_its_center() {
        let o = DistanceOracle::from_graph(gen_family(&Family::Star { leaves: 3 }, 0).unwrap());
        let mut cat = sqrt_cat(&o).unwrap();
        assert_eq!(cat.count(), 1);
        assert_eq!(cat.guarantee(), 4 + cat.radius_k());
        assert_eq!(drive(&mut cat, &[None, Some(true), Some(false)]), vec![0, 0, 0, 0]);
        assert_eq!(cat.final_champion(), Some(0));
    }

    #[test]
    fn champion_follows_even_bits() {
        let cover = BallCover { centers: vec![10, 20, 30, 40], radius_k: 1, separation: 1 };
        let mut cat = FatCat::new(&cover).unwrap();
        // Rounds: (10,20) b=1 -> 20; (20,30) b=0 -> 20; (20,40) b=1 -> 40.
        let q = drive(
            &mut cat,
            &[None, Some(true), Some(false), Some(false), Some(true), Some(true), Some(false), Some(false)],
        );
        assert_eq!(q, vec![10, 20, 20, 30, 20, 40, 40, 40, 40]);
        assert_eq!(cat.champion_history(), &[0, 1, 1, 3]);
        assert_eq!(cat.final_champion(), Some(40));
    }

    #[test]
    fn empty_cover_rejected() {
        let cover = BallCover { centers: vec![], radius_k: 0, separation: 1 };
        assert_eq!(FatCat::new(&cover).unwrap_err(), CatError::EmptyCover);
    }
}
