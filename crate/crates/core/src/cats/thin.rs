use std::sync::Arc;

use rayon::prelude::*;

use super::CatError;
use crate::bounds;
use crate::game::CatStrategy;
use crate::graph::{sphere, thin_level, DistanceOracle, Vertex};

#[derive(Debug)]
struct ThinTables {
    k: u32,
    diameter: u32,
    levels: Vec<u32>,
    spheres: Vec<Vec<Vertex>>,
}

/// One phase of the sphere walk: anchor `v_j`, its level, and the pair
/// counters `T_j` (start) and `T_{j+1}` (end, unset while running or held).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhaseRecord {
    pub anchor: Vertex,
    pub level: u32,
    pub start_pairs: usize,
    pub end_pairs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Pairs,
    Hold(Vertex),
}

/// Sphere-walk descent.
///
/// Starting from anchor 0, each phase walks the sphere of radius `ell(v_j)`
/// around the anchor in ascending id order, querying the champion and then
/// the next sphere vertex; bit 1 promotes the sphere vertex. The final
/// champion becomes the next anchor. Once `T_j >= ceil(D/2)` pairs are spent
/// (or the anchor's sphere is empty) the anchor is held forever.
#[derive(Debug, Clone)]
pub struct ThinCat {
    tables: Arc<ThinTables>,
    target_pairs: usize,
    issued: usize,
    pairs_done: usize,
    champion: Vertex,
    next_in_sphere: usize,
    mode: Mode,
    phases: Vec<PhaseRecord>,
}

impl ThinCat {
    /// Fails if some vertex has no thin level below `k`.
    pub fn new(oracle: &DistanceOracle, k: u32) -> Result<Self, CatError> {
        let levels: Vec<Option<u32>> =
            (0..oracle.n()).into_par_iter().map(|v| thin_level(oracle, v, k)).collect();
        if let Some(vertex) = levels.iter().position(Option::is_none) {
            return Err(CatError::NoThinLevel { vertex, k });
        }
        let levels: Vec<u32> = levels.into_iter().map(Option::unwrap).collect();
        let spheres = levels.par_iter().enumerate().map(|(v, &l)| sphere(oracle, v, l)).collect();
        let diameter = oracle.diameter();
        let tables = Arc::new(ThinTables { k, diameter, levels, spheres });
        let mut cat = ThinCat {
            tables,
            target_pairs: diameter.div_ceil(2) as usize,
            issued: 0,
            pairs_done: 0,
            champion: 0,
            next_in_sphere: 0,
            mode: Mode::Pairs,
            phases: Vec::new(),
        };
        cat.start_phase(0);
        Ok(cat)
    }

    /// `max(ceil(3 sqrt(n)), K_min)`, where `K_min` is the least `K` that
    /// gives every vertex a thin level.
    pub fn auto_k(oracle: &DistanceOracle) -> u32 {
        let k_min = (0..oracle.n())
            .into_par_iter()
            .map(|v| {
                let ecc = oracle.eccentricity(v);
                thin_level(oracle, v, ecc + 2).expect("the sphere past the eccentricity is empty") + 1
            })
            .max()
            .unwrap_or(1);
        bounds::three_sqrt_n(oracle.n()).max(k_min)
    }

    pub fn k(&self) -> u32 {
        self.tables.k
    }

    pub fn diameter(&self) -> u32 {
        self.tables.diameter
    }

    pub fn level(&self, v: Vertex) -> u32 {
        self.tables.levels[v]
    }

    pub fn target_pairs(&self) -> usize {
        self.target_pairs
    }

    /// `ceil(3K / 2)`.
    pub fn guarantee(&self) -> u32 {
        bounds::three_halves(self.tables.k)
    }

    pub fn phases(&self) -> &[PhaseRecord] {
        &self.phases
    }

    pub fn held_anchor(&self) -> Option<Vertex> {
        match self.mode {
            Mode::Hold(v) => Some(v),
            Mode::Pairs => None,
        }
    }

    fn start_phase(&mut self, anchor: Vertex) {
        self.champion = anchor;
        self.next_in_sphere = 0;
        self.phases.push(PhaseRecord {
            anchor,
            level: self.tables.levels[anchor],
            start_pairs: self.pairs_done,
            end_pairs: None,
        });
        // An empty sphere means every vertex is closer than the level.
        if self.tables.spheres[anchor].is_empty() || self.pairs_done >= self.target_pairs {
            self.mode = Mode::Hold(anchor);
        }
    }

    fn query_at(&mut self, time: usize, prev_bit: Option<bool>) -> Vertex {
        if let Mode::Hold(v) = self.mode {
            return v;
        }
        let tables = Arc::clone(&self.tables);
        let sphere = &tables.spheres[self.phases.last().unwrap().anchor];
        if time.is_multiple_of(2) {
            return sphere[self.next_in_sphere];
        }
        if time > 1 {
            // Close the pair queried at times `time - 2`, `time - 1`.
            if prev_bit == Some(true) {
                self.champion = sphere[self.next_in_sphere];
            }
            self.next_in_sphere += 1;
            self.pairs_done += 1;
            if self.next_in_sphere == sphere.len() {
                self.phases.last_mut().unwrap().end_pairs = Some(self.pairs_done);
                self.start_phase(self.champion);
            }
        }
        self.champion
    }
}

impl CatStrategy for ThinCat {
    fn name(&self) -> String {
        format!("thin:K={}", self.tables.k)
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
