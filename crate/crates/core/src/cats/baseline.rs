use rand::RngCore;
use rand_chacha::ChaCha8Rng;

use crate::game::CatStrategy;
use crate::graph::Vertex;
use crate::rng;

/// Queries `0, 1, ..., n-1` cyclically.
#[derive(Debug, Clone)]
pub struct SweepCat {
    n: usize,
    issued: usize,
}

impl SweepCat {
    pub fn new(n: usize) -> Self {
        SweepCat { n, issued: 0 }
    }
}

impl CatStrategy for SweepCat {
    fn name(&self) -> String {
        "sweep".into()
    }

    fn first_query(&mut self) -> Vertex {
        self.issued = 1;
        0
    }

    fn next_query(&mut self, _prev_bit: Option<bool>) -> Vertex {
        self.issued += 1;
        (self.issued - 1) % self.n
    }

    fn snapshot(&self) -> Box<dyn CatStrategy> {
        Box::new(self.clone())
    }
}

/// Pseudo-random queries drawn from a seeded stream mixed with the bit
/// history, so the sequence is a fixed function of the bits.
#[derive(Debug, Clone)]
pub struct SeededRandomCat {
    n: usize,
    seed: u64,
    rng: ChaCha8Rng,
}

impl SeededRandomCat {
    pub fn new(n: usize, seed: u64) -> Self {
        SeededRandomCat { n, seed, rng: rng::stream(seed, "cat/random") }
    }

    fn draw(&mut self, bit: Option<bool>) -> Vertex {
        let raw = self.rng.next_u64();
        let mixed = match bit {
            Some(true) => raw.rotate_left(29) ^ 0x9e37_79b9_7f4a_7c15,
            _ => raw,
        };
        (mixed % self.n as u64) as Vertex
    }
}

impl CatStrategy for SeededRandomCat {
    fn name(&self) -> String {
        format!("rand:seed={}", self.seed)
    }

    fn first_query(&mut self) -> Vertex {
        self.draw(None)
    }

    fn next_query(&mut self, prev_bit: Option<bool>) -> Vertex {
        self.draw(prev_bit)
    }

    fn snapshot(&self) -> Box<dyn CatStrategy> {
        Box::new(self.clone())
    }
}

/// Queries vertex 0 forever.
#[derive(Debug, Clone, Default)]
pub struct StayCat;

impl CatStrategy for StayCat {
    fn name(&self) -> String {
        "stay".into()
    }

    fn first_query(&mut self) -> Vertex {
        0
    }

    fn next_query(&mut self, _prev_bit: Option<bool>) -> Vertex {
        0
    }

    fn snapshot(&self) -> Box<dyn CatStrategy> {
        Box::new(self.clone())
    }
}

/// Replays a fixed query list, then repeats its last entry.
#[derive(Debug, Clone)]
pub struct ScriptedCat {
    queries: Vec<Vertex>,
    issued: usize,
}

impl ScriptedCat {
    pub fn new(queries: Vec<Vertex>) -> Self {
        ScriptedCat { queries, issued: 0 }
    }

    fn at(&self, i: usize) -> Vertex {
        self.queries.get(i).or(self.queries.last()).copied().unwrap_or(0)
    }
}

impl CatStrategy for ScriptedCat {
    fn name(&self) -> String {
        "scripted".into()
    }

    fn first_query(&mut self) -> Vertex {
        self.issued = 1;
        self.at(0)
    }

    fn next_query(&mut self, _prev_bit: Option<bool>) -> Vertex {
        self.issued += 1;
        self.at(self.issued - 1)
    }

    fn snapshot(&self) -> Box<dyn CatStrategy> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(cat: &mut dyn CatStrategy, bits: &[Option<bool>]) -> Vec<Vertex> {
        let mut out = vec![cat.first_query()];
        out.extend(bits.iter().map(|&b| cat.next_query(b)));
        out
    }

    #[test]
    fn sweep_cycles() {
        assert_eq!(run(&mut SweepCat::new(3), &[None, Some(true), Some(false), None]), vec![0, 1, 2, 0, 1]);
    }

    #[test]
    fn random_is_a_function_of_bits() {
        let bits = [None, Some(true), Some(true), Some(false), Some(true), Some(false)];
        let a = run(&mut SeededRandomCat::new(50, 7), &bits);
        let b = run(&mut SeededRandomCat::new(50, 7), &bits);
        assert_eq!(a, b);
        let flipped = [None, Some(false), Some(true), Some(false), Some(true), Some(false)];
        assert_ne!(a, run(&mut SeededRandomCat::new(50, 7), &flipped));
    }

    #[test]
    fn stay_is_constant() {
        assert_eq!(run(&mut StayCat, &[None, Some(true), Some(false)]), vec![0; 4]);
    }
}
