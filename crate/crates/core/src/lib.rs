//! The distance-feedback cat-and-mouse localization game on connected
//! graphs.
//!
//! Each time step the mouse moves along a lazy walk, the cat queries a
//! vertex, and the cat learns one bit: whether its distance to the mouse did
//! not increase since the previous step. The crate provides the game engine
//! with exact belief tracking, the ball-cover and sphere-walk cats and their
//! `O(sqrt(n))` composition, the adversarial spider mouse, and brute-force
//! oracles that check the bounds on small instances.

pub mod bounds;
pub mod cats;
pub mod game;
pub mod graph;
pub mod harness;
pub mod mice;
pub mod rng;

pub use graph::{DistanceOracle, Graph, GraphError, Vertex};
