//! Statevector simulation.
//!
//! Shots re-execute the full instruction list from `|0...0>` so measurements
//! may appear anywhere in a circuit and collapse the state. Shot `s` of a run
//! seeded with `seed` draws from its own ChaCha stream, so any partition of
//! the shot range (sequential or parallel) yields the same [`Counts`].

mod exact;
mod measure;
mod shots;
mod state;

pub use exact::{exact_distribution, ExactDistribution, BRANCH_CAP};
pub use measure::{apply_measure, ClassicalRegister, DEGENERATE_PROBABILITY};
pub use shots::{run_shots, shot_rng, Counts, ShotRunner, DEFAULT_SHOTS};
pub use state::StateVector;
