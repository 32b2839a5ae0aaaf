//! Multi-threaded shot execution.

use qcircuit_core::sim::{Counts, ShotRunner};
use qcircuit_core::{Circuit, SimError};
use rayon::prelude::*;

/// Same contract and same result as [`qcircuit_core::sim::run_shots`], with
/// shots spread over the rayon pool. Each shot draws from its own stream,
/// so the partitioning does not affect the counts.
pub fn run_shots_parallel(circuit: &Circuit, shots: u64, seed: u64) -> Result<Counts, SimError> {
    if shots == 0 {
        return Err(SimError::ZeroShots);
    }
    let runner = ShotRunner::new(circuit)?;
    (0..shots)
        .into_par_iter()
        .try_fold(Counts::new, |mut counts, shot| {
            counts.record(runner.run_shot(seed, shot)?.to_bitstring());
            Ok(counts)
        })
        .try_reduce(Counts::new, |mut a, b| {
            a.merge(b);
            Ok(a)
        })
}
