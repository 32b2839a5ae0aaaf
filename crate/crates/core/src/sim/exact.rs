use alloc::collections::BTreeMap;
use alloc::string::String;

use super::measure::{ClassicalRegister, DEGENERATE_PROBABILITY};
use super::shots::Counts;
use super::state::{Kernel, StateVector};
use crate::error::SimError;
use crate::ir::{Circuit, GateOp};

/// Maximum number of measure ops [`exact_distribution`] will enumerate.
pub const BRANCH_CAP: usize = 30;

/// Exact probability of every reachable classical bitstring.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExactDistribution {
    entries: BTreeMap<String, f64>,
}

impl ExactDistribution {
    pub fn get(&self, bitstring: &str) -> f64 {
        self.entries.get(bitstring).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        self.entries.iter().map(|(k, &p)| (k.as_str(), p))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> + '_ {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.entries.values().sum()
    }

    /// Total-variation distance between this distribution and the empirical
    /// frequencies of `counts`.
    pub fn total_variation(&self, counts: &Counts) -> f64 {
        let shots = counts.shots() as f64;
        let mut sum = 0.0;
        for (k, p) in &self.entries {
            sum += (p - counts.get(k) as f64 / shots).abs();
        }
        for (k, n) in counts.iter() {
            if !self.entries.contains_key(k) {
                sum += n as f64 / shots;
            }
        }
        sum / 2.0
    }
}

/// Enumerate both outcomes of every measurement depth-first, weighting each
/// branch by its probability. Branches below
/// [`DEGENERATE_PROBABILITY`](super::DEGENERATE_PROBABILITY) are pruned.
pub fn exact_distribution(circuit: &Circuit) -> Result<ExactDistribution, SimError> {
    if !circuit.has_measurement() {
        return Err(SimError::NoMeasurement);
    }
    let count = circuit.measurement_count();
    if count > BRANCH_CAP {
        return Err(SimError::BranchCap {
            count,
            cap: BRANCH_CAP,
        });
    }
    let mut dist = ExactDistribution::default();
    let state = StateVector::new(circuit.num_qubits())?;
    let reg = ClassicalRegister::new(circuit.num_clbits());
    explore(circuit.ops(), state, reg, 1.0, &mut dist)?;
    Ok(dist)
}

fn explore(
    ops: &[GateOp],
    mut state: StateVector,
    reg: ClassicalRegister,
    weight: f64,
    dist: &mut ExactDistribution,
) -> Result<(), SimError> {
    for (i, op) in ops.iter().enumerate() {
        let Some(clbit) = op.clbit() else {
            let kernel = Kernel::compile(op)?;
            kernel.check(&state)?;
            kernel.apply(&mut state);
            continue;
        };
        let q = op.qubits()[0];
        state.check_qubit(q)?;
        let (p0, p1) = state.branch_probabilities(q);
        let rest = &ops[i + 1..];
        for (outcome, p) in [(false, p0), (true, p1)] {
            if p < DEGENERATE_PROBABILITY {
                continue;
            }
            let mut branch = state.clone();
            branch.collapse(q, outcome, p)?;
            let mut branch_reg = reg.clone();
            branch_reg.set(clbit, outcome)?;
            explore(rest, branch, branch_reg, weight * p, dist)?;
        }
        return Ok(());
    }
    *dist.entries.entry(reg.to_bitstring()).or_insert(0.0) += weight;
    Ok(())
}
