use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::measure::{apply_measure, ClassicalRegister};
use super::state::{Kernel, StateVector};
use crate::error::SimError;
use crate::ir::Circuit;

pub const DEFAULT_SHOTS: u64 = 1000;

/// Histogram of classical-register bitstrings over a number of shots.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Counts {
    entries: BTreeMap<String, u64>,
    shots: u64,
}

impl Counts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, bitstring: String) {
        *self.entries.entry(bitstring).or_insert(0) += 1;
        self.shots += 1;
    }

    /// Add `n` observations of `bitstring`.
    pub fn record_n(&mut self, bitstring: String, n: u64) {
        if n == 0 {
            return;
        }
        *self.entries.entry(bitstring).or_insert(0) += n;
        self.shots += n;
    }

    /// Fold another histogram into this one.
    pub fn merge(&mut self, other: Counts) {
        for (k, n) in other.entries {
            *self.entries.entry(k).or_insert(0) += n;
        }
        self.shots += other.shots;
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    pub fn get(&self, bitstring: &str) -> u64 {
        self.entries.get(bitstring).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in ascending bitstring order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> + '_ {
        self.entries.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> + '_ {
        self.entries.keys().map(String::as_str)
    }

    pub fn as_map(&self) -> &BTreeMap<String, u64> {
        &self.entries
    }
}

impl FromIterator<(String, u64)> for Counts {
    fn from_iter<I: IntoIterator<Item = (String, u64)>>(iter: I) -> Self {
        let mut counts = Counts::new();
        for (k, n) in iter {
            counts.record_n(k, n);
        }
        counts
    }
}

/// The random stream of shot `shot` in a run seeded with `seed`.
pub fn shot_rng(seed: u64, shot: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shot);
    rng
}

#[derive(Debug, Clone)]
enum Step {
    Gate(Kernel),
    Measure { qubit: usize, clbit: usize },
}

/// A circuit lowered for repeated shot execution.
///
/// The instructions before the first measurement are deterministic, so their
/// output state is computed once and cloned into every shot. Every draw a
/// shot makes still comes from its own stream in program order, so results
/// match a naive per-shot replay exactly.
#[derive(Debug, Clone)]
pub struct ShotRunner {
    num_clbits: usize,
    prefix_state: StateVector,
    steps: Vec<Step>,
}

impl ShotRunner {
    pub fn new(circuit: &Circuit) -> Result<Self, SimError> {
        if !circuit.has_measurement() {
            return Err(SimError::NoMeasurement);
        }
        let mut prefix_state = StateVector::new(circuit.num_qubits())?;
        let mut steps = Vec::with_capacity(circuit.len());
        for op in circuit.ops() {
            let step = match op.clbit() {
                Some(clbit) => Step::Measure {
                    qubit: op.qubits()[0],
                    clbit,
                },
                None => {
                    let kernel = Kernel::compile(op)?;
                    kernel.check(&prefix_state)?;
                    Step::Gate(kernel)
                }
            };
            steps.push(step);
        }
        let first_measure = steps
            .iter()
            .position(|s| matches!(s, Step::Measure { .. }))
            .unwrap_or(steps.len());
        for step in steps.drain(..first_measure) {
            if let Step::Gate(kernel) = step {
                kernel.apply(&mut prefix_state);
            }
        }
        Ok(ShotRunner {
            num_clbits: circuit.num_clbits(),
            prefix_state,
            steps,
        })
    }

    /// Execute shot number `shot` and return its classical register.
    pub fn run_shot(&self, seed: u64, shot: u64) -> Result<ClassicalRegister, SimError> {
        let mut rng = shot_rng(seed, shot);
        let mut state = self.prefix_state.clone();
        let mut reg = ClassicalRegister::new(self.num_clbits);
        for step in &self.steps {
            match step {
                Step::Gate(kernel) => kernel.apply(&mut state),
                Step::Measure { qubit, clbit } => {
                    apply_measure(&mut state, *qubit, *clbit, &mut reg, &mut rng)?;
                }
            }
        }
        Ok(reg)
    }

    /// Histogram of shots `range` (shot indices, not a count).
    pub fn run_range(&self, seed: u64, range: Range<u64>) -> Result<Counts, SimError> {
        let mut counts = Counts::new();
        for shot in range {
            counts.record(self.run_shot(seed, shot)?.to_bitstring());
        }
        Ok(counts)
    }
}

/// Run `shots` shots sequentially.
pub fn run_shots(circuit: &Circuit, shots: u64, seed: u64) -> Result<Counts, SimError> {
    if shots == 0 {
        return Err(SimError::ZeroShots);
    }
    ShotRunner::new(circuit)?.run_range(seed, 0..shots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::GateKind;

    fn bell() -> Circuit {
        let mut c = Circuit::new(2, 2).unwrap();
        c.add_gate("h", &[0], &[]).unwrap();
        c.add_gate("cnot", &[0, 1], &[]).unwrap();
        c.add_gate("measure", &[0, 0], &[]).unwrap();
        c.add_gate("measure", &[1, 1], &[]).unwrap();
        c
    }

    /// Straight replay of every instruction without the prefix cache.
    fn naive_shot(circuit: &Circuit, seed: u64, shot: u64) -> String {
        let mut rng = shot_rng(seed, shot);
        let mut st = StateVector::new(circuit.num_qubits()).unwrap();
        let mut reg = ClassicalRegister::new(circuit.num_clbits());
        for op in circuit.ops() {
            match op.clbit() {
                Some(c) => {
                    apply_measure(&mut st, op.qubits()[0], c, &mut reg, &mut rng).unwrap();
                }
                None => st.apply_gate(op).unwrap(),
            }
        }
        reg.to_bitstring()
    }

    #[test]
    fn bell_support() {
        let counts = run_shots(&bell(), 1000, 3).unwrap();
        assert_eq!(counts.shots(), 1000);
        assert!(counts.keys().all(|k| k == "00" || k == "11"));
        assert_eq!(counts.get("00") + counts.get("11"), 1000);
    }

    #[test]
    fn deterministic_x_measure() {
        let mut c = Circuit::new(1, 1).unwrap();
        c.append(GateKind::X, &[0], &[]).unwrap();
        c.append(GateKind::Measure, &[0, 0], &[]).unwrap();
        for shots in [1, 17, 250] {
            let counts = run_shots(&c, shots, 99).unwrap();
            assert_eq!(counts.len(), 1);
            assert_eq!(counts.get("1"), shots);
        }
    }

    #[test]
    fn unwritten_clbits_stay_zero() {
        let mut c = Circuit::new(1, 3).unwrap();
        c.append(GateKind::X, &[0], &[]).unwrap();
        c.append(GateKind::Measure, &[0, 1], &[]).unwrap();
        let counts = run_shots(&c, 5, 0).unwrap();
        assert_eq!(counts.get("010"), 5);
    }

    #[test]
    fn errors() {
        let c = Circuit::new(2, 2).unwrap();
        assert_eq!(run_shots(&c, 10, 0), Err(SimError::NoMeasurement));
        assert_eq!(run_shots(&bell(), 0, 0), Err(SimError::ZeroShots));
    }

    #[test]
    fn determinism_and_partitioning() {
        let c = bell();
        let a = run_shots(&c, 500, 42).unwrap();
        let b = run_shots(&c, 500, 42).unwrap();
        assert_eq!(a, b);

        let runner = ShotRunner::new(&c).unwrap();
        let mut split = runner.run_range(42, 300..500).unwrap();
        split.merge(runner.run_range(42, 0..300).unwrap());
        assert_eq!(split, a);
    }

    #[test]
    fn prefix_cache_matches_naive_replay() {
        let mut c = Circuit::new(3, 3).unwrap();
        c.add_gate("h", &[0], &[]).unwrap();
        c.add_gate("ry", &[1], &[0.9]).unwrap();
        c.add_gate("cnot", &[0, 2], &[]).unwrap();
        c.add_gate("measure", &[0, 0], &[]).unwrap();
        c.add_gate("h", &[0], &[]).unwrap();
        c.add_gate("cphase", &[1, 0], &[1.1]).unwrap();
        c.add_gate("measure", &[0, 1], &[]).unwrap();
        c.add_gate("measure", &[1, 2], &[]).unwrap();
        let runner = ShotRunner::new(&c).unwrap();
        for shot in 0..300 {
            assert_eq!(
                runner.run_shot(5, shot).unwrap().to_bitstring(),
                naive_shot(&c, 5, shot)
            );
        }
    }

    #[test]
    fn counts_merge_commutes() {
        let a: Counts = [("01".into(), 3), ("10".into(), 1)].into_iter().collect();
        let b: Counts = [("10".into(), 2), ("11".into(), 5)].into_iter().collect();
        let mut ab = a.clone();
        ab.merge(b.clone());
        let mut ba = b;
        ba.merge(a);
        assert_eq!(ab, ba);
        assert_eq!(ab.shots(), 11);
        assert_eq!(ab.get("10"), 3);
    }
}
