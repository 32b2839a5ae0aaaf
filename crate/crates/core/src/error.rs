use alloc::string::String;
use thiserror::Error;

use crate::ir::GateKind;

/// Errors raised while building a [`Circuit`](crate::Circuit).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IrError {
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
    #[error("{kind} expects {expected} {what}, got {got}")]
    Arity {
        kind: GateKind,
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{what} index {index} out of range (register size {size})")]
    Index {
        what: &'static str,
        index: usize,
        size: usize,
    },
    #[error("{kind} repeats qubit {qubit}")]
    DuplicateOperand { kind: GateKind, qubit: usize },
    #[error("angle for {kind} is not finite")]
    NonFiniteAngle { kind: GateKind },
    #[error("{requested} qubits exceeds the cap of {cap}")]
    Capacity { requested: usize, cap: usize },
    #[error("a circuit needs at least one qubit")]
    NoQubits,
}

/// Errors from [`unitary_of`](crate::semantics::unitary_of).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("measure is not a unitary operation")]
    Measure,
    #[error("{kind} expects {expected} parameters, got {got}")]
    ParamCount {
        kind: GateKind,
        expected: usize,
        got: usize,
    },
}

/// Errors raised by the simulator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("qubit {qubit} out of range for a {num_qubits}-qubit state")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },
    #[error("classical bit {clbit} out of range for a {num_clbits}-bit register")]
    ClbitOutOfRange { clbit: usize, num_clbits: usize },
    #[error("{0} cannot be applied as a unitary")]
    NotUnitary(GateKind),
    #[error("measurement branch probability {probability:e} is degenerate")]
    DegenerateBranch { probability: f64 },
    #[error("circuit has no measurement; nothing to sample")]
    NoMeasurement,
    #[error("circuit has {count} measurements; exact enumeration is capped at {cap}")]
    BranchCap { count: usize, cap: usize },
    #[error("shot count must be at least 1")]
    ZeroShots,
    #[error("{requested} qubits exceeds the simulator cap of {cap}")]
    Capacity { requested: usize, cap: usize },
}
