//! Circuit intermediate representation.
//!
//! A [`Circuit`] is a qubit count, a classical-bit count and an ordered list
//! of [`GateOp`]s. Every op is validated when it is appended, so a circuit
//! value is always well formed: operand counts match the gate arity, qubit
//! operands are distinct and in range, angles are finite.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::IrError;

/// Largest register the dense simulator accepts (2^24 amplitudes, 256 MiB).
pub const MAX_QUBITS: usize = 24;

/// The twelve supported operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    H,
    X,
    Y,
    Z,
    Rx,
    Ry,
    Rz,
    Cnot,
    Toffoli,
    Swap,
    Cphase,
    Measure,
}

impl GateKind {
    pub const ALL: [GateKind; 12] = [
        GateKind::H,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::Rx,
        GateKind::Ry,
        GateKind::Rz,
        GateKind::Cnot,
        GateKind::Toffoli,
        GateKind::Swap,
        GateKind::Cphase,
        GateKind::Measure,
    ];

    /// Canonical lowercase identifier.
    pub const fn name(self) -> &'static str {
        match self {
            GateKind::H => "h",
            GateKind::X => "x",
            GateKind::Y => "y",
            GateKind::Z => "z",
            GateKind::Rx => "rx",
            GateKind::Ry => "ry",
            GateKind::Rz => "rz",
            GateKind::Cnot => "cnot",
            GateKind::Toffoli => "toffoli",
            GateKind::Swap => "swap",
            GateKind::Cphase => "cphase",
            GateKind::Measure => "measure",
        }
    }

    /// Number of qubit operands. A measure additionally takes one classical bit.
    pub const fn qubit_arity(self) -> usize {
        match self {
            GateKind::Cnot | GateKind::Swap | GateKind::Cphase => 2,
            GateKind::Toffoli => 3,
            _ => 1,
        }
    }

    pub const fn param_count(self) -> usize {
        match self {
            GateKind::Rx | GateKind::Ry | GateKind::Rz | GateKind::Cphase => 1,
            _ => 0,
        }
    }

    /// Total integer operands expected by [`Circuit::add_gate`].
    pub const fn operand_count(self) -> usize {
        match self {
            GateKind::Measure => 2,
            _ => self.qubit_arity(),
        }
    }

    pub const fn is_measure(self) -> bool {
        matches!(self, GateKind::Measure)
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for GateKind {
    type Err = IrError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        resolve_gate_name(s)
    }
}

/// Resolve a gate name case-insensitively, accepting the aliases
/// `ccnot`, `cx` and `cp`.
pub fn resolve_gate_name(name: &str) -> Result<GateKind, IrError> {
    const ALIASES: [(&str, GateKind); 3] = [
        ("ccnot", GateKind::Toffoli),
        ("cx", GateKind::Cnot),
        ("cp", GateKind::Cphase),
    ];
    GateKind::ALL
        .iter()
        .map(|&k| (k.name(), k))
        .chain(ALIASES)
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, k)| k)
        .ok_or_else(|| IrError::UnknownGate(name.to_string()))
}

/// One circuit instruction.
///
/// For controlled gates the controls come first: `cnot` is
/// `[control, target]`, `toffoli` is `[control0, control1, target]` and
/// `cphase` is `[control, target]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GateOp {
    kind: GateKind,
    qubits: Vec<usize>,
    clbit: Option<usize>,
    params: Vec<f64>,
}

impl GateOp {
    /// Build an op from the flat operand list used by [`Circuit::add_gate`]:
    /// qubit indices, or `[qubit, clbit]` for a measure.
    ///
    /// Only register-independent checks happen here; index ranges are
    /// checked when the op is pushed onto a circuit.
    pub fn new(kind: GateKind, operands: &[usize], params: &[f64]) -> Result<Self, IrError> {
        if operands.len() != kind.operand_count() {
            return Err(IrError::Arity {
                kind,
                what: "operands",
                expected: kind.operand_count(),
                got: operands.len(),
            });
        }
        if params.len() != kind.param_count() {
            return Err(IrError::Arity {
                kind,
                what: "parameters",
                expected: kind.param_count(),
                got: params.len(),
            });
        }
        if params.iter().any(|p| !p.is_finite()) {
            return Err(IrError::NonFiniteAngle { kind });
        }
        let (qubits, clbit) = if kind.is_measure() {
            (operands[..1].to_vec(), Some(operands[1]))
        } else {
            (operands.to_vec(), None)
        };
        for (i, q) in qubits.iter().enumerate() {
            if qubits[..i].contains(q) {
                return Err(IrError::DuplicateOperand { kind, qubit: *q });
            }
        }
        Ok(GateOp {
            kind,
            qubits,
            clbit,
            params: params.to_vec(),
        })
    }

    pub fn measure(qubit: usize, clbit: usize) -> Self {
        GateOp {
            kind: GateKind::Measure,
            qubits: alloc::vec![qubit],
            clbit: Some(clbit),
            params: Vec::new(),
        }
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn qubits(&self) -> &[usize] {
        &self.qubits
    }

    /// Destination classical bit; `Some` exactly for measurements.
    pub fn clbit(&self) -> Option<usize> {
        self.clbit
    }

    /// Angles in radians.
    pub fn params(&self) -> &[f64] {
        &self.params
    }

    /// The single angle of a parameterized gate.
    pub fn angle(&self) -> Option<f64> {
        self.params.first().copied()
    }
}

/// A validated quantum circuit. Program order is execution order.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    num_clbits: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    /// An empty circuit over `num_qubits` qubits and `num_clbits` classical bits.
    pub fn new(num_qubits: usize, num_clbits: usize) -> Result<Self, IrError> {
        if num_qubits == 0 {
            return Err(IrError::NoQubits);
        }
        if num_qubits > MAX_QUBITS {
            return Err(IrError::Capacity {
                requested: num_qubits,
                cap: MAX_QUBITS,
            });
        }
        Ok(Circuit {
            num_qubits,
            num_clbits,
            ops: Vec::new(),
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn num_clbits(&self) -> usize {
        self.num_clbits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Append a gate by name. On error the circuit is left untouched.
    pub fn add_gate(
        &mut self,
        name: &str,
        operands: &[usize],
        params: &[f64],
    ) -> Result<&mut Self, IrError> {
        let kind = resolve_gate_name(name)?;
        self.append(kind, operands, params)
    }

    pub fn append(
        &mut self,
        kind: GateKind,
        operands: &[usize],
        params: &[f64],
    ) -> Result<&mut Self, IrError> {
        let op = GateOp::new(kind, operands, params)?;
        self.push(op)
    }

    /// Append an already-built op after checking its indices against this
    /// circuit's registers.
    pub fn push(&mut self, op: GateOp) -> Result<&mut Self, IrError> {
        if let Some(&q) = op.qubits.iter().find(|&&q| q >= self.num_qubits) {
            return Err(IrError::Index {
                what: "qubit",
                index: q,
                size: self.num_qubits,
            });
        }
        if let Some(c) = op.clbit.filter(|&c| c >= self.num_clbits) {
            return Err(IrError::Index {
                what: "classical bit",
                index: c,
                size: self.num_clbits,
            });
        }
        self.ops.push(op);
        Ok(self)
    }

    pub fn has_measurement(&self) -> bool {
        self.ops.iter().any(|op| op.kind.is_measure())
    }

    pub fn measurement_count(&self) -> usize {
        self.ops.iter().filter(|op| op.kind.is_measure()).count()
    }
}
