use alloc::string::String;
use core::fmt::{self, Write};

use super::{format_angle, join, Emitter};
use crate::ir::{Circuit, GateKind, GateOp};

pub(super) struct Qiskit;

impl Emitter for Qiskit {
    fn prologue(&self, out: &mut String, circuit: &Circuit) -> fmt::Result {
        out.push_str("from qiskit import QuantumCircuit\n\n");
        writeln!(
            out,
            "qc = QuantumCircuit({}, {})",
            circuit.num_qubits(),
            circuit.num_clbits()
        )
    }

    fn instruction(&self, out: &mut String, op: &GateOp) -> fmt::Result {
        let q = op.qubits();
        let method = match op.kind() {
            GateKind::H => "h",
            GateKind::X => "x",
            GateKind::Y => "y",
            GateKind::Z => "z",
            GateKind::Rx => "rx",
            GateKind::Ry => "ry",
            GateKind::Rz => "rz",
            GateKind::Cnot => "cx",
            GateKind::Toffoli => "ccx",
            GateKind::Swap => "swap",
            GateKind::Cphase => "cp",
            GateKind::Measure => {
                let c = op.clbit().unwrap_or_default();
                return writeln!(out, "qc.measure({}, {c})", q[0]);
            }
        };
        match op.angle() {
            Some(theta) => writeln!(out, "qc.{method}({}, {})", format_angle(theta), join(q)),
            None => writeln!(out, "qc.{method}({})", join(q)),
        }
    }

    fn epilogue(&self, out: &mut String, _circuit: &Circuit) -> fmt::Result {
        out.push_str("\nprint(qc)\n");
        Ok(())
    }
}
