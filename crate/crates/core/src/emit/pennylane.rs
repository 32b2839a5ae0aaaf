use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use super::{format_angle, join, Emitter};
use crate::ir::{Circuit, GateKind, GateOp};
use crate::sim::DEFAULT_SHOTS;

/// A QNode over `default.qubit`. Measurements become a comment recording
/// the wire-to-clbit mapping; the function returns Z-basis samples of every
/// measured wire in first-measured order.
pub(super) struct Pennylane;

impl Emitter for Pennylane {
    fn prologue(&self, out: &mut String, circuit: &Circuit) -> fmt::Result {
        out.push_str("import pennylane as qml\n\n");
        write!(
            out,
            "dev = qml.device(\"default.qubit\", wires={}",
            circuit.num_qubits()
        )?;
        // sampling needs a finite shot count; qml.state() needs none
        if circuit.has_measurement() {
            write!(out, ", shots={DEFAULT_SHOTS}")?;
        }
        out.push_str(")\n");
        out.push_str("\n\n@qml.qnode(dev)\ndef circuit():\n");
        Ok(())
    }

    fn instruction(&self, out: &mut String, op: &GateOp) -> fmt::Result {
        let q = op.qubits();
        let class = match op.kind() {
            GateKind::H => "Hadamard",
            GateKind::X => "PauliX",
            GateKind::Y => "PauliY",
            GateKind::Z => "PauliZ",
            GateKind::Rx => "RX",
            GateKind::Ry => "RY",
            GateKind::Rz => "RZ",
            GateKind::Cnot => "CNOT",
            GateKind::Toffoli => "Toffoli",
            GateKind::Swap => "SWAP",
            GateKind::Cphase => "ControlledPhaseShift",
            GateKind::Measure => {
                let c = op.clbit().unwrap_or_default();
                return writeln!(out, "    # measure wire {} -> clbit {c}", q[0]);
            }
        };
        let wires = if q.len() == 1 {
            let mut s = String::new();
            write!(s, "{}", q[0])?;
            s
        } else {
            let mut s = String::from("[");
            s.push_str(&join(q));
            s.push(']');
            s
        };
        match op.angle() {
            Some(theta) => writeln!(
                out,
                "    qml.{class}({}, wires={wires})",
                format_angle(theta)
            ),
            None => writeln!(out, "    qml.{class}(wires={wires})"),
        }
    }

    fn epilogue(&self, out: &mut String, circuit: &Circuit) -> fmt::Result {
        let mut wires: Vec<usize> = Vec::new();
        for op in circuit.ops().iter().filter(|op| op.kind().is_measure()) {
            if !wires.contains(&op.qubits()[0]) {
                wires.push(op.qubits()[0]);
            }
        }
        if wires.is_empty() {
            out.push_str("    return qml.state()\n");
        } else {
            out.push_str("    return [");
            for (i, w) in wires.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write!(out, "qml.sample(qml.PauliZ({w}))")?;
            }
            out.push_str("]\n");
        }
        out.push_str("\n\nprint(qml.draw(circuit)())\n");
        Ok(())
    }
}
