use alloc::string::String;
use core::fmt::{self, Write};

use super::{format_angle, Emitter};
use crate::ir::{Circuit, GateKind, GateOp};

/// One `circuit.append(...)` per instruction. Measurements are keyed `c<j>`
/// after their classical bit.
pub(super) struct Cirq;

fn qubit_list(qs: &[usize]) -> String {
    let mut s = String::new();
    for (i, q) in qs.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "q[{q}]");
    }
    s
}

impl Emitter for Cirq {
    fn prologue(&self, out: &mut String, circuit: &Circuit) -> fmt::Result {
        out.push_str("import cirq\n\n");
        writeln!(out, "q = cirq.LineQubit.range({})", circuit.num_qubits())?;
        out.push_str("circuit = cirq.Circuit()\n");
        Ok(())
    }

    fn instruction(&self, out: &mut String, op: &GateOp) -> fmt::Result {
        let qs = qubit_list(op.qubits());
        let theta = op.angle().map(format_angle).unwrap_or_default();
        let gate = match op.kind() {
            GateKind::H => "cirq.H",
            GateKind::X => "cirq.X",
            GateKind::Y => "cirq.Y",
            GateKind::Z => "cirq.Z",
            GateKind::Cnot => "cirq.CNOT",
            GateKind::Toffoli => "cirq.TOFFOLI",
            GateKind::Swap => "cirq.SWAP",
            GateKind::Rx => return writeln!(out, "circuit.append(cirq.rx({theta})({qs}))"),
            GateKind::Ry => return writeln!(out, "circuit.append(cirq.ry({theta})({qs}))"),
            GateKind::Rz => return writeln!(out, "circuit.append(cirq.rz({theta})({qs}))"),
            GateKind::Cphase => return writeln!(out, "circuit.append(cirq.cphase({theta})({qs}))"),
            GateKind::Measure => {
                let c = op.clbit().unwrap_or_default();
                return writeln!(out, "circuit.append(cirq.measure({qs}, key=\"c{c}\"))");
            }
        };
        writeln!(out, "circuit.append({gate}({qs}))")
    }

    fn epilogue(&self, out: &mut String, _circuit: &Circuit) -> fmt::Result {
        out.push_str("\nprint(circuit)\n");
        Ok(())
    }
}
