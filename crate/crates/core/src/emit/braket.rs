use alloc::string::String;
use core::fmt::{self, Write};

use super::{format_angle, join, Emitter};
use crate::ir::{Circuit, GateKind, GateOp};

/// A parenthesised method chain on `Circuit()`. Braket measures per qubit,
/// so each measurement carries a comment naming its classical bit. Braket
/// puts the angle after the qubit operands.
pub(super) struct Braket;

impl Emitter for Braket {
    fn prologue(&self, out: &mut String, _circuit: &Circuit) -> fmt::Result {
        out.push_str("from braket.circuits import Circuit\n\ncircuit = (\n    Circuit()\n");
        Ok(())
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
            GateKind::Cnot => "cnot",
            GateKind::Toffoli => "ccnot",
            GateKind::Swap => "swap",
            GateKind::Cphase => "cphaseshift",
            GateKind::Measure => {
                let c = op.clbit().unwrap_or_default();
                return writeln!(out, "    .measure({})  # clbit {c}", q[0]);
            }
        };
        match op.angle() {
            Some(theta) => writeln!(out, "    .{method}({}, {})", join(q), format_angle(theta)),
            None => writeln!(out, "    .{method}({})", join(q)),
        }
    }

    fn epilogue(&self, out: &mut String, _circuit: &Circuit) -> fmt::Result {
        out.push_str(")\n\nprint(circuit)\n");
        Ok(())
    }
}
