use alloc::string::String;
use core::fmt::{self, Write};

use super::{format_angle, Emitter};
use crate::ir::{Circuit, GateKind, GateOp};

/// Plain Quil text.
pub(super) struct Pyquil;

fn quil_name(kind: GateKind) -> &'static str {
    match kind {
        GateKind::H => "H",
        GateKind::X => "X",
        GateKind::Y => "Y",
        GateKind::Z => "Z",
        GateKind::Rx => "RX",
        GateKind::Ry => "RY",
        GateKind::Rz => "RZ",
        GateKind::Cnot => "CNOT",
        GateKind::Toffoli => "CCNOT",
        GateKind::Swap => "SWAP",
        GateKind::Cphase => "CPHASE",
        GateKind::Measure => "MEASURE",
    }
}

impl Emitter for Pyquil {
    fn prologue(&self, out: &mut String, circuit: &Circuit) -> fmt::Result {
        if circuit.num_clbits() > 0 {
            writeln!(out, "DECLARE ro BIT[{}]", circuit.num_clbits())?;
        }
        Ok(())
    }

    fn instruction(&self, out: &mut String, op: &GateOp) -> fmt::Result {
        out.push_str(quil_name(op.kind()));
        if let Some(theta) = op.angle() {
            write!(out, "({})", format_angle(theta))?;
        }
        for q in op.qubits() {
            write!(out, " {q}")?;
        }
        if let Some(c) = op.clbit() {
            write!(out, " ro[{c}]")?;
        }
        out.push('\n');
        Ok(())
    }

    fn epilogue(&self, _out: &mut String, _circuit: &Circuit) -> fmt::Result {
        Ok(())
    }
}
