//! Source-text emission for external quantum frameworks, plus an ASCII
//! circuit diagram.
//!
//! Each dialect writes a prologue, exactly one line per instruction in
//! program order, and an epilogue. Angles are written as the shortest
//! decimal that parses back to the same `f64`. Output is a pure function
//! of the circuit and dialect.

use alloc::string::String;
use core::fmt::{self, Write};
use core::str::FromStr;

use crate::ir::{Circuit, GateOp};

mod ascii;
mod braket;
mod cirq;
mod pennylane;
mod pyquil;
mod qiskit;

pub use ascii::print_circuit;

/// A target framework.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dialect {
    Qiskit,
    Cirq,
    Pennylane,
    Pyquil,
    Braket,
}

impl Dialect {
    pub const ALL: [Dialect; 5] = [
        Dialect::Qiskit,
        Dialect::Cirq,
        Dialect::Pennylane,
        Dialect::Pyquil,
        Dialect::Braket,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            Dialect::Qiskit => "qiskit",
            Dialect::Cirq => "cirq",
            Dialect::Pennylane => "pennylane",
            Dialect::Pyquil => "pyquil",
            Dialect::Braket => "braket",
        }
    }

    /// Conventional file extension of emitted programs.
    pub const fn extension(self) -> &'static str {
        match self {
            Dialect::Pyquil => "quil",
            _ => "py",
        }
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownDialect(pub String);

impl fmt::Display for UnknownDialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown dialect `{}`", self.0)
    }
}

impl core::error::Error for UnknownDialect {}

impl FromStr for Dialect {
    type Err = UnknownDialect;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "qiskit" => Ok(Dialect::Qiskit),
            "cirq" => Ok(Dialect::Cirq),
            "pennylane" => Ok(Dialect::Pennylane),
            "pyquil" | "quil" => Ok(Dialect::Pyquil),
            "braket" | "amazonbraket" | "amazon-braket" => Ok(Dialect::Braket),
            _ => Err(UnknownDialect(s.into())),
        }
    }
}

/// Source text for one dialect. Lines end in `\n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmittedProgram {
    pub dialect: Dialect,
    pub source: String,
}

/// Per-dialect line schema.
trait Emitter {
    fn prologue(&self, out: &mut String, circuit: &Circuit) -> fmt::Result;
    fn instruction(&self, out: &mut String, op: &GateOp) -> fmt::Result;
    fn epilogue(&self, out: &mut String, circuit: &Circuit) -> fmt::Result;
}

/// Emit `circuit` as a program for `dialect`.
pub fn translate(circuit: &Circuit, dialect: Dialect) -> EmittedProgram {
    let emitter: &dyn Emitter = match dialect {
        Dialect::Qiskit => &qiskit::Qiskit,
        Dialect::Cirq => &cirq::Cirq,
        Dialect::Pennylane => &pennylane::Pennylane,
        Dialect::Pyquil => &pyquil::Pyquil,
        Dialect::Braket => &braket::Braket,
    };
    let mut source = String::new();
    // writing into a String cannot fail
    emitter
        .prologue(&mut source, circuit)
        .and_then(|()| {
            circuit
                .ops()
                .iter()
                .try_for_each(|op| emitter.instruction(&mut source, op))
        })
        .and_then(|()| emitter.epilogue(&mut source, circuit))
        .expect("fmt::Write for String is infallible");
    EmittedProgram { dialect, source }
}

/// Shortest decimal that round-trips to the same `f64`.
pub fn format_angle(theta: f64) -> String {
    let mut s = String::new();
    write!(s, "{theta}").expect("fmt::Write for String is infallible");
    s
}

/// Comma-separated list, e.g. `0, 1, 2`.
fn join(items: &[usize]) -> String {
    let mut s = String::new();
    for (i, q) in items.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{q}");
    }
    s
}
