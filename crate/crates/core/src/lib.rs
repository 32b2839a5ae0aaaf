//! Quantum circuit toolchain core.
//!
//! Everything in this crate is pure computation over in-memory values and
//! builds without `std` (an allocator is required):
//!
//! - [`ir`]: validated circuit representation over twelve operations
//! - [`semantics`]: the unitary matrix of every gate
//! - [`sim`]: dense statevector simulation with mid-circuit measurement,
//!   seeded shot sampling and an exact branch-enumeration distribution
//! - [`emit`]: source-text emission for five framework dialects and an
//!   ASCII diagram renderer
//! - [`algos`]: the Bell and compiled Shor-15 reference circuits plus the
//!   classical period/factor post-processing
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algos;
pub mod emit;
pub mod error;
pub mod ir;
mod math;
pub mod semantics;
pub mod sim;

pub use error::{IrError, SemanticsError, SimError};
pub use ir::{Circuit, GateKind, GateOp, MAX_QUBITS};
