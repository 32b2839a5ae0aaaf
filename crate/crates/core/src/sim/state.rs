use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::SimError;
use crate::ir::{GateKind, GateOp, MAX_QUBITS};
use crate::math::cis;
use crate::semantics::unitary_of;

/// Dense `2^n` amplitude vector. Bit `q` of an amplitude index is the basis
/// state of qubit `q`, so qubit 0 is the least significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// `|0...0>` over `num_qubits` qubits.
    pub fn new(num_qubits: usize) -> Result<Self, SimError> {
        if num_qubits > MAX_QUBITS {
            return Err(SimError::Capacity {
                requested: num_qubits,
                cap: MAX_QUBITS,
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Wrap raw amplitudes. Panics unless the length is `2^num_qubits`.
    pub fn from_amplitudes(num_qubits: usize, amps: Vec<Complex64>) -> Self {
        assert_eq!(amps.len(), 1 << num_qubits);
        StateVector { num_qubits, amps }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Probability that qubit `q` reads 1.
    pub fn prob_one(&self, q: usize) -> f64 {
        let mask = 1usize << q;
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// `(P(q = 0), P(q = 1))` summed independently.
    pub fn branch_probabilities(&self, q: usize) -> (f64, f64) {
        let mask = 1usize << q;
        self.amps
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(p0, p1), (i, a)| {
                if i & mask == 0 {
                    (p0 + a.norm_sqr(), p1)
                } else {
                    (p0, p1 + a.norm_sqr())
                }
            })
    }

    pub(crate) fn check_qubit(&self, q: usize) -> Result<(), SimError> {
        if q < self.num_qubits {
            Ok(())
        } else {
            Err(SimError::QubitOutOfRange {
                qubit: q,
                num_qubits: self.num_qubits,
            })
        }
    }

    /// Apply a non-measure op in place.
    pub fn apply_gate(&mut self, op: &GateOp) -> Result<(), SimError> {
        let kernel = Kernel::compile(op)?;
        kernel.check(self)?;
        kernel.apply(self);
        Ok(())
    }
}

/// A gate lowered to a strided amplitude update. Each variant touches every
/// amplitude at most once per application.
#[derive(Debug, Clone)]
pub(crate) enum Kernel {
    Single {
        q: usize,
        m: [Complex64; 4],
    },
    Cnot {
        control: usize,
        target: usize,
    },
    Toffoli {
        c0: usize,
        c1: usize,
        target: usize,
    },
    Swap {
        a: usize,
        b: usize,
    },
    Cphase {
        c: usize,
        t: usize,
        phase: Complex64,
    },
}

impl Kernel {
    pub(crate) fn compile(op: &GateOp) -> Result<Self, SimError> {
        let q = op.qubits();
        Ok(match op.kind() {
            GateKind::Measure => return Err(SimError::NotUnitary(GateKind::Measure)),
            GateKind::Cnot => Kernel::Cnot {
                control: q[0],
                target: q[1],
            },
            GateKind::Toffoli => Kernel::Toffoli {
                c0: q[0],
                c1: q[1],
                target: q[2],
            },
            GateKind::Swap => Kernel::Swap { a: q[0], b: q[1] },
            GateKind::Cphase => Kernel::Cphase {
                c: q[0],
                t: q[1],
                phase: cis(op.params()[0]),
            },
            kind => {
                let u = unitary_of(kind, op.params()).map_err(|_| SimError::NotUnitary(kind))?;
                let e = u.entries();
                Kernel::Single {
                    q: q[0],
                    m: [e[0], e[1], e[2], e[3]],
                }
            }
        })
    }

    pub(crate) fn check(&self, state: &StateVector) -> Result<(), SimError> {
        let qs: &[usize] = match self {
            Kernel::Single { q, .. } => core::slice::from_ref(q),
            Kernel::Cnot { control, target } => &[*control, *target],
            Kernel::Toffoli { c0, c1, target } => &[*c0, *c1, *target],
            Kernel::Swap { a, b } => &[*a, *b],
            Kernel::Cphase { c, t, .. } => &[*c, *t],
        };
        qs.iter().try_for_each(|&q| state.check_qubit(q))
    }

    /// Caller must have run [`Kernel::check`] against a state of this size.
    pub(crate) fn apply(&self, state: &mut StateVector) {
        let amps = &mut state.amps;
        match *self {
            Kernel::Single { q, m } => {
                let stride = 1usize << q;
                for block in amps.chunks_exact_mut(stride << 1) {
                    let (lo, hi) = block.split_at_mut(stride);
                    for (a0, a1) in lo.iter_mut().zip(hi.iter_mut()) {
                        let (x0, x1) = (*a0, *a1);
                        *a0 = m[0] * x0 + m[1] * x1;
                        *a1 = m[2] * x0 + m[3] * x1;
                    }
                }
            }
            Kernel::Cnot { control, target } => {
                let (cm, tm) = (1usize << control, 1usize << target);
                for i in 0..amps.len() {
                    if i & cm != 0 && i & tm == 0 {
                        amps.swap(i, i | tm);
                    }
                }
            }
            Kernel::Toffoli { c0, c1, target } => {
                let cm = (1usize << c0) | (1usize << c1);
                let tm = 1usize << target;
                for i in 0..amps.len() {
                    if i & cm == cm && i & tm == 0 {
                        amps.swap(i, i | tm);
                    }
                }
            }
            Kernel::Swap { a, b } => {
                let (am, bm) = (1usize << a, 1usize << b);
                for i in 0..amps.len() {
                    if i & am != 0 && i & bm == 0 {
                        amps.swap(i, (i & !am) | bm);
                    }
                }
            }
            Kernel::Cphase { c, t, phase } => {
                let mask = (1usize << c) | (1usize << t);
                for (i, a) in amps.iter_mut().enumerate() {
                    if i & mask == mask {
                        *a *= phase;
                    }
                }
            }
        }
    }
}
