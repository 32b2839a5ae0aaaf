use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use super::StateVector;
use crate::error::SimError;
use crate::math::sqrt;

/// Branch probabilities below this are treated as numerically zero.
pub const DEGENERATE_PROBABILITY: f64 = 1e-15;

/// Classical bits written by measurements, all zero at the start of a shot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassicalRegister {
    bits: Vec<bool>,
}

impl ClassicalRegister {
    pub fn new(num_clbits: usize) -> Self {
        ClassicalRegister {
            bits: vec![false; num_clbits],
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, clbit: usize) -> Option<bool> {
        self.bits.get(clbit).copied()
    }

    pub fn set(&mut self, clbit: usize, value: bool) -> Result<(), SimError> {
        let len = self.bits.len();
        let slot = self.bits.get_mut(clbit).ok_or(SimError::ClbitOutOfRange {
            clbit,
            num_clbits: len,
        })?;
        *slot = value;
        Ok(())
    }

    /// Bitstring with the highest classical bit leftmost and bit 0 rightmost.
    pub fn to_bitstring(&self) -> String {
        self.bits
            .iter()
            .rev()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl StateVector {
    /// Measure qubit `q` given a uniform draw `u` in `[0, 1)`: the outcome is
    /// 1 iff `u < P(q = 1)`. The state collapses onto the outcome and is
    /// renormalised.
    pub fn measure_with_draw(&mut self, q: usize, u: f64) -> Result<bool, SimError> {
        self.check_qubit(q)?;
        let (p0, p1) = self.branch_probabilities(q);
        if p0 + p1 < DEGENERATE_PROBABILITY {
            return Err(SimError::DegenerateBranch {
                probability: p0 + p1,
            });
        }
        let outcome = u < p1;
        self.collapse(q, outcome, if outcome { p1 } else { 1.0 - p1 })?;
        Ok(outcome)
    }

    /// Project qubit `q` onto `outcome`, dividing the survivors by
    /// `sqrt(probability)`.
    pub(crate) fn collapse(
        &mut self,
        q: usize,
        outcome: bool,
        probability: f64,
    ) -> Result<(), SimError> {
        if probability.is_nan() || probability < DEGENERATE_PROBABILITY {
            return Err(SimError::DegenerateBranch { probability });
        }
        let mask = 1usize << q;
        let scale = 1.0 / sqrt(probability);
        let zero = Complex64::new(0.0, 0.0);
        for (i, a) in self.amplitudes_mut().iter_mut().enumerate() {
            if (i & mask != 0) == outcome {
                *a *= scale;
            } else {
                *a = zero;
            }
        }
        Ok(())
    }
}

/// Measure qubit `q` into classical bit `c`, drawing one uniform variate
/// from `rng`. The classical bit is overwritten.
pub fn apply_measure<R: Rng + ?Sized>(
    state: &mut StateVector,
    q: usize,
    c: usize,
    reg: &mut ClassicalRegister,
    rng: &mut R,
) -> Result<bool, SimError> {
    if c >= reg.len() {
        return Err(SimError::ClbitOutOfRange {
            clbit: c,
            num_clbits: reg.len(),
        });
    }
    let u: f64 = rng.gen();
    let outcome = state.measure_with_draw(q, u)?;
    reg.set(c, outcome)?;
    Ok(outcome)
}
