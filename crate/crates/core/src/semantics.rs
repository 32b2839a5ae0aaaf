//! Gate matrices.
//!
//! Multi-qubit matrices use the basis `|q_first q_second ...>` where the
//! first listed operand is the most significant bit of the local index, so
//! CNOT over `|control, target>` is the familiar
//! `[[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,1,0]]`. Global phases are not
//! normalised: `RZ(t) = diag(e^{-it/2}, e^{it/2})`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use num_complex::Complex64;

use crate::error::SemanticsError;
use crate::ir::GateKind;
use crate::math::{cis, cos, sin, sqrt, FRAC_1_SQRT_2};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// A dense square complex matrix acting on `log2(dim)` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct GateUnitary {
    dim: usize,
    // row-major
    entries: Vec<Complex64>,
}

impl GateUnitary {
    /// Build from row-major entries. Panics if `entries.len() != dim * dim`.
    pub fn from_rows(dim: usize, entries: Vec<Complex64>) -> Self {
        assert_eq!(entries.len(), dim * dim, "matrix must be {dim}x{dim}");
        GateUnitary { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ONE;
        }
        GateUnitary { dim, entries }
    }

    fn permutation(perm: &[usize]) -> Self {
        let dim = perm.len();
        let mut entries = vec![ZERO; dim * dim];
        for (col, &row) in perm.iter().enumerate() {
            entries[row * dim + col] = ONE;
        }
        GateUnitary { dim, entries }
    }

    fn diagonal(diag: &[Complex64]) -> Self {
        let dim = diag.len();
        let mut entries = vec![ZERO; dim * dim];
        for (i, &d) in diag.iter().enumerate() {
            entries[i * dim + i] = d;
        }
        GateUnitary { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut entries = vec![ZERO; d * d];
        for r in 0..d {
            for c in 0..d {
                entries[c * d + r] = self.get(r, c).conj();
            }
        }
        GateUnitary { dim: d, entries }
    }

    /// Largest entrywise absolute difference. Panics on a dimension mismatch.
    pub fn max_abs_diff(&self, other: &GateUnitary) -> f64 {
        assert_eq!(self.dim, other.dim);
        let worst = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm_sqr())
            .fold(0.0, f64::max);
        sqrt(worst)
    }
}

impl Mul for &GateUnitary {
    type Output = GateUnitary;

    fn mul(self, rhs: &GateUnitary) -> GateUnitary {
        assert_eq!(self.dim, rhs.dim);
        let d = self.dim;
        let mut entries = vec![ZERO; d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a == ZERO {
                    continue;
                }
                for c in 0..d {
                    entries[r * d + c] += a * rhs.get(k, c);
                }
            }
        }
        GateUnitary { dim: d, entries }
    }
}

/// The matrix of a non-measure gate.
pub fn unitary_of(kind: GateKind, params: &[f64]) -> Result<GateUnitary, SemanticsError> {
    if kind.is_measure() {
        return Err(SemanticsError::Measure);
    }
    if params.len() != kind.param_count() {
        return Err(SemanticsError::ParamCount {
            kind,
            expected: kind.param_count(),
            got: params.len(),
        });
    }
    let theta = params.first().copied().unwrap_or(0.0);
    let (c, s) = (cos(theta / 2.0), sin(theta / 2.0));
    let m = match kind {
        GateKind::H => {
            let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
            GateUnitary::from_rows(2, vec![h, h, h, -h])
        }
        GateKind::X => GateUnitary::permutation(&[1, 0]),
        GateKind::Y => GateUnitary::from_rows(2, vec![ZERO, -I, I, ZERO]),
        GateKind::Z => GateUnitary::diagonal(&[ONE, -ONE]),
        GateKind::Rx => {
            let (c, ms) = (Complex64::new(c, 0.0), Complex64::new(0.0, -s));
            GateUnitary::from_rows(2, vec![c, ms, ms, c])
        }
        GateKind::Ry => {
            let (c, s) = (Complex64::new(c, 0.0), Complex64::new(s, 0.0));
            GateUnitary::from_rows(2, vec![c, -s, s, c])
        }
        GateKind::Rz => GateUnitary::diagonal(&[cis(-theta / 2.0), cis(theta / 2.0)]),
        GateKind::Cnot => GateUnitary::permutation(&[0, 1, 3, 2]),
        GateKind::Toffoli => GateUnitary::permutation(&[0, 1, 2, 3, 4, 5, 7, 6]),
        GateKind::Swap => GateUnitary::permutation(&[0, 2, 1, 3]),
        GateKind::Cphase => GateUnitary::diagonal(&[ONE, ONE, ONE, cis(theta)]),
        GateKind::Measure => unreachable!(),
    };
    Ok(m)
}

/// True iff `max |U^dagger U - I| <= tol` entrywise.
pub fn is_unitary(u: &GateUnitary, tol: f64) -> bool {
    let product = &u.adjoint() * u;
    product.entries.iter().enumerate().all(|(idx, z)| {
        let expected = if idx / u.dim == idx % u.dim {
            ONE
        } else {
            ZERO
        };
        (z - expected).norm_sqr() <= tol * tol
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, PI};
    use proptest::prelude::*;

    const TOL: f64 = 1e-12;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Determinant via Gaussian elimination with partial pivoting.
    fn det(u: &GateUnitary) -> Complex64 {
        let n = u.dim();
        let mut a: Vec<Complex64> = u.entries().to_vec();
        let mut det = ONE;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a[i * n + col].norm().total_cmp(&a[j * n + col].norm()))
                .unwrap();
            if a[pivot * n + col].norm() == 0.0 {
                return ZERO;
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(pivot * n + k, col * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for r in col + 1..n {
                let f = a[r * n + col] / p;
                for k in col..n {
                    let v = a[col * n + k];
                    a[r * n + k] -= f * v;
                }
            }
        }
        det
    }

    fn all_fixed() -> Vec<GateUnitary> {
        GateKind::ALL
            .iter()
            .filter(|k| !k.is_measure())
            .map(|&k| {
                let params = vec![0.7; k.param_count()];
                unitary_of(k, &params).unwrap()
            })
            .collect()
    }

    #[test]
    fn hadamard_matches_table() {
        let h = unitary_of(GateKind::H, &[]).unwrap();
        let s = 1.0 / 2f64.sqrt();
        let expected = GateUnitary::from_rows(2, vec![c(s, 0.), c(s, 0.), c(s, 0.), c(-s, 0.)]);
        assert!(h.max_abs_diff(&expected) <= TOL);
        assert!(is_unitary(&h, TOL));
    }

    #[test]
    fn rx_zero_is_identity() {
        let rx = unitary_of(GateKind::Rx, &[0.0]).unwrap();
        assert!(rx.max_abs_diff(&GateUnitary::identity(2)) <= TOL);
    }

    #[test]
    fn cphase_pi_is_controlled_z() {
        let cp = unitary_of(GateKind::Cphase, &[PI]).unwrap();
        let cz = GateUnitary::diagonal(&[ONE, ONE, ONE, -ONE]);
        assert!(cp.max_abs_diff(&cz) <= TOL);
    }

    #[test]
    fn cnot_layout_matches_table() {
        let cnot = unitary_of(GateKind::Cnot, &[]).unwrap();
        let rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]];
        for (r, row) in rows.iter().enumerate() {
            for (col, &v) in row.iter().enumerate() {
                assert_eq!(cnot.get(r, col), c(v as f64, 0.0));
            }
        }
    }

    #[test]
    fn rotation_entries() {
        let t: f64 = 1.234;
        let (co, si) = ((t / 2.0).cos(), (t / 2.0).sin());
        let rx = unitary_of(GateKind::Rx, &[t]).unwrap();
        let ry = unitary_of(GateKind::Ry, &[t]).unwrap();
        let rz = unitary_of(GateKind::Rz, &[t]).unwrap();
        let want_rx = GateUnitary::from_rows(2, vec![c(co, 0.), c(0., -si), c(0., -si), c(co, 0.)]);
        let want_ry = GateUnitary::from_rows(2, vec![c(co, 0.), c(-si, 0.), c(si, 0.), c(co, 0.)]);
        let want_rz = GateUnitary::from_rows(2, vec![c(co, -si), ZERO, ZERO, c(co, si)]);
        assert!(rx.max_abs_diff(&want_rx) <= TOL);
        assert!(ry.max_abs_diff(&want_ry) <= TOL);
        assert!(rz.max_abs_diff(&want_rz) <= TOL);
    }

    #[test]
    fn measure_has_no_matrix() {
        assert_eq!(
            unitary_of(GateKind::Measure, &[]),
            Err(SemanticsError::Measure)
        );
        assert!(matches!(
            unitary_of(GateKind::Rx, &[]),
            Err(SemanticsError::ParamCount { .. })
        ));
    }

    #[test]
    fn is_unitary_rejects_scaled_diagonal() {
        let m = GateUnitary::diagonal(&[ONE, c(2.0, 0.0)]);
        assert!(!is_unitary(&m, TOL));
    }

    #[test]
    fn fixed_gates_unitary_with_unit_determinant() {
        for u in all_fixed() {
            assert!(is_unitary(&u, TOL));
            assert!((det(&u).norm() - 1.0).abs() <= TOL);
        }
    }

    #[test]
    fn involutions() {
        for k in [
            GateKind::X,
            GateKind::Y,
            GateKind::Z,
            GateKind::H,
            GateKind::Cnot,
            GateKind::Swap,
            GateKind::Toffoli,
        ] {
            let u = unitary_of(k, &[]).unwrap();
            let id = GateUnitary::identity(u.dim());
            assert!((&u * &u).max_abs_diff(&id) <= TOL, "{k}");
        }
    }

    #[test]
    fn toffoli_is_classical_and() {
        let t = unitary_of(GateKind::Toffoli, &[]).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                for tgt in 0..2 {
                    let input = (a << 2) | (b << 1) | tgt;
                    let output = (a << 2) | (b << 1) | (tgt ^ (a & b));
                    for row in 0..8 {
                        let want = if row == output { ONE } else { ZERO };
                        assert_eq!(t.get(row, input), want);
                    }
                }
            }
        }
    }

    #[test]
    fn swap_exchanges_middle_basis_states() {
        let s = unitary_of(GateKind::Swap, &[]).unwrap();
        assert_eq!(s.get(2, 1), ONE);
        assert_eq!(s.get(1, 2), ONE);
        assert_eq!(s.get(0, 0), ONE);
        assert_eq!(s.get(3, 3), ONE);
    }

    #[test]
    fn cphase_quarter_turn() {
        let cp = unitary_of(GateKind::Cphase, &[FRAC_PI_2]).unwrap();
        assert!((cp.get(3, 3) - I).norm() <= TOL);
    }

    proptest! {
        #[test]
        fn ry_sweep_is_unitary(theta in -4.0 * PI..4.0 * PI) {
            let u = unitary_of(GateKind::Ry, &[theta]).unwrap();
            prop_assert!(is_unitary(&u, TOL));
        }

        #[test]
        fn rotations_invert(theta in -4.0 * PI..4.0 * PI) {
            for k in [GateKind::Rx, GateKind::Ry, GateKind::Rz] {
                let fwd = unitary_of(k, &[theta]).unwrap();
                let back = unitary_of(k, &[-theta]).unwrap();
                prop_assert!((&fwd * &back).max_abs_diff(&GateUnitary::identity(2)) <= TOL);
            }
        }

        #[test]
        fn cphase_angles_add(a in -4.0 * PI..4.0 * PI, b in -4.0 * PI..4.0 * PI) {
            let lhs = &unitary_of(GateKind::Cphase, &[a]).unwrap() * &unitary_of(GateKind::Cphase, &[b]).unwrap();
            let rhs = unitary_of(GateKind::Cphase, &[a + b]).unwrap();
            prop_assert!(lhs.max_abs_diff(&rhs) <= TOL);
        }

        #[test]
        fn parameterized_determinant_is_unit(theta in -4.0 * PI..4.0 * PI) {
            for k in [GateKind::Rx, GateKind::Ry, GateKind::Rz, GateKind::Cphase] {
                let u = unitary_of(k, &[theta]).unwrap();
                prop_assert!((det(&u).norm() - 1.0).abs() <= TOL);
            }
        }
    }
}
