use core::f64::consts::PI;

use crate::ir::{Circuit, GateKind};

/// `(|00> + |11>)/sqrt(2)` measured into two classical bits.
pub fn build_bell() -> Circuit {
    let mut c = Circuit::new(2, 2).expect("2 qubits is within the cap");
    c.append(GateKind::H, &[0], &[])
        .and_then(|c| c.append(GateKind::Cnot, &[0, 1], &[]))
        .and_then(|c| c.append(GateKind::Measure, &[0, 0], &[]))
        .and_then(|c| c.append(GateKind::Measure, &[1, 1], &[]))
        .expect("static circuit is valid");
    c
}

/// The compiled 8-qubit Shor circuit for `a = 7`, `N = 15`.
///
/// Qubits 0-3 count, qubits 4-7 hold the work register. The work register
/// is measured into clbits 4-7 before the QFT; the counting qubits are then
/// measured into the same clbits (qubit `i` into clbit `i + 4`), overwriting
/// those results. The QFT applies `CPHASE(pi / 2^(i-j))` with qubit `j` as
/// control and `i` as target.
pub fn build_shor15() -> Circuit {
    const N_COUNT: usize = 4;
    let mut c = Circuit::new(8, 8).expect("8 qubits is within the cap");
    let mut add = |kind: GateKind, operands: &[usize], params: &[f64]| {
        c.append(kind, operands, params)
            .map(|_| ())
            .expect("static circuit is valid");
    };

    for q in 0..N_COUNT {
        add(GateKind::H, &[q], &[]);
    }

    // controlled multiplication by 7 mod 15
    add(GateKind::X, &[4], &[]);
    for (control, target) in [(0, 5), (0, 6), (1, 4), (1, 6)] {
        add(GateKind::Cnot, &[control, target], &[]);
    }
    for t in 4..8 {
        add(GateKind::Toffoli, &[0, 1, t], &[]);
    }
    for q in 4..8 {
        add(GateKind::Measure, &[q, q], &[]);
    }

    for i in (0..N_COUNT).rev() {
        add(GateKind::H, &[i], &[]);
        for j in (0..i).rev() {
            let theta = PI / f64::from(1u32 << (i - j));
            add(GateKind::Cphase, &[j, i], &[theta]);
        }
    }
    for i in 0..N_COUNT / 2 {
        add(GateKind::Swap, &[i, N_COUNT - i - 1], &[]);
    }
    for q in 0..N_COUNT {
        add(GateKind::Measure, &[q, q + 4], &[]);
    }
    c
}
