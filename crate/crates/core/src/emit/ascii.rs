use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::format_angle;
use crate::ir::{Circuit, GateKind, GateOp};

/// Render `circuit` as ASCII art, one row per qubit.
///
/// Instructions are placed left to right in the earliest column after every
/// earlier instruction that shares a qubit (or, for measurements, a classical
/// bit). A multi-qubit gate reserves every wire between its outermost
/// operands and draws `|` on the ones it does not act on. Glyphs:
/// `H`, `X`, `RX(t)`, ... for single-qubit gates, `*` for controls, `+` for
/// CNOT/Toffoli targets, `x` for both SWAP ends, `P(t)` for the CPHASE
/// target and `M<c>` for a measurement into classical bit `c`.
pub fn print_circuit(circuit: &Circuit) -> String {
    let nq = circuit.num_qubits();
    let mut wire_level = vec![0usize; nq];
    let mut clbit_level = vec![0usize; circuit.num_clbits()];
    let mut columns: Vec<Vec<Option<String>>> = Vec::new();

    for op in circuit.ops() {
        let qs = op.qubits();
        let lo = *qs.iter().min().expect("ops have at least one qubit");
        let hi = *qs.iter().max().expect("ops have at least one qubit");
        let mut col = wire_level[lo..=hi].iter().copied().max().unwrap_or(0);
        if let Some(c) = op.clbit() {
            col = col.max(clbit_level[c]);
            clbit_level[c] = col + 1;
        }
        for level in &mut wire_level[lo..=hi] {
            *level = col + 1;
        }
        if columns.len() <= col {
            columns.resize_with(col + 1, || vec![None; nq]);
        }
        let cells = &mut columns[col];
        for cell in &mut cells[lo..=hi] {
            *cell = Some(String::from("|"));
        }
        for (q, glyph) in glyphs(op) {
            cells[q] = Some(glyph);
        }
    }

    let label_width = digits(nq.saturating_sub(1));
    let widths: Vec<usize> = columns
        .iter()
        .map(|cells| cells.iter().flatten().map(String::len).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for q in 0..nq {
        out.push_str(&format!("q{q:<label_width$}: -"));
        for (cells, &w) in columns.iter().zip(&widths) {
            let cell = cells[q].as_deref().unwrap_or("");
            out.push_str(cell);
            out.extend(core::iter::repeat_n('-', w - cell.len() + 1));
        }
        out.push('\n');
    }
    out
}

fn glyphs(op: &GateOp) -> Vec<(usize, String)> {
    let qs = op.qubits();
    let angle = || format_angle(op.angle().unwrap_or_default());
    let star = || String::from("*");
    match op.kind() {
        GateKind::Measure => vec![(qs[0], format!("M{}", op.clbit().unwrap_or_default()))],
        GateKind::Cnot => vec![(qs[0], star()), (qs[1], String::from("+"))],
        GateKind::Toffoli => vec![(qs[0], star()), (qs[1], star()), (qs[2], String::from("+"))],
        GateKind::Swap => vec![(qs[0], String::from("x")), (qs[1], String::from("x"))],
        GateKind::Cphase => vec![(qs[0], star()), (qs[1], format!("P({})", angle()))],
        kind @ (GateKind::Rx | GateKind::Ry | GateKind::Rz) => {
            vec![(
                qs[0],
                format!("{}({})", kind.name().to_ascii_uppercase(), angle()),
            )]
        }
        kind => vec![(qs[0], kind.name().to_ascii_uppercase())],
    }
}

fn digits(mut n: usize) -> usize {
    let mut d = 1;
    while n >= 10 {
        n /= 10;
        d += 1;
    }
    d
}
