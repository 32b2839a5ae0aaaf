//! The `.qc` circuit file format.
//!
//! ```text
//! # Bell pair
//! qubits 2
//! clbits 2
//! h 0
//! cnot 0 1
//! cphase(pi/2) 0 1
//! measure 0 -> 0
//! ```
//!
//! The two headers are required and come first, in that order. Gate names
//! are case-insensitive and accept the same aliases as
//! [`resolve_gate_name`]. An angle is a decimal or one of `pi`, `-pi`,
//! `pi/2`, `pi/4`, `pi/8`, `pi/16`, `-pi/2`, `-pi/4`. `#` starts a comment.
//! Input may use `\n` or `\r\n`; [`serialize`] always writes `\n` and
//! decimal angles.

use std::f64::consts::PI;
use std::fmt::Write;

use qcircuit_core::emit::format_angle;
use qcircuit_core::ir::resolve_gate_name;
use qcircuit_core::{Circuit, GateOp, IrError};
use thiserror::Error;

pub const FILE_EXTENSION: &str = "qc";

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("expected `{expected} <count>`")]
    BadHeader { expected: &'static str },
    #[error("malformed angle `{0}`")]
    MalformedAngle(String),
    #[error("malformed operand `{0}`")]
    MalformedOperand(String),
    #[error("expected `measure <qubit> -> <clbit>`")]
    MalformedMeasure,
    #[error(transparent)]
    Circuit(#[from] IrError),
}

impl ParseErrorKind {
    fn at(self, line: usize) -> ParseError {
        ParseError { line, kind: self }
    }
}

const ANGLE_TOKENS: [(&str, f64); 8] = [
    ("pi", PI),
    ("-pi", -PI),
    ("pi/2", PI / 2.0),
    ("pi/4", PI / 4.0),
    ("pi/8", PI / 8.0),
    ("pi/16", PI / 16.0),
    ("-pi/2", -PI / 2.0),
    ("-pi/4", -PI / 4.0),
];

fn parse_angle(text: &str) -> Result<f64, ParseErrorKind> {
    let text = text.trim();
    if let Some(&(_, v)) = ANGLE_TOKENS
        .iter()
        .find(|(tok, _)| tok.eq_ignore_ascii_case(text))
    {
        return Ok(v);
    }
    // only plain decimals; `f64::from_str` would also take "inf" and "NaN"
    let plain = !text.is_empty()
        && text
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'));
    match text.parse::<f64>() {
        Ok(v) if plain && v.is_finite() => Ok(v),
        _ => Err(ParseErrorKind::MalformedAngle(text.to_string())),
    }
}

fn parse_index(token: &str) -> Result<usize, ParseErrorKind> {
    token
        .parse()
        .map_err(|_| ParseErrorKind::MalformedOperand(token.to_string()))
}

fn parse_header(content: &str, expected: &'static str) -> Result<usize, ParseErrorKind> {
    let mut tokens = content.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(word), Some(n), None) if word.eq_ignore_ascii_case(expected) => n
            .parse()
            .map_err(|_| ParseErrorKind::BadHeader { expected }),
        _ => Err(ParseErrorKind::BadHeader { expected }),
    }
}

fn parse_instruction(content: &str) -> Result<GateOp, ParseErrorKind> {
    let name_end = content
        .find(|c: char| c.is_whitespace() || c == '(')
        .unwrap_or(content.len());
    let kind = resolve_gate_name(&content[..name_end])?;
    let mut rest = content[name_end..].trim_start();

    let mut params = Vec::new();
    if let Some(after_paren) = rest.strip_prefix('(') {
        let close = after_paren
            .find(')')
            .ok_or_else(|| ParseErrorKind::MalformedAngle(after_paren.trim().to_string()))?;
        params.push(parse_angle(&after_paren[..close])?);
        rest = &after_paren[close + 1..];
    }

    let operands = if kind.is_measure() {
        let spaced = rest.replace("->", " -> ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        match tokens[..] {
            [q, "->", c] => vec![parse_index(q)?, parse_index(c)?],
            _ => return Err(ParseErrorKind::MalformedMeasure),
        }
    } else {
        rest.split_whitespace()
            .map(parse_index)
            .collect::<Result<Vec<_>, _>>()?
    };
    Ok(GateOp::new(kind, &operands, &params)?)
}

/// Parse a `.qc` document.
pub fn parse(text: &str) -> Result<Circuit, ParseError> {
    let mut content_lines = text.split('\n').enumerate().filter_map(|(i, raw)| {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = raw.split_once('#').map_or(raw, |(code, _)| code).trim();
        (!content.is_empty()).then_some((i + 1, content))
    });
    let last_line = text.lines().count().max(1);

    let (line, content) = content_lines
        .next()
        .ok_or(ParseErrorKind::BadHeader { expected: "qubits" }.at(last_line))?;
    let num_qubits = parse_header(content, "qubits").map_err(|k| k.at(line))?;
    let header_line = line;

    let (line, content) = content_lines
        .next()
        .ok_or(ParseErrorKind::BadHeader { expected: "clbits" }.at(last_line))?;
    let num_clbits = parse_header(content, "clbits").map_err(|k| k.at(line))?;

    let mut circuit = Circuit::new(num_qubits, num_clbits)
        .map_err(|e| ParseErrorKind::from(e).at(header_line))?;

    for (line, content) in content_lines {
        let op = parse_instruction(content).map_err(|k| k.at(line))?;
        circuit
            .push(op)
            .map_err(|e| ParseErrorKind::from(e).at(line))?;
    }
    Ok(circuit)
}

/// Canonical text: lowercase names, decimal angles, single spaces.
pub fn serialize(circuit: &Circuit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "qubits {}", circuit.num_qubits());
    let _ = writeln!(out, "clbits {}", circuit.num_clbits());
    for op in circuit.ops() {
        out.push_str(op.kind().name());
        if let Some(theta) = op.angle() {
            let _ = write!(out, "({})", format_angle(theta));
        }
        match op.clbit() {
            Some(c) => {
                let _ = write!(out, " {} -> {c}", op.qubits()[0]);
            }
            None => {
                for q in op.qubits() {
                    let _ = write!(out, " {q}");
                }
            }
        }
        out.push('\n');
    }
    out
}
