//! Line-oriented circuit text format.
//!
//! ```text
//! # qubits: 3
//! H 0
//! MCX c=0,1 t=2
//! ```
//!
//! One op per line: `H <q>`, `X <q>`, `Z <q>`, `MCX c=<q,...> t=<q>` or
//! `MCZ c=<q,...> t=<q>`. Everything after `#` is a comment. The width comes
//! from a `# qubits: <n>` comment when present, otherwise from the largest
//! index used.

use super::{Circuit, GateOp};
use crate::error::{Error, Result};
use crate::statevector::{ControlledBase, OneQubitGate};
use std::fmt::Write;

pub const FORMAT_VERSION: u32 = 1;

pub(super) fn dump(circuit: &Circuit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# grover-kit circuit v{FORMAT_VERSION}");
    let _ = writeln!(
        out,
        "# qubit 0 is the leftmost ket character and the most significant index bit (reverse of Qiskit order)"
    );
    let _ = writeln!(out, "# qubits: {}", circuit.n_qubits());
    for op in circuit.ops() {
        match op {
            GateOp::Single { gate, target } => {
                let name = match gate {
                    OneQubitGate::H => "H",
                    OneQubitGate::X => "X",
                    OneQubitGate::Z => "Z",
                };
                let _ = writeln!(out, "{name} {target}");
            }
            GateOp::MultiControlled {
                base,
                controls,
                target,
            } => {
                let name = match base {
                    ControlledBase::X => "MCX",
                    ControlledBase::Z => "MCZ",
                };
                let list: Vec<String> = controls.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "{name} c={} t={target}", list.join(","));
            }
        }
    }
    out
}

fn parse_error(line: usize, token: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        token: token.to_string(),
        message: message.into(),
    }
}

fn parse_qubit(line: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, token, "expected a decimal qubit index"))
}

fn parse_header(line: usize, comment: &str) -> Result<Option<usize>> {
    let Some(rest) = comment.trim().strip_prefix("qubits:") else {
        return Ok(None);
    };
    let token = rest.trim();
    token
        .parse()
        .map(Some)
        .map_err(|_| parse_error(line, token, "expected a qubit count after `qubits:`"))
}

fn parse_op(line: usize, body: &str) -> Result<GateOp> {
    let mut tokens = body.split_whitespace();
    let name = tokens.next().expect("caller skips blank lines");
    let rest: Vec<&str> = tokens.collect();
    let single = match name {
        "H" => Some(OneQubitGate::H),
        "X" => Some(OneQubitGate::X),
        "Z" => Some(OneQubitGate::Z),
        _ => None,
    };
    if let Some(gate) = single {
        return match rest.as_slice() {
            [q] => Ok(GateOp::Single {
                gate,
                target: parse_qubit(line, q)?,
            }),
            [] => Err(parse_error(line, name, "missing target qubit")),
            [_, extra, ..] => Err(parse_error(line, extra, "unexpected token")),
        };
    }
    let base = match name {
        "MCX" => ControlledBase::X,
        "MCZ" => ControlledBase::Z,
        _ => return Err(parse_error(line, name, "unknown gate")),
    };
    let mut controls = None;
    let mut target = None;
    for tok in rest {
        if let Some(list) = tok.strip_prefix("c=") {
            if controls.is_some() {
                return Err(parse_error(line, tok, "controls given twice"));
            }
            let qs = list
                .split(',')
                .map(|q| parse_qubit(line, q))
                .collect::<Result<Vec<_>>>()?;
            controls = Some(qs);
        } else if let Some(q) = tok.strip_prefix("t=") {
            if target.is_some() {
                return Err(parse_error(line, tok, "target given twice"));
            }
            target = Some(parse_qubit(line, q)?);
        } else {
            return Err(parse_error(line, tok, "expected `c=<list>` or `t=<q>`"));
        }
    }
    let controls =
        controls.ok_or_else(|| parse_error(line, name, "missing controls `c=<list>`"))?;
    let target = target.ok_or_else(|| parse_error(line, name, "missing target `t=<q>`"))?;
    Ok(match base {
        ControlledBase::X => GateOp::mcx(controls, target),
        ControlledBase::Z => GateOp::mcz(controls, target),
    })
}

fn max_index(op: &GateOp) -> usize {
    match op {
        GateOp::Single { target, .. } => *target,
        GateOp::MultiControlled {
            controls, target, ..
        } => controls.iter().copied().chain([*target]).max().unwrap_or(0),
    }
}

pub(super) fn parse(src: &str) -> Result<Circuit> {
    let mut width = None;
    let mut ops: Vec<(usize, GateOp)> = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(n) = comment
            .map(|c| parse_header(line, c))
            .transpose()?
            .flatten()
        {
            if width.replace(n).is_some() {
                return Err(parse_error(line, raw.trim(), "qubit count declared twice"));
            }
        }
        if body.trim().is_empty() {
            continue;
        }
        ops.push((line, parse_op(line, body)?));
    }
    let inferred = ops.iter().map(|(_, op)| max_index(op) + 1).max();
    let n = match (width, inferred) {
        (Some(n), _) => n,
        (None, Some(n)) => n,
        (None, None) => {
            return Err(parse_error(
                0,
                "",
                "no operations and no `# qubits:` header",
            ));
        }
    };
    let mut circuit = Circuit::new(n).map_err(|e| parse_error(0, &n.to_string(), e.to_string()))?;
    for (line, op) in ops {
        let shown = dump_op(&op);
        circuit
            .push(op)
            .map_err(|e| parse_error(line, &shown, e.to_string()))?;
    }
    Ok(circuit)
}

fn dump_op(op: &GateOp) -> String {
    let c = Circuit {
        n_qubits: 1,
        ops: vec![op.clone()],
    };
    dump(&c).lines().last().unwrap_or_default().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{build_grover_circuit, GroverSpec, OracleStyle};
    use proptest::prelude::*;

    #[test]
    fn grover_circuit_round_trips() {
        let spec = GroverSpec::new(2, ["01".parse().unwrap()], 1, OracleStyle::McxAncilla).unwrap();
        let c = build_grover_circuit(&spec).unwrap();
        let text = c.dump();
        assert!(text.contains("most significant"));
        assert!(text.contains("MCX c=0,1 t=2"));
        assert_eq!(Circuit::parse(&text).unwrap(), c);
    }

    #[test]
    fn width_is_inferred_without_header() {
        let c = Circuit::parse("H 0\nMCZ c=0,1 t=3 # trailing comment\n").unwrap();
        assert_eq!(c.n_qubits(), 4);
        assert_eq!(c.ops()[1], GateOp::mcz([0, 1], 3));
    }

    #[test]
    fn errors_name_line_and_token() {
        match Circuit::parse("MCX t=2") {
            Err(Error::Parse { line, token, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(token, "MCX");
            }
            other => panic!("unexpected {other:?}"),
        }
        match Circuit::parse("# qubits: 2\nH 0\nY 1\n") {
            Err(Error::Parse { line, token, .. }) => assert_eq!((line, token.as_str()), (3, "Y")),
            other => panic!("unexpected {other:?}"),
        }
        match Circuit::parse("H 0\nMCX c=0,x t=1") {
            Err(Error::Parse { line, token, .. }) => assert_eq!((line, token.as_str()), (2, "x")),
            other => panic!("unexpected {other:?}"),
        }
        match Circuit::parse("# qubits: 2\nMCX c=0,1 t=1") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Circuit::parse("H").is_err());
        assert!(Circuit::parse("H 0 1").is_err());
        assert!(Circuit::parse("# just a comment\n").is_err());
        assert!(Circuit::parse("# qubits: 1\n# qubits: 2\n").is_err());
    }

    #[test]
    fn header_allows_idle_qubits() {
        let c = Circuit::parse("# qubits: 3\n").unwrap();
        assert_eq!((c.n_qubits(), c.len()), (3, 0));
    }

    fn arb_op(n: usize) -> impl Strategy<Value = GateOp> {
        prop_oneof![
            (0..n, 0..3u8).prop_map(|(t, g)| match g {
                0 => GateOp::h(t),
                1 => GateOp::x(t),
                _ => GateOp::z(t),
            }),
            (0..n, any::<u16>(), any::<bool>()).prop_filter_map(
                "needs a control",
                move |(t, m, x)| {
                    let controls: Vec<usize> =
                        (0..n).filter(|&q| q != t && (m >> q) & 1 == 1).collect();
                    if controls.is_empty() {
                        None
                    } else if x {
                        Some(GateOp::mcx(controls, t))
                    } else {
                        Some(GateOp::mcz(controls, t))
                    }
                }
            ),
        ]
    }

    proptest! {
        #[test]
        fn dump_parse_round_trip(ops in prop::collection::vec(arb_op(6), 0..40)) {
            let c = Circuit::from_ops(6, ops).unwrap();
            prop_assert_eq!(Circuit::parse(&c.dump()).unwrap(), c);
        }
    }
}
