//! Turns a [`ReportDocument`] into JSON, CSV or a plain-text table.

use std::fmt::Write as _;

use serde::Serialize;

use crate::args::Format;
use crate::report::*;
use crate::CliError;

pub fn render(doc: &ReportDocument, format: Format, precision: u8) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(doc).map_err(|e| CliError::Internal(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => csv(doc),
        Format::Table => Ok(table(doc, usize::from(precision))),
    }
}

fn write_rows<R: Serialize>(
    header: Option<&[&str]>,
    rows: impl IntoIterator<Item = R>,
) -> Result<String, CliError> {
    let internal = |e: csv::Error| CliError::Internal(e.to_string());
    let mut w = csv::WriterBuilder::new()
        .has_headers(header.is_none())
        .from_writer(Vec::new());
    if let Some(h) = header {
        w.write_record(h).map_err(internal)?;
    }
    for row in rows {
        w.serialize(row).map_err(internal)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

fn csv(doc: &ReportDocument) -> Result<String, CliError> {
    match &doc.result {
        ReportResult::Sweep(s) => write_rows(
            Some(&[
                "k",
                "angle",
                "p_marked_sim",
                "p_marked_formula",
                "p_each_unmarked",
            ]),
            &s.rows,
        ),
        ReportResult::Run(r) => match &r.trace {
            Some(trace) => {
                let rows = trace.iter().flat_map(|step| {
                    step.amplitudes.iter().map(move |a| {
                        (
                            &step.step,
                            &step.label,
                            step.round,
                            step.block,
                            &a.bitstring,
                            a.amplitude[0],
                            a.amplitude[1],
                        )
                    })
                });
                write_rows(
                    Some(&["step", "label", "round", "block", "bitstring", "re", "im"]),
                    rows,
                )
            }
            None => write_rows(
                Some(&["bitstring", "probability"]),
                r.per_marked.iter().map(|p| (&p.bitstring, p.probability)),
            ),
        },
        ReportResult::Predict(p) => write_rows(
            Some(&[
                "iterations",
                "optimal",
                "theta_sin",
                "p_success",
                "p_each_unmarked",
            ]),
            [(
                p.iterations,
                p.optimal,
                p.theta_sin,
                p.p_success,
                p.p_each_unmarked,
            )],
        ),
        ReportResult::Sample(s) => write_rows(
            Some(&["bitstring", "count"]),
            s.counts.iter().map(|c| (&c.bitstring, c.count)),
        ),
        ReportResult::Load(l) => write_rows(
            Some(&["bitstring", "probability"]),
            l.probabilities
                .iter()
                .map(|p| (&p.bitstring, p.probability)),
        ),
        ReportResult::Circuit(_) => Err(CliError::Usage(
            "--format csv: dump has no tabular form; use table or json".into(),
        )),
    }
}

fn pair(z: Pair, prec: usize) -> String {
    format!("{:.prec$}{:+.prec$}i", z[0], z[1])
}

fn table(doc: &ReportDocument, prec: usize) -> String {
    let mut out = String::new();
    let spec = &doc.spec;
    if let (Some(n), Some(marked)) = (spec.n, &spec.marked) {
        let _ = write!(out, "search      n={n} marked={}", marked.join(","));
        if let Some(k) = spec.iterations {
            let _ = write!(out, " iterations={k}");
        }
        if let Some(style) = spec.style {
            let style = serde_json::to_value(style)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default();
            let _ = write!(out, " style={style}");
        }
        out.push('\n');
    }

    match &doc.result {
        ReportResult::Run(r) => {
            let _ = writeln!(
                out,
                "theta       sin={:.prec$} cos={:.prec$}",
                r.theta_sin, r.theta_paper
            );
            let _ = writeln!(out, "angle       {:.prec$}", r.angle);
            let _ = writeln!(
                out,
                "p_marked    {:.prec$} (formula {:.prec$})",
                r.p_marked_total, r.p_marked_formula
            );
            for p in &r.per_marked {
                let _ = writeln!(out, "  {:<10}{:.prec$}", p.bitstring, p.probability);
            }
            let _ = writeln!(
                out,
                "plane       marked={} unmarked={} residual={:.prec$} angle={:.prec$}",
                pair(r.plane.a_marked, prec),
                pair(r.plane.a_unmarked, prec),
                r.plane.residual_norm,
                r.plane.angle
            );
            let _ = writeln!(
                out,
                "oblique     uniform={} marked={}",
                pair(r.oblique.c_uniform, prec),
                pair(r.oblique.c_marked, prec)
            );
            for step in r.trace.iter().flatten() {
                let _ = write!(out, "\n[{}]", step.label);
                if let Some(k) = step.round {
                    let _ = write!(out, " round {k}");
                }
                if let Some(b) = step.block {
                    let _ = write!(out, " block {b}");
                }
                let _ = writeln!(out, " ops {}..{}", step.ops[0], step.ops[1]);
                for a in &step.amplitudes {
                    let _ = writeln!(out, "  |{}>  {}", a.bitstring, pair(a.amplitude, prec));
                }
            }
        }
        ReportResult::Sweep(s) => {
            let _ = writeln!(
                out,
                "{:>4}  {:>w$}  {:>w$}  {:>w$}  {:>w$}",
                "k",
                "angle",
                "p_marked",
                "formula",
                "p_unmarked",
                w = prec + 3
            );
            for row in &s.rows {
                let _ = writeln!(
                    out,
                    "{:>4}  {:>w$.prec$}  {:>w$.prec$}  {:>w$.prec$}  {:>w$.prec$}",
                    row.k,
                    row.angle,
                    row.p_marked_sim,
                    row.p_marked_formula,
                    row.p_each_unmarked,
                    w = prec + 3
                );
            }
        }
        ReportResult::Predict(p) => {
            let _ = writeln!(out, "n={} m={}", spec.n.unwrap_or(0), spec.m.unwrap_or(0));
            let _ = writeln!(
                out,
                "theta       sin={:.prec$} cos={:.prec$}",
                p.theta_sin, p.theta_paper
            );
            let optimal = if p.optimal { " (optimal)" } else { "" };
            let _ = writeln!(out, "iterations  {}{optimal}", p.iterations);
            let _ = writeln!(out, "p_success   {:.prec$}", p.p_success);
            let _ = writeln!(out, "p_unmarked  {:.prec$} each", p.p_each_unmarked);
        }
        ReportResult::Sample(s) => {
            let _ = writeln!(out, "shots={} seed={}", s.shots, s.seed);
            for c in &s.counts {
                let _ = writeln!(out, "  {:<10}{:>8}", c.bitstring, c.count);
            }
        }
        // The circuit text is already the human-readable form.
        ReportResult::Circuit(c) => return c.text.clone(),
        ReportResult::Load(l) => {
            let _ = writeln!(out, "qubits={} ops={}", l.qubits, l.ops);
            for p in &l.probabilities {
                let _ = writeln!(out, "  {:<10}{:.prec$}", p.bitstring, p.probability);
            }
        }
    }
    out
}
