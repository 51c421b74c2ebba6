use std::io::Read;

use grover_kit::circuit::{
    build_grover_circuit, group_snapshots, grover_steps, run, simulate_grover,
};
use grover_kit::geometry::{
    analyze_run, grover_angles, iteration_report, optimal_iterations, p_each_unmarked,
    predicted_success,
};
use grover_kit::sampling::measure_leading;
use grover_kit::statevector::MAX_QUBITS;
use grover_kit::{Amplitude, Bitstring, Circuit, GroverSpec, OracleStyle, StateVector};

use crate::args::{
    BitOrder, Cli, Command, IteratedArgs, LoadArgs, PredictArgs, ProblemArgs, SampleArgs, SweepArgs,
};
use crate::report::*;
use crate::CliError;

/// Presentation settings shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct Presentation {
    pub precision: u8,
    pub bit_order: BitOrder,
}

impl Presentation {
    pub fn round(&self, x: f64) -> f64 {
        let scale = 10f64.powi(i32::from(self.precision));
        let r = (x * scale).round() / scale;
        // Avoid printing -0.
        if r == 0.0 {
            0.0
        } else {
            r
        }
    }

    fn pair(&self, z: Amplitude) -> Pair {
        [self.round(z.re), self.round(z.im)]
    }

    pub fn label(&self, b: &Bitstring) -> String {
        match self.bit_order {
            BitOrder::Msb => b.to_string(),
            BitOrder::Lsb => b.reversed().to_string(),
        }
    }

    fn parse_label(&self, s: &str) -> Option<Bitstring> {
        let b: Bitstring = s.parse().ok()?;
        Some(match self.bit_order {
            BitOrder::Msb => b,
            BitOrder::Lsb => b.reversed(),
        })
    }
}

pub fn execute(cli: &Cli) -> Result<ReportDocument, CliError> {
    let pres = Presentation {
        precision: cli.precision,
        bit_order: cli.bit_order,
    };
    let searched = |a: &IteratedArgs| -> Result<(GroverSpec, SpecEcho), CliError> {
        let spec = search_spec(a, pres)?;
        let echo = echo_spec(&spec, pres);
        Ok((spec, echo))
    };
    let (name, spec, result) = match &cli.command {
        Command::Run(a) => {
            let (spec, echo) = searched(&a.search)?;
            ("run", echo, cmd_run(&spec, a.trace, pres)?)
        }
        Command::Trace(a) => {
            let (spec, echo) = searched(a)?;
            ("trace", echo, cmd_run(&spec, true, pres)?)
        }
        Command::Sweep(a) => ("sweep", echo_sweep(a, pres)?, cmd_sweep(a, pres)?),
        Command::Predict(a) => ("predict", echo_predict(a, pres), cmd_predict(a, pres)?),
        Command::Sample(a) => {
            let (spec, echo) = searched(&a.search)?;
            ("sample", echo, cmd_sample(&spec, a, pres)?)
        }
        Command::Dump(a) => {
            let (spec, echo) = searched(a)?;
            ("dump", echo, cmd_dump(&spec)?)
        }
        Command::Load(a) => {
            let mut spec = SpecEcho::new(pres.bit_order);
            spec.source = Some(a.path.display().to_string());
            ("load", spec, cmd_load(a, pres)?)
        }
    };
    Ok(ReportDocument {
        command: name.to_string(),
        spec,
        result,
        versions: Versions::current(),
    })
}

fn grover_spec(
    problem: &ProblemArgs,
    iterations: usize,
    pres: Presentation,
) -> Result<GroverSpec, CliError> {
    let style = OracleStyle::from(problem.style);
    let n = problem.n;
    if n < 2 {
        return Err(CliError::Usage(format!(
            "--n: need at least 2 data qubits, got {n}"
        )));
    }
    if n + style.ancilla_count() > MAX_QUBITS {
        return Err(CliError::Usage(format!(
            "--n: {n} data qubits (+{} ancilla) exceed the {MAX_QUBITS}-qubit limit",
            style.ancilla_count()
        )));
    }
    let mut marked = Vec::with_capacity(problem.marked.len());
    for s in &problem.marked {
        let s = s.trim();
        let b = pres.parse_label(s).ok_or_else(|| {
            CliError::Usage(format!("--marked: `{s}` is not a bitstring of 0s and 1s"))
        })?;
        if b.len() != n {
            return Err(CliError::Usage(format!(
                "--marked: `{s}` has {} bits but --n is {n}",
                b.len()
            )));
        }
        marked.push(b);
    }
    GroverSpec::new(n, marked, iterations, style)
        .map_err(|e| CliError::Usage(format!("--marked: {e}")))
}

fn search_spec(a: &IteratedArgs, pres: Presentation) -> Result<GroverSpec, CliError> {
    let spec = grover_spec(&a.problem, 0, pres)?;
    let k = match a.iterations {
        Some(k) => k,
        None => optimal_iterations(spec.n(), spec.marked_count())?,
    };
    Ok(spec.with_iterations(k))
}

fn echo_spec(spec: &GroverSpec, pres: Presentation) -> SpecEcho {
    let mut echo = SpecEcho::new(pres.bit_order);
    echo.n = Some(spec.n());
    echo.marked = Some(spec.marked().iter().map(|b| pres.label(b)).collect());
    echo.m = Some(spec.marked_count());
    echo.iterations = Some(spec.iterations());
    echo.style = Some(spec.style());
    echo
}

fn echo_sweep(a: &SweepArgs, pres: Presentation) -> Result<SpecEcho, CliError> {
    let mut echo = echo_spec(&grover_spec(&a.problem, 0, pres)?, pres);
    echo.iterations = None;
    echo.kmax = Some(a.kmax);
    Ok(echo)
}

fn echo_predict(a: &PredictArgs, pres: Presentation) -> SpecEcho {
    let mut echo = SpecEcho::new(pres.bit_order);
    echo.n = Some(a.n);
    echo.m = Some(a.m);
    echo.iterations = a.iterations;
    echo
}

fn cmd_run(spec: &GroverSpec, trace: bool, pres: Presentation) -> Result<ReportResult, CliError> {
    let analysis = analyze_run(spec)?;
    let p = |x: f64| pres.round(x);
    let trace = if trace {
        Some(trace_steps(spec, pres)?)
    } else {
        None
    };
    Ok(ReportResult::Run(RunResult {
        width: spec.width(),
        per_marked: analysis
            .per_marked
            .iter()
            .map(|mp| Probability {
                bitstring: pres.label(&mp.bitstring),
                probability: p(mp.probability),
            })
            .collect(),
        p_marked_total: p(analysis.p_marked_total),
        p_marked_formula: p(analysis.p_marked_formula),
        theta_sin: p(analysis.angles.theta_sin),
        theta_paper: p(analysis.angles.theta_paper),
        angle: p((2 * spec.iterations() + 1) as f64 * analysis.angles.theta_sin),
        plane: PlaneReport {
            a_marked: pres.pair(analysis.plane.a_marked),
            a_unmarked: pres.pair(analysis.plane.a_unmarked),
            residual_norm: p(analysis.plane.residual_norm),
            angle: p(analysis.plane.plane_angle()),
        },
        oblique: ObliqueReport {
            c_uniform: pres.pair(analysis.oblique.c_uniform),
            c_marked: pres.pair(analysis.oblique.c_marked),
        },
        trace,
    }))
}

fn trace_steps(spec: &GroverSpec, pres: Presentation) -> Result<Vec<TraceStep>, CliError> {
    let circuit = build_grover_circuit(spec)?;
    let init = StateVector::zero_state(circuit.n_qubits())?;
    let snapshots = run(&circuit, &init, true)?
        .snapshots
        .ok_or_else(|| CliError::Internal("traced run returned no snapshots".into()))?;
    let steps = grover_steps(spec)?;
    let states = group_snapshots(&init, &snapshots, steps.iter().map(|s| s.ops.clone()));
    Ok(steps
        .iter()
        .zip(states)
        .map(|(step, state)| TraceStep {
            step: step.kind.number().to_string(),
            label: step.kind.label(),
            round: step.iteration.map(|k| k + 1),
            block: step.block,
            ops: [step.ops.start, step.ops.end],
            amplitudes: nonzero_amplitudes(state, pres),
        })
        .collect())
}

fn nonzero_amplitudes(state: &StateVector, pres: Presentation) -> Vec<BasisAmplitude> {
    let n = state.n_qubits();
    let mut out: Vec<BasisAmplitude> = state
        .amplitudes()
        .iter()
        .enumerate()
        .filter_map(|(i, &a)| {
            let amplitude = pres.pair(a);
            (amplitude != [0.0, 0.0]).then(|| BasisAmplitude {
                bitstring: pres.label(&Bitstring::from_index(i, n)),
                amplitude,
            })
        })
        .collect();
    out.sort_by(|a, b| a.bitstring.cmp(&b.bitstring));
    out
}

fn cmd_sweep(a: &SweepArgs, pres: Presentation) -> Result<ReportResult, CliError> {
    let spec = grover_spec(&a.problem, 0, pres)?;
    let rows =
        iteration_report(&spec, a.kmax).map_err(|e| CliError::Usage(format!("--kmax: {e}")))?;
    Ok(ReportResult::Sweep(SweepResult {
        rows: rows
            .iter()
            .map(|r| SweepRow {
                k: r.k,
                angle: pres.round(r.angle),
                p_marked_sim: pres.round(r.p_marked_total),
                p_marked_formula: pres.round(r.p_marked_formula),
                p_each_unmarked: pres.round(r.p_each_unmarked),
            })
            .collect(),
    }))
}

fn cmd_predict(a: &PredictArgs, pres: Presentation) -> Result<ReportResult, CliError> {
    if a.n == 0 || a.n > 62 {
        return Err(CliError::Usage(format!("--n: {} outside 1..=62", a.n)));
    }
    let angles = grover_angles(a.n, a.m).map_err(|e| CliError::Usage(format!("--m: {e}")))?;
    let k = match a.iterations {
        Some(k) => k,
        None => optimal_iterations(a.n, a.m)?,
    };
    Ok(ReportResult::Predict(PredictResult {
        iterations: k,
        optimal: a.optimal,
        theta_sin: pres.round(angles.theta_sin),
        theta_paper: pres.round(angles.theta_paper),
        p_success: pres.round(predicted_success(a.n, a.m, k)?),
        p_each_unmarked: pres.round(p_each_unmarked(a.n, a.m, k)?),
    }))
}

fn cmd_sample(
    spec: &GroverSpec,
    a: &SampleArgs,
    pres: Presentation,
) -> Result<ReportResult, CliError> {
    let state = simulate_grover(spec)?.full_state;
    let hist = measure_leading(&state, spec.n(), a.shots, a.seed)?;
    let mut counts: Vec<Count> = hist
        .counts()
        .iter()
        .map(|(b, &count)| Count {
            bitstring: pres.label(b),
            count,
        })
        .collect();
    counts.sort_by(|x, y| {
        y.count
            .cmp(&x.count)
            .then_with(|| x.bitstring.cmp(&y.bitstring))
    });
    Ok(ReportResult::Sample(SampleResult {
        shots: hist.shots,
        seed: hist.seed,
        counts,
    }))
}

fn cmd_dump(spec: &GroverSpec) -> Result<ReportResult, CliError> {
    let circuit = build_grover_circuit(spec)?;
    Ok(ReportResult::Circuit(CircuitResult {
        qubits: circuit.n_qubits(),
        ops: circuit.len(),
        text: circuit.dump(),
    }))
}

fn cmd_load(a: &LoadArgs, pres: Presentation) -> Result<ReportResult, CliError> {
    let src = if a.path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&a.path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", a.path.display())))?
    };
    let circuit =
        Circuit::parse(&src).map_err(|e| CliError::Usage(format!("{}: {e}", a.path.display())))?;
    let state = run(
        &circuit,
        &StateVector::zero_state(circuit.n_qubits())?,
        false,
    )?
    .final_state;
    let n = state.n_qubits();
    let mut probabilities: Vec<Probability> = state
        .probabilities()
        .into_iter()
        .enumerate()
        .map(|(i, p)| Probability {
            bitstring: pres.label(&Bitstring::from_index(i, n)),
            probability: pres.round(p),
        })
        .filter(|p| p.probability != 0.0)
        .collect();
    probabilities.sort_by(|a, b| a.bitstring.cmp(&b.bitstring));
    Ok(ReportResult::Load(LoadResult {
        qubits: circuit.n_qubits(),
        ops: circuit.len(),
        probabilities,
    }))
}
