use super::{run, Circuit, GateOp};
use crate::error::{Error, Result};
use crate::statevector::{Bitstring, StateVector, MAX_QUBITS};
use serde::{Deserialize, Serialize};
use std::ops::Range;

/// Tolerance used when factoring the ancilla out of a simulated state.
pub(crate) const ANCILLA_TOLERANCE: f64 = 1e-10;

/// How the phase oracle flips the sign of marked states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleStyle {
    /// Multi-controlled Z directly on the data register.
    #[default]
    MczDirect,
    /// Multi-controlled X onto an extra qubit held in `|->` (phase kickback).
    McxAncilla,
}

impl OracleStyle {
    /// Qubits added on top of the data register.
    pub fn ancilla_count(self) -> usize {
        match self {
            OracleStyle::MczDirect => 0,
            OracleStyle::McxAncilla => 1,
        }
    }
}

/// A Grover search problem: data width, marked set, iteration count and oracle style.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct GroverSpec {
    n: usize,
    marked: Vec<Bitstring>,
    iterations: usize,
    style: OracleStyle,
}

#[derive(Deserialize)]
struct RawSpec {
    n: usize,
    marked: Vec<Bitstring>,
    iterations: usize,
    style: OracleStyle,
}

impl TryFrom<RawSpec> for GroverSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        GroverSpec::new(raw.n, raw.marked, raw.iterations, raw.style)
    }
}

impl GroverSpec {
    /// Validates and normalizes a problem statement; marked strings are sorted ascending.
    pub fn new(
        n: usize,
        marked: impl IntoIterator<Item = Bitstring>,
        iterations: usize,
        style: OracleStyle,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::Spec(format!(
                "need at least 2 data qubits for the diffuser, got {n}"
            )));
        }
        if n + style.ancilla_count() > MAX_QUBITS {
            return Err(Error::Spec(format!(
                "{n} data qubits plus {} ancilla exceed the {MAX_QUBITS}-qubit limit",
                style.ancilla_count()
            )));
        }
        let marked = validate_marked(n, marked)?;
        Ok(GroverSpec {
            n,
            marked,
            iterations,
            style,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn marked(&self) -> &[Bitstring] {
        &self.marked
    }

    pub fn marked_count(&self) -> usize {
        self.marked.len()
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn style(&self) -> OracleStyle {
        self.style
    }

    /// Total circuit width including the ancilla.
    pub fn width(&self) -> usize {
        self.n + self.style.ancilla_count()
    }

    pub fn with_iterations(&self, iterations: usize) -> Self {
        GroverSpec {
            iterations,
            ..self.clone()
        }
    }

    pub fn with_style(&self, style: OracleStyle) -> Self {
        GroverSpec {
            style,
            ..self.clone()
        }
    }
}

pub(crate) fn validate_marked(
    n: usize,
    marked: impl IntoIterator<Item = Bitstring>,
) -> Result<Vec<Bitstring>> {
    let mut marked: Vec<Bitstring> = marked.into_iter().collect();
    if marked.is_empty() {
        return Err(Error::Spec("marked set is empty".into()));
    }
    if let Some(bad) = marked.iter().find(|b| b.len() != n) {
        return Err(Error::Spec(format!(
            "marked string `{bad}` has length {}, expected {n}",
            bad.len()
        )));
    }
    marked.sort();
    if let Some(w) = marked.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Spec(format!(
            "marked string `{}` listed twice",
            w[0]
        )));
    }
    if n < usize::BITS as usize && marked.len() >= 1usize << n {
        return Err(Error::Spec(
            "marked set covers the whole search space".into(),
        ));
    }
    Ok(marked)
}

/// Stage of a Grover circuit, numbered the way the step-by-step walkthrough numbers it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepKind {
    /// Ancilla flipped to `|1>` (empty for the direct style).
    Prepare,
    /// Hadamard layer producing the uniform superposition.
    Superpose,
    /// X layer selecting the zero bits of a marked string.
    OracleSelect,
    /// The multi-controlled X or Z.
    OracleFlip,
    /// The X layer undoing [`StepKind::OracleSelect`].
    OracleUnselect,
    DiffuseH,
    DiffuseX,
    DiffuseFlip,
    DiffuseUnX,
    DiffuseUnH,
}

impl StepKind {
    /// Step number in the walkthrough convention (`1.0` .. `3.5`).
    pub fn number(self) -> &'static str {
        match self {
            StepKind::Prepare => "1.0",
            StepKind::Superpose => "1.1",
            StepKind::OracleSelect => "2.1",
            StepKind::OracleFlip => "2.2",
            StepKind::OracleUnselect => "2.3",
            StepKind::DiffuseH => "3.1",
            StepKind::DiffuseX => "3.2",
            StepKind::DiffuseFlip => "3.3",
            StepKind::DiffuseUnX => "3.4",
            StepKind::DiffuseUnH => "3.5",
        }
    }

    pub fn phase(self) -> &'static str {
        match self {
            StepKind::Prepare | StepKind::Superpose => "Init",
            StepKind::OracleSelect | StepKind::OracleFlip | StepKind::OracleUnselect => "Oracle",
            _ => "Amplification",
        }
    }

    pub fn label(self) -> String {
        format!("{} {}", self.phase(), self.number())
    }
}

/// A labelled span of ops in a compiled Grover circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    /// Zero-based Grover iteration; `None` for the prologue.
    pub iteration: Option<usize>,
    /// Index into the sorted marked set for oracle steps.
    pub block: Option<usize>,
    pub ops: Range<usize>,
}

struct Layout {
    circuit: Circuit,
    steps: Vec<Step>,
}

impl Layout {
    fn span(
        &mut self,
        kind: StepKind,
        iteration: Option<usize>,
        block: Option<usize>,
        ops: impl IntoIterator<Item = GateOp>,
    ) -> Result<()> {
        let start = self.circuit.len();
        for op in ops {
            self.circuit.push(op)?;
        }
        let end = self.circuit.len();
        self.steps.push(Step {
            kind,
            iteration,
            block,
            ops: start..end,
        });
        Ok(())
    }

    fn oracle_block(
        &mut self,
        n: usize,
        r: &Bitstring,
        style: OracleStyle,
        iteration: Option<usize>,
        block: Option<usize>,
    ) -> Result<()> {
        let zeros: Vec<usize> = (0..n).filter(|&q| !r.bit(q)).collect();
        self.span(
            StepKind::OracleSelect,
            iteration,
            block,
            zeros.iter().map(|&q| GateOp::x(q)),
        )?;
        let flip = match style {
            OracleStyle::McxAncilla => GateOp::mcx(0..n, n),
            OracleStyle::MczDirect => {
                if n < 2 {
                    return Err(Error::Spec(
                        "direct phase oracle needs at least 2 qubits".into(),
                    ));
                }
                GateOp::mcz(0..n - 1, n - 1)
            }
        };
        self.span(StepKind::OracleFlip, iteration, block, [flip])?;
        self.span(
            StepKind::OracleUnselect,
            iteration,
            block,
            zeros.iter().map(|&q| GateOp::x(q)),
        )
    }

    fn diffuser(&mut self, n: usize, iteration: Option<usize>) -> Result<()> {
        if n < 2 {
            return Err(Error::Spec(format!(
                "diffuser needs at least 2 qubits, got {n}"
            )));
        }
        self.span(StepKind::DiffuseH, iteration, None, (0..n).map(GateOp::h))?;
        self.span(StepKind::DiffuseX, iteration, None, (0..n).map(GateOp::x))?;
        self.span(
            StepKind::DiffuseFlip,
            iteration,
            None,
            [GateOp::mcz(0..n - 1, n - 1)],
        )?;
        self.span(StepKind::DiffuseUnX, iteration, None, (0..n).map(GateOp::x))?;
        self.span(StepKind::DiffuseUnH, iteration, None, (0..n).map(GateOp::h))
    }

    fn new(width: usize) -> Result<Self> {
        Ok(Layout {
            circuit: Circuit::new(width)?,
            steps: Vec::new(),
        })
    }
}

fn grover_layout(spec: &GroverSpec) -> Result<Layout> {
    let mut layout = Layout::new(spec.width())?;
    layout.prologue(spec)?;
    for k in 0..spec.iterations {
        layout.iteration(spec, Some(k))?;
    }
    Ok(layout)
}

impl Layout {
    fn prologue(&mut self, spec: &GroverSpec) -> Result<()> {
        let n = spec.n;
        match spec.style {
            OracleStyle::McxAncilla => {
                self.span(StepKind::Prepare, None, None, [GateOp::x(n)])?;
                self.span(StepKind::Superpose, None, None, (0..=n).map(GateOp::h))
            }
            OracleStyle::MczDirect => {
                self.span(StepKind::Prepare, None, None, [])?;
                self.span(StepKind::Superpose, None, None, (0..n).map(GateOp::h))
            }
        }
    }

    fn iteration(&mut self, spec: &GroverSpec, k: Option<usize>) -> Result<()> {
        for (b, r) in spec.marked.iter().enumerate() {
            self.oracle_block(spec.n, r, spec.style, k, Some(b))?;
        }
        self.diffuser(spec.n, k)
    }
}

/// State preparation of `spec`: ancilla flip (if any) and the Hadamard layer.
pub fn grover_prologue(spec: &GroverSpec) -> Result<Circuit> {
    let mut layout = Layout::new(spec.width())?;
    layout.prologue(spec)?;
    Ok(layout.circuit)
}

/// One oracle-plus-diffuser round of `spec`, at full circuit width.
pub fn grover_iteration(spec: &GroverSpec) -> Result<Circuit> {
    let mut layout = Layout::new(spec.width())?;
    layout.iteration(spec, None)?;
    Ok(layout.circuit)
}

/// Phase oracle flipping the sign of every string in `marked`.
///
/// Each marked string compiles to an X layer on its zero bits, the
/// multi-controlled flip, and the same X layer again. Blocks follow the
/// ascending order of the marked strings. With [`OracleStyle::McxAncilla`] the
/// circuit is one qubit wider and the ancilla (last qubit) is the MCX target.
pub fn compile_phase_oracle(n: usize, marked: &[Bitstring], style: OracleStyle) -> Result<Circuit> {
    let marked = validate_marked(n, marked.iter().cloned())?;
    let mut layout = Layout::new(n + style.ancilla_count())?;
    for r in &marked {
        layout.oracle_block(n, r, style, None, None)?;
    }
    Ok(layout.circuit)
}

/// Reflection about the uniform superposition, up to a global sign.
///
/// The circuit is `H^n X^n MCZ X^n H^n`, which equals `-(2|p><p| - I)` exactly.
pub fn compile_diffuser(n: usize) -> Result<Circuit> {
    let mut layout = Layout::new(n.max(1))?;
    layout.diffuser(n, None)?;
    Ok(layout.circuit)
}

/// The complete Grover circuit: prologue followed by `spec.iterations()`
/// rounds of oracle and diffuser.
pub fn build_grover_circuit(spec: &GroverSpec) -> Result<Circuit> {
    grover_layout(spec).map(|l| l.circuit)
}

/// Labelled op spans of [`build_grover_circuit`], in circuit order.
pub fn grover_steps(spec: &GroverSpec) -> Result<Vec<Step>> {
    grover_layout(spec).map(|l| l.steps)
}

/// Final states of a simulated Grover run.
#[derive(Debug, Clone, PartialEq)]
pub struct GroverRun {
    /// State of the whole register, ancilla included.
    pub full_state: StateVector,
    /// State of the data qubits alone.
    pub data_state: StateVector,
}

/// Simulates the circuit of `spec` from `|0...0>`.
pub fn simulate_grover(spec: &GroverSpec) -> Result<GroverRun> {
    let circuit = build_grover_circuit(spec)?;
    let initial = StateVector::zero_state(circuit.n_qubits())?;
    let full_state = run(&circuit, &initial, false)?.final_state;
    let data_state = data_factor(spec.style, &full_state)?;
    Ok(GroverRun {
        full_state,
        data_state,
    })
}

/// Data-register state of a full-width state for the given style.
pub(crate) fn data_factor(style: OracleStyle, full: &StateVector) -> Result<StateVector> {
    match style {
        OracleStyle::MczDirect => Ok(full.clone()),
        OracleStyle::McxAncilla => full.strip_minus_ancilla(ANCILLA_TOLERANCE),
    }
}
