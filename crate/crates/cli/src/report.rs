//! The machine-readable report emitted by every command.
//!
//! The JSON layout is described by `docs/report.schema.json`; bump
//! [`REPORT_FORMAT_VERSION`] whenever a field changes meaning or disappears.

use grover_kit::OracleStyle;
use serde::{Deserialize, Serialize};

use crate::args::BitOrder;

pub const REPORT_FORMAT_VERSION: &str = "1";

/// Complex number as `[re, im]`.
pub type Pair = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub command: String,
    pub spec: SpecEcho,
    pub result: ReportResult,
    pub versions: Versions,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Versions {
    pub tool: String,
    pub format: String,
    pub circuit_format: String,
}

impl Versions {
    pub fn current() -> Self {
        Versions {
            tool: env!("CARGO_PKG_VERSION").to_string(),
            format: REPORT_FORMAT_VERSION.to_string(),
            circuit_format: grover_kit::circuit::TEXT_FORMAT_VERSION.to_string(),
        }
    }
}

/// The inputs a report was produced from. Fields a command does not use are omitted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecEcho {
    pub bit_order: BitOrder,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marked: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub style: Option<OracleStyle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kmax: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl SpecEcho {
    pub fn new(bit_order: BitOrder) -> Self {
        SpecEcho {
            bit_order,
            n: None,
            marked: None,
            m: None,
            iterations: None,
            style: None,
            kmax: None,
            source: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportResult {
    Run(RunResult),
    Sweep(SweepResult),
    Predict(PredictResult),
    Sample(SampleResult),
    Circuit(CircuitResult),
    Load(LoadResult),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Probability {
    pub bitstring: String,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunResult {
    /// Simulated qubits, ancilla included.
    pub width: usize,
    pub per_marked: Vec<Probability>,
    pub p_marked_total: f64,
    pub p_marked_formula: f64,
    pub theta_sin: f64,
    pub theta_paper: f64,
    /// `(2k+1)·theta_sin`.
    pub angle: f64,
    pub plane: PlaneReport,
    pub oblique: ObliqueReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStep>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaneReport {
    pub a_marked: Pair,
    pub a_unmarked: Pair,
    pub residual_norm: f64,
    /// Angle from the unmarked towards the marked axis, modulo π.
    pub angle: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObliqueReport {
    pub c_uniform: Pair,
    pub c_marked: Pair,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceStep {
    /// Walkthrough step number, `1.0` .. `3.5`.
    pub step: String,
    pub label: String,
    /// One-based Grover round; absent for the initialization steps.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub round: Option<usize>,
    /// Index into the sorted marked set for oracle steps.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block: Option<usize>,
    /// Half-open op range `[start, end)` in the compiled circuit.
    pub ops: [usize; 2],
    /// Non-zero amplitudes (at the printed precision) over the full register.
    pub amplitudes: Vec<BasisAmplitude>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisAmplitude {
    pub bitstring: String,
    pub amplitude: Pair,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

/// Also the CSV row of `sweep`, so field order is the column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepRow {
    pub k: usize,
    pub angle: f64,
    pub p_marked_sim: f64,
    pub p_marked_formula: f64,
    pub p_each_unmarked: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PredictResult {
    pub iterations: usize,
    pub optimal: bool,
    pub theta_sin: f64,
    pub theta_paper: f64,
    pub p_success: f64,
    pub p_each_unmarked: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleResult {
    pub shots: u64,
    pub seed: u64,
    /// Sorted by descending count, then by bitstring.
    pub counts: Vec<Count>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Count {
    pub bitstring: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitResult {
    pub qubits: usize,
    pub ops: usize,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoadResult {
    pub qubits: usize,
    pub ops: usize,
    /// Non-zero (at the printed precision) outcome probabilities, in basis order.
    pub probabilities: Vec<Probability>,
}
