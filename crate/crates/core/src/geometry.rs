//! Geometry of amplitude amplification.
//!
//! With `N = 2^n` basis states and `m` of them marked, let `|β>` be the uniform
//! superposition over the marked states and `|α>` the uniform superposition over
//! the rest. Starting from `|p>^n = sin θ |β> + cos θ |α>` with
//! `sin θ = sqrt(m / N)`, every oracle-plus-diffuser round rotates the state by
//! `2θ` inside the `(|α>, |β>)` plane, so after `k` rounds the marked
//! probability is `sin²((2k+1)θ)`.
//!
//! The equivalent angle `θ' = π/2 - θ` (so `cos θ' = sqrt(m / N)`) measures the
//! same state from `|β>` instead of `|α>`; both are reported.

use crate::circuit::{
    data_factor, grover_iteration, grover_prologue, run, validate_marked, GroverSpec,
};
use crate::error::{Error, Result};
use crate::statevector::{Amplitude, Bitstring, StateVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

/// Largest `k_max` accepted by [`iteration_report`].
pub const MAX_REPORT_ITERATIONS: usize = 64;

// Probabilities closer than this count as a tie in `optimal_iterations`.
const TIE_TOLERANCE: f64 = 1e-12;

/// Rotation angles of a search over `n` qubits with `m` marked states.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroverAngles {
    /// `sin(theta_sin) = sqrt(m / 2^n)`.
    pub theta_sin: f64,
    /// `cos(theta_paper) = sqrt(m / 2^n)`, i.e. `π/2 - theta_sin`.
    pub theta_paper: f64,
    pub m: usize,
    pub n: usize,
}

fn space_size(n: usize) -> Result<f64> {
    if n == 0 || n > 62 {
        return Err(Error::Spec(format!("qubit count {n} outside 1..=62")));
    }
    Ok((1u64 << n) as f64)
}

pub fn grover_angles(n: usize, m: usize) -> Result<GroverAngles> {
    let size = space_size(n)?;
    if m == 0 || m as f64 >= size {
        return Err(Error::Spec(format!(
            "marked count {m} must satisfy 1 <= m < 2^{n}"
        )));
    }
    let amplitude = (m as f64 / size).sqrt();
    Ok(GroverAngles {
        theta_sin: amplitude.asin(),
        theta_paper: amplitude.acos(),
        m,
        n,
    })
}

/// Closed-form success probability `sin²((2k+1)θ)` after `k` rounds.
pub fn predicted_success(n: usize, m: usize, k: usize) -> Result<f64> {
    let angles = grover_angles(n, m)?;
    Ok(((2 * k + 1) as f64 * angles.theta_sin).sin().powi(2))
}

/// Probability of each individual unmarked state after `k` rounds.
pub fn p_each_unmarked(n: usize, m: usize, k: usize) -> Result<f64> {
    let p = predicted_success(n, m, k)?;
    Ok((1.0 - p) / (space_size(n)? - m as f64))
}

/// Round count maximizing [`predicted_success`].
///
/// Evaluates `round(π/(4θ) - 1/2)` and its two neighbours and keeps the best,
/// preferring the smallest count on ties.
pub fn optimal_iterations(n: usize, m: usize) -> Result<usize> {
    let angles = grover_angles(n, m)?;
    let guess = (PI / (4.0 * angles.theta_sin) - 0.5).round().max(0.0) as usize;
    let mut best = (usize::MAX, f64::NEG_INFINITY);
    for k in guess.saturating_sub(1)..=guess + 1 {
        let p = predicted_success(n, m, k)?;
        if p > best.1 + TIE_TOLERANCE {
            best = (k, p);
        }
    }
    Ok(best.0)
}

/// Coordinates of a state in the orthonormal `(|β>, |α>)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneCoords {
    /// `<β|ψ>`, the component on the uniform superposition over marked states.
    pub a_marked: Amplitude,
    /// `<α|ψ>`, the component on the uniform superposition over unmarked states.
    pub a_unmarked: Amplitude,
    /// Norm of whatever lies outside the plane.
    pub residual_norm: f64,
}

/// Coordinates in the oblique basis `(|p>^n, |β>)`: `ψ ≈ c_uniform |p>^n + c_marked |β>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObliqueCoords {
    pub c_uniform: Amplitude,
    pub c_marked: Amplitude,
}

impl PlaneCoords {
    /// Angle from `|α>` towards `|β>`, in `[0, π)`.
    ///
    /// The global phase is removed using the larger component, so the angle
    /// is only defined modulo π.
    pub fn plane_angle(&self) -> f64 {
        let reference = if self.a_marked.norm() > self.a_unmarked.norm() {
            self.a_marked
        } else {
            self.a_unmarked
        };
        let phase = if reference.norm() > 0.0 {
            (reference / reference.norm()).conj()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let x = (self.a_unmarked * phase).re;
        let y = (self.a_marked * phase).re;
        y.atan2(x).rem_euclid(PI)
    }

    /// Re-expresses the in-plane part over `|p>^n` and `|β>`.
    pub fn oblique(&self, n: usize, m: usize) -> Result<ObliqueCoords> {
        let angles = grover_angles(n, m)?;
        let (s, c) = angles.theta_sin.sin_cos();
        let c_uniform = self.a_unmarked / c;
        Ok(ObliqueCoords {
            c_uniform,
            c_marked: self.a_marked - c_uniform * s,
        })
    }

    pub fn probability_in_plane(&self) -> f64 {
        self.a_marked.norm_sqr() + self.a_unmarked.norm_sqr()
    }
}

fn marked_indices(n: usize, marked: &[Bitstring]) -> Result<Vec<usize>> {
    let marked = validate_marked(n, marked.iter().cloned())?;
    Ok(marked.iter().map(Bitstring::index).collect())
}

/// Projects `state` onto `|β>` and `|α>`.
pub fn plane_decompose(state: &StateVector, marked: &[Bitstring]) -> Result<PlaneCoords> {
    let n = state.n_qubits();
    let indices = marked_indices(n, marked)?;
    let is_marked = |i: usize| indices.binary_search(&i).is_ok();
    let amps = state.amplitudes();
    let m = indices.len() as f64;
    let rest = amps.len() as f64 - m;

    let zero = Complex64::new(0.0, 0.0);
    let (sum_marked, sum_unmarked) =
        amps.iter()
            .enumerate()
            .fold((zero, zero), |(sm, su), (i, a)| {
                if is_marked(i) {
                    (sm + a, su)
                } else {
                    (sm, su + a)
                }
            });
    let a_marked = sum_marked / m.sqrt();
    let a_unmarked = sum_unmarked / rest.sqrt();

    // Residual summed directly; subtracting squared norms would lose ~8 digits.
    let mean_marked = a_marked / m.sqrt();
    let mean_unmarked = a_unmarked / rest.sqrt();
    let residual_norm = amps
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mean = if is_marked(i) {
                mean_marked
            } else {
                mean_unmarked
            };
            (a - mean).norm_sqr()
        })
        .sum::<f64>()
        .sqrt();
    Ok(PlaneCoords {
        a_marked,
        a_unmarked,
        residual_norm,
    })
}

/// One row of an iteration sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IterationRow {
    pub k: usize,
    /// `(2k+1)·theta_sin`.
    pub angle: f64,
    /// Simulated probability of measuring any marked state.
    pub p_marked_total: f64,
    /// Closed-form counterpart of `p_marked_total`.
    pub p_marked_formula: f64,
    /// Simulated probability of each unmarked state (their mean).
    pub p_each_unmarked: f64,
    pub plane: PlaneCoords,
}

/// Marked and per-unmarked probabilities of a data-register state.
fn class_probabilities(state: &StateVector, indices: &[usize]) -> (f64, f64) {
    let probs = state.probabilities();
    let marked: f64 = indices.iter().map(|&i| probs[i]).sum();
    let unmarked: f64 = probs
        .iter()
        .enumerate()
        .filter(|(i, _)| indices.binary_search(i).is_err())
        .map(|(_, p)| p)
        .sum();
    (marked, unmarked / (probs.len() - indices.len()) as f64)
}

/// Simulates `spec` round by round and reports `k = 0..=k_max`.
///
/// `spec.iterations()` is ignored; the sweep length is `k_max`.
pub fn iteration_report(spec: &GroverSpec, k_max: usize) -> Result<Vec<IterationRow>> {
    if k_max > MAX_REPORT_ITERATIONS {
        return Err(Error::Spec(format!(
            "k_max {k_max} exceeds {MAX_REPORT_ITERATIONS}"
        )));
    }
    let (n, m) = (spec.n(), spec.marked_count());
    let angles = grover_angles(n, m)?;
    let indices = marked_indices(n, spec.marked())?;
    let round = grover_iteration(spec)?;
    let mut state = run(
        &grover_prologue(spec)?,
        &StateVector::zero_state(spec.width())?,
        false,
    )?
    .final_state;

    let mut rows = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        if k > 0 {
            state = run(&round, &state, false)?.final_state;
        }
        let data = data_factor(spec.style(), &state)?;
        let (p_marked_total, p_each_unmarked) = class_probabilities(&data, &indices);
        rows.push(IterationRow {
            k,
            angle: (2 * k + 1) as f64 * angles.theta_sin,
            p_marked_total,
            p_marked_formula: predicted_success(n, m, k)?,
            p_each_unmarked,
            plane: plane_decompose(&data, spec.marked())?,
        });
    }
    Ok(rows)
}

/// Probability of one marked string after a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarkedProbability {
    pub bitstring: Bitstring,
    pub probability: f64,
}

/// Everything reported about the final state of a Grover run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunAnalysis {
    pub full_state: StateVector,
    pub data_state: StateVector,
    pub per_marked: Vec<MarkedProbability>,
    pub p_marked_total: f64,
    pub p_marked_formula: f64,
    pub angles: GroverAngles,
    pub plane: PlaneCoords,
    pub oblique: ObliqueCoords,
}

/// Simulates `spec` and analyses the final data-register state.
pub fn analyze_run(spec: &GroverSpec) -> Result<RunAnalysis> {
    let sim = crate::circuit::simulate_grover(spec)?;
    let (n, m) = (spec.n(), spec.marked_count());
    let per_marked = spec
        .marked()
        .iter()
        .map(|b| {
            Ok(MarkedProbability {
                bitstring: b.clone(),
                probability: sim.data_state.probability(b)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let plane = plane_decompose(&sim.data_state, spec.marked())?;
    Ok(RunAnalysis {
        p_marked_total: per_marked.iter().map(|p| p.probability).sum(),
        p_marked_formula: predicted_success(n, m, spec.iterations())?,
        angles: grover_angles(n, m)?,
        oblique: plane.oblique(n, m)?,
        plane,
        per_marked,
        full_state: sim.full_state,
        data_state: sim.data_state,
    })
}

/// Sanity relation between the two angle conventions.
pub fn angles_are_complementary(angles: &GroverAngles, tol: f64) -> bool {
    (angles.theta_sin + angles.theta_paper - FRAC_PI_2).abs() <= tol
}
