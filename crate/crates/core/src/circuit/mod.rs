//! Gate-level circuits: the op IR, execution with optional tracing, and a
//! dense-matrix view used to cross-check the simulator.

mod grover;
mod text;

pub use grover::{
    build_grover_circuit, compile_diffuser, compile_phase_oracle, grover_iteration,
    grover_prologue, grover_steps, simulate_grover, GroverRun, GroverSpec, OracleStyle, Step,
    StepKind,
};
pub use text::FORMAT_VERSION as TEXT_FORMAT_VERSION;

pub(crate) use grover::{data_factor, validate_marked};

use crate::error::{Error, Result};
use crate::statevector::{validate_controls, ControlledBase, OneQubitGate, StateVector};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Widest circuit [`dense_unitary`] will expand.
pub const MAX_DENSE_QUBITS: usize = 10;

/// One gate of a circuit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GateOp {
    Single {
        gate: OneQubitGate,
        target: usize,
    },
    MultiControlled {
        base: ControlledBase,
        controls: Vec<usize>,
        target: usize,
    },
}

impl GateOp {
    pub fn h(target: usize) -> Self {
        GateOp::Single {
            gate: OneQubitGate::H,
            target,
        }
    }

    pub fn x(target: usize) -> Self {
        GateOp::Single {
            gate: OneQubitGate::X,
            target,
        }
    }

    pub fn z(target: usize) -> Self {
        GateOp::Single {
            gate: OneQubitGate::Z,
            target,
        }
    }

    /// Multi-controlled X; controls are stored in ascending order.
    pub fn mcx(controls: impl IntoIterator<Item = usize>, target: usize) -> Self {
        Self::controlled(ControlledBase::X, controls, target)
    }

    /// Multi-controlled Z; controls are stored in ascending order.
    pub fn mcz(controls: impl IntoIterator<Item = usize>, target: usize) -> Self {
        Self::controlled(ControlledBase::Z, controls, target)
    }

    fn controlled(
        base: ControlledBase,
        controls: impl IntoIterator<Item = usize>,
        target: usize,
    ) -> Self {
        let mut controls: Vec<usize> = controls.into_iter().collect();
        controls.sort_unstable();
        GateOp::MultiControlled {
            base,
            controls,
            target,
        }
    }

    /// Checks the op against a register of `n_qubits`.
    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        match self {
            GateOp::Single { target, .. } if *target >= n_qubits => Err(Error::Index(format!(
                "target {target} out of range for {n_qubits} qubits"
            ))),
            GateOp::Single { .. } => Ok(()),
            GateOp::MultiControlled {
                controls, target, ..
            } => validate_controls(n_qubits, controls, *target),
        }
    }

    /// Applies the op to `state` in place.
    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        match self {
            GateOp::Single { gate, target } => state.apply_single_in_place(*gate, *target),
            GateOp::MultiControlled {
                base,
                controls,
                target,
            } => state.apply_multicontrolled_in_place(*base, controls, *target),
        }
    }
}

/// An ordered gate program on a fixed number of qubits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    n_qubits: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > crate::statevector::MAX_QUBITS {
            return Err(Error::Size(format!(
                "circuit width {n_qubits} is not supported"
            )));
        }
        Ok(Circuit {
            n_qubits,
            ops: Vec::new(),
        })
    }

    pub fn from_ops(n_qubits: usize, ops: impl IntoIterator<Item = GateOp>) -> Result<Self> {
        let mut c = Self::new(n_qubits)?;
        for op in ops {
            c.push(op)?;
        }
        Ok(c)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn push(&mut self, op: GateOp) -> Result<&mut Self> {
        op.validate(self.n_qubits)?;
        self.ops.push(op);
        Ok(self)
    }

    /// Appends every op of `other`, which may be narrower than `self`.
    pub fn append(&mut self, other: &Circuit) -> Result<&mut Self> {
        for op in &other.ops {
            self.push(op.clone())?;
        }
        Ok(self)
    }

    /// Parses the circuit text format.
    pub fn parse(src: &str) -> Result<Self> {
        text::parse(src)
    }

    /// Renders the circuit text format, including the header comments.
    pub fn dump(&self) -> String {
        text::dump(self)
    }
}

/// State after one op during a traced run.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub op_index: usize,
    pub state: StateVector,
}

/// Result of [`run`].
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub final_state: StateVector,
    /// One snapshot per op, present only for traced runs.
    pub snapshots: Option<Vec<Snapshot>>,
}

/// Executes `circuit` on a copy of `initial`.
pub fn run(circuit: &Circuit, initial: &StateVector, trace: bool) -> Result<RunOutput> {
    if initial.n_qubits() != circuit.n_qubits {
        return Err(Error::Shape {
            expected: circuit.n_qubits,
            found: initial.n_qubits(),
        });
    }
    let mut state = initial.clone();
    let mut snapshots = trace.then(|| Vec::with_capacity(circuit.len()));
    for (op_index, op) in circuit.ops.iter().enumerate() {
        op.apply(&mut state)?;
        if let Some(snaps) = snapshots.as_mut() {
            snaps.push(Snapshot {
                op_index,
                state: state.clone(),
            });
        }
    }
    Ok(RunOutput {
        final_state: state,
        snapshots,
    })
}

/// State at the end of each labelled span of ops.
///
/// An empty span repeats the state reached before it, so the output always
/// has one entry per span.
pub fn group_snapshots<'a>(
    initial: &'a StateVector,
    snapshots: &'a [Snapshot],
    spans: impl IntoIterator<Item = Range<usize>>,
) -> Vec<&'a StateVector> {
    spans
        .into_iter()
        .map(|span| {
            if span.end == 0 {
                initial
            } else {
                &snapshots[span.end - 1].state
            }
        })
        .collect()
}

/// The full `2^n x 2^n` matrix of `circuit`; column `i` is the image of basis state `i`.
pub fn dense_unitary(circuit: &Circuit) -> Result<DMatrix<Complex64>> {
    let n = circuit.n_qubits;
    if n > MAX_DENSE_QUBITS {
        return Err(Error::Size(format!(
            "dense expansion limited to {MAX_DENSE_QUBITS} qubits, circuit has {n}"
        )));
    }
    let dim = 1usize << n;
    let column = |i: usize| -> Result<Vec<Complex64>> {
        let mut basis = vec![Complex64::new(0.0, 0.0); dim];
        basis[i] = Complex64::new(1.0, 0.0);
        let state = StateVector::from_amplitudes(basis)?;
        Ok(run(circuit, &state, false)?.final_state.into_amplitudes())
    };
    #[cfg(feature = "parallel")]
    let columns: Vec<Vec<Complex64>> = (0..dim)
        .into_par_iter()
        .map(column)
        .collect::<Result<_>>()?;
    #[cfg(not(feature = "parallel"))]
    let columns: Vec<Vec<Complex64>> = (0..dim).map(column).collect::<Result<_>>()?;
    Ok(DMatrix::from_iterator(
        dim,
        dim,
        columns.into_iter().flatten(),
    ))
}
