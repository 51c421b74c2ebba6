//! Exact statevector simulation and geometric analysis of Grover search.
//!
//! The crate compiles marked-bitstring phase oracles and diffusers into small
//! gate circuits ([`circuit`]), runs them on dense statevectors
//! ([`statevector`]), tracks the state in the marked/unmarked plane and
//! predicts success probabilities in closed form ([`geometry`]), and samples
//! measurement histograms ([`sampling`]).
//!
//! Qubit 0 is always the leftmost character of a ket label and the most
//! significant bit of an amplitude index. Qiskit uses the opposite order.
//!
//! The `parallel` feature (on by default) lets the amplitude kernels, dense
//! unitary expansion and shot sampling use rayon. Results are bitwise identical
//! with and without it.

pub mod circuit;
pub mod error;
pub mod geometry;
pub mod kernel;
pub mod sampling;
pub mod statevector;

pub use circuit::{Circuit, GateOp, GroverSpec, OracleStyle};
pub use error::{Error, Result};
pub use statevector::{Amplitude, Bitstring, ControlledBase, OneQubitGate, StateVector};
