#![allow(dead_code)]

use grover_kit::{Bitstring, Circuit, GateOp, GroverSpec, OracleStyle, StateVector};
use num_complex::Complex64;
use rand::seq::index::sample;
use rand::Rng;
use std::f64::consts::SQRT_2;

/// Linear combination of product kets, e.g. `ket(&[(1.0, "ppm"), (-1.0, "11m")])`.
/// The result must already be normalized.
pub fn ket(terms: &[(f64, &str)]) -> StateVector {
    let width = terms[0].1.len();
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << width];
    for (coef, label) in terms {
        let p = StateVector::product(label).unwrap();
        for (a, b) in amps.iter_mut().zip(p.amplitudes()) {
            *a += b * coef;
        }
    }
    StateVector::from_amplitudes(amps).expect("fixture is not normalized")
}

/// States after each step of the 2-data-qubit walkthrough (marked `01`, ancilla last).
pub fn two_qubit_walkthrough() -> Vec<StateVector> {
    vec![
        ket(&[(1.0, "001")]),
        ket(&[(1.0, "ppm")]),
        ket(&[(1.0, "ppm")]),
        ket(&[(1.0, "ppm"), (-1.0, "11m")]),
        ket(&[(1.0, "ppm"), (-1.0, "01m")]),
        ket(&[(1.0, "00m"), (-1.0, "pmm")]),
        ket(&[(1.0, "11m"), (1.0, "pmm")]),
        ket(&[(1.0, "pmm")]),
        ket(&[(-1.0, "pmm")]),
        ket(&[(-1.0, "01m")]),
    ]
}

/// States after each step of the 3-qubit direct-oracle walkthrough, first round (marked `001`).
pub fn three_qubit_first_round() -> Vec<StateVector> {
    let r = 1.0 / SQRT_2;
    vec![
        ket(&[(1.0, "000")]),
        ket(&[(1.0, "ppp")]),
        ket(&[(1.0, "ppp")]),
        ket(&[(1.0, "ppp"), (-r, "111")]),
        ket(&[(1.0, "ppp"), (-r, "001")]),
        ket(&[(1.0, "000"), (-r, "ppm")]),
        ket(&[(1.0, "111"), (r, "ppm")]),
        ket(&[(r, "ppm"), (-0.5, "111")]),
        ket(&[(-r, "ppm"), (-0.5, "000")]),
        ket(&[(-r, "001"), (-0.5, "ppp")]),
    ]
}

/// States after each oracle and diffuser step of the second round of the same circuit.
pub fn three_qubit_second_round() -> Vec<StateVector> {
    let r = 1.0 / SQRT_2;
    let b = 3.0 / (2.0 * SQRT_2);
    vec![
        ket(&[(-r, "111"), (-0.5, "ppp")]),
        ket(&[(-0.5, "ppp"), (b, "111")]),
        ket(&[(-0.5, "ppp"), (b, "001")]),
        ket(&[(-0.5, "000"), (b, "ppm")]),
        ket(&[(-0.5, "111"), (-b, "ppm")]),
        ket(&[(-b, "ppm"), (-0.25, "111")]),
        ket(&[(b, "ppm"), (-0.25, "000")]),
        ket(&[(b, "001"), (-0.25, "ppp")]),
    ]
}

pub fn bits(s: &str) -> Bitstring {
    s.parse().unwrap()
}

/// Random marked set of size `1..2^n`.
pub fn random_marked(rng: &mut impl Rng, n: usize) -> Vec<Bitstring> {
    let size = 1usize << n;
    let m = rng.random_range(1..size);
    sample(rng, size, m)
        .into_iter()
        .map(|i| Bitstring::from_index(i, n))
        .collect()
}

pub fn random_spec(
    rng: &mut impl Rng,
    max_n: usize,
    max_k: usize,
    style: OracleStyle,
) -> GroverSpec {
    let n = rng.random_range(2..=max_n);
    let k = rng.random_range(0..=max_k);
    GroverSpec::new(n, random_marked(rng, n), k, style).unwrap()
}

pub fn random_op(rng: &mut impl Rng, n: usize) -> GateOp {
    let target = rng.random_range(0..n);
    if n == 1 || rng.random_bool(0.6) {
        return match rng.random_range(0..3) {
            0 => GateOp::h(target),
            1 => GateOp::x(target),
            _ => GateOp::z(target),
        };
    }
    let others: Vec<usize> = (0..n).filter(|&q| q != target).collect();
    let count = rng.random_range(1..=others.len());
    let controls: Vec<usize> = sample(rng, others.len(), count)
        .into_iter()
        .map(|i| others[i])
        .collect();
    if rng.random_bool(0.5) {
        GateOp::mcx(controls, target)
    } else {
        GateOp::mcz(controls, target)
    }
}

pub fn random_circuit(rng: &mut impl Rng, n: usize, max_ops: usize) -> Circuit {
    let len = rng.random_range(0..=max_ops);
    Circuit::from_ops(n, (0..len).map(|_| random_op(rng, n))).unwrap()
}

pub fn random_state(rng: &mut impl Rng, n: usize) -> StateVector {
    let amps = (0..1usize << n)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    StateVector::normalized(amps).unwrap()
}

/// Matrix-vector product against a dense unitary.
pub fn apply_dense(u: &nalgebra::DMatrix<Complex64>, s: &StateVector) -> Vec<Complex64> {
    let v = nalgebra::DVector::from_column_slice(s.amplitudes());
    (u * v).iter().copied().collect()
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
