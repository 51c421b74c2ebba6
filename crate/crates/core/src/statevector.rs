//! Dense complex statevectors and gate application.
//!
//! Qubit 0 is the leftmost character of a ket label and the most significant
//! bit of the amplitude index: `|10100>` lives at index `0b10100 = 20`. This
//! is the reverse of Qiskit's little-endian ordering, so histograms copied from
//! Qiskit output must be reversed before they are compared with ours.

use crate::error::{Error, Result};
use crate::kernel::{self, Exec};
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

/// One complex amplitude of a statevector.
pub type Amplitude = Complex64;

/// Largest register the dense representation accepts.
pub const MAX_QUBITS: usize = 26;

/// Tolerance on `sum |a_i|^2 = 1` when a state is built from raw amplitudes.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// A computational basis label, qubit 0 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitstring(Vec<bool>);

impl Bitstring {
    pub fn new(bits: Vec<bool>) -> Self {
        Bitstring(bits)
    }

    /// The `n`-bit label of basis index `index`.
    pub fn from_index(index: usize, n: usize) -> Self {
        Bitstring((0..n).map(|q| (index >> (n - 1 - q)) & 1 == 1).collect())
    }

    /// Basis index of this label (qubit 0 is the most significant bit).
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Value of qubit `q`.
    pub fn bit(&self, q: usize) -> bool {
        self.0[q]
    }

    /// The same label read in the opposite bit order.
    pub fn reversed(&self) -> Self {
        Bitstring(self.0.iter().rev().copied().collect())
    }

    /// The first `n` qubits of this label.
    pub fn prefix(&self, n: usize) -> Self {
        Bitstring(self.0[..n].to_vec())
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Bitstring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Spec("empty bitstring".into()));
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Spec(format!(
                    "bitstring `{s}` contains `{other}`; only 0 and 1 are allowed"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Bitstring)
    }
}

impl Serialize for Bitstring {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Bitstring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Single-qubit gates supported by the simulator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OneQubitGate {
    H,
    X,
    Z,
}

/// Base gate of a multi-controlled operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ControlledBase {
    X,
    Z,
}

/// Exact dense statevector over `n_qubits` qubits.
///
/// Gates are applied exactly; the vector is never renormalized, so any norm
/// drift is floating-point error and is checked against tolerances in tests.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Amplitude>,
}

fn check_width(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::Size(format!(
            "register width {n} outside 1..={MAX_QUBITS}"
        )));
    }
    Ok(())
}

impl StateVector {
    /// `|0...0>` on `n` qubits.
    pub fn zero_state(n: usize) -> Result<Self> {
        check_width(n)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n_qubits: n, amps })
    }

    /// The computational basis state labelled `bits`.
    pub fn basis(bits: &Bitstring) -> Result<Self> {
        let mut s = Self::zero_state(bits.len())?;
        s.amps[0] = Complex64::new(0.0, 0.0);
        s.amps[bits.index()] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// Uniform superposition `|p>^n`.
    pub fn uniform(n: usize) -> Result<Self> {
        check_width(n)?;
        let a = Complex64::new((1usize << n) as f64, 0.0).sqrt().inv();
        Ok(StateVector {
            n_qubits: n,
            amps: vec![a; 1 << n],
        })
    }

    /// Product state from a label over `0`, `1`, `p` (`|+>`) and `m` (`|->`),
    /// e.g. `"ppm"`.
    pub fn product(label: &str) -> Result<Self> {
        let n = label.chars().count();
        check_width(n)?;
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let factors = label
            .chars()
            .map(|c| match c {
                '0' => Ok([one, zero]),
                '1' => Ok([zero, one]),
                'p' => Ok([h, h]),
                'm' => Ok([h, -h]),
                other => Err(Error::Spec(format!(
                    "unknown ket symbol `{other}` in `{label}`"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        let amps = (0..1usize << n)
            .map(|i| {
                factors
                    .iter()
                    .enumerate()
                    .fold(one, |acc, (q, f)| acc * f[(i >> (n - 1 - q)) & 1])
            })
            .collect();
        Ok(StateVector { n_qubits: n, amps })
    }

    /// Wraps raw amplitudes. The length must be a power of two and the vector
    /// must already be normalized within [`NORM_TOLERANCE`].
    pub fn from_amplitudes(amps: Vec<Amplitude>) -> Result<Self> {
        let s = Self::from_amplitudes_unchecked_norm(amps)?;
        let norm = s.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Spec(format!(
                "state has squared norm {norm}, expected 1"
            )));
        }
        Ok(s)
    }

    /// Wraps raw amplitudes after scaling them to unit norm.
    pub fn normalized(amps: Vec<Amplitude>) -> Result<Self> {
        let mut s = Self::from_amplitudes_unchecked_norm(amps)?;
        let norm = s.norm_sqr().sqrt();
        if norm == 0.0 {
            return Err(Error::Spec("cannot normalize the zero vector".into()));
        }
        s.amps.iter_mut().for_each(|a| *a /= norm);
        Ok(s)
    }

    fn from_amplitudes_unchecked_norm(amps: Vec<Amplitude>) -> Result<Self> {
        if !amps.len().is_power_of_two() || amps.len() < 2 {
            return Err(Error::Size(format!(
                "{} amplitudes is not 2^n for n >= 1",
                amps.len()
            )));
        }
        let n = amps.len().trailing_zeros() as usize;
        check_width(n)?;
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Spec("amplitudes must be finite".into()));
        }
        Ok(StateVector { n_qubits: n, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Amplitude> {
        self.amps
    }

    pub fn amplitude(&self, bits: &Bitstring) -> Result<Amplitude> {
        self.check_label(bits)?;
        Ok(self.amps[bits.index()])
    }

    pub fn probability(&self, bits: &Bitstring) -> Result<f64> {
        self.amplitude(bits).map(|a| a.norm_sqr())
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn check_label(&self, bits: &Bitstring) -> Result<()> {
        if bits.len() != self.n_qubits {
            return Err(Error::Shape {
                expected: self.n_qubits,
                found: bits.len(),
            });
        }
        Ok(())
    }

    /// Bit mask of qubit `q` inside an amplitude index.
    fn mask(&self, q: usize) -> usize {
        1 << (self.n_qubits - 1 - q)
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.n_qubits {
            return Err(Error::Index(format!(
                "qubit {q} out of range for {} qubits",
                self.n_qubits
            )));
        }
        Ok(())
    }

    pub fn apply_single_in_place(&mut self, gate: OneQubitGate, target: usize) -> Result<()> {
        self.check_qubit(target)?;
        let mask = self.mask(target);
        let exec = Exec::auto(self.amps.len());
        match gate {
            OneQubitGate::H => kernel::hadamard(&mut self.amps, mask, exec),
            OneQubitGate::X => kernel::pauli_x(&mut self.amps, mask, exec),
            OneQubitGate::Z => kernel::pauli_z(&mut self.amps, mask, exec),
        }
        Ok(())
    }

    /// Returns a copy of this state with `gate` applied to `target`.
    pub fn apply_single(&self, gate: OneQubitGate, target: usize) -> Result<StateVector> {
        let mut out = self.clone();
        out.apply_single_in_place(gate, target)?;
        Ok(out)
    }

    pub fn apply_multicontrolled_in_place(
        &mut self,
        base: ControlledBase,
        controls: &[usize],
        target: usize,
    ) -> Result<()> {
        validate_controls(self.n_qubits, controls, target)?;
        let control_mask = controls.iter().fold(0, |m, &q| m | self.mask(q));
        let target_mask = self.mask(target);
        let exec = Exec::auto(self.amps.len());
        match base {
            ControlledBase::X => {
                kernel::controlled_x(&mut self.amps, control_mask, target_mask, exec)
            }
            ControlledBase::Z => {
                kernel::controlled_z(&mut self.amps, control_mask, target_mask, exec)
            }
        }
        Ok(())
    }

    /// Returns a copy of this state with the multi-controlled `base` gate applied.
    /// The gate fires only on basis states whose control bits are all 1.
    pub fn apply_multicontrolled(
        &self,
        base: ControlledBase,
        controls: &[usize],
        target: usize,
    ) -> Result<StateVector> {
        let mut out = self.clone();
        out.apply_multicontrolled_in_place(base, controls, target)?;
        Ok(out)
    }

    /// `<self|other> = sum conj(self_i) * other_i`.
    pub fn inner_product(&self, other: &StateVector) -> Result<Amplitude> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::Shape {
                expected: self.n_qubits,
                found: other.n_qubits,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// True iff `||self - c * other|| <= tol` for some unit-modulus `c`.
    /// States of different widths are never equal.
    pub fn equal_up_to_global_phase(&self, other: &StateVector, tol: f64) -> bool {
        let Ok(overlap) = other.inner_product(self) else {
            return false;
        };
        // The best c is the phase of <other|self>; any phase will do when they are orthogonal.
        let c = if overlap.norm() > 0.0 {
            overlap / overlap.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let dist: f64 = self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - c * b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        dist <= tol
    }

    /// Kronecker product `self ⊗ other`; `self` supplies the leading qubits.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        check_width(self.n_qubits + other.n_qubits)?;
        let amps = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| a * b))
            .collect();
        Ok(StateVector {
            n_qubits: self.n_qubits + other.n_qubits,
            amps,
        })
    }

    /// Splits `data ⊗ |->` into its data factor, where `|->` sits on the last qubit.
    ///
    /// Fails with [`Error::Internal`] when the state does not factor within `tol`;
    /// the ancilla is only ever touched by X/H gates and as a phase-kickback target.
    pub fn strip_minus_ancilla(&self, tol: f64) -> Result<StateVector> {
        if self.n_qubits < 2 {
            return Err(Error::Size(
                "need at least one data qubit and an ancilla".into(),
            ));
        }
        let data: Vec<Amplitude> = self
            .amps
            .chunks_exact(2)
            .map(|pair| (pair[0] - pair[1]) * FRAC_1_SQRT_2)
            .collect();
        let residual: f64 = self
            .amps
            .chunks_exact(2)
            .zip(&data)
            .map(|(pair, d)| {
                let a = d * FRAC_1_SQRT_2;
                (pair[0] - a).norm_sqr() + (pair[1] + a).norm_sqr()
            })
            .sum::<f64>()
            .sqrt();
        if residual > tol {
            return Err(Error::Internal(format!(
                "ancilla is not in |-> (residual {residual:.3e})"
            )));
        }
        Ok(StateVector {
            n_qubits: self.n_qubits - 1,
            amps: data,
        })
    }
}

/// Checks a multi-controlled gate against a register of `n` qubits.
pub fn validate_controls(n: usize, controls: &[usize], target: usize) -> Result<()> {
    if controls.is_empty() {
        return Err(Error::Index(
            "multi-controlled gate needs at least one control".into(),
        ));
    }
    if target >= n {
        return Err(Error::Index(format!(
            "target {target} out of range for {n} qubits"
        )));
    }
    for (i, &c) in controls.iter().enumerate() {
        if c >= n {
            return Err(Error::Index(format!(
                "control {c} out of range for {n} qubits"
            )));
        }
        if c == target {
            return Err(Error::Index(format!(
                "qubit {c} is both control and target"
            )));
        }
        if controls[..i].contains(&c) {
            return Err(Error::Index(format!("control {c} listed twice")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &StateVector, b: &StateVector, tol: f64) -> bool {
        a.n_qubits == b.n_qubits
            && a.amps
                .iter()
                .zip(&b.amps)
                .all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn zero_state_layout() {
        let s = StateVector::zero_state(1).unwrap();
        assert_eq!(s.amplitudes(), &[c(1.0, 0.0), c(0.0, 0.0)]);
        let s = StateVector::zero_state(5).unwrap();
        assert_eq!(s.len(), 32);
        assert_eq!(s.amplitudes()[0], c(1.0, 0.0));
        assert!(s.amplitudes()[1..].iter().all(|a| *a == c(0.0, 0.0)));
        assert!(matches!(StateVector::zero_state(0), Err(Error::Size(_))));
        assert!(matches!(StateVector::zero_state(27), Err(Error::Size(_))));
    }

    #[test]
    fn bitstring_is_msb_first() {
        let r: Bitstring = "10100".parse().unwrap();
        assert_eq!(r.index(), 20);
        assert_eq!(Bitstring::from_index(20, 5), r);
        assert_eq!(r.to_string(), "10100");
        assert_eq!(r.reversed().to_string(), "00101");
        assert!("10a".parse::<Bitstring>().is_err());
        assert!("".parse::<Bitstring>().is_err());
        let s = StateVector::basis(&r).unwrap();
        assert_eq!(s.amplitudes()[20], c(1.0, 0.0));
    }

    #[test]
    fn hadamard_basic_transformations() {
        let zero = StateVector::product("0").unwrap();
        let p = StateVector::product("p").unwrap();
        let m = StateVector::product("m").unwrap();
        assert!(close(
            &zero.apply_single(OneQubitGate::H, 0).unwrap(),
            &p,
            1e-15
        ));
        assert!(close(
            &p.apply_single(OneQubitGate::H, 0).unwrap(),
            &zero,
            1e-15
        ));
        assert!(close(
            &p.apply_single(OneQubitGate::X, 0).unwrap(),
            &p,
            1e-15
        ));
        let neg_m =
            StateVector::from_amplitudes(m.amplitudes().iter().map(|a| -a).collect()).unwrap();
        assert!(close(
            &m.apply_single(OneQubitGate::X, 0).unwrap(),
            &neg_m,
            1e-15
        ));
        assert!(matches!(
            zero.apply_single(OneQubitGate::H, 1),
            Err(Error::Index(_))
        ));
    }

    #[test]
    fn qubit_zero_is_leftmost() {
        let s = StateVector::zero_state(3)
            .unwrap()
            .apply_single(OneQubitGate::X, 0)
            .unwrap();
        assert_eq!(s.probability(&"100".parse().unwrap()).unwrap(), 1.0);
    }

    #[test]
    fn multicontrolled_examples() {
        let s = StateVector::basis(&"110".parse().unwrap()).unwrap();
        let out = s
            .apply_multicontrolled(ControlledBase::X, &[0, 1], 2)
            .unwrap();
        assert_eq!(out, StateVector::basis(&"111".parse().unwrap()).unwrap());

        let ones = StateVector::basis(&"11111".parse().unwrap()).unwrap();
        let out = ones
            .apply_multicontrolled(ControlledBase::Z, &[0, 1, 2, 3], 4)
            .unwrap();
        assert_eq!(out.amplitudes()[31], c(-1.0, 0.0));

        let s = StateVector::basis(&"11110".parse().unwrap()).unwrap();
        let out = s
            .apply_multicontrolled(ControlledBase::Z, &[0, 1, 2, 3], 4)
            .unwrap();
        assert_eq!(out, s);
    }

    #[test]
    fn multicontrolled_rejects_bad_indices() {
        let s = StateVector::zero_state(3).unwrap();
        let bad: [(&[usize], usize); 4] = [(&[], 2), (&[0, 2], 2), (&[0, 3], 2), (&[1, 1], 2)];
        for (controls, target) in bad {
            assert!(matches!(
                s.apply_multicontrolled(ControlledBase::X, controls, target),
                Err(Error::Index(_))
            ));
        }
    }

    #[test]
    fn inner_product_examples() {
        let u = StateVector::uniform(5).unwrap();
        assert_abs_diff_eq!(u.inner_product(&u).unwrap().re, 1.0, epsilon = 1e-12);
        let r = StateVector::basis(&"10100".parse().unwrap()).unwrap();
        let ov = r.inner_product(&u).unwrap();
        assert_abs_diff_eq!(ov.re, 1.0 / 32f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(ov.im, 0.0);
        let other = StateVector::zero_state(4).unwrap();
        assert!(matches!(u.inner_product(&other), Err(Error::Shape { .. })));
    }

    #[test]
    fn global_phase_equality() {
        let psi = StateVector::product("pm1").unwrap();
        let neg =
            StateVector::from_amplitudes(psi.amplitudes().iter().map(|a| -a).collect()).unwrap();
        assert!(psi.equal_up_to_global_phase(&neg, 1e-12));
        let i_psi = StateVector::from_amplitudes(
            psi.amplitudes().iter().map(|a| a * c(0.0, 1.0)).collect(),
        )
        .unwrap();
        assert!(psi.equal_up_to_global_phase(&i_psi, 1e-12));
        let zero = StateVector::product("0").unwrap();
        let one = StateVector::product("1").unwrap();
        assert!(!zero.equal_up_to_global_phase(&one, 1e-6));
        assert!(!zero.equal_up_to_global_phase(&psi, 1e-6));
    }

    #[test]
    fn product_and_tensor_agree() {
        let a = StateVector::product("01").unwrap();
        let m = StateVector::product("m").unwrap();
        assert_eq!(a.tensor(&m).unwrap(), StateVector::product("01m").unwrap());
    }

    #[test]
    fn strip_ancilla_roundtrip_and_failure() {
        let data = StateVector::product("p1").unwrap();
        let full = data.tensor(&StateVector::product("m").unwrap()).unwrap();
        let back = full.strip_minus_ancilla(1e-12).unwrap();
        assert!(close(&back, &data, 1e-15));
        let bad = StateVector::product("p10").unwrap();
        assert!(matches!(
            bad.strip_minus_ancilla(1e-10),
            Err(Error::Internal(_))
        ));
    }

    #[test]
    fn from_amplitudes_validation() {
        assert!(StateVector::from_amplitudes(vec![c(1.0, 0.0); 3]).is_err());
        assert!(StateVector::from_amplitudes(vec![c(1.0, 0.0), c(1.0, 0.0)]).is_err());
        assert!(StateVector::from_amplitudes(vec![c(f64::NAN, 0.0), c(0.0, 0.0)]).is_err());
        let s = StateVector::normalized(vec![c(3.0, 0.0), c(0.0, 4.0)]).unwrap();
        assert_abs_diff_eq!(s.norm_sqr(), 1.0, epsilon = 1e-15);
    }

    fn arb_state(max_n: usize) -> impl Strategy<Value = StateVector> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1 << n)
                .prop_filter_map("nonzero", |v| {
                    StateVector::normalized(v.into_iter().map(|(r, i)| c(r, i)).collect()).ok()
                })
        })
    }

    fn arb_gate() -> impl Strategy<Value = OneQubitGate> {
        prop_oneof![
            Just(OneQubitGate::H),
            Just(OneQubitGate::X),
            Just(OneQubitGate::Z)
        ]
    }

    proptest! {
        #[test]
        fn single_gates_are_involutions(s in arb_state(6), g in arb_gate(), t in 0usize..6) {
            let t = t % s.n_qubits();
            let once = s.apply_single(g, t).unwrap();
            prop_assert!((once.norm_sqr() - 1.0).abs() < 1e-12);
            let twice = once.apply_single(g, t).unwrap();
            prop_assert!(close(&twice, &s, 1e-12));
        }

        #[test]
        fn controlled_z_is_a_sign_pattern(s in arb_state(6), seed in any::<u64>()) {
            let n = s.n_qubits();
            prop_assume!(n >= 2);
            let target = (seed as usize) % n;
            let controls: Vec<usize> = (0..n)
                .filter(|&q| q != target && (seed >> (8 + q)) & 1 == 1)
                .collect();
            prop_assume!(!controls.is_empty());
            let out = s.apply_multicontrolled(ControlledBase::Z, &controls, target).unwrap();
            for i in 0..s.len() {
                let bits = Bitstring::from_index(i, n);
                let fires = bits.bit(target) && controls.iter().all(|&q| bits.bit(q));
                let expected = if fires { -s.amplitudes()[i] } else { s.amplitudes()[i] };
                prop_assert_eq!(out.amplitudes()[i], expected);
            }
        }

        #[test]
        fn gates_are_linear(
            a in arb_state(4),
            seed in any::<u64>(),
            alpha in (-1.0f64..1.0, -1.0f64..1.0),
            beta in (-1.0f64..1.0, -1.0f64..1.0),
            g in arb_gate(),
        ) {
            let n = a.n_qubits();
            let b = StateVector::normalized(
                (0..a.len())
                    .map(|i| c(((seed >> (i % 60)) & 7) as f64 - 3.5, (i as f64).sin()))
                    .collect(),
            ).unwrap();
            let (alpha, beta) = (c(alpha.0, alpha.1), c(beta.0, beta.1));
            let combined: Vec<_> = a.amplitudes().iter().zip(b.amplitudes())
                .map(|(x, y)| alpha * x + beta * y).collect();
            let Ok(mix) = StateVector::normalized(combined) else { return Ok(()) };
            let scale = mix.amplitudes().iter().zip(a.amplitudes()).zip(b.amplitudes())
                .find_map(|((m, x), y)| {
                    let raw = alpha * x + beta * y;
                    (raw.norm() > 1e-6).then(|| m / raw)
                }).unwrap();
            let t = (seed as usize) % n;
            let lhs = mix.apply_single(g, t).unwrap();
            let ga = a.apply_single(g, t).unwrap();
            let gb = b.apply_single(g, t).unwrap();
            for i in 0..a.len() {
                let rhs = scale * (alpha * ga.amplitudes()[i] + beta * gb.amplitudes()[i]);
                prop_assert!((lhs.amplitudes()[i] - rhs).norm() < 1e-12);
            }
        }
    }
}
