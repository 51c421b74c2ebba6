//! Seeded projective measurement in the computational basis.
//!
//! Shots are drawn by inverse-CDF lookup (binary search over the cumulative
//! `|a_i|^2` array) using ChaCha8. Shots are split into fixed-size chunks; chunk
//! `c` draws from the ChaCha8 stream `c` of the seed, so a histogram depends only
//! on `(state, shots, seed)` and never on the thread count. Counts are not
//! promised to be identical across releases of this crate.

use crate::error::{Error, Result};
use crate::statevector::{Bitstring, StateVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Shots drawn from one ChaCha8 stream.
pub const SHOT_CHUNK: u64 = 1 << 16;

/// Outcome counts of a measurement experiment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Histogram {
    pub shots: u64,
    pub seed: u64,
    counts: BTreeMap<Bitstring, u64>,
}

impl Histogram {
    pub fn count(&self, bits: &Bitstring) -> u64 {
        self.counts.get(bits).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<Bitstring, u64> {
        &self.counts
    }

    /// Entries sorted by descending count, then by label.
    pub fn sorted(&self) -> Vec<(Bitstring, u64)> {
        let mut v: Vec<_> = self.counts.iter().map(|(b, &c)| (b.clone(), c)).collect();
        v.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        v
    }

    /// Counts of qubit `q` reading 0 and 1.
    pub fn marginal(&self, q: usize) -> [u64; 2] {
        let mut out = [0, 0];
        for (b, &c) in &self.counts {
            out[usize::from(b.bit(q))] += c;
        }
        out
    }

    /// Empirical frequency of `bits`.
    pub fn frequency(&self, bits: &Bitstring) -> f64 {
        self.count(bits) as f64 / self.shots as f64
    }
}

/// Measures every qubit of `state` `shots` times.
pub fn measure_all(state: &StateVector, shots: u64, seed: u64) -> Result<Histogram> {
    measure_leading(state, state.n_qubits(), shots, seed)
}

/// Measures `state` and keeps only the first `keep` qubits of each outcome;
/// the trailing qubits (ancillas) are measured and marginalized.
pub fn measure_leading(
    state: &StateVector,
    keep: usize,
    shots: u64,
    seed: u64,
) -> Result<Histogram> {
    if shots == 0 {
        return Err(Error::Spec("shots must be at least 1".into()));
    }
    let n = state.n_qubits();
    if keep == 0 || keep > n {
        return Err(Error::Spec(format!("cannot keep {keep} of {n} qubits")));
    }
    let cdf: Vec<f64> = state
        .amplitudes()
        .iter()
        .scan(0.0, |acc, a| {
            *acc += a.norm_sqr();
            Some(*acc)
        })
        .collect();
    let total = *cdf.last().expect("state is never empty");

    let chunks = shots.div_ceil(SHOT_CHUNK);
    let draw_chunk = |c: u64| -> BTreeMap<usize, u64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(c);
        let len = SHOT_CHUNK.min(shots - c * SHOT_CHUNK);
        let mut local = BTreeMap::new();
        for _ in 0..len {
            let u = rng.random::<f64>() * total;
            let i = cdf.partition_point(|&x| x <= u).min(cdf.len() - 1);
            *local.entry(i).or_insert(0) += 1;
        }
        local
    };
    let merge = |mut a: BTreeMap<usize, u64>, b: BTreeMap<usize, u64>| {
        for (k, v) in b {
            *a.entry(k).or_insert(0) += v;
        }
        a
    };

    #[cfg(feature = "parallel")]
    let by_index = (0..chunks)
        .into_par_iter()
        .map(draw_chunk)
        .reduce(BTreeMap::new, merge);
    #[cfg(not(feature = "parallel"))]
    let by_index = (0..chunks).map(draw_chunk).fold(BTreeMap::new(), merge);

    let mut counts = BTreeMap::new();
    for (i, c) in by_index {
        *counts
            .entry(Bitstring::from_index(i >> (n - keep), keep))
            .or_insert(0) += c;
    }
    Ok(Histogram {
        shots,
        seed,
        counts,
    })
}

/// `[floor(μ - zσ), ceil(μ + zσ)]` for a binomial count with `μ = shots·p` and
/// `σ = sqrt(shots·p·(1-p))`, clamped to `[0, shots]`.
///
/// Panics unless `0 <= p <= 1`, `shots >= 1` and `z > 0`.
pub fn binomial_interval(p: f64, shots: u64, z: f64) -> (u64, u64) {
    assert!((0.0..=1.0).contains(&p), "probability {p} outside [0, 1]");
    assert!(shots >= 1 && z > 0.0);
    let n = shots as f64;
    let mean = n * p;
    let sigma = (n * p * (1.0 - p)).sqrt();
    let lo = (mean - z * sigma).floor().clamp(0.0, n) as u64;
    let hi = (mean + z * sigma).ceil().clamp(0.0, n) as u64;
    (lo, hi)
}
