//! In-place amplitude kernels.
//!
//! Every kernel touches each amplitude with the same arithmetic no matter how
//! the work is split, so sequential and parallel execution produce bitwise
//! identical results. Parallel execution needs the `parallel` feature; without
//! it [`Exec::Parallel`] silently runs the sequential loop.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Registers shorter than this run sequentially under [`Exec::auto`].
pub const PAR_THRESHOLD: usize = 1 << 14;

// Below this stride the inner pair loop of a block stays sequential.
#[cfg(feature = "parallel")]
const PAR_INNER_STRIDE: usize = 1 << 12;

/// Execution strategy for a kernel call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Exec {
    /// Whether this build can actually run in parallel.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Picks a strategy for a buffer of `len` amplitudes.
    pub fn auto(len: usize) -> Self {
        if Self::parallel_available() && len >= PAR_THRESHOLD {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Visits every pair `(i, i | stride)` with bit `stride` clear in `i`.
///
/// `stride` must be a power of two smaller than `amps.len()`.
pub fn for_each_pair<F>(amps: &mut [Complex64], stride: usize, exec: Exec, f: F)
where
    F: Fn(usize, &mut Complex64, &mut Complex64) + Sync + Send,
{
    debug_assert!(stride.is_power_of_two() && stride < amps.len());
    let block = stride << 1;
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            amps.par_chunks_mut(block)
                .enumerate()
                .for_each(|(c, chunk)| {
                    let base = c * block;
                    let (lo, hi) = chunk.split_at_mut(stride);
                    if stride >= PAR_INNER_STRIDE {
                        lo.par_iter_mut()
                            .zip(hi.par_iter_mut())
                            .enumerate()
                            .for_each(|(j, (a, b))| f(base + j, a, b));
                    } else {
                        for (j, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                            f(base + j, a, b);
                        }
                    }
                });
        }
        _ => {
            for (c, chunk) in amps.chunks_mut(block).enumerate() {
                let base = c * block;
                let (lo, hi) = chunk.split_at_mut(stride);
                for (j, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                    f(base + j, a, b);
                }
            }
        }
    }
}

/// Visits every amplitude together with its basis index.
pub fn for_each_indexed<F>(amps: &mut [Complex64], exec: Exec, f: F)
where
    F: Fn(usize, &mut Complex64) + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => amps.par_iter_mut().enumerate().for_each(|(i, a)| f(i, a)),
        _ => amps.iter_mut().enumerate().for_each(|(i, a)| f(i, a)),
    }
}

pub fn hadamard(amps: &mut [Complex64], mask: usize, exec: Exec) {
    for_each_pair(amps, mask, exec, |_, a, b| {
        let (x, y) = (*a, *b);
        *a = (x + y) * FRAC_1_SQRT_2;
        *b = (x - y) * FRAC_1_SQRT_2;
    });
}

pub fn pauli_x(amps: &mut [Complex64], mask: usize, exec: Exec) {
    for_each_pair(amps, mask, exec, |_, a, b| std::mem::swap(a, b));
}

pub fn pauli_z(amps: &mut [Complex64], mask: usize, exec: Exec) {
    for_each_pair(amps, mask, exec, |_, _, b| *b = -*b);
}

/// X on `target_mask`, conditioned on every bit of `control_mask` being set.
pub fn controlled_x(amps: &mut [Complex64], control_mask: usize, target_mask: usize, exec: Exec) {
    for_each_pair(amps, target_mask, exec, |i, a, b| {
        if i & control_mask == control_mask {
            std::mem::swap(a, b);
        }
    });
}

/// Sign flip on every basis state where all bits of `control_mask | target_mask` are set.
pub fn controlled_z(amps: &mut [Complex64], control_mask: usize, target_mask: usize, exec: Exec) {
    let all = control_mask | target_mask;
    for_each_indexed(amps, exec, |i, a| {
        if i & all == all {
            *a = -*a;
        }
    });
}
