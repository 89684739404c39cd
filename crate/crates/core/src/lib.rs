//! Discrete-time quantum walks on a line with non-Hermitian coins.
//!
//! The walker lives in `H_p ⊗ H_c` (position lattice times a two-level coin).
//! One step applies a 2×2 coin at every site and then a shift. Coins may be
//! unitary, or real symmetric and sub-normalized so that every step leaks a
//! fixed fraction of the total probability. The leaking family is obtained
//! from the transfer amplitudes of a dissipative two-site exciton dimer.
//!
//! Module map:
//!
//! - [`hilbert`]: walk states, norms and position distributions
//! - [`coin`]: coin operators (Hermitian, abstract non-Hermitian, dimer-derived)
//! - [`dimer`]: the two-site dissipative Hamiltonian and its transfer probabilities
//! - [`walk`]: shifts, single steps and multi-step evolution
//! - [`analysis`]: reduced density matrices, entropy, trace distance, measurement
//! - [`cli`]: named experiments, parameter sweeps and CSV/JSON output
//!
//! Units follow `ħ = 1`; times are in inverse energy units.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod coin;
pub mod dimer;
mod error;
pub mod hilbert;
pub mod linalg;
pub mod sweep;
pub mod walk;

pub use error::{Error, Result};
