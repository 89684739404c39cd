//! Trace-distance non-Markovianity witness on the position-reduced state.
//!
//! `D(T, τ) = D[ρ(τ'), ρ(τ)] - D[ρ(T+τ'), ρ(T+τ)]`, where `ρ(x)` is the
//! position-reduced density matrix after a short walk with the dimer coin at
//! dwell time `x`. Negative values mean the distinguishability grew over the
//! lapse `T`, i.e. information flowed back.

use super::density::{reduced_position_density, trace_distance, DensityMatrix};
use crate::coin::dimer_coin;
use crate::hilbert::{new_state, InitialStateKind};
use crate::sweep;
use crate::walk::{evolve, ShiftKind};
use crate::Result;

pub const DEFAULT_TAU_PRIME: f64 = 1e-5;
/// Walk length used by [`nm_witness`].
pub const WITNESS_STEPS: usize = 2;

/// `ρ_p` after `steps` generalized-shift steps from `|0_c, 0_p⟩` with `dimer_coin(v, λ, x)`.
pub fn position_density_at(v: f64, lambda: f64, x: f64, steps: usize) -> Result<DensityMatrix> {
    let coin = dimer_coin(v, lambda, x)?;
    let start = new_state(InitialStateKind::Localized, steps.max(1))?;
    let state = evolve(&start, &coin, ShiftKind::Generalized, steps)?.final_state;
    Ok(reduced_position_density(&state))
}

/// `D(T, τ)` for a walk of `steps` steps.
pub fn nm_witness_steps(
    v: f64,
    lambda: f64,
    lapse: f64,
    tau: f64,
    tau_prime: f64,
    steps: usize,
) -> Result<f64> {
    let rho = |x| position_density_at(v, lambda, x, steps);
    let early = trace_distance(&rho(tau_prime)?, &rho(tau)?)?;
    let late = trace_distance(&rho(lapse + tau_prime)?, &rho(lapse + tau)?)?;
    Ok(early - late)
}

/// `D(T, τ)` on the two-step walk.
pub fn nm_witness(v: f64, lambda: f64, lapse: f64, tau: f64, tau_prime: f64) -> Result<f64> {
    nm_witness_steps(v, lambda, lapse, tau, tau_prime, WITNESS_STEPS)
}

/// `D(T, τ)` over the grid `lapses × taus`, row-major with `T` as the outer index.
pub fn nm_witness_grid(
    v: f64,
    lambda: f64,
    lapses: &[f64],
    taus: &[f64],
    tau_prime: f64,
) -> Result<Vec<f64>> {
    let cells: Vec<(f64, f64)> = lapses
        .iter()
        .flat_map(|&t| taus.iter().map(move |&tau| (t, tau)))
        .collect();
    sweep::try_map(&cells, |&(t, tau)| nm_witness(v, lambda, t, tau, tau_prime))
}
