//! Two-site dissipative exciton dimer.
//!
//! `H = E_l B_l†B_l + E_m B_m†B_m + V (B_l†B_m + B_m†B_l) - iγ_l B_l†B_l - iγ_m B_m†B_m`
//! with `ħ = 1`. This module provides the resolvent `G⁻¹(E)`, the closed-form
//! transfer probabilities, the regime on either side of the exceptional point
//! and a matrix-exponential propagator used as an independent oracle.
//!
//! The general transfer probability and the resonant closed forms use
//! different frequency conventions: at `E₀ = 0`, `γ = 0` the former gives
//! `sin²(Vt)` while the latter gives `¼ sin²(2Vt)`. Both are implemented as
//! written; the coin family in [`crate::coin`] is built on the resonant form.

use num_complex::Complex64;

use crate::linalg::{expm2, Mat2};
use crate::{Error, Result};

/// Default regulator `η` for [`greens_inverse`].
pub const DEFAULT_ETA: f64 = 1e-9;

/// Relative tolerance on `|V - γ̄_d/2|` for the exceptional point.
pub const EXCEPTIONAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DimerParams {
    pub e_l: f64,
    pub e_m: f64,
    pub gamma_l: f64,
    pub gamma_m: f64,
    pub v: f64,
}

impl DimerParams {
    pub fn new(e_l: f64, e_m: f64, gamma_l: f64, gamma_m: f64, v: f64) -> Result<Self> {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::InvalidDimer(format!(
                "tunneling energy V must be positive, got {v}"
            )));
        }
        if !(gamma_l >= 0.0) || !(gamma_m >= 0.0) {
            return Err(Error::InvalidDimer(format!(
                "leak rates must be non-negative, got gamma_l = {gamma_l}, gamma_m = {gamma_m}"
            )));
        }
        if !e_l.is_finite() || !e_m.is_finite() || !gamma_l.is_finite() || !gamma_m.is_finite() {
            return Err(Error::InvalidDimer("parameters must be finite".into()));
        }
        Ok(DimerParams {
            e_l,
            e_m,
            gamma_l,
            gamma_m,
            v,
        })
    }

    /// Degenerate sites with a single leaky site: `γ_l = 0`, `γ_m = λ`.
    pub fn resonant(v: f64, lambda: f64) -> Result<Self> {
        Self::new(0.0, 0.0, 0.0, lambda, v)
    }

    /// `E₀ = E_m - E_l`
    pub fn e0(&self) -> f64 {
        self.e_m - self.e_l
    }

    /// `γ_d = (γ_l + γ_m)/2`
    pub fn gamma_d(&self) -> f64 {
        0.5 * (self.gamma_l + self.gamma_m)
    }

    /// `γ̄_d = (γ_m - γ_l)/2`
    pub fn gamma_bar(&self) -> f64 {
        0.5 * (self.gamma_m - self.gamma_l)
    }

    /// `Ω = √(4V² + (E₀ - iγ̄_d)²)`, principal branch.
    pub fn omega(&self) -> Complex64 {
        let z = Complex64::new(self.e0(), -self.gamma_bar());
        (Complex64::new(4.0 * self.v * self.v, 0.0) + z * z).sqrt()
    }

    /// `Ω₀ = √(4V² - γ̄_d²)` in the coherent regime, `None` otherwise.
    pub fn omega0(&self) -> Option<f64> {
        let d = 4.0 * self.v * self.v - self.gamma_bar().powi(2);
        (d >= 0.0).then(|| d.sqrt())
    }

    /// Effective non-Hermitian Hamiltonian `[[E_l - iγ_l/2, V], [V, E_m - iγ_m/2]]`.
    pub fn effective_hamiltonian(&self) -> Mat2 {
        [
            [
                Complex64::new(self.e_l, -0.5 * self.gamma_l),
                Complex64::new(self.v, 0.0),
            ],
            [
                Complex64::new(self.v, 0.0),
                Complex64::new(self.e_m, -0.5 * self.gamma_m),
            ],
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `V > γ̄_d/2`: damped oscillations.
    Coherent,
    /// `V = γ̄_d/2`, `Ω₀ = 0`: the two eigenvalues coalesce.
    Exceptional,
    /// `V < γ̄_d/2`: overdamped transfer.
    Incoherent,
}

fn regime_of(v: f64, gamma_bar: f64) -> Regime {
    let half = 0.5 * gamma_bar.abs();
    if (v - half).abs() <= EXCEPTIONAL_TOL * v.max(1.0) {
        Regime::Exceptional
    } else if v > half {
        Regime::Coherent
    } else {
        Regime::Incoherent
    }
}

/// Regime of a resonant dimer (the `Ω₀` criterion assumes `E₀ = 0`).
pub fn classify_regime(params: &DimerParams) -> Regime {
    regime_of(params.v, params.gamma_bar())
}

/// `G⁻¹(E) = [[E - E_l + iη + iγ_l/2, -V], [-V, E - E_m + iη + iγ_m/2]]`.
pub fn greens_inverse(energy: f64, params: &DimerParams, eta: f64) -> Mat2 {
    let v = Complex64::new(-params.v, 0.0);
    [
        [
            Complex64::new(energy - params.e_l, eta + 0.5 * params.gamma_l),
            v,
        ],
        [
            v,
            Complex64::new(energy - params.e_m, eta + 0.5 * params.gamma_m),
        ],
    ]
}

/// The resolvent `G(E)`; exists for every real `E` when `η > 0`.
pub fn greens_function(energy: f64, params: &DimerParams, eta: f64) -> Option<Mat2> {
    crate::linalg::inverse2(&greens_inverse(energy, params, eta))
}

/// `P_lm(t) = (2V²/|Ω|²) e^{-γ_d t} (cosh Ω_i t - cos Ω_r t)` for arbitrary detuning.
pub fn transfer_prob_general(params: &DimerParams, t: f64) -> f64 {
    let omega = params.omega();
    let (wr, wi) = (omega.re, omega.im);
    let envelope = (-params.gamma_d() * t).exp();
    let v2 = params.v * params.v;
    if omega.norm() * t < 1e-4 {
        // (cosh x - cos y)/|Ω|² with x = Ω_i t, y = Ω_r t, to fourth order
        let series = 0.5 * t * t + (wi * wi - wr * wr) * t.powi(4) / 24.0;
        return 2.0 * v2 * envelope * series;
    }
    2.0 * v2 / omega.norm_sqr() * envelope * ((wi * t).cosh() - (wr * t).cos())
}

/// Resonant transfer amplitudes `(a_ll, a_lm)`, whose squares are `(P_ll, P_lm)`.
///
/// Coherent: `a_ll = e^{-γ_d t/2}[cos Ω₀t - (γ̄_d/2Ω₀) sin Ω₀t]`,
/// `a_lm = e^{-γ_d t/2}(V/Ω₀) sin Ω₀t`. Incoherent swaps in `cosh`/`sinh` with
/// `Ω₀ = √(γ̄_d² - 4V²)`. At the exceptional point the `Ω₀ → 0` limit is used.
pub(crate) fn resonance_amplitudes(
    regime: Regime,
    v: f64,
    gamma_d: f64,
    gamma_bar: f64,
    t: f64,
) -> (f64, f64) {
    let envelope = (-0.5 * gamma_d * t).exp();
    match regime {
        Regime::Coherent => {
            let w = (4.0 * v * v - gamma_bar * gamma_bar).sqrt();
            let (s, c) = (w * t).sin_cos();
            (
                envelope * (c - gamma_bar / (2.0 * w) * s),
                envelope * v / w * s,
            )
        }
        Regime::Incoherent => {
            let w = (gamma_bar * gamma_bar - 4.0 * v * v).sqrt();
            let (s, c) = ((w * t).sinh(), (w * t).cosh());
            (
                envelope * (c - gamma_bar / (2.0 * w) * s),
                envelope * v / w * s,
            )
        }
        Regime::Exceptional => (
            envelope * (1.0 - 0.5 * gamma_bar * t),
            envelope * v * t,
        ),
    }
}

/// Resonant (`E₀ = 0`) probabilities `(P_ll, P_lm)` for an excitation starting on site `l`.
pub fn resonance_probs(v: f64, gamma_l: f64, gamma_m: f64, t: f64) -> (f64, f64) {
    let gamma_d = 0.5 * (gamma_l + gamma_m);
    let gamma_bar = 0.5 * (gamma_m - gamma_l);
    let (a_ll, a_lm) = resonance_amplitudes(regime_of(v, gamma_bar), v, gamma_d, gamma_bar, t);
    (a_ll * a_ll, a_lm * a_lm)
}

/// `exp(-i H_eff t)` by 2×2 spectral decomposition (Jordan form at the exceptional point).
pub fn propagator_oracle(params: &DimerParams, t: f64) -> Mat2 {
    let h = params.effective_hamiltonian();
    let s = Complex64::new(0.0, -t);
    expm2(&h.map(|row| row.map(|x| x * s)))
}

/// `(P_ll, P_lm) = (|U_ll|², |U_ml|²)` from [`propagator_oracle`].
pub fn oracle_probs(params: &DimerParams, t: f64) -> (f64, f64) {
    let u = propagator_oracle(params, t);
    (u[0][0].norm_sqr(), u[1][0].norm_sqr())
}
