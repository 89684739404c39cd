//! 2×2 coin operators.
//!
//! Three families are provided: the Hermitian-unitary reflection
//! `[[α, √(1-α²)], [√(1-α²), -α]]`, the leaking real symmetric coin
//! `[[α₁, α₂], [α₂, -α₁]]` with `α₁² + α₂² ≤ 1`, and the latter with `α₁, α₂`
//! taken from the resonant transfer amplitudes of a dimer whose second site
//! leaks at rate `λ` over a dwell time `τ`.

use num_complex::Complex64;

use crate::dimer::{resonance_amplitudes, Regime};
use crate::linalg::{adjoint2, identity2, max_abs_diff2, mul2, real2, Mat2};
use crate::{Error, Result};

/// Tolerance for recognizing `C†C = I`.
pub const UNITARY_TOL: f64 = 1e-12;
/// Slack on `α₁² + α₂² ≤ 1` for caller-supplied coins.
pub const NORM_SLACK: f64 = 1e-12;
/// Slack on `α₁² + α₂² ≤ 1` for dimer-derived coins.
pub const DIMER_NORM_SLACK: f64 = 1e-9;
/// Relative tolerance on `|λ - 4V|` for the exceptional point.
pub const EXCEPTIONAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoinKind {
    /// Hermitian and unitary, hence an involution.
    HermitianUnitary,
    /// Unitary but not Hermitian (only reachable through [`CoinOp::from_matrix`]).
    Unitary,
    /// Sub-normalized: every application leaks probability.
    NonHermitian,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinOp {
    entries: Mat2,
    kind: CoinKind,
}

fn is_unitary(m: &Mat2) -> bool {
    max_abs_diff2(&mul2(&adjoint2(m), m), &identity2()) <= UNITARY_TOL
}

fn is_hermitian(m: &Mat2) -> bool {
    max_abs_diff2(m, &adjoint2(m)) <= UNITARY_TOL
}

impl CoinOp {
    /// Wraps an arbitrary 2×2 matrix and classifies it.
    pub fn from_matrix(entries: Mat2) -> Self {
        let kind = match (is_unitary(&entries), is_hermitian(&entries)) {
            (true, true) => CoinKind::HermitianUnitary,
            (true, false) => CoinKind::Unitary,
            _ => CoinKind::NonHermitian,
        };
        CoinOp { entries, kind }
    }

    pub fn entries(&self) -> &Mat2 {
        &self.entries
    }

    pub fn kind(&self) -> CoinKind {
        self.kind
    }

    /// `α₁`, the top-left entry of the real symmetric families.
    pub fn alpha1(&self) -> f64 {
        self.entries[0][0].re
    }

    /// `α₂`, the off-diagonal entry of the real symmetric families.
    pub fn alpha2(&self) -> f64 {
        self.entries[0][1].re
    }

    /// Squared norm of `C|0_c⟩`; equals the per-step norm factor whenever
    /// `C†C ∝ I`, which holds for every family built here.
    pub fn norm_factor(&self) -> f64 {
        self.entries[0][0].norm_sqr() + self.entries[1][0].norm_sqr()
    }

    pub fn apply(&self, c0: Complex64, c1: Complex64) -> (Complex64, Complex64) {
        let m = &self.entries;
        (m[0][0] * c0 + m[0][1] * c1, m[1][0] * c0 + m[1][1] * c1)
    }
}

/// `[[α, √(1-α²)], [√(1-α²), -α]]`; `α = 1/√2` is the Hadamard coin.
pub fn hermitian_coin(alpha: f64) -> Result<CoinOp> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidCoin(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    let beta = (1.0 - alpha * alpha).max(0.0).sqrt();
    Ok(CoinOp {
        entries: real2([[alpha, beta], [beta, -alpha]]),
        kind: CoinKind::HermitianUnitary,
    })
}

fn symmetric_coin(alpha1: f64, alpha2: f64) -> CoinOp {
    let norm = alpha1 * alpha1 + alpha2 * alpha2;
    let kind = if (norm - 1.0).abs() <= UNITARY_TOL {
        CoinKind::HermitianUnitary
    } else {
        CoinKind::NonHermitian
    };
    CoinOp {
        entries: real2([[alpha1, alpha2], [alpha2, -alpha1]]),
        kind,
    }
}

/// `[[α₁, α₂], [α₂, -α₁]]` with `α₁, α₂ ≥ 0` and `α₁² + α₂² ≤ 1`.
///
/// The ordering `α₂ < α₁` is not required.
pub fn nonhermitian_coin(alpha1: f64, alpha2: f64) -> Result<CoinOp> {
    if !(alpha1 >= 0.0) || !(alpha2 >= 0.0) {
        return Err(Error::InvalidCoin(format!(
            "alpha1 and alpha2 must be non-negative, got ({alpha1}, {alpha2})"
        )));
    }
    let norm = alpha1 * alpha1 + alpha2 * alpha2;
    if norm > 1.0 + NORM_SLACK {
        return Err(Error::InvalidCoin(format!(
            "alpha1^2 + alpha2^2 = {norm} exceeds 1"
        )));
    }
    Ok(symmetric_coin(alpha1, alpha2))
}

/// Regime of the dimer coin from `λ` against the exceptional value `4V`.
pub fn dimer_regime(v: f64, lambda: f64) -> Regime {
    let ep = 4.0 * v;
    if (lambda - ep).abs() <= EXCEPTIONAL_TOL * ep.max(1.0) {
        Regime::Exceptional
    } else if lambda < ep {
        Regime::Coherent
    } else {
        Regime::Incoherent
    }
}

/// Coin from the resonant dimer with `γ_l = 0`, `γ_m = λ` and dwell time `τ`:
///
/// `α₁ = e^{-λτ/4}[cos Ω₀τ - (λ/4Ω₀) sin Ω₀τ]`, `α₂ = e^{-λτ/4}(V/Ω₀) sin Ω₀τ`,
/// `Ω₀ = √(4V² - λ²/4)`, with hyperbolic functions past the exceptional point
/// `λ = 4V` and the `Ω₀ → 0` limit on it. `α₁` may be negative.
///
/// Past `λ ≈ 4.62 V` the hyperbolic branch grows faster than the envelope
/// decays, so for long dwell times the pair becomes super-normalized; that
/// case is reported as [`Error::CoinNormExceeded`].
pub fn dimer_coin(v: f64, lambda: f64, tau: f64) -> Result<CoinOp> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(Error::InvalidCoin(format!("V must be positive, got {v}")));
    }
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidCoin(format!("lambda must be non-negative, got {lambda}")));
    }
    if !(tau >= 0.0) || !tau.is_finite() {
        return Err(Error::InvalidCoin(format!("tau must be non-negative, got {tau}")));
    }
    let half = 0.5 * lambda;
    let (alpha1, alpha2) = resonance_amplitudes(dimer_regime(v, lambda), v, half, half, tau);
    let norm = alpha1 * alpha1 + alpha2 * alpha2;
    if norm > 1.0 + DIMER_NORM_SLACK {
        return Err(Error::CoinNormExceeded {
            alpha1,
            alpha2,
            norm,
        });
    }
    Ok(symmetric_coin(alpha1, alpha2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn hadamard() {
        let c = hermitian_coin(FRAC_1_SQRT_2).unwrap();
        let h = real2([[FRAC_1_SQRT_2, FRAC_1_SQRT_2], [FRAC_1_SQRT_2, -FRAC_1_SQRT_2]]);
        assert!(max_abs_diff2(c.entries(), &h) < 1e-15);
        assert_eq!(c.kind(), CoinKind::HermitianUnitary);
    }

    #[test]
    fn hermitian_endpoints() {
        assert_eq!(
            hermitian_coin(1.0).unwrap().entries(),
            &real2([[1.0, 0.0], [0.0, -1.0]])
        );
        assert_eq!(
            hermitian_coin(0.0).unwrap().entries(),
            &real2([[0.0, 1.0], [1.0, 0.0]])
        );
        assert!(hermitian_coin(1.1).is_err());
        assert!(hermitian_coin(-0.1).is_err());
    }

    #[test]
    fn hermitian_coin_is_involution() {
        for k in 0..=20 {
            let c = hermitian_coin(k as f64 / 20.0).unwrap();
            let sq = mul2(c.entries(), c.entries());
            assert!(max_abs_diff2(&sq, &identity2()) < 1e-12);
        }
    }

    #[test]
    fn nonhermitian_basic() {
        let c = nonhermitian_coin(0.6, 0.3).unwrap();
        assert_eq!(c.entries(), &real2([[0.6, 0.3], [0.3, -0.6]]));
        assert_eq!(c.kind(), CoinKind::NonHermitian);
        assert!((c.norm_factor() - 0.45).abs() < 1e-15);
        let e = c.entries();
        assert_eq!(e[0][1], e[1][0]);
    }

    #[test]
    fn nonhermitian_unit_norm_is_unitary() {
        let c = nonhermitian_coin(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap();
        assert_eq!(c.kind(), CoinKind::HermitianUnitary);
    }

    #[test]
    fn nonhermitian_rejects() {
        assert!(nonhermitian_coin(0.9, 0.8).is_err());
        assert!(nonhermitian_coin(-0.1, 0.2).is_err());
        assert!(nonhermitian_coin(0.1, f64::NAN).is_err());
    }

    #[test]
    fn dimer_zero_time() {
        let c = dimer_coin(1.0, 0.0, 0.0).unwrap();
        assert_eq!(c.alpha1(), 1.0);
        assert_eq!(c.alpha2(), 0.0);
    }

    #[test]
    fn dimer_lossless() {
        for k in 0..30 {
            let tau = 0.1 * k as f64;
            let c = dimer_coin(1.0, 0.0, tau).unwrap();
            assert!((c.alpha1() - (2.0 * tau).cos()).abs() < 1e-14);
            assert!((c.alpha2() - 0.5 * (2.0 * tau).sin()).abs() < 1e-14);
            assert!(c.norm_factor() <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn dimer_exceptional_point() {
        for k in 0..20 {
            let tau = 0.25 * k as f64;
            let c = dimer_coin(1.0, 4.0, tau).unwrap();
            let env = (-tau).exp();
            assert!((c.alpha1() - env * (1.0 - tau)).abs() < 1e-15);
            assert!((c.alpha2() - env * tau).abs() < 1e-15);
        }
    }

    #[test]
    fn dimer_rejects_bad_inputs() {
        assert!(dimer_coin(0.0, 1.0, 1.0).is_err());
        assert!(dimer_coin(1.0, -1.0, 1.0).is_err());
        assert!(dimer_coin(1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn dimer_deep_incoherent_is_super_normalized() {
        match dimer_coin(1.0, 8.0, 1.0) {
            Err(Error::CoinNormExceeded { norm, .. }) => assert!(norm > 1.2),
            other => panic!("expected CoinNormExceeded, got {other:?}"),
        }
    }

    #[test]
    fn from_matrix_classifies() {
        assert_eq!(CoinOp::from_matrix(identity2()).kind(), CoinKind::HermitianUnitary);
        let i = Complex64::new(0.0, 1.0);
        let z = Complex64::default();
        let phase = [[i, z], [z, Complex64::new(1.0, 0.0)]];
        assert_eq!(CoinOp::from_matrix(phase).kind(), CoinKind::Unitary);
        assert_eq!(
            CoinOp::from_matrix(real2([[0.5, 0.0], [0.0, 0.5]])).kind(),
            CoinKind::NonHermitian
        );
    }
}
