mod common;

use common::{close, expm_series, rng};
use num_complex::Complex64;
use rand::Rng;

use nhwalk::coin::{dimer_coin, dimer_regime};
use nhwalk::dimer::{
    classify_regime, greens_function, oracle_probs, propagator_oracle, resonance_probs,
    transfer_prob_general, DimerParams, Regime, DEFAULT_ETA,
};
use nhwalk::linalg::max_abs_diff2;

fn scaled(params: &DimerParams, t: f64) -> nhwalk::linalg::Mat2 {
    let s = Complex64::new(0.0, -t);
    params.effective_hamiltonian().map(|row| row.map(|x| x * s))
}

#[test]
fn propagator_matches_series_exponential() {
    let mut r = rng(23);
    for _ in 0..200 {
        let p = DimerParams::new(
            r.random_range(-2.0..2.0),
            r.random_range(-2.0..2.0),
            r.random_range(0.0..3.0),
            r.random_range(0.0..3.0),
            r.random_range(0.1..2.0),
        )
        .unwrap();
        let t = r.random_range(0.0..5.0);
        let diff = max_abs_diff2(&propagator_oracle(&p, t), &expm_series(&scaled(&p, t)));
        assert!(diff < 1e-10, "{p:?} t={t}: {diff}");
    }
}

#[test]
fn propagator_at_the_defective_point() {
    for v in [0.5, 1.0, 2.0] {
        let p = DimerParams::resonant(v, 4.0 * v).unwrap();
        assert_eq!(classify_regime(&p), Regime::Exceptional);
        for t in [0.0, 0.1, 1.0, 3.0, 10.0] {
            let diff = max_abs_diff2(&propagator_oracle(&p, t), &expm_series(&scaled(&p, t)));
            assert!(diff < 1e-10, "v={v} t={t}: {diff}");
        }
    }
}

#[test]
fn general_transfer_probability_matches_oracle() {
    let mut r = rng(29);
    for _ in 0..200 {
        let p = DimerParams::new(
            r.random_range(-2.0..2.0),
            r.random_range(-2.0..2.0),
            r.random_range(0.0..3.0),
            r.random_range(0.0..3.0),
            r.random_range(0.1..2.0),
        )
        .unwrap();
        let t = r.random_range(0.0..5.0);
        let got = transfer_prob_general(&p, t);
        let (_, expect) = oracle_probs(&p, t);
        assert!(close(got, expect, 1e-10 * expect.max(1.0)), "{p:?} t={t}: {got} vs {expect}");
    }
}

#[test]
fn general_transfer_probability_near_zero_time() {
    let p = DimerParams::resonant(1.0, 0.7).unwrap();
    for t in [0.0, 1e-9, 1e-6, 1e-5] {
        let (_, expect) = oracle_probs(&p, t);
        assert!(close(transfer_prob_general(&p, t), expect, 1e-15));
    }
}

#[test]
fn resonance_formulas_agree_with_oracle_at_short_times() {
    let t = 1e-4;
    for lambda in [0.0, 0.5, 1.0, 2.0, 3.9, 4.0, 4.1, 6.0] {
        let (pll, plm) = resonance_probs(1.0, 0.0, lambda, t);
        let (oll, olm) = oracle_probs(&DimerParams::resonant(1.0, lambda).unwrap(), t);
        assert!(((pll - oll) / oll).abs() < 1e-3, "lambda={lambda}");
        assert!(((plm - olm) / olm).abs() < 1e-3, "lambda={lambda}");
    }
}

#[test]
fn resonance_transfer_differs_from_exact_at_finite_time() {
    let t = std::f64::consts::FRAC_PI_4;
    let (_, plm) = resonance_probs(1.0, 0.0, 0.0, t);
    let (_, exact) = oracle_probs(&DimerParams::resonant(1.0, 0.0).unwrap(), t);
    assert!(close(plm, 0.25, 1e-12));
    assert!(close(exact, 0.5, 1e-12));
    assert!(close(exact, t.sin().powi(2), 1e-12));
}

#[test]
fn greens_function_is_the_resolvent() {
    let p = DimerParams::new(0.3, -0.2, 0.4, 1.1, 0.8).unwrap();
    for e in [-3.0, -0.5, 0.0, 0.25, 2.0] {
        let g = greens_function(e, &p, DEFAULT_ETA).unwrap();
        // G(E) = (E + iη - H_eff)^{-1}
        let h = p.effective_hamiltonian();
        let mut a = [[Complex64::default(); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                a[i][j] = -h[i][j];
            }
            a[i][i] += Complex64::new(e, DEFAULT_ETA);
        }
        let prod = nhwalk::linalg::mul2(&a, &g);
        assert!(max_abs_diff2(&prod, &nhwalk::linalg::identity2()) < 1e-12);
    }
}

#[test]
fn coin_is_continuous_across_the_exceptional_point() {
    for tau in [0.1, 0.5, 1.0, 2.0] {
        let at = dimer_coin(1.0, 4.0, tau).unwrap();
        for lambda in [4.0 - 1e-6, 4.0 + 1e-6] {
            let near = dimer_coin(1.0, lambda, tau).unwrap();
            assert!(close(near.alpha1(), at.alpha1(), 1e-5), "tau={tau} lambda={lambda}");
            assert!(close(near.alpha2(), at.alpha2(), 1e-5), "tau={tau} lambda={lambda}");
        }
    }
    assert_eq!(dimer_regime(1.0, 4.0 - 1e-6), Regime::Coherent);
    assert_eq!(dimer_regime(1.0, 4.0 + 1e-6), Regime::Incoherent);
    assert_eq!(dimer_regime(1.0, 4.0), Regime::Exceptional);
}

#[test]
fn coin_amplitudes_are_the_resonant_amplitudes() {
    for lambda in [0.0, 1.0, 3.0, 4.0, 4.4] {
        for tau in [0.05, 0.3, 1.0, 2.5] {
            let coin = dimer_coin(1.0, lambda, tau).unwrap();
            let (pll, plm) = resonance_probs(1.0, 0.0, lambda, tau);
            assert!(close(coin.alpha1().powi(2), pll, 1e-14));
            assert!(close(coin.alpha2().powi(2), plm, 1e-14));
        }
    }
}

#[test]
fn hyperbolic_branch_exceeds_unit_norm_for_strong_damping() {
    // e^{-λτ/4} cannot hold back sinh(Ω₀τ) once λ > 8V/√3
    let (pll, plm) = resonance_probs(1.0, 0.0, 8.0, 5.0);
    assert!(pll + plm > 1.0);
    assert!(dimer_coin(1.0, 8.0, 5.0).is_err());
    let (pll, plm) = resonance_probs(1.0, 0.0, 4.5, 20.0);
    assert!(pll + plm <= 1.0);
}
