//! Walker states in `H_p ⊗ H_c` on the bounded lattice `[-L, L]`.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::{Error, Result};

/// Coin basis index: `0` for `|0_c⟩`, `1` for `|1_c⟩`.
pub type CoinIndex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitialStateKind {
    /// `|0_c⟩ ⊗ |0_p⟩`
    Localized,
    /// `(|0_c⟩ + i|1_c⟩)/√2 ⊗ |0_p⟩`, which gives a left-right symmetric profile.
    Symmetric,
}

impl InitialStateKind {
    pub fn name(self) -> &'static str {
        match self {
            InitialStateKind::Localized => "localized",
            InitialStateKind::Symmetric => "symmetric",
        }
    }
}

impl std::str::FromStr for InitialStateKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "localized" | "localised" => Ok(Self::Localized),
            "symmetric" => Ok(Self::Symmetric),
            other => Err(format!("unknown initial state `{other}` (expected localized or symmetric)")),
        }
    }
}

/// Dense amplitude field over `{0, 1} × [-L, L]`.
///
/// Amplitudes are stored coin-major: index `coin * (2L + 1) + (position + L)`.
/// After `steps_taken` steps from the origin every amplitude with
/// `|position| > steps_taken` is exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    amplitudes: Vec<Complex64>,
    bound: usize,
    steps_taken: usize,
}

impl WalkState {
    /// Builds a state from raw amplitudes, checking length and the light cone.
    ///
    /// `amplitudes` uses the coin-major layout described on the type.
    pub fn from_amplitudes(bound: usize, steps_taken: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if bound == 0 {
            return Err(Error::ZeroBound);
        }
        let width = 2 * bound + 1;
        if amplitudes.len() != 2 * width {
            return Err(Error::InvalidState(format!(
                "expected {} amplitudes for bound {bound}, got {}",
                2 * width,
                amplitudes.len()
            )));
        }
        if steps_taken > bound {
            return Err(Error::InvalidState(format!(
                "steps_taken {steps_taken} exceeds bound {bound}"
            )));
        }
        let state = WalkState {
            amplitudes,
            bound,
            steps_taken,
        };
        if let Some((c, m)) = state.outside_light_cone() {
            return Err(Error::InvalidState(format!(
                "nonzero amplitude at coin {c}, position {m} outside the light cone |m| <= {steps_taken}"
            )));
        }
        Ok(state)
    }

    pub(crate) fn from_parts_unchecked(bound: usize, steps_taken: usize, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), 2 * (2 * bound + 1));
        WalkState {
            amplitudes,
            bound,
            steps_taken,
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn steps_taken(&self) -> usize {
        self.steps_taken
    }

    /// Number of lattice sites, `2L + 1`.
    pub fn width(&self) -> usize {
        2 * self.bound + 1
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn index(&self, coin: CoinIndex, position: i64) -> Option<usize> {
        let l = self.bound as i64;
        if coin > 1 || position < -l || position > l {
            return None;
        }
        Some(coin * self.width() + (position + l) as usize)
    }

    /// Amplitude of `|coin_c, position_p⟩`; zero outside the lattice.
    pub fn amplitude(&self, coin: CoinIndex, position: i64) -> Complex64 {
        self.index(coin, position)
            .map(|i| self.amplitudes[i])
            .unwrap_or_default()
    }

    /// All lattice positions in ascending order.
    pub fn positions(&self) -> impl Iterator<Item = i64> {
        let l = self.bound as i64;
        -l..=l
    }

    /// Positions reachable after `steps_taken` steps, `[-n, n]`.
    pub fn light_cone(&self) -> std::ops::RangeInclusive<i64> {
        let n = self.steps_taken as i64;
        -n..=n
    }

    fn outside_light_cone(&self) -> Option<(CoinIndex, i64)> {
        let n = self.steps_taken as i64;
        for c in 0..2 {
            for m in self.positions() {
                if m.abs() > n && self.amplitude(c, m) != Complex64::default() {
                    return Some((c, m));
                }
            }
        }
        None
    }

    /// True when every amplitude outside `[-steps_taken, steps_taken]` is exactly zero.
    pub fn respects_light_cone(&self) -> bool {
        self.outside_light_cone().is_none()
    }
}

/// Fresh walker at the origin.
pub fn new_state(kind: InitialStateKind, bound: usize) -> Result<WalkState> {
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    let width = 2 * bound + 1;
    let mut amplitudes = vec![Complex64::default(); 2 * width];
    let origin = bound;
    match kind {
        InitialStateKind::Localized => amplitudes[origin] = Complex64::new(1.0, 0.0),
        InitialStateKind::Symmetric => {
            amplitudes[origin] = Complex64::new(FRAC_1_SQRT_2, 0.0);
            amplitudes[width + origin] = Complex64::new(0.0, FRAC_1_SQRT_2);
        }
    }
    Ok(WalkState::from_parts_unchecked(bound, 0, amplitudes))
}

/// Total squared norm `Σ |ψ(c, m)|²`.
pub fn norm2(state: &WalkState) -> f64 {
    state.amplitudes.iter().map(|a| a.norm_sqr()).sum()
}

/// Occupation probabilities per lattice site, not renormalized.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionDistribution {
    bound: usize,
    probs: Vec<f64>,
}

impl PositionDistribution {
    /// `probs[i]` belongs to position `i - bound`.
    pub fn new(bound: usize, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != 2 * bound + 1 {
            return Err(Error::InvalidDistribution(format!(
                "expected {} entries for bound {bound}, got {}",
                2 * bound + 1,
                probs.len()
            )));
        }
        Ok(PositionDistribution { bound, probs })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn values(&self) -> &[f64] {
        &self.probs
    }

    pub fn get(&self, position: i64) -> f64 {
        let l = self.bound as i64;
        if position < -l || position > l {
            0.0
        } else {
            self.probs[(position + l) as usize]
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let l = self.bound as i64;
        self.probs.iter().enumerate().map(move |(i, &p)| (i as i64 - l, p))
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }
}

pub fn position_distribution(state: &WalkState) -> PositionDistribution {
    let w = state.width();
    let probs = (0..w)
        .map(|i| state.amplitudes[i].norm_sqr() + state.amplitudes[w + i].norm_sqr())
        .collect();
    PositionDistribution {
        bound: state.bound,
        probs,
    }
}

/// Standard deviation of position under the renormalized distribution.
pub fn spread_sigma(dist: &PositionDistribution) -> Result<f64> {
    let total = dist.total();
    if !(total > 0.0) {
        return Err(Error::InvalidDistribution("distribution sums to zero".into()));
    }
    let mean = dist.iter().map(|(m, p)| m as f64 * p).sum::<f64>() / total;
    let var = dist
        .iter()
        .map(|(m, p)| (m as f64 - mean).powi(2) * p)
        .sum::<f64>()
        / total;
    Ok(var.max(0.0).sqrt())
}
