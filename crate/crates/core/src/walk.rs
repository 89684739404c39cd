//! One walk step `U = S · (I_p ⊗ C)` and multi-step evolution.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::coin::CoinOp;
use crate::hilbert::{norm2, WalkState};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftKind {
    /// `|0_c, m⟩ → |0_c, m+1⟩`, `|1_c, m⟩ → |1_c, m-1⟩`.
    Conditional,
    /// `|0_c, m⟩ → (|0_c, m-1⟩ + |1_c, m⟩)/√2`,
    /// `|1_c, m⟩ → (-|0_c, m⟩ + |1_c, m+1⟩)/√2`.
    Generalized,
}

impl ShiftKind {
    pub fn name(self) -> &'static str {
        match self {
            ShiftKind::Conditional => "conditional",
            ShiftKind::Generalized => "generalized",
        }
    }
}

impl std::str::FromStr for ShiftKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "conditional" => Ok(Self::Conditional),
            "generalized" | "generalised" => Ok(Self::Generalized),
            other => Err(format!(
                "unknown shift `{other}` (expected conditional or generalized)"
            )),
        }
    }
}

/// Final state plus the squared norm before the first and after every step.
#[derive(Debug, Clone)]
pub struct EvolutionTrace {
    pub final_state: WalkState,
    pub norms: Vec<f64>,
}

fn shift_into(
    bound: usize,
    step: usize,
    c0: &[Complex64],
    c1: &[Complex64],
    kind: ShiftKind,
) -> Result<Vec<Complex64>> {
    let w = c0.len();
    let zero = Complex64::default();
    let boundary = || Error::Boundary { bound, step };
    // Amplitudes that would leave the lattice must vanish exactly.
    match kind {
        ShiftKind::Generalized => {
            if c0[0] != zero || c1[w - 1] != zero {
                return Err(boundary());
            }
        }
        ShiftKind::Conditional => {
            if c0[w - 1] != zero || c1[0] != zero {
                return Err(boundary());
            }
        }
    }

    let mut out = vec![zero; 2 * w];
    let (o0, o1) = out.split_at_mut(w);
    match kind {
        ShiftKind::Generalized => {
            let s = FRAC_1_SQRT_2;
            for i in 0..w {
                let (a, b) = (c0[i], c1[i]);
                if a != zero {
                    o0[i - 1] += a * s;
                    o1[i] += a * s;
                }
                if b != zero {
                    o0[i] -= b * s;
                    o1[i + 1] += b * s;
                }
            }
        }
        ShiftKind::Conditional => {
            for i in 0..w {
                if c0[i] != zero {
                    o0[i + 1] += c0[i];
                }
                if c1[i] != zero {
                    o1[i - 1] += c1[i];
                }
            }
        }
    }
    Ok(out)
}

fn check_room(state: &WalkState) -> Result<()> {
    if state.steps_taken() + 1 > state.bound() {
        return Err(Error::Boundary {
            bound: state.bound(),
            step: state.steps_taken() + 1,
        });
    }
    Ok(())
}

/// Applies the shift alone. The light cone grows by one site, so the
/// returned state counts one more step.
pub fn apply_shift(state: &WalkState, kind: ShiftKind) -> Result<WalkState> {
    check_room(state)?;
    let w = state.width();
    let (c0, c1) = state.amplitudes().split_at(w);
    let amps = shift_into(state.bound(), state.steps_taken() + 1, c0, c1, kind)?;
    Ok(WalkState::from_parts_unchecked(
        state.bound(),
        state.steps_taken() + 1,
        amps,
    ))
}

/// Coin at every site, then the shift.
pub fn step(state: &WalkState, coin: &CoinOp, kind: ShiftKind) -> Result<WalkState> {
    check_room(state)?;
    let w = state.width();
    let (a0, a1) = state.amplitudes().split_at(w);
    let mut c0 = Vec::with_capacity(w);
    let mut c1 = Vec::with_capacity(w);
    for (&x, &y) in a0.iter().zip(a1) {
        let (u, v) = coin.apply(x, y);
        c0.push(u);
        c1.push(v);
    }
    let amps = shift_into(state.bound(), state.steps_taken() + 1, &c0, &c1, kind)?;
    Ok(WalkState::from_parts_unchecked(
        state.bound(),
        state.steps_taken() + 1,
        amps,
    ))
}

/// `n` homogeneous steps with the same coin.
pub fn evolve(state: &WalkState, coin: &CoinOp, kind: ShiftKind, n: usize) -> Result<EvolutionTrace> {
    if state.steps_taken() + n > state.bound() {
        return Err(Error::Boundary {
            bound: state.bound(),
            step: state.steps_taken() + n,
        });
    }
    let mut norms = Vec::with_capacity(n + 1);
    norms.push(norm2(state));
    let mut current = state.clone();
    for _ in 0..n {
        current = step(&current, coin, kind)?;
        norms.push(norm2(&current));
    }
    Ok(EvolutionTrace {
        final_state: current,
        norms,
    })
}
