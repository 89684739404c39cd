use crate::hilbert::{norm2, WalkState};
use crate::{Error, Result};

/// Normalized probabilities at or below this are treated as exact zeros
/// (rounding residue of cancelled paths).
pub const NEGLIGIBLE_PROBABILITY: f64 = 1e-28;

/// One outcome of measuring the coin and then the position.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MeasurementRecord {
    pub coin: usize,
    pub position: i64,
    /// `|ψ(c, m)|² / β²` with `β²` the surviving squared norm.
    pub probability: f64,
    /// Sign of the post-measurement product state `±|c⟩ ⊗ |m⟩`.
    pub sign: i8,
}

/// Coin-then-position projective readout in the computational basis.
///
/// Probabilities are post-selected on survival, i.e. divided by `norm2`, so
/// they sum to one. For complex amplitudes the sign is taken from the
/// dominant of the real and imaginary parts.
pub fn measure(state: &WalkState) -> Result<Vec<MeasurementRecord>> {
    let total = norm2(state);
    if !(total > 0.0) {
        return Err(Error::ZeroNorm);
    }
    let mut records = Vec::new();
    for coin in 0..2 {
        for position in state.positions() {
            let a = state.amplitude(coin, position);
            let probability = a.norm_sqr() / total;
            if probability <= NEGLIGIBLE_PROBABILITY {
                continue;
            }
            let lead = if a.re.abs() >= a.im.abs() { a.re } else { a.im };
            records.push(MeasurementRecord {
                coin,
                position,
                probability,
                sign: if lead < 0.0 { -1 } else { 1 },
            });
        }
    }
    Ok(records)
}
