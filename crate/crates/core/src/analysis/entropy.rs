use crate::{Error, Result};

/// `h(p) = -p ln p - (1-p) ln(1-p)`, with `h(0) = h(1) = 0`.
pub fn binary_entropy(p: f64) -> f64 {
    let mut h = 0.0;
    if p > 0.0 {
        h -= p * p.ln();
    }
    let q = 1.0 - p;
    if q > 0.0 {
        h -= q * q.ln();
    }
    h
}

/// Average entropy `S = (1/N) Σ_n h(p_n)` over the occupied sites.
///
/// Each site is treated as a two-level occupied/unoccupied system
/// `ρ_n = diag(p_n, 1 - p_n)`, so `-Tr ρ_n ln ρ_n` is the binary entropy of the
/// unnormalized occupation `p_n`. `N` is the number of steps walked.
pub fn von_neumann_entropy_avg(dist: &[f64], n_steps: usize) -> Result<f64> {
    if n_steps == 0 {
        return Err(Error::InvalidDistribution("number of steps must be positive".into()));
    }
    let mut total = 0.0;
    for (i, &p) in dist.iter().enumerate() {
        if !(-1e-12..=1.0 + 1e-12).contains(&p) {
            return Err(Error::InvalidDistribution(format!(
                "occupation {p} at index {i} is outside [0, 1]"
            )));
        }
        if p > 0.0 {
            total += binary_entropy(p.min(1.0));
        }
    }
    Ok(total / n_steps as f64)
}
