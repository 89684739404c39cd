use ndarray::Array2;
use num_complex::Complex64;

use crate::hilbert::WalkState;
use crate::linalg::hermitian_eigenvalues;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum BasisLabel {
    Coin(usize),
    Position(i64),
}

/// Reduced density matrix together with the basis it is written in.
///
/// No renormalization is applied: the trace equals the surviving squared
/// norm of the walk it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: Array2<Complex64>,
    labels: Vec<BasisLabel>,
}

impl DensityMatrix {
    pub fn new(entries: Array2<Complex64>, labels: Vec<BasisLabel>) -> Result<Self> {
        if entries.nrows() != entries.ncols() || entries.nrows() != labels.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix with {} basis labels",
                entries.nrows(),
                entries.ncols(),
                labels.len()
            )));
        }
        Ok(DensityMatrix { entries, labels })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn entries(&self) -> &Array2<Complex64> {
        &self.entries
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    /// Entry addressed by basis labels, `None` if either label is absent.
    pub fn get(&self, row: BasisLabel, col: BasisLabel) -> Option<Complex64> {
        let i = self.labels.iter().position(|&l| l == row)?;
        let j = self.labels.iter().position(|&l| l == col)?;
        Some(self.entries[[i, j]])
    }

    pub fn trace(&self) -> f64 {
        self.entries.diag().iter().map(|z| z.re).sum()
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.entries)
    }

    /// Largest `|ρ - ρ†|` entry.
    pub fn hermiticity_error(&self) -> f64 {
        let n = self.dim();
        let mut m = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                m = m.max((self.entries[[i, j]] - self.entries[[j, i]].conj()).norm());
            }
        }
        m
    }
}

/// `ρ_c[i][j] = Σ_m ψ(i, m) ψ(j, m)*`, basis `(|0_c⟩, |1_c⟩)`.
pub fn reduced_coin_density(state: &WalkState) -> DensityMatrix {
    let w = state.width();
    let (a0, a1) = state.amplitudes().split_at(w);
    let rows = [a0, a1];
    let entries = Array2::from_shape_fn((2, 2), |(i, j)| {
        rows[i]
            .iter()
            .zip(rows[j])
            .map(|(x, y)| x * y.conj())
            .sum::<Complex64>()
    });
    DensityMatrix {
        entries,
        labels: vec![BasisLabel::Coin(0), BasisLabel::Coin(1)],
    }
}

/// `ρ_p[m][m'] = Σ_c ψ(c, m) ψ(c, m')*` over the light cone `[-n, n]`, ascending.
pub fn reduced_position_density(state: &WalkState) -> DensityMatrix {
    let window: Vec<i64> = state.light_cone().collect();
    let n = window.len();
    let amps: Vec<[Complex64; 2]> = window
        .iter()
        .map(|&m| [state.amplitude(0, m), state.amplitude(1, m)])
        .collect();
    let entries = Array2::from_shape_fn((n, n), |(i, j)| {
        amps[i][0] * amps[j][0].conj() + amps[i][1] * amps[j][1].conj()
    });
    DensityMatrix {
        entries,
        labels: window.into_iter().map(BasisLabel::Position).collect(),
    }
}

/// `D = ½ Σ_k |λ_k(ρ₁ - ρ₂)|`, the trace norm of the Hermitian difference.
pub fn trace_distance(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    if rho1.labels != rho2.labels {
        return Err(Error::DimensionMismatch(format!(
            "trace distance between {}-dim and {}-dim states with different bases",
            rho1.dim(),
            rho2.dim()
        )));
    }
    let diff = &rho1.entries - &rho2.entries;
    Ok(0.5 * hermitian_eigenvalues(&diff).iter().map(|x| x.abs()).sum::<f64>())
}
