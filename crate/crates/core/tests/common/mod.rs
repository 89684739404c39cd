//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nhwalk::linalg::Mat2;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `(α₁, α₂)` with `0 < α₂ < α₁` and `α₁² + α₂² < 1`.
pub fn admissible_pairs(seed: u64, count: usize) -> Vec<(f64, f64)> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a1: f64 = r.random_range(0.05..1.0);
        let a2: f64 = r.random_range(0.01..a1);
        if a1 * a1 + a2 * a2 < 1.0 {
            out.push((a1, a2));
        }
    }
    out
}

/// Random complex vector supported on `|m| <= support`, coin-major layout.
pub fn random_amplitudes(r: &mut ChaCha8Rng, bound: usize, support: usize) -> Vec<Complex64> {
    let w = 2 * bound + 1;
    let mut a = vec![Complex64::default(); 2 * w];
    for coin in 0..2 {
        for m in -(support as i64)..=(support as i64) {
            let i = coin * w + (m + bound as i64) as usize;
            a[i] = Complex64::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0));
        }
    }
    a
}

/// Which way the shift sends each coin basis state.
#[derive(Clone, Copy)]
pub enum DenseShift {
    Conditional,
    Generalized,
}

/// Full `2(2L+1)`-dimensional step matrix `S · (I ⊗ C)`, assembled column
/// by column from the action on basis states.
pub fn dense_step(coin: &Mat2, bound: usize, shift: DenseShift) -> Array2<Complex64> {
    let w = 2 * bound + 1;
    let dim = 2 * w;
    let idx = |coin: usize, m: i64| -> Option<usize> {
        let i = m + bound as i64;
        (0..w as i64).contains(&i).then(|| coin * w + i as usize)
    };
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut shift_m = Array2::<Complex64>::zeros((dim, dim));
    for m in -(bound as i64)..=(bound as i64) {
        let col0 = idx(0, m).unwrap();
        let col1 = idx(1, m).unwrap();
        let targets: Vec<(usize, Option<usize>, f64)> = match shift {
            DenseShift::Conditional => vec![(col0, idx(0, m + 1), 1.0), (col1, idx(1, m - 1), 1.0)],
            DenseShift::Generalized => vec![
                (col0, idx(0, m - 1), s),
                (col0, idx(1, m), s),
                (col1, idx(0, m), -s),
                (col1, idx(1, m + 1), s),
            ],
        };
        for (col, row, val) in targets {
            if let Some(row) = row {
                shift_m[[row, col]] += c(val);
            }
        }
    }
    let mut coin_m = Array2::<Complex64>::zeros((dim, dim));
    for i in 0..w {
        for a in 0..2 {
            for b in 0..2 {
                coin_m[[a * w + i, b * w + i]] = coin[a][b];
            }
        }
    }
    shift_m.dot(&coin_m)
}

pub fn dense_evolve(
    coin: &Mat2,
    bound: usize,
    shift: DenseShift,
    start: &[Complex64],
    steps: usize,
) -> Vec<Complex64> {
    let u = dense_step(coin, bound, shift);
    let mut v = Array1::from(start.to_vec());
    for _ in 0..steps {
        v = u.dot(&v);
    }
    v.to_vec()
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[Complex64::default(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Matrix exponential by scaling, a 30-term Taylor series and squaring.
pub fn expm_series(a: &Mat2) -> Mat2 {
    let norm = a.iter().flatten().map(|z| z.norm()).fold(0.0_f64, f64::max);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scale = 0.5_f64.powi(squarings as i32);
    let x = a.map(|row| row.map(|z| z * scale));
    let mut term = [[c(1.0), c(0.0)], [c(0.0), c(1.0)]];
    let mut sum = term;
    for k in 1..30 {
        term = mat_mul(&term, &x).map(|row| row.map(|z| z / k as f64));
        for i in 0..2 {
            for j in 0..2 {
                sum[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..squarings {
        sum = mat_mul(&sum, &sum);
    }
    sum
}

/// Occupation of an unbiased classical walk of `n` steps, indexed by `m + n`.
pub fn binomial_walk(n: usize) -> Vec<(i64, f64)> {
    let mut row = vec![1.0_f64];
    for _ in 0..n {
        let mut next = vec![0.0; row.len() + 1];
        for (k, &p) in row.iter().enumerate() {
            next[k] += 0.5 * p;
            next[k + 1] += 0.5 * p;
        }
        row = next;
    }
    row.into_iter()
        .enumerate()
        .map(|(k, p)| (2 * k as i64 - n as i64, p))
        .collect()
}

pub fn sigma_of(dist: &[(i64, f64)]) -> f64 {
    let total: f64 = dist.iter().map(|d| d.1).sum();
    let mean = dist.iter().map(|&(m, p)| m as f64 * p).sum::<f64>() / total;
    (dist.iter().map(|&(m, p)| (m as f64 - mean).powi(2) * p).sum::<f64>() / total).sqrt()
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
