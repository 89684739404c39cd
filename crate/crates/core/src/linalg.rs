//! Small dense complex linear algebra: 2×2 helpers, a 2×2 matrix exponential
//! and a cyclic Jacobi eigensolver for Hermitian matrices.

use ndarray::Array2;
use num_complex::Complex64;

pub type Mat2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Off-diagonal Frobenius norm below which the Jacobi sweep stops.
pub const JACOBI_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 64;

pub fn identity2() -> Mat2 {
    [[ONE, ZERO], [ZERO, ONE]]
}

pub fn real2(m: [[f64; 2]; 2]) -> Mat2 {
    m.map(|row| row.map(|x| Complex64::new(x, 0.0)))
}

pub fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn adjoint2(a: &Mat2) -> Mat2 {
    [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
}

pub fn det2(a: &Mat2) -> Complex64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

pub fn scale2(a: &Mat2, s: Complex64) -> Mat2 {
    a.map(|row| row.map(|x| x * s))
}

/// Inverse of a 2×2 matrix, `None` when the determinant vanishes exactly.
pub fn inverse2(a: &Mat2) -> Option<Mat2> {
    let det = det2(a);
    if det == ZERO {
        return None;
    }
    let inv = ONE / det;
    Some([
        [a[1][1] * inv, -a[0][1] * inv],
        [-a[1][0] * inv, a[0][0] * inv],
    ])
}

/// Max-abs distance between two 2×2 matrices.
pub fn max_abs_diff2(a: &Mat2, b: &Mat2) -> f64 {
    let mut m = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            m = m.max((a[i][j] - b[i][j]).norm());
        }
    }
    m
}

/// `exp(a)` for a 2×2 complex matrix.
///
/// Writes `a = μ I + K` with `μ = tr(a)/2` and `K` traceless, so `K² = δ I`
/// with `δ = -det K`. The eigenvalues are `μ ± √δ`; for well separated
/// eigenvalues the result is the spectral (Sylvester) sum over both
/// projectors. When `√δ` is tiny the matrix is (close to) a Jordan block and
/// `exp(a) = e^μ (cosh √δ I + sinh(√δ)/√δ K)` is evaluated with a series for
/// the removable singularity.
pub fn expm2(a: &Mat2) -> Mat2 {
    let mu = (a[0][0] + a[1][1]) * 0.5;
    let k = [[a[0][0] - mu, a[0][1]], [a[1][0], a[1][1] - mu]];
    let delta = -det2(&k);
    let w = delta.sqrt();
    let emu = mu.exp();

    if w.norm() > 1e-4 {
        // Sylvester: exp(a) = e^{l1} (a - l2)/(l1 - l2) + e^{l2} (a - l1)/(l2 - l1)
        let l1 = mu + w;
        let l2 = mu - w;
        let gap = l1 - l2;
        let e1 = l1.exp() / gap;
        let e2 = l2.exp() / gap;
        let mut out = [[ZERO; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let id = if i == j { ONE } else { ZERO };
                out[i][j] = e1 * (a[i][j] - l2 * id) - e2 * (a[i][j] - l1 * id);
            }
        }
        out
    } else {
        // cosh w = Σ δ^n/(2n)!, sinh(w)/w = Σ δ^n/(2n+1)!
        let mut cosh = ONE;
        let mut sinhc = ONE;
        let mut term_c = ONE;
        let mut term_s = ONE;
        for n in 1..12 {
            let n = n as f64;
            term_c *= delta / ((2.0 * n - 1.0) * (2.0 * n));
            term_s *= delta / ((2.0 * n) * (2.0 * n + 1.0));
            cosh += term_c;
            sinhc += term_s;
        }
        let mut out = [[ZERO; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let id = if i == j { cosh } else { ZERO };
                out[i][j] = emu * (id + sinhc * k[i][j]);
            }
        }
        out
    }
}

fn off_diagonal_norm(a: &Array2<Complex64>) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[[i, j]].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// sorted in descending order.
///
/// Only the Hermitian part of `a` is used. Each rotation first removes the
/// phase of the pivot `a[p][q]` with a diagonal unitary and then applies a
/// real Givens rotation that annihilates it.
pub fn hermitian_eigenvalues(a: &Array2<Complex64>) -> Vec<f64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "matrix must be square");
    let mut m = Array2::from_shape_fn((n, n), |(i, j)| (a[[i, j]] + a[[j, i]].conj()) * 0.5);

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&m) < JACOBI_TOL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[[p, q]];
                let r = apq.norm();
                if r < 1e-300 {
                    continue;
                }
                // phase: column q *= conj(ph), row q *= ph, so m[p][q] becomes real
                let ph = apq / r;
                for k in 0..n {
                    m[[k, q]] *= ph.conj();
                }
                for k in 0..n {
                    m[[q, k]] *= ph;
                }

                let app = m[[p, p]].re;
                let aqq = m[[q, q]].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..n {
                    let mkp = m[[k, p]];
                    let mkq = m[[k, q]];
                    m[[k, p]] = mkp * c - mkq * s;
                    m[[k, q]] = mkp * s + mkq * c;
                }
                for k in 0..n {
                    let mpk = m[[p, k]];
                    let mqk = m[[q, k]];
                    m[[p, k]] = mpk * c - mqk * s;
                    m[[q, k]] = mpk * s + mqk * c;
                }
                m[[p, q]] = ZERO;
                m[[q, p]] = ZERO;
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| m[[i, i]].re).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    eig
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn jacobi_diagonal_is_identity_map() {
        let a = Array2::from_diag(&ndarray::arr1(&[c(0.2, 0.0), c(0.7, 0.0), c(-0.1, 0.0)]));
        assert_eq!(hermitian_eigenvalues(&a), vec![0.7, 0.2, -0.1]);
    }

    #[test]
    fn jacobi_pauli_y() {
        let a = ndarray::arr2(&[[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]);
        let e = hermitian_eigenvalues(&a);
        assert!((e[0] - 1.0).abs() < 1e-14 && (e[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn jacobi_preserves_trace_and_frobenius() {
        let a = ndarray::arr2(&[
            [c(1.0, 0.0), c(0.3, 0.4), c(-0.2, 0.1)],
            [c(0.3, -0.4), c(-0.5, 0.0), c(0.0, 0.7)],
            [c(-0.2, -0.1), c(0.0, -0.7), c(0.25, 0.0)],
        ]);
        let e = hermitian_eigenvalues(&a);
        let tr: f64 = e.iter().sum();
        assert!((tr - 0.75).abs() < 1e-13);
        let fro: f64 = a.iter().map(|z| z.norm_sqr()).sum();
        let fro_e: f64 = e.iter().map(|x| x * x).sum();
        assert!((fro - fro_e).abs() < 1e-12);
    }

    #[test]
    fn expm2_zero_and_diagonal() {
        let z = [[ZERO; 2]; 2];
        assert!(max_abs_diff2(&expm2(&z), &identity2()) < 1e-15);
        let d = [[c(0.5, 1.0), ZERO], [ZERO, c(-1.0, 0.0)]];
        let e = expm2(&d);
        assert!((e[0][0] - c(0.5, 1.0).exp()).norm() < 1e-14);
        assert!((e[1][1] - (-1.0f64).exp()).norm() < 1e-14);
        assert!(e[0][1].norm() < 1e-15);
    }

    #[test]
    fn expm2_jordan_block() {
        // [[m, 1], [0, m]] -> e^m [[1, 1], [0, 1]]
        let m = c(0.1, -0.3);
        let j = [[m, ONE], [ZERO, m]];
        let e = expm2(&j);
        let em = m.exp();
        let expect = [[em, em], [ZERO, em]];
        assert!(max_abs_diff2(&e, &expect) < 1e-14);
    }

    #[test]
    fn inverse2_roundtrip() {
        let a = [[c(1.0, 2.0), c(-1.0, 0.0)], [c(0.5, 0.0), c(0.0, 1.0)]];
        let inv = inverse2(&a).unwrap();
        assert!(max_abs_diff2(&mul2(&a, &inv), &identity2()) < 1e-14);
    }
}
