//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq = r e^{iφ}` and
//! then applies the classical real Jacobi rotation, so one step is the
//! unitary
//!
//! ```text
//!     U = [  c        s e^{iφ} ]
//!         [ -s e^{-iφ}   c     ]
//! ```
//!
//! acting on rows/columns `p, q`. Only rows `p` and `q` are updated; the
//! columns are mirrored from them, which keeps the working matrix exactly
//! Hermitian throughout.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Sweep limit before giving up.
pub const MAX_SWEEPS: usize = 60;
/// Stop once the off-diagonal Frobenius norm drops below this fraction of `‖H‖_F`.
pub const OFF_DIAGONAL_RTOL: f64 = 1e-13;

/// Full spectral decomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Unit eigenvectors, `eigenvectors[k]` pairs with `eigenvalues[k]`.
    pub eigenvectors: Vec<Vec<Complex64>>,
}

impl HermitianEigen {
    pub fn max(&self) -> (f64, &[Complex64]) {
        let k = self.eigenvalues.len() - 1;
        (self.eigenvalues[k], &self.eigenvectors[k])
    }

    pub fn min(&self) -> (f64, &[Complex64]) {
        (self.eigenvalues[0], &self.eigenvectors[0])
    }
}

/// Eigenvalues and eigenvectors of a Hermitian matrix.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<HermitianEigen> {
    check_hermitian(h)?;
    let (values, vectors) = jacobi(h, true)?;
    let vectors = vectors.expect("vectors requested");
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    Ok(HermitianEigen {
        eigenvalues: order.iter().map(|&k| values[k]).collect(),
        eigenvectors: order.iter().map(|&k| vectors[k].clone()).collect(),
    })
}

/// Eigenvalues only (ascending). Skips eigenvector accumulation.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    check_hermitian(h)?;
    let (mut values, _) = jacobi(h, false)?;
    values.sort_by(f64::total_cmp);
    Ok(values)
}

fn check_hermitian(h: &ComplexMatrix) -> Result<()> {
    if !h.is_hermitian() {
        return Err(Error::NotHermitian {
            deviation: h.hermitian_deviation(),
        });
    }
    Ok(())
}

type JacobiOutput = (Vec<f64>, Option<Vec<Vec<Complex64>>>);

fn jacobi(h: &ComplexMatrix, want_vectors: bool) -> Result<JacobiOutput> {
    let n = h.dim();
    // Symmetrize from the upper triangle so roundoff in the input cannot
    // leak into the rotations.
    let mut a = h.clone().into_vec();
    for i in 0..n {
        a[i * n + i].im = 0.0;
        for j in (i + 1)..n {
            a[j * n + i] = a[i * n + j].conj();
        }
    }

    // vecs[k] is the k-th column of the accumulated unitary.
    let mut vecs: Option<Vec<Vec<Complex64>>> = want_vectors.then(|| {
        (0..n)
            .map(|k| {
                let mut e = vec![Complex64::new(0.0, 0.0); n];
                e[k] = Complex64::new(1.0, 0.0);
                e
            })
            .collect()
    });

    let frob = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let threshold = OFF_DIAGONAL_RTOL * frob;

    let off_norm = |a: &[Complex64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[i * n + j].norm_sqr();
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold || n == 1 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::Convergence { sweeps, off });
        }
        sweeps += 1;

        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                // Once the pivot is negligible against both diagonal entries,
                // drop it instead of rotating.
                if sweeps > 4 {
                    let g = 100.0 * r;
                    if app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                        a[p * n + q] = Complex64::new(0.0, 0.0);
                        a[q * n + p] = Complex64::new(0.0, 0.0);
                        continue;
                    }
                }

                let phase = apq / r; // e^{iφ}
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + tau.hypot(1.0))
                } else {
                    -1.0 / (-tau + tau.hypot(1.0))
                };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                let s_phase = phase * s; // s e^{iφ}
                let s_phase_conj = s_phase.conj(); // s e^{-iφ}

                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[p * n + k];
                    let akq = a[q * n + k];
                    let new_p = akp * c - s_phase * akq;
                    let new_q = s_phase_conj * akp + akq * c;
                    a[p * n + k] = new_p;
                    a[q * n + k] = new_q;
                    a[k * n + p] = new_p.conj();
                    a[k * n + q] = new_q.conj();
                }
                a[p * n + p] = Complex64::new(app - t * r, 0.0);
                a[q * n + q] = Complex64::new(aqq + t * r, 0.0);
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);

                if let Some(v) = vecs.as_mut() {
                    let (lo, hi) = v.split_at_mut(q);
                    let vp = &mut lo[p];
                    let vq = &mut hi[0];
                    for (x, y) in vp.iter_mut().zip(vq.iter_mut()) {
                        let xp = *x;
                        let xq = *y;
                        *x = xp * c - s_phase_conj * xq;
                        *y = s_phase * xp + xq * c;
                    }
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i * n + i].re).collect();
    Ok((values, vecs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn residual(h: &ComplexMatrix, lambda: f64, v: &[Complex64]) -> f64 {
        let hv = h.matvec(v).unwrap();
        hv.iter()
            .zip(v)
            .map(|(&x, &y)| (x - y * lambda).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    #[test]
    fn real_symmetric_2x2() {
        let h = ComplexMatrix::from_real_rows(&[[0.0, 0.5], [0.5, 0.0]]).unwrap();
        let e = hermitian_eigen(&h).unwrap();
        assert!((e.eigenvalues[0] + 0.5).abs() < 1e-15);
        assert!((e.eigenvalues[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn complex_2x2() {
        let h = ComplexMatrix::from_rows(&[[c(0.0, 0.0), c(0.0, -0.5)], [c(0.0, 0.5), c(0.0, 0.0)]]).unwrap();
        let e = hermitian_eigen(&h).unwrap();
        assert!((e.eigenvalues[0] + 0.5).abs() < 1e-15);
        assert!((e.eigenvalues[1] - 0.5).abs() < 1e-15);
        for k in 0..2 {
            assert!(residual(&h, e.eigenvalues[k], &e.eigenvectors[k]) < 1e-14);
        }
    }

    #[test]
    fn diagonal_sorted_with_basis_vectors() {
        let h = ComplexMatrix::from_real_rows(&[[3.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 2.0]]).unwrap();
        let e = hermitian_eigen(&h).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 2.0, 3.0]);
        assert_eq!(e.eigenvectors[0][1], c(1.0, 0.0));
        assert_eq!(e.eigenvectors[1][2], c(1.0, 0.0));
        assert_eq!(e.eigenvectors[2][0], c(1.0, 0.0));
    }

    #[test]
    fn rejects_non_hermitian() {
        let t = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap();
        assert!(matches!(hermitian_eigen(&t), Err(Error::NotHermitian { .. })));
        assert!(matches!(hermitian_eigenvalues(&t), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn zero_matrix() {
        let e = hermitian_eigen(&ComplexMatrix::zeros(3)).unwrap();
        assert_eq!(e.eigenvalues, vec![0.0; 3]);
    }

    #[test]
    fn dense_complex_4x4_residuals() {
        // A fixed Hermitian matrix with a repeated eigenvalue direction mix.
        let rows = [
            [c(4.0, 0.0), c(1.0, -2.0), c(0.0, 1.0), c(-1.0, 0.5)],
            [c(1.0, 2.0), c(-3.0, 0.0), c(2.0, 2.0), c(0.0, -1.0)],
            [c(0.0, -1.0), c(2.0, -2.0), c(1.0, 0.0), c(0.5, 0.5)],
            [c(-1.0, -0.5), c(0.0, 1.0), c(0.5, -0.5), c(0.0, 0.0)],
        ];
        let h = ComplexMatrix::from_rows(&rows).unwrap();
        let e = hermitian_eigen(&h).unwrap();
        let values = hermitian_eigenvalues(&h).unwrap();
        let trace: f64 = (0..4).map(|i| h[(i, i)].re).sum();
        assert!((e.eigenvalues.iter().sum::<f64>() - trace).abs() < 1e-12);
        for ((v, lambda), vector) in values.iter().zip(&e.eigenvalues).zip(&e.eigenvectors) {
            assert!((v - lambda).abs() < 1e-12);
            assert!(residual(&h, *lambda, vector) < 1e-12);
            let norm: f64 = vector.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }
}
