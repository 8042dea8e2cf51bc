#![allow(dead_code)]

use numrange::linalg::{ComplexMatrix, ComplexScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries with real and imaginary parts uniform on `[-r, r]`.
pub fn uniform_matrix(rng: &mut ChaCha8Rng, m: usize, r: f64) -> ComplexMatrix {
    let data = (0..m * m)
        .map(|_| ComplexScalar::new(rng.random_range(-r..=r), rng.random_range(-r..=r)))
        .collect();
    ComplexMatrix::from_row_major(m, data).unwrap()
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, m: usize, r: f64) -> ComplexMatrix {
    let a = uniform_matrix(rng, m, r);
    a.real_combination(0.5, &a.adjoint(), 0.5).unwrap()
}

pub fn random_complex(rng: &mut ChaCha8Rng, r: f64) -> ComplexScalar {
    ComplexScalar::new(rng.random_range(-r..=r), rng.random_range(-r..=r))
}

/// Spectral norm by power iteration on `T*T`; independent of the Jacobi route.
pub fn spectral_norm_power(t: &ComplexMatrix, iterations: usize) -> f64 {
    let n = t.dim();
    let mut v: Vec<ComplexScalar> = (0..n)
        .map(|k| ComplexScalar::new(1.0 + 0.1 * k as f64, 0.3 - 0.05 * k as f64))
        .collect();
    let ta = t.adjoint();
    let mut estimate = 0.0;
    for _ in 0..iterations {
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        v.iter_mut().for_each(|z| *z /= norm);
        let w = ta.matvec(&t.matvec(&v).unwrap()).unwrap();
        estimate = v.iter().zip(&w).map(|(a, b)| (a.conj() * b).re).sum::<f64>();
        v = w;
    }
    estimate.max(0.0).sqrt()
}

pub fn close(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
    (a.0 - b.0).abs() <= tol && (a.1 - b.1).abs() <= tol
}

/// Every vertex of `a` has a partner in `b` and vice versa.
pub fn same_vertex_sets(a: &[(f64, f64)], b: &[(f64, f64)], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter().all(|p| b.iter().any(|q| close(*p, *q, tol)))
        && b.iter().all(|p| a.iter().any(|q| close(*p, *q, tol)))
}
