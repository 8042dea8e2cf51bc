use std::fmt;
use std::ops::{Add, Index, IndexMut, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense square complex matrix stored row-major.
///
/// Every entry is finite; the constructors reject NaN and infinities.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn from_row_major(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidMatrix("dimension must be at least 1".into()));
        }
        if data.len() != dim * dim {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for dimension {}, got {}",
                dim * dim,
                dim,
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidMatrix(format!(
                "entry ({}, {}) is not finite",
                pos / dim,
                pos % dim
            )));
        }
        Ok(Self { dim, data })
    }

    /// Builds a matrix from nested rows. Convenient for fixtures.
    pub fn from_rows<R: AsRef<[Complex64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(dim, data)
    }

    /// Real-valued convenience constructor.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::InvalidMatrix("dimension must be at least 1".into()));
        }
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        Self::from_row_major(m.dim, m.data)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(self.data[j * n + i].conj());
            }
        }
        Self { dim: n, data }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * c).collect(),
        }
    }

    pub fn scale_real(&self, c: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * c).collect(),
        }
    }

    /// `a * self + b * other` for real coefficients.
    pub fn real_combination(&self, a: f64, other: &Self, b: f64) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&x, &y)| x * a + y * b)
                .collect(),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |x, y| x + y))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.zip_with(other, |x, y| x - y))
    }

    /// Standard matrix product.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            let out_row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let b_row = &other.data[k * n..(k + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self { dim: n, data: out })
    }

    /// `self* · other`, without materializing the adjoint.
    pub fn adjoint_matmul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for k in 0..n {
            let a_row = &self.data[k * n..(k + 1) * n];
            let b_row = &other.data[k * n..(k + 1) * n];
            for (i, &a) in a_row.iter().enumerate() {
                let a = a.conj();
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let out_row = &mut out[i * n..(i + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self { dim: n, data: out })
    }

    pub fn matvec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::Dimension {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, &x)| a * x).sum())
            .collect())
    }

    /// Largest deviation from Hermitian symmetry, `max |a_ij - conj(a_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.dim;
        let mut dev = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.data[i * n + j] - self.data[j * n + i].conj()).norm();
                dev = dev.max(d);
            }
        }
        dev
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, z| m.max(z.norm()))
    }

    /// Hermitian within `1e-12 * (1 + max |entry|)`.
    pub fn is_hermitian(&self) -> bool {
        self.hermitian_deviation() <= HERMITIAN_RTOL * (1.0 + self.max_abs())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    pub fn frobenius_inner(&self, other: &Self) -> Result<Complex64> {
        self.check_dim(other)?;
        Ok(self.data.iter().zip(&other.data).map(|(&a, &b)| a.conj() * b).sum())
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(&x, &y)| f(x, y)).collect(),
        }
    }
}

/// Relative tolerance for Hermitian symmetry checks.
pub const HERMITIAN_RTOL: f64 = 1e-12;

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_add(rhs).expect("dimension mismatch in matrix addition")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_sub(rhs).expect("dimension mismatch in matrix subtraction")
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for z in self.row(i) {
                write!(f, "{:>10.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// The Hermitian parts of `T = T_H + i T_S`.
#[derive(Clone, Debug, PartialEq)]
pub struct CartesianPair {
    /// `(T + T*) / 2`
    pub th: ComplexMatrix,
    /// `(T - T*) / 2i`
    pub ts: ComplexMatrix,
}

impl CartesianPair {
    pub fn dim(&self) -> usize {
        self.th.dim()
    }

    /// `th + i ts`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let i = Complex64::new(0.0, 1.0);
        self.th.zip_with(&self.ts, |h, s| h + i * s)
    }

    /// `a T_H + b T_S`, Hermitian for real coefficients.
    pub fn combination(&self, a: f64, b: f64) -> ComplexMatrix {
        self.th
            .real_combination(a, &self.ts, b)
            .expect("Cartesian parts share a dimension")
    }
}

/// Splits `t` into its Hermitian and skew-Hermitian-over-`i` parts.
///
/// Both parts are Hermitian by construction: the diagonal is made exactly
/// real and the lower triangle mirrors the upper one.
pub fn cartesian_split(t: &ComplexMatrix) -> CartesianPair {
    let n = t.dim();
    let mut th = ComplexMatrix::zeros(n);
    let mut ts = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let a = t[(i, j)];
            let b = t[(j, i)].conj();
            // (a + b) / 2 and (a - b) / 2i
            let h = (a + b) * 0.5;
            let d = (a - b) * 0.5;
            let s = Complex64::new(d.im, -d.re);
            if i == j {
                th[(i, i)] = Complex64::new(h.re, 0.0);
                ts[(i, i)] = Complex64::new(s.re, 0.0);
            } else {
                th[(i, j)] = h;
                th[(j, i)] = h.conj();
                ts[(i, j)] = s;
                ts[(j, i)] = s.conj();
            }
        }
    }
    CartesianPair { th, ts }
}

pub fn vector_norm(u: &[Complex64]) -> f64 {
    u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `<Tu, u> = u* T u` for a unit vector `u`.
pub fn quadratic_form(t: &ComplexMatrix, u: &[Complex64]) -> Result<Complex64> {
    let norm = vector_norm(u);
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::Normalization { norm });
    }
    let tu = t.matvec(u)?;
    Ok(u.iter().zip(&tu).map(|(&x, &y)| x.conj() * y).sum())
}
