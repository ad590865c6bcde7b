use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use super::observable::{Factor, Phase};
use super::PauliError;

pub const MAX_EIGEN_DIM: usize = 256;

const HERMITIAN_TOL: f64 = 1e-12;
const JACOBI_OFF_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;

pub(crate) fn phase_value(p: Phase) -> Complex64 {
    match p.exponent() {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, PauliError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(PauliError::NotSquare);
        }
        Ok(DenseMatrix {
            dim,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self, PauliError> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub(crate) fn single_qubit(f: Factor) -> Self {
        let o = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let e = match f {
            Factor::I => [one, o, o, one],
            Factor::X => [o, one, one, o],
            Factor::Y => [o, -i, i, o],
            Factor::Z => [one, o, o, -one],
        };
        DenseMatrix {
            dim: 2,
            entries: e.to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Complex64) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let d = self.dim * other.dim;
        let mut m = Self::zeros(d);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        m.set(i * other.dim + k, j * other.dim + l, a * other.get(k, l));
                    }
                }
            }
        }
        m
    }

    pub fn scale(&self, c: Complex64) -> DenseMatrix {
        DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&x| x * c).collect(),
        }
    }

    pub fn adjoint(&self) -> DenseMatrix {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(j, i, self.get(i, j).conj());
            }
        }
        m
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &DenseMatrix) -> DenseMatrix {
        &(self * other) - &(other * self)
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &DenseMatrix, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.entries.iter().all(|x| x.norm() <= tol)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| (self.get(i, j) - self.get(j, i).conj()).norm() <= tol))
    }

    /// Eigenvalues of a Hermitian matrix, ascending, with multiplicity.
    ///
    /// Runs cyclic Jacobi on the real symmetric embedding `[[A, -B], [B, A]]`
    /// of `A + iB`, whose spectrum is that of the input with every eigenvalue
    /// doubled.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>, PauliError> {
        if self.dim > MAX_EIGEN_DIM {
            return Err(PauliError::TooLarge(self.dim));
        }
        if !self.is_hermitian(HERMITIAN_TOL) {
            return Err(PauliError::NotHermitian);
        }
        let n = self.dim;
        let m = 2 * n;
        let mut a = vec![0.0f64; m * m];
        for i in 0..n {
            for j in 0..n {
                let z = self.get(i, j);
                a[i * m + j] = z.re;
                a[(i + n) * m + (j + n)] = z.re;
                a[i * m + (j + n)] = -z.im;
                a[(i + n) * m + j] = z.im;
            }
        }
        let mut ev = jacobi_symmetric(&mut a, m)?;
        ev.sort_by(f64::total_cmp);
        Ok(ev.into_iter().step_by(2).collect())
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> Result<f64, PauliError> {
        if self.dim == 0 {
            return Ok(0.0);
        }
        if self.is_hermitian(HERMITIAN_TOL) {
            let ev = self.hermitian_eigenvalues()?;
            return Ok(ev.iter().fold(0.0, |acc: f64, x| acc.max(x.abs())));
        }
        let gram = &self.adjoint() * self;
        let ev = gram.hermitian_eigenvalues()?;
        Ok(ev.last().copied().unwrap_or(0.0).max(0.0).sqrt())
    }
}

/// Cyclic Jacobi rotations on a real symmetric `m×m` matrix stored row-major.
/// Returns the diagonal after convergence (unsorted).
fn jacobi_symmetric(a: &mut [f64], m: usize) -> Result<Vec<f64>, PauliError> {
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..m)
            .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * m + j] * a[i * m + j])
            .sum::<f64>()
            .sqrt();
        if off < JACOBI_OFF_TOL * scale {
            return Ok((0..m).map(|i| a[i * m + i]).collect());
        }
        for p in 0..m {
            for q in p + 1..m {
                let apq = a[p * m + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * m + p];
                let aqq = a[q * m + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(PauliError::NoConvergence)
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;

    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut m = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    m.entries[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        m
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;

    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;

    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::PauliObservable;

    fn p(s: &str) -> PauliObservable {
        s.parse().unwrap()
    }

    #[test]
    fn small_matrices() {
        assert_eq!(p("I").to_matrix(), DenseMatrix::identity(2));
        let z = p("Z").to_matrix();
        assert_eq!(z.get(0, 0).re, 1.0);
        assert_eq!(z.get(1, 1).re, -1.0);
        let xx = p("XX").to_matrix();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i + j == 3 { 1.0 } else { 0.0 };
                assert_eq!(xx.get(i, j), Complex64::new(want, 0.0));
            }
        }
    }

    #[test]
    fn eigenvalue_examples() {
        let id = DenseMatrix::identity(4).hermitian_eigenvalues().unwrap();
        assert!(id.iter().all(|x| (x - 1.0).abs() < 1e-12));
        let z = p("Z").to_matrix().hermitian_eigenvalues().unwrap();
        assert!((z[0] + 1.0).abs() < 1e-12 && (z[1] - 1.0).abs() < 1e-12);
        let y = p("Y").to_matrix().hermitian_eigenvalues().unwrap();
        assert!((y[0] + 1.0).abs() < 1e-12 && (y[1] - 1.0).abs() < 1e-12);
        assert_eq!(
            p("iZ").to_matrix().hermitian_eigenvalues(),
            Err(PauliError::NotHermitian)
        );
    }

    #[test]
    fn norms() {
        assert!((DenseMatrix::identity(3).operator_norm().unwrap() - 1.0).abs() < 1e-12);
        let two = DenseMatrix::identity(3).scale(Complex64::new(2.0, 0.0));
        assert!((two.operator_norm().unwrap() - 2.0).abs() < 1e-12);
        // nilpotent Jordan block: singular values {1, 0}
        let j = DenseMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!((j.operator_norm().unwrap() - 1.0).abs() < 1e-12);
        assert!((p("iX").to_matrix().operator_norm().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dense_symmetric_spectrum() {
        // tridiagonal 2,-1: eigenvalues 2 - 2 cos(k pi / (n+1))
        let n = 6;
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match (i as i64 - j as i64).abs() {
                        0 => 2.0,
                        1 => -1.0,
                        _ => 0.0,
                    })
                    .collect()
            })
            .collect();
        let ev = DenseMatrix::from_real_rows(&rows).unwrap().hermitian_eigenvalues().unwrap();
        for (k, e) in ev.iter().enumerate() {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((e - want).abs() < 1e-10, "{k}: {e} vs {want}");
        }
    }
}
