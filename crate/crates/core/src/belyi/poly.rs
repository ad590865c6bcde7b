use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Dense polynomial with complex coefficients, constant term first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Trailing (highest-order) exact zeros are dropped.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·z^k`.
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut v = vec![Complex64::new(0.0, 0.0); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `∏ (z − r)`.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        roots.iter().fold(Self::constant(Complex64::new(1.0, 0.0)), |acc, &r| {
            &acc * &Self::new(vec![-r, Complex64::new(1.0, 0.0)])
        })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Complex64::new(1.0, 0.0)), |acc, _| &acc * self)
    }

    /// Drops high-order coefficients below `rel · max |c|`.
    pub fn trimmed(&self, rel: f64) -> Self {
        let max = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let mut v = self.coeffs.clone();
        while v.last().is_some_and(|c| c.norm() <= rel * max) {
            v.pop();
        }
        Self::new(v)
    }

    /// Number of exactly vanishing low-order coefficients, i.e. the order of
    /// the root at zero.
    pub fn zero_root_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| **c == Complex64::new(0.0, 0.0)).count()
    }

    /// Divides by `z^k`; the low coefficients are assumed zero.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).copied().collect())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Polynomial, i: usize| p.coeffs.get(i).copied().unwrap_or_default();
        Polynomial::new((0..n).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Polynomial::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn arithmetic() {
        let p = Polynomial::from_roots(&[c(1.0), c(-1.0)]);
        assert_eq!(p, Polynomial::from_real(&[-1.0, 0.0, 1.0]));
        assert_eq!(p.derivative(), Polynomial::from_real(&[0.0, 2.0]));
        assert_eq!(p.eval(c(3.0)), c(8.0));
        assert_eq!((&p - &p).degree(), 0);
        assert!((&p - &p).is_zero());
        assert_eq!(p.pow(2).degree(), 4);
    }

    #[test]
    fn zero_roots() {
        let p = Polynomial::monomial(c(2.0), 3);
        assert_eq!(p.zero_root_order(), 3);
        assert_eq!(p.shift_down(3), Polynomial::constant(c(2.0)));
        let q = Polynomial::from_real(&[1.0, 2.0, 1e-20]).trimmed(1e-13);
        assert_eq!(q.degree(), 1);
    }
}
