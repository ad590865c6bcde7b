//! Fixtures shared by the benchmarks in `benches/`.

use num_complex::Complex64;
use qudessin_core::belyi::Polynomial;

/// `∏ (z − r)^m` over a fixed spread of roots with multiplicities 1 to 3,
/// total degree `3·k`.
pub fn clustered_polynomial(k: usize) -> Polynomial {
    let mut roots = Vec::new();
    for j in 0..k {
        let r = Complex64::from_polar(1.0 + 0.25 * j as f64, 2.1 * j as f64);
        roots.extend(std::iter::repeat_n(r, j % 3 + 1));
    }
    Polynomial::from_roots(&roots)
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixture_degree() {
        assert_eq!(super::clustered_polynomial(4).degree(), 1 + 2 + 3 + 1);
    }
}
