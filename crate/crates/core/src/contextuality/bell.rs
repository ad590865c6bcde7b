use num_complex::Complex64;
use rayon::prelude::*;

use super::geometry::hermitian;
use super::ContextError;
use crate::pauli::{DenseMatrix, PauliObservable};

/// Tolerance for the entry-wise check of `C² = 4I + [σ1,σ3][σ2,σ4]`.
pub const CHSH_IDENTITY_TOL: f64 = 1e-12;

/// `(σ1, σ2, σ3, σ4)`: Bob measures σ1/σ3, Alice σ2/σ4. Within each party the
/// two settings anticommute; across parties everything commutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BellQuadruple {
    sigma: [PauliObservable; 4],
}

impl BellQuadruple {
    pub fn new(
        s1: PauliObservable,
        s2: PauliObservable,
        s3: PauliObservable,
        s4: PauliObservable,
    ) -> Result<Self, ContextError> {
        let sigma = [s1, s2, s3, s4].map(|s| s.hermitian_representative());
        let n = sigma[0].qubits();
        for s in &sigma {
            if s.qubits() != n {
                return Err(ContextError::QubitMismatch(n, s.qubits()));
            }
            if s.is_identity_up_to_phase() {
                return Err(ContextError::IdentityPoint);
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if sigma[i] == sigma[j] {
                    return Err(ContextError::DuplicatePoint(sigma[i].to_string()));
                }
            }
        }
        let comm = |a: usize, b: usize| sigma[a].symplectic_form(&sigma[b]) == 0;
        if comm(0, 2) {
            return Err(ContextError::BellPattern("σ1 and σ3 must anticommute"));
        }
        if comm(1, 3) {
            return Err(ContextError::BellPattern("σ2 and σ4 must anticommute"));
        }
        if !(comm(1, 0) && comm(1, 2) && comm(3, 0) && comm(3, 2)) {
            return Err(ContextError::BellPattern(
                "σ2 and σ4 must commute with σ1 and σ3",
            ));
        }
        Ok(BellQuadruple { sigma })
    }

    /// `(IX, XI, IZ, ZI)`.
    pub fn standard() -> Self {
        Self::new(hermitian("IX"), hermitian("XI"), hermitian("IZ"), hermitian("ZI"))
            .expect("standard quadruple satisfies the CHSH pattern")
    }

    pub fn sigmas(&self) -> &[PauliObservable; 4] {
        &self.sigma
    }

    pub fn qubits(&self) -> usize {
        self.sigma[0].qubits()
    }
}

/// `C = σ2(σ1 + σ3) + σ4(σ3 − σ1)` with no pattern checks.
pub fn chsh_matrix(sigma: &[PauliObservable; 4]) -> DenseMatrix {
    let m = sigma.map(|s| s.to_matrix());
    let left = &m[1] * &(&m[0] + &m[2]);
    let right = &m[3] * &(&m[2] - &m[0]);
    &left + &right
}

/// Largest entry-wise deviation from `C² = 4I + [σ1,σ3][σ2,σ4]`.
pub fn chsh_identity_residual(sigma: &[PauliObservable; 4]) -> f64 {
    let c = chsh_matrix(sigma);
    let m = sigma.map(|s| s.to_matrix());
    let dim = c.dim();
    let rhs = &DenseMatrix::identity(dim).scale(Complex64::new(4.0, 0.0))
        + &(&m[0].commutator(&m[2]) * &m[1].commutator(&m[3]));
    (&c * &c).max_abs_diff(&rhs)
}

/// The CHSH operator of a valid quadruple, after confirming the square identity.
pub fn chsh_operator(q: &BellQuadruple) -> Result<DenseMatrix, ContextError> {
    let residual = chsh_identity_residual(q.sigmas());
    if residual > CHSH_IDENTITY_TOL {
        return Err(ContextError::IdentityViolated(residual));
    }
    Ok(chsh_matrix(q.sigmas()))
}

fn check_qubits(n: usize) -> Result<(), ContextError> {
    if (1..=3).contains(&n) {
        Ok(())
    } else {
        Err(ContextError::QubitRange(n))
    }
}

/// Every Bell quadruple counted by [`bell_census`]: unordered pairs of
/// disjoint anticommuting pairs `{σ1,σ3}`, `{σ2,σ4}` with full cross
/// commutation. The pair with the smaller indices becomes `(σ1, σ3)`.
pub fn bell_quadruples(n: usize) -> Result<Vec<BellQuadruple>, ContextError> {
    check_qubits(n)?;
    let obs = PauliObservable::nonidentity(n)?;
    let mut pairs = Vec::new();
    for i in 0..obs.len() {
        for j in i + 1..obs.len() {
            if obs[i].symplectic_form(&obs[j]) == 1 {
                pairs.push((i, j));
            }
        }
    }
    let comm = |a: usize, b: usize| obs[a].symplectic_form(&obs[b]) == 0;
    let found: Vec<Vec<BellQuadruple>> = (0..pairs.len())
        .into_par_iter()
        .map(|p| {
            let (a, c) = pairs[p];
            pairs[p + 1..]
                .iter()
                .filter(|&&(b, d)| {
                    b != a && b != c && d != a && d != c && comm(b, a) && comm(b, c) && comm(d, a) && comm(d, c)
                })
                .map(|&(b, d)| BellQuadruple {
                    sigma: [obs[a], obs[b], obs[c], obs[d]],
                })
                .collect()
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

pub fn bell_census(n: usize) -> Result<usize, ContextError> {
    Ok(bell_quadruples(n)?.len())
}

/// Number of anticommuting pairs of nonidentity observables and, for one
/// such pair, the number of anticommuting pairs inside its commutant. The
/// census equals `pairs · inner / 2`.
pub fn bell_decomposition(n: usize) -> Result<(usize, usize), ContextError> {
    check_qubits(n)?;
    let obs = PauliObservable::nonidentity(n)?;
    let anti = |a: &PauliObservable, b: &PauliObservable| a.symplectic_form(b) == 1;
    let mut pairs = 0;
    let mut first = None;
    for i in 0..obs.len() {
        for j in i + 1..obs.len() {
            if anti(&obs[i], &obs[j]) {
                pairs += 1;
                first.get_or_insert((i, j));
            }
        }
    }
    let Some((a, c)) = first else {
        return Ok((0, 0));
    };
    let commutant: Vec<&PauliObservable> = obs
        .iter()
        .enumerate()
        .filter(|&(k, o)| k != a && k != c && !anti(o, &obs[a]) && !anti(o, &obs[c]))
        .map(|(_, o)| o)
        .collect();
    let mut inner = 0;
    for i in 0..commutant.len() {
        for j in i + 1..commutant.len() {
            if anti(commutant[i], commutant[j]) {
                inner += 1;
            }
        }
    }
    Ok((pairs, inner))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_is_enforced() {
        let bad = BellQuadruple::new(hermitian("IX"), hermitian("XI"), hermitian("IX"), hermitian("ZI"));
        assert!(matches!(bad, Err(ContextError::DuplicatePoint(_))));
        let bad = BellQuadruple::new(hermitian("IX"), hermitian("XI"), hermitian("XX"), hermitian("ZI"));
        assert!(matches!(bad, Err(ContextError::BellPattern(_))));
        let bad = BellQuadruple::new(hermitian("IX"), hermitian("XX"), hermitian("IZ"), hermitian("ZI"));
        assert!(matches!(bad, Err(ContextError::BellPattern(_))));
    }

    #[test]
    fn one_qubit_has_no_quadruples() {
        assert_eq!(bell_census(1).unwrap(), 0);
        assert_eq!(bell_census(4), Err(ContextError::QubitRange(4)));
    }

    #[test]
    fn commuting_quadruple_gives_no_violation() {
        let s = [hermitian("ZII"), hermitian("IZI"), hermitian("IIZ"), hermitian("ZZI")];
        let c = chsh_matrix(&s);
        let c2 = &c * &c;
        assert!(c2.approx_eq(&DenseMatrix::identity(8).scale(Complex64::new(4.0, 0.0)), 1e-12));
        assert!((c.operator_norm().unwrap() - 2.0).abs() < 1e-9);
        assert!(chsh_identity_residual(&s) < 1e-12);
    }
}
