//! Exact Pauli-operator algebra in the binary symplectic representation,
//! together with a dense-matrix image used as an oracle and for spectra.

mod matrix;
mod observable;

use thiserror::Error;

pub use matrix::{DenseMatrix, MAX_EIGEN_DIM};
pub use observable::{Factor, PauliObservable, Phase, MAX_QUBITS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PauliError {
    #[error("qubit count {0} outside 1..=8")]
    QubitCount(usize),
    #[error("bit strings exceed {n} qubits")]
    BitsOutOfRange { n: usize },
    #[error("operators act on {0} and {1} qubits")]
    QubitMismatch(usize, usize),
    #[error("cannot parse Pauli string {0:?}")]
    Parse(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix dimension {0} exceeds the eigensolver cap")]
    TooLarge(usize),
    #[error("Jacobi iteration did not converge")]
    NoConvergence,
}
