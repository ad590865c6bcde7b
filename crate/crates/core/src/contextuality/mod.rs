//! Point-line configurations of Pauli observables: Bell-CHSH quadruples,
//! Mermin squares and pentagrams, Fano heptads, and the two-qubit
//! generalized quadrangle, with exhaustive Kochen–Specker value checks.

mod bell;
mod fano;
mod geometry;
mod gq;
mod ks;
mod magic;

use thiserror::Error;

use crate::pauli::PauliError;

pub use bell::{
    bell_census, bell_decomposition, bell_quadruples, chsh_identity_residual, chsh_matrix, chsh_operator,
    BellQuadruple, CHSH_IDENTITY_TOL,
};
pub use fano::{fano_heptads, is_closed_under_products, projective_plane_axioms, PlaneAxioms};
pub use geometry::{line_product_sign, PointLineGeometry};
pub use gq::{gq22, verify_gq22, Gq22Report};
pub use ks::{ks_colorable, parity_obstruction, KsAssignment, MAX_KS_POINTS};
pub use magic::{canonical_mermin_square, good_lines, pentagram_census, pentagram_census_for, PentagramCensus};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ContextError {
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error("qubit count {0} is not supported here")]
    QubitRange(usize),
    #[error("points act on {0} and {1} qubits")]
    QubitMismatch(usize, usize),
    #[error("the identity cannot be a point")]
    IdentityPoint,
    #[error("point {0} appears twice")]
    DuplicatePoint(String),
    #[error("line refers to missing point {0}")]
    PointIndex(usize),
    #[error("empty line")]
    EmptyLine,
    #[error("{0} and {1} anticommute on a line")]
    NotCommuting(String, String),
    #[error("line product is {0}, not a multiple of the identity")]
    NotClosed(String),
    #[error("line product has an imaginary phase")]
    ImaginaryProduct,
    #[error("stated line signs differ from the computed ones")]
    SignMismatch,
    #[error("{0} points exceed the exhaustive-search cap")]
    TooManyPoints(usize),
    #[error("invalid Bell quadruple: {0}")]
    BellPattern(&'static str),
    #[error("C² identity violated by {0:e}")]
    IdentityViolated(f64),
    #[error("invalid geometry JSON: {0}")]
    Json(String),
}
