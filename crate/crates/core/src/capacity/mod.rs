//! Small-graph invariants and Shannon capacity bounds.
//!
//! The Lovász number is only computed for regular edge-transitive graphs,
//! where it has the closed form `θ = −n·λ_min / (λ_max − λ_min)` in terms of
//! the adjacency spectrum. Other graphs are refused with a diagnostic.

mod graph;
mod search;
mod symmetry;

use serde::Serialize;
use thiserror::Error;

use crate::pauli::{DenseMatrix, PauliError};

pub use graph::{strong_product, SmallGraph, MAX_VERTICES};
pub use search::{
    chromatic_number, clique_number, edge_chromatic_number, independence_number, is_k_colourable, maximum_clique,
};
pub use symmetry::{automorphisms, find_isomorphism, is_edge_transitive, is_isomorphic, is_vertex_transitive};

/// Largest graph on which edge-transitivity is verified by automorphism search.
pub const MAX_THETA_VERTICES: usize = 12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("{0} vertices exceed the cap of 128")]
    TooLarge(usize),
    #[error("vertex {0} out of range")]
    Vertex(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("invalid graph JSON: {0}")]
    Json(String),
    #[error("Lovász theta closed form needs a regular edge-transitive graph: {0}")]
    ThetaPrecondition(String),
    #[error(transparent)]
    Spectrum(#[from] PauliError),
}

/// Adjacency eigenvalues, ascending.
pub fn adjacency_spectrum(g: &SmallGraph) -> Result<Vec<f64>, GraphError> {
    let m = DenseMatrix::from_real_rows(&g.adjacency_rows())?;
    Ok(m.hermitian_eigenvalues()?)
}

pub fn lovasz_theta_edge_transitive(g: &SmallGraph) -> Result<f64, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::ThetaPrecondition("empty vertex set".into()));
    }
    if n > MAX_THETA_VERTICES {
        return Err(GraphError::ThetaPrecondition(format!(
            "{n} vertices exceed the verification cap of {MAX_THETA_VERTICES}"
        )));
    }
    if g.regular_degree().is_none() {
        return Err(GraphError::ThetaPrecondition("graph is not regular".into()));
    }
    if g.edge_count() == 0 {
        return Ok(n as f64);
    }
    if !is_edge_transitive(g) {
        return Err(GraphError::ThetaPrecondition("graph is not edge-transitive".into()));
    }
    let eig = adjacency_spectrum(g)?;
    let lo = eig[0];
    let hi = eig[eig.len() - 1];
    Ok(-(n as f64) * lo / (hi - lo))
}

/// `ω(G) ≤ θ(Ḡ) ≤ χ(G)`.
#[derive(Debug, Clone, Serialize)]
pub struct ComplementSandwich {
    pub omega: usize,
    pub theta_complement: f64,
    pub chi: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CapacityReport {
    pub vertices: usize,
    pub alpha: usize,
    pub alpha_witness: Vec<usize>,
    pub omega: usize,
    pub chi: usize,
    pub theta: Option<f64>,
    /// Why θ is missing, when it is.
    pub theta_refusal: Option<String>,
    /// `(k, α(G^⊠k), witness)` for each computed power.
    pub power_alphas: Vec<(usize, usize, Vec<usize>)>,
    pub shannon_lower: f64,
    /// θ when available, otherwise the clique-cover number χ(Ḡ).
    pub shannon_upper: f64,
    pub complement_sandwich: Option<ComplementSandwich>,
}

impl CapacityReport {
    /// Lower and upper bounds coincide.
    pub fn is_tight(&self, tol: f64) -> bool {
        (self.shannon_upper - self.shannon_lower).abs() <= tol
    }
}

/// Capacity sandwich `α ≤ max_k α(G^⊠k)^{1/k} ≤ Θ ≤ θ`, using strong powers
/// up to `max_k` that fit in 128 vertices.
pub fn capacity_report(g: &SmallGraph, max_k: usize) -> Result<CapacityReport, GraphError> {
    let (alpha, alpha_witness) = independence_number(g);
    let omega = clique_number(g);
    let chi = chromatic_number(g);
    let (theta, theta_refusal) = match lovasz_theta_edge_transitive(g) {
        Ok(t) => (Some(t), None),
        Err(GraphError::ThetaPrecondition(why)) => (None, Some(why)),
        Err(e) => return Err(e),
    };
    let mut power_alphas = vec![(1, alpha, alpha_witness.clone())];
    let mut power = g.clone();
    let mut lower = alpha as f64;
    for k in 2..=max_k {
        power = strong_product(&power, g)?;
        let (a, w) = independence_number(&power);
        lower = lower.max((a as f64).powf(1.0 / k as f64));
        power_alphas.push((k, a, w));
    }
    let upper = match theta {
        Some(t) => t,
        None => chromatic_number(&g.complement()) as f64,
    };
    let complement = g.complement();
    let complement_sandwich = lovasz_theta_edge_transitive(&complement).ok().map(|t| ComplementSandwich {
        omega,
        theta_complement: t,
        chi,
        holds: omega as f64 <= t + 1e-9 && t <= chi as f64 + 1e-9,
    });
    Ok(CapacityReport {
        vertices: g.vertex_count(),
        alpha,
        alpha_witness,
        omega,
        chi,
        theta,
        theta_refusal,
        power_alphas,
        shannon_lower: lower,
        shannon_upper: upper,
        complement_sandwich,
    })
}
