//! Dessins d'enfants as pairs of permutations on half-edges.
//!
//! `alpha` rotates half-edges around black vertices, `beta` around white
//! vertices, and the face permutation is `gamma = (alpha·beta)^-1` with the
//! product read left to right, so that `alpha·beta·gamma = 1`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartography::CosetTable;
use crate::perm::{Perm, PermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypermapError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("hypermap has no half-edges")]
    Empty,
    #[error("generators do not act transitively on the half-edges")]
    Disconnected,
    #[error("Euler characteristic gives a non-integral or negative genus")]
    EulerInconsistent,
    #[error("invalid hypermap JSON: {0}")]
    Json(String),
    #[error("coset table needs actions for rho0 and rho1")]
    IncompleteTable,
}

/// Cycle types of `alpha`, `beta` and `gamma`, each sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Passport {
    pub black: Vec<usize>,
    pub white: Vec<usize>,
    pub faces: Vec<usize>,
}

impl Passport {
    pub fn degree(&self) -> usize {
        self.black.iter().sum()
    }

    /// Sum over the three partitions of `n − parts`; equals `2n − 2 + 2g`.
    pub fn ramification_total(&self) -> usize {
        let n = self.degree();
        [&self.black, &self.white, &self.faces]
            .iter()
            .map(|p| n - p.len())
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypermap {
    alpha: Perm,
    beta: Perm,
}

#[derive(Serialize, Deserialize)]
struct HypermapJson {
    n: usize,
    alpha: Vec<Vec<usize>>,
    beta: Vec<Vec<usize>>,
}

impl Hypermap {
    /// Both permutations must share the same positive degree. Connectivity is
    /// not required here; [`Hypermap::genus`] and friends reject disconnected
    /// maps.
    pub fn new(alpha: Perm, beta: Perm) -> Result<Self, HypermapError> {
        if alpha.degree() != beta.degree() {
            return Err(PermError::DegreeMismatch(alpha.degree(), beta.degree()).into());
        }
        if alpha.degree() == 0 {
            return Err(HypermapError::Empty);
        }
        Ok(Hypermap { alpha, beta })
    }

    /// From 1-based cycle notation, e.g. `("(2,7,6,5)(3,4)", "(1,2)(3,5)")`.
    pub fn parse(n: usize, alpha: &str, beta: &str) -> Result<Self, HypermapError> {
        Self::new(Perm::parse_cycles(n, alpha)?, Perm::parse_cycles(n, beta)?)
    }

    /// `alpha` is the coset action of `rho0`, `beta` that of `rho1`.
    pub fn from_coset_action(t: &CosetTable) -> Result<Self, HypermapError> {
        match (t.action("rho0"), t.action("rho1")) {
            (Some(a), Some(b)) => Self::new(a.clone(), b.clone()),
            _ => Err(HypermapError::IncompleteTable),
        }
    }

    /// One black vertex, one white vertex, one half-edge.
    pub fn trivial() -> Self {
        Hypermap {
            alpha: Perm::identity(1),
            beta: Perm::identity(1),
        }
    }

    pub fn half_edges(&self) -> usize {
        self.alpha.degree()
    }

    pub fn alpha(&self) -> &Perm {
        &self.alpha
    }

    pub fn beta(&self) -> &Perm {
        &self.beta
    }

    pub fn gamma(&self) -> Perm {
        self.alpha.then(&self.beta).inverse()
    }

    /// Orbit of half-edge 1 under `<alpha, beta>` covers everything.
    pub fn is_connected(&self) -> bool {
        let n = self.half_edges();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in [self.alpha.apply(x), self.beta.apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    fn connected(&self) -> Result<(), HypermapError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(HypermapError::Disconnected)
        }
    }

    /// `(B, W, F)`: cycle counts of `alpha`, `beta`, `gamma`.
    pub fn vertex_face_counts(&self) -> Result<(usize, usize, usize), HypermapError> {
        self.connected()?;
        Ok((
            self.alpha.cycles().len(),
            self.beta.cycles().len(),
            self.gamma().cycles().len(),
        ))
    }

    /// Genus from `2 − 2g = B + W + F − n`.
    pub fn genus(&self) -> Result<usize, HypermapError> {
        let (b, w, f) = self.vertex_face_counts()?;
        let twice = 2 + self.half_edges() as i64 - (b + w + f) as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(HypermapError::EulerInconsistent);
        }
        Ok((twice / 2) as usize)
    }

    pub fn passport(&self) -> Result<Passport, HypermapError> {
        self.connected()?;
        Ok(Passport {
            black: self.alpha.cycle_type(),
            white: self.beta.cycle_type(),
            faces: self.gamma().cycle_type(),
        })
    }

    /// Same map with half-edges renamed by `relabel` (conjugation).
    pub fn relabeled(&self, relabel: &Perm) -> Hypermap {
        Hypermap {
            alpha: relabel.conjugate(&self.alpha),
            beta: relabel.conjugate(&self.beta),
        }
    }

    /// `{n, alpha: [cycles], beta: [cycles]}`, 1-based, fixed points included.
    pub fn to_json(&self) -> serde_json::Value {
        let one_based = |p: &Perm| -> Vec<Vec<usize>> {
            p.cycles()
                .into_iter()
                .map(|c| c.into_iter().map(|x| x + 1).collect())
                .collect()
        };
        serde_json::to_value(HypermapJson {
            n: self.half_edges(),
            alpha: one_based(&self.alpha),
            beta: one_based(&self.beta),
        })
        .expect("hypermap serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, HypermapError> {
        let raw: HypermapJson =
            serde_json::from_value(value.clone()).map_err(|e| HypermapError::Json(e.to_string()))?;
        Self::new(
            Perm::from_cycles(raw.n, &raw.alpha)?,
            Perm::from_cycles(raw.n, &raw.beta)?,
        )
    }

    /// Bipartite drawing: black vertices are `alpha` cycles, white vertices
    /// `beta` cycles, one edge per half-edge.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "graph {name} {{").unwrap();
        let black = self.alpha.cycles();
        let white = self.beta.cycles();
        let mut black_of = vec![0; self.half_edges()];
        let mut white_of = vec![0; self.half_edges()];
        for (i, c) in black.iter().enumerate() {
            writeln!(s, "  b{i} [shape=circle, style=filled, fillcolor=black, label=\"\", width=0.2];").unwrap();
            for &x in c {
                black_of[x] = i;
            }
        }
        for (i, c) in white.iter().enumerate() {
            writeln!(s, "  w{i} [shape=circle, label=\"\", width=0.2];").unwrap();
            for &x in c {
                white_of[x] = i;
            }
        }
        for x in 0..self.half_edges() {
            writeln!(s, "  b{} -- w{} [label=\"{}\"];", black_of[x], white_of[x], x + 1).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Permutation data of the drawings used throughout the crate.
pub mod known {
    use super::Hypermap;

    /// Tree-like dessin on 7 half-edges carrying the Fano plane.
    pub fn fano_dessin() -> Hypermap {
        Hypermap::parse(7, "(1)(2,7,6,5)(3,4)", "(1,2)(3,5)(4)(6)(7)").expect("valid cycles")
    }

    /// The CHSH commutation square drawn as a dessin on 8 half-edges.
    pub fn chsh_dessin() -> Hypermap {
        Hypermap::parse(8, "(1,8)(2,3)(4,5)(6,7)", "(1,2)(3,4)(5,6)(7,8)").expect("valid cycles")
    }

    /// Dessin on 9 half-edges carrying the Mermin square.
    pub fn mermin_square_dessin() -> Hypermap {
        Hypermap::parse(9, "(3,9,6,5,2,7)(1,8,4)", "(1)(3)(9)(2,5)(4,7)(6,8)").expect("valid cycles")
    }
}

#[cfg(test)]
mod tests {
    use super::known::*;
    use super::*;

    #[test]
    fn fano_counts() {
        let m = fano_dessin();
        assert_eq!(m.vertex_face_counts().unwrap(), (3, 5, 1));
        assert_eq!(m.genus().unwrap(), 0);
        let p = m.passport().unwrap();
        assert_eq!(p.black, [4, 2, 1]);
        assert_eq!(p.white, [2, 2, 1, 1, 1]);
        assert_eq!(p.faces, [7]);
        assert_eq!(p.ramification_total(), 2 * 7 - 2);
    }

    #[test]
    fn square_counts() {
        let m = mermin_square_dessin();
        assert_eq!(m.vertex_face_counts().unwrap(), (2, 6, 3));
        assert_eq!(m.genus().unwrap(), 0);
    }

    #[test]
    fn chsh_passport() {
        let p = chsh_dessin().passport().unwrap();
        assert_eq!(p.black, [2, 2, 2, 2]);
        assert_eq!(p.white, [2, 2, 2, 2]);
        assert_eq!(p.faces, [4, 4]);
        assert!(chsh_dessin().is_connected());
    }

    #[test]
    fn trivial_map() {
        let m = Hypermap::trivial();
        assert_eq!(m.vertex_face_counts().unwrap(), (1, 1, 1));
        assert_eq!(m.genus().unwrap(), 0);
        let p = m.passport().unwrap();
        assert_eq!((p.black, p.white, p.faces), (vec![1], vec![1], vec![1]));
    }

    #[test]
    fn disconnected_maps_are_rejected() {
        let m = Hypermap::parse(2, "()", "()").unwrap();
        assert!(!m.is_connected());
        assert_eq!(m.genus(), Err(HypermapError::Disconnected));
        assert_eq!(m.passport(), Err(HypermapError::Disconnected));
    }

    #[test]
    fn gamma_closes_the_product() {
        let m = fano_dessin();
        assert!(m.alpha().then(m.beta()).then(&m.gamma()).is_identity());
    }

    #[test]
    fn json_round_trip() {
        let m = mermin_square_dessin();
        let v = m.to_json();
        assert_eq!(v["n"], 9);
        assert_eq!(Hypermap::from_json(&v).unwrap(), m);
        assert!(Hypermap::from_json(&serde_json::json!({"n": 2, "alpha": [[1, 3]], "beta": []})).is_err());
    }

    #[test]
    fn dot_draws_every_half_edge() {
        let dot = fano_dessin().to_dot("fano");
        assert_eq!(dot.matches(" -- ").count(), 7);
        assert_eq!(dot.matches("fillcolor=black").count(), 3);
    }
}
