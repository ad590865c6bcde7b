use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::ContextError;
use crate::capacity::SmallGraph;
use crate::pauli::{PauliObservable, Phase};

/// Points are projective observables (stored as their phase `+1`
/// representatives); every line is a mutually commuting set whose ordered
/// product is `sign · identity`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointLineGeometry {
    points: Vec<PauliObservable>,
    lines: Vec<Vec<usize>>,
    signs: Vec<i8>,
}

/// Sign `s` with `o_1 · o_2 ⋯ o_k = s · I`, multiplying the Hermitian
/// representatives left to right.
pub fn line_product_sign(obs: &[PauliObservable]) -> Result<i8, ContextError> {
    let first = obs.first().ok_or(ContextError::EmptyLine)?;
    for (i, a) in obs.iter().enumerate() {
        for b in &obs[i + 1..] {
            if !a.commutes(b)? {
                return Err(ContextError::NotCommuting(a.to_string(), b.to_string()));
            }
        }
    }
    let mut acc = PauliObservable::identity(first.qubits())?;
    for o in obs {
        acc = acc.multiply(&o.hermitian_representative())?;
    }
    if !acc.is_identity_up_to_phase() {
        return Err(ContextError::NotClosed(acc.hermitian_representative().to_string()));
    }
    acc.phase().sign().ok_or(ContextError::ImaginaryProduct)
}

#[derive(Serialize, Deserialize)]
struct GeometryJson {
    points: Vec<PauliObservable>,
    lines: Vec<Vec<usize>>,
    signs: Vec<i8>,
}

impl PointLineGeometry {
    pub fn new(points: Vec<PauliObservable>, lines: Vec<Vec<usize>>) -> Result<Self, ContextError> {
        let points: Vec<PauliObservable> = points.iter().map(|p| p.hermitian_representative()).collect();
        if let Some(first) = points.first() {
            if let Some(bad) = points.iter().find(|p| p.qubits() != first.qubits()) {
                return Err(ContextError::QubitMismatch(first.qubits(), bad.qubits()));
            }
        }
        let mut seen = HashSet::new();
        for p in &points {
            if p.is_identity_up_to_phase() {
                return Err(ContextError::IdentityPoint);
            }
            if !seen.insert(*p) {
                return Err(ContextError::DuplicatePoint(p.to_string()));
            }
        }
        let mut signs = Vec::with_capacity(lines.len());
        for line in &lines {
            if let Some(&bad) = line.iter().find(|&&i| i >= points.len()) {
                return Err(ContextError::PointIndex(bad));
            }
            let obs: Vec<PauliObservable> = line.iter().map(|&i| points[i]).collect();
            signs.push(line_product_sign(&obs)?);
        }
        Ok(PointLineGeometry { points, lines, signs })
    }

    pub fn points(&self) -> &[PauliObservable] {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn qubits(&self) -> usize {
        self.points.first().map_or(0, PauliObservable::qubits)
    }

    pub fn negative_line_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn sign_product(&self) -> i8 {
        self.signs.iter().product()
    }

    pub fn line_observables(&self, line: usize) -> Vec<PauliObservable> {
        self.lines[line].iter().map(|&i| self.points[i]).collect()
    }

    /// Number of lines through each point.
    pub fn point_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.points.len()];
        for line in &self.lines {
            for &p in line {
                deg[p] += 1;
            }
        }
        deg
    }

    /// Lines as point bitmasks (at most 64 points).
    pub fn line_masks(&self) -> Vec<u64> {
        self.lines
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &p| m | 1 << p))
            .collect()
    }

    fn has_shape(&self, points: usize, lines: usize, line_size: usize, per_point: usize) -> bool {
        self.points.len() == points
            && self.lines.len() == lines
            && self.lines.iter().all(|l| l.len() == line_size)
            && self.point_degrees().iter().all(|&d| d == per_point)
    }

    /// 10 points, 5 lines of 4, every point on 2 lines, any two lines meeting
    /// in exactly one point.
    pub fn is_pentagram_shape(&self) -> bool {
        if !self.has_shape(10, 5, 4, 2) {
            return false;
        }
        let masks = self.line_masks();
        masks
            .iter()
            .enumerate()
            .all(|(i, a)| masks[i + 1..].iter().all(|b| (a & b).count_ones() == 1))
    }

    pub fn is_square_shape(&self) -> bool {
        self.has_shape(9, 6, 3, 2)
    }

    pub fn is_fano_shape(&self) -> bool {
        self.has_shape(7, 7, 3, 3)
    }

    /// Graph on the points, adjacent when the observables commute.
    pub fn commutation_graph(&self) -> SmallGraph {
        let n = self.points.len();
        let mut g = SmallGraph::empty(n).expect("geometry has at most 128 points");
        for i in 0..n {
            for j in i + 1..n {
                if self.points[i].symplectic_form(&self.points[j]) == 0 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GeometryJson {
            points: self.points.clone(),
            lines: self.lines.clone(),
            signs: self.signs.clone(),
        })
        .expect("geometry serializes")
    }

    /// Parses the JSON form; stated signs must agree with the recomputed ones.
    pub fn from_json(value: &serde_json::Value) -> Result<Self, ContextError> {
        let raw: GeometryJson =
            serde_json::from_value(value.clone()).map_err(|e| ContextError::Json(e.to_string()))?;
        let g = PointLineGeometry::new(raw.points, raw.lines)?;
        if !raw.signs.is_empty() && raw.signs != g.signs {
            return Err(ContextError::SignMismatch);
        }
        Ok(g)
    }

    /// Bipartite point/line incidence graph in DOT.
    pub fn to_dot_incidence(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "graph {name} {{").unwrap();
        for (i, p) in self.points.iter().enumerate() {
            writeln!(s, "  p{i} [label=\"{p}\", shape=circle];").unwrap();
        }
        for (j, (line, sign)) in self.lines.iter().zip(&self.signs).enumerate() {
            let tag = if *sign < 0 { "-" } else { "+" };
            writeln!(s, "  l{j} [label=\"L{j} ({tag})\", shape=box];").unwrap();
            for p in line {
                writeln!(s, "  l{j} -- p{p};").unwrap();
            }
        }
        s.push_str("}\n");
        s
    }

    /// Commutation graph in DOT; lines with sign `-1` are drawn bold.
    pub fn to_dot_commutation(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "graph {name} {{").unwrap();
        for (i, p) in self.points.iter().enumerate() {
            writeln!(s, "  p{i} [label=\"{p}\"];").unwrap();
        }
        let negative: Vec<u64> = self
            .line_masks()
            .into_iter()
            .zip(&self.signs)
            .filter(|(_, &sg)| sg < 0)
            .map(|(m, _)| m)
            .collect();
        let g = self.commutation_graph();
        for (i, j) in g.edges() {
            let pair = 1u64 << i | 1u64 << j;
            let style = if negative.iter().any(|m| m & pair == pair) {
                " [style=bold]"
            } else {
                ""
            };
            writeln!(s, "  p{i} -- p{j}{style};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn hermitian(s: &str) -> PauliObservable {
    s.parse::<PauliObservable>()
        .expect("static Pauli literal")
        .with_phase(Phase::PLUS_ONE)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_is_order_independent_for_commuting_factors() {
        let obs = [hermitian("XX"), hermitian("YY"), hermitian("ZZ")];
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perms {
            let ordered: Vec<_> = p.iter().map(|&i| obs[i]).collect();
            assert_eq!(line_product_sign(&ordered).unwrap(), -1);
        }
    }

    #[test]
    fn rejects_invalid_lines() {
        let pts = vec![hermitian("XI"), hermitian("ZI"), hermitian("YI")];
        assert!(matches!(
            PointLineGeometry::new(pts.clone(), vec![vec![0, 1, 2]]),
            Err(ContextError::NotCommuting(..))
        ));
        let pts = vec![hermitian("XI"), hermitian("IX")];
        assert!(matches!(
            PointLineGeometry::new(pts.clone(), vec![vec![0, 1]]),
            Err(ContextError::NotClosed(..))
        ));
        assert!(matches!(
            PointLineGeometry::new(pts.clone(), vec![vec![0, 5]]),
            Err(ContextError::PointIndex(5))
        ));
        assert!(matches!(
            PointLineGeometry::new(vec![hermitian("XI"), hermitian("-XI")], vec![]),
            Err(ContextError::DuplicatePoint(..))
        ));
    }

    #[test]
    fn json_round_trip_and_sign_check() {
        let g = PointLineGeometry::new(
            vec![hermitian("XX"), hermitian("YY"), hermitian("ZZ")],
            vec![vec![0, 1, 2]],
        )
        .unwrap();
        let v = g.to_json();
        assert_eq!(v["points"][1], "YY");
        assert_eq!(v["signs"][0], -1);
        assert_eq!(PointLineGeometry::from_json(&v).unwrap(), g);
        let mut bad = v.clone();
        bad["signs"][0] = serde_json::json!(1);
        assert_eq!(PointLineGeometry::from_json(&bad), Err(ContextError::SignMismatch));
    }

    #[test]
    fn dot_output_mentions_every_point() {
        let g = PointLineGeometry::new(
            vec![hermitian("XX"), hermitian("YY"), hermitian("ZZ")],
            vec![vec![0, 1, 2]],
        )
        .unwrap();
        let dot = g.to_dot_commutation("square_line");
        assert!(dot.contains("\"YY\"") && dot.contains("style=bold"));
        assert!(g.to_dot_incidence("x").contains("L0 (-)"));
    }
}
