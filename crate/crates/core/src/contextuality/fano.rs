use std::collections::BTreeSet;

use serde::Serialize;

use super::{ContextError, PointLineGeometry};
use crate::pauli::PauliObservable;

/// Outcome of the three projective-plane axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlaneAxioms {
    pub lines_meet_once: bool,
    pub points_joined_once: bool,
    pub has_quadrangle: bool,
}

impl PlaneAxioms {
    pub fn holds(&self) -> bool {
        self.lines_meet_once && self.points_joined_once && self.has_quadrangle
    }
}

/// (i) two lines meet in a unique point, (ii) two distinct points lie on a
/// unique line, (iii) some four points have no three collinear.
pub fn projective_plane_axioms(g: &PointLineGeometry) -> PlaneAxioms {
    let masks = g.line_masks();
    let n = g.points().len();
    let lines_meet_once = masks
        .iter()
        .enumerate()
        .all(|(i, a)| masks[i + 1..].iter().all(|b| (a & b).count_ones() == 1));
    let points_joined_once = (0..n).all(|p| {
        (p + 1..n).all(|q| {
            let pair = 1u64 << p | 1u64 << q;
            masks.iter().filter(|&&m| m & pair == pair).count() == 1
        })
    });
    let collinear3 = |s: u64| masks.iter().any(|&m| (m & s).count_ones() >= 3);
    let mut has_quadrangle = false;
    'outer: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = [a, b, c, d].iter().fold(0u64, |m, &x| m | 1 << x);
                    if !collinear3(s) {
                        has_quadrangle = true;
                        break 'outer;
                    }
                }
            }
        }
    }
    PlaneAxioms {
        lines_meet_once,
        points_joined_once,
        has_quadrangle,
    }
}

/// True when the product of any two points (up to phase) is again a point.
pub fn is_closed_under_products(g: &PointLineGeometry) -> bool {
    let pts: BTreeSet<PauliObservable> = g.points().iter().copied().collect();
    g.points().iter().all(|a| {
        g.points().iter().all(|b| {
            a == b || pts.contains(&a.mul_unchecked(b).hermitian_representative())
        })
    })
}

/// Every maximal set of 7 mutually commuting nonidentity three-qubit
/// observables, each with its 7 lines `{a, b, ab}`.
pub fn fano_heptads(n: usize) -> Result<Vec<PointLineGeometry>, ContextError> {
    if n != 3 {
        return Err(ContextError::QubitRange(n));
    }
    let obs = PauliObservable::nonidentity(3)?;
    let idx = |o: PauliObservable| o.hermitian_representative().projective_index() - 1;
    let comm = |i: usize, j: usize| obs[i].symplectic_form(&obs[j]) == 0;
    let mut spans: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..obs.len() {
        for b in a + 1..obs.len() {
            if !comm(a, b) {
                continue;
            }
            let ab = idx(obs[a].mul_unchecked(&obs[b]));
            for c in b + 1..obs.len() {
                if c == ab || !comm(a, c) || !comm(b, c) {
                    continue;
                }
                let mut span: Vec<usize> = (1u8..8)
                    .map(|m| {
                        let mut acc = PauliObservable::identity(3).expect("three qubits");
                        for (bit, &g) in [a, b, c].iter().enumerate() {
                            if m >> bit & 1 == 1 {
                                acc = acc.mul_unchecked(&obs[g]);
                            }
                        }
                        idx(acc)
                    })
                    .collect();
                span.sort_unstable();
                spans.insert(span);
            }
        }
    }
    spans
        .into_iter()
        .map(|span| {
            let points: Vec<PauliObservable> = span.iter().map(|&i| obs[i]).collect();
            let mut lines = Vec::new();
            for i in 0..7 {
                for j in i + 1..7 {
                    let k = span
                        .binary_search(&idx(obs[span[i]].mul_unchecked(&obs[span[j]])))
                        .expect("span is closed");
                    if k > j {
                        lines.push(vec![i, j, k]);
                    }
                }
            }
            PointLineGeometry::new(points, lines)
        })
        .collect()
}
