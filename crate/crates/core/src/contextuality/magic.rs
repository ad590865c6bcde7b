use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::geometry::hermitian;
use super::{ContextError, PointLineGeometry};
use crate::pauli::PauliObservable;

/// The 3×3 two-qubit grid
///
/// ```text
/// XI  XX  IX
/// IZ  ZZ  ZI
/// XZ  YY  ZX
/// ```
///
/// Points are numbered row-major; lines are the three rows, then the three
/// columns. Only the middle column `{XX, YY, ZZ}` multiplies to `-II`.
pub fn canonical_mermin_square() -> PointLineGeometry {
    let points = ["XI", "XX", "IX", "IZ", "ZZ", "ZI", "XZ", "YY", "ZX"]
        .map(hermitian)
        .to_vec();
    let lines = vec![
        vec![0, 1, 2],
        vec![3, 4, 5],
        vec![6, 7, 8],
        vec![0, 3, 6],
        vec![1, 4, 7],
        vec![2, 5, 8],
    ];
    PointLineGeometry::new(points, lines).expect("grid lines are commuting and closed")
}

/// All 4-sets `{a, b, c, abc}` of mutually commuting nonidentity observables
/// with `a, b, c` independent, i.e. product `±I`. Entries index into
/// [`PauliObservable::nonidentity`]; each set is sorted and the list is
/// sorted.
pub fn good_lines(n: usize) -> Result<Vec<[usize; 4]>, ContextError> {
    if !(1..=3).contains(&n) {
        return Err(ContextError::QubitRange(n));
    }
    let obs = PauliObservable::nonidentity(n)?;
    let index = |o: &PauliObservable| o.projective_index() - 1;
    let comm = |i: usize, j: usize| obs[i].symplectic_form(&obs[j]) == 0;
    let mut out = Vec::new();
    for a in 0..obs.len() {
        for b in a + 1..obs.len() {
            if !comm(a, b) {
                continue;
            }
            let ab = index(&obs[a].mul_unchecked(&obs[b]));
            for c in b + 1..obs.len() {
                if c == ab || !comm(a, c) || !comm(b, c) {
                    continue;
                }
                let d = index(&obs[a].mul_unchecked(&obs[b]).mul_unchecked(&obs[c]));
                if d > c {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    Ok(out)
}

/// Result of the exhaustive pentagram search.
#[derive(Debug, Clone, Serialize)]
pub struct PentagramCensus {
    pub qubits: usize,
    pub good_lines: usize,
    /// Pentagram-shaped configurations regardless of signs.
    pub shapes: usize,
    /// `histogram[k]` = shapes with exactly `k` negative lines.
    pub negative_line_histogram: [usize; 6],
    /// Magic members (odd number of negative lines), in canonical order.
    #[serde(skip)]
    pub pentagrams: Vec<PointLineGeometry>,
}

impl PentagramCensus {
    pub fn count(&self) -> usize {
        self.pentagrams.len()
    }

    /// One JSON object per line, in census order.
    pub fn write_json_lines<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for p in &self.pentagrams {
            serde_json::to_writer(&mut out, &p.to_json())?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

/// Three-qubit Mermin pentagrams.
pub fn pentagram_census() -> PentagramCensus {
    pentagram_census_for(3).expect("three qubits are in range")
}

/// Five good lines pairwise meeting in exactly one point with no point on
/// three lines. Lines are extended in increasing index order, so each
/// configuration is found once; the root level runs in parallel and results
/// are concatenated in root order.
pub fn pentagram_census_for(n: usize) -> Result<PentagramCensus, ContextError> {
    let lines = good_lines(n)?;
    let obs = PauliObservable::nonidentity(n)?;
    let masks: Vec<u64> = lines
        .iter()
        .map(|l| l.iter().fold(0u64, |m, &p| m | 1 << p))
        .collect();
    // meets[i]: later lines meeting line i in exactly one point
    let meets: Vec<Vec<usize>> = (0..masks.len())
        .map(|i| {
            (i + 1..masks.len())
                .filter(|&j| (masks[i] & masks[j]).count_ones() == 1)
                .collect()
        })
        .collect();

    let per_root: Vec<Vec<[usize; 5]>> = (0..masks.len())
        .into_par_iter()
        .map(|root| {
            let mut found = Vec::new();
            let mut chosen = vec![root];
            extend(&masks, &meets, &mut chosen, 0, &mut found);
            found
        })
        .collect();

    let mut histogram = [0usize; 6];
    let mut pentagrams = Vec::new();
    let mut shapes = 0;
    for five in per_root.into_iter().flatten() {
        shapes += 1;
        let g = pentagram_geometry(&obs, &five.map(|i| lines[i]))?;
        let neg = g.negative_line_count();
        histogram[neg] += 1;
        if neg % 2 == 1 {
            pentagrams.push(g);
        }
    }
    Ok(PentagramCensus {
        qubits: n,
        good_lines: lines.len(),
        shapes,
        negative_line_histogram: histogram,
        pentagrams,
    })
}

fn extend(
    masks: &[u64],
    meets: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    doubled: u64,
    found: &mut Vec<[usize; 5]>,
) {
    if chosen.len() == 5 {
        found.push([chosen[0], chosen[1], chosen[2], chosen[3], chosen[4]]);
        return;
    }
    let last = *chosen.last().expect("root is always chosen");
    'next: for &cand in &meets[last] {
        let m = masks[cand];
        if m & doubled != 0 {
            continue;
        }
        let mut new_doubled = doubled;
        for &c in chosen.iter() {
            let meet = m & masks[c];
            if meet.count_ones() != 1 {
                continue 'next;
            }
            new_doubled |= meet;
        }
        chosen.push(cand);
        extend(masks, meets, chosen, new_doubled, found);
        chosen.pop();
    }
}

fn pentagram_geometry(obs: &[PauliObservable], lines: &[[usize; 4]; 5]) -> Result<PointLineGeometry, ContextError> {
    let mut pts: Vec<usize> = lines.iter().flatten().copied().collect();
    pts.sort_unstable();
    pts.dedup();
    let local = |p: usize| pts.binary_search(&p).expect("point of a chosen line");
    let local_lines = lines.iter().map(|l| l.iter().map(|&p| local(p)).collect()).collect();
    PointLineGeometry::new(pts.iter().map(|&p| obs[p]).collect(), local_lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contextuality::ks_colorable;

    #[test]
    fn square_signs() {
        let sq = canonical_mermin_square();
        assert!(sq.is_square_shape());
        assert_eq!(sq.signs(), &[1, 1, 1, 1, -1, 1]);
        let neg: Vec<String> = sq.line_observables(4).iter().map(|o| o.to_string()).collect();
        assert_eq!(neg, ["XX", "ZZ", "YY"]);
        assert_eq!(sq.sign_product(), -1);
        assert_eq!(ks_colorable(&sq).unwrap(), None);
    }

    #[test]
    fn good_line_counts() {
        // 135 maximal isotropic subspaces of the three-qubit space, 7 hyperplane
        // complements each
        assert_eq!(good_lines(3).unwrap().len(), 135 * 7);
        assert!(good_lines(2).unwrap().is_empty());
    }

    #[test]
    fn two_qubits_have_no_pentagrams() {
        let c = pentagram_census_for(2).unwrap();
        assert_eq!(c.count(), 0);
        assert_eq!(c.shapes, 0);
    }
}
