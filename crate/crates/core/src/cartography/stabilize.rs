//! How many lines of a point-line incidence a permutation group can
//! stabilize, over all identifications of its points with the incidence
//! points.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::permgroup::PermutationGroup;
use super::GroupError;
use crate::contextuality::PointLineGeometry;

pub const MAX_STABILIZE_DEGREE: usize = 10;

/// Bare incidence structure: points `0..points`, lines as point lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Incidence {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
}

impl Incidence {
    pub fn new(points: usize, lines: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        if points > 64 || lines.len() > 32 {
            return Err(GroupError::Incidence("at most 64 points and 32 lines".into()));
        }
        if lines.iter().flatten().any(|&p| p >= points) {
            return Err(GroupError::Incidence("line point out of range".into()));
        }
        Ok(Incidence { points, lines })
    }

    /// Lines `{i, i+1, i+3} mod 7`.
    pub fn fano_plane() -> Self {
        Self::new(7, (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect()).expect("valid")
    }

    /// Five lines of four points, any two meeting once: points are the
    /// 2-subsets `{i, j}` of the lines.
    pub fn pentagram() -> Self {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let lines = (0..5)
            .map(|l| (0..10).filter(|&p| pairs[p].0 == l || pairs[p].1 == l).collect())
            .collect();
        Self::new(10, lines).expect("valid")
    }

    pub fn grid() -> Self {
        Self::new(9, super::targets::grid_lines()).expect("valid")
    }

    pub fn masks(&self) -> Vec<u64> {
        self.lines.iter().map(|l| l.iter().fold(0, |m, &p| m | 1 << p)).collect()
    }

    /// Point permutations preserving the line set, from a backtracking search
    /// constrained by `fixed` pairs; stops after the first hit.
    fn automorphism_exists(&self, fixed: (usize, usize)) -> bool {
        let masks = self.masks();
        let mut img = vec![usize::MAX; self.points];
        let mut used = 0u64;
        img[fixed.0] = fixed.1;
        used |= 1 << fixed.1;
        let order: Vec<usize> = std::iter::once(fixed.0).chain((0..self.points).filter(|&p| p != fixed.0)).collect();
        self.aut_search(&masks, &order, 1, &mut img, &mut used)
    }

    fn aut_search(&self, masks: &[u64], order: &[usize], k: usize, img: &mut [usize], used: &mut u64) -> bool {
        // every fully mapped line must land on a line
        for &m in masks {
            let mut image = 0u64;
            let mut complete = true;
            for p in 0..self.points {
                if m >> p & 1 == 1 {
                    if img[p] == usize::MAX {
                        complete = false;
                        break;
                    }
                    image |= 1 << img[p];
                }
            }
            if complete && !masks.contains(&image) {
                return false;
            }
        }
        if k == order.len() {
            return true;
        }
        let p = order[k];
        for q in 0..self.points {
            if *used >> q & 1 == 1 {
                continue;
            }
            img[p] = q;
            *used |= 1 << q;
            let ok = self.aut_search(masks, order, k + 1, img, used);
            *used &= !(1 << q);
            img[p] = usize::MAX;
            if ok {
                return true;
            }
        }
        false
    }

    /// Smallest point of each orbit of the automorphism group.
    pub fn point_orbit_representatives(&self) -> Vec<usize> {
        let mut assigned = vec![false; self.points];
        let mut reps = Vec::new();
        for p in 0..self.points {
            if assigned[p] {
                continue;
            }
            reps.push(p);
            for q in p..self.points {
                if !assigned[q] && (q == p || self.automorphism_exists((p, q))) {
                    assigned[q] = true;
                }
            }
        }
        reps
    }
}

impl From<&PointLineGeometry> for Incidence {
    fn from(g: &PointLineGeometry) -> Self {
        Incidence {
            points: g.points().len(),
            lines: g.lines().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineStabilization {
    pub lines_total: usize,
    pub max_stabilized: usize,
    /// `witness[i]` is the incidence point carried by group point `i`.
    pub witness: Vec<usize>,
    /// Lines (incidence numbering) in the maximal invariant subset under `witness`.
    pub stabilized_lines: Vec<usize>,
    pub all_lines_preserved: bool,
    /// Under `witness`, the group permutes all lines transitively.
    pub transitive_on_lines: bool,
}

struct Stabilizer {
    n: usize,
    /// `image[g][mask]`: image of a subset of group points under generator `g`.
    image: Vec<Vec<u16>>,
    lines_through: Vec<Vec<usize>>,
    line_count: usize,
}

impl Stabilizer {
    /// Largest line subset closed under the generators, as a bit set of lines.
    fn invariant_subset(&self, pulled: &[u16]) -> u32 {
        let mut alive: u32 = if self.line_count == 32 { u32::MAX } else { (1 << self.line_count) - 1 };
        loop {
            let mut next = alive;
            for l in 0..self.line_count {
                if next >> l & 1 == 0 {
                    continue;
                }
                for img in &self.image {
                    let m = img[pulled[l] as usize];
                    let found = (0..self.line_count).any(|k| next >> k & 1 == 1 && pulled[k] == m);
                    if !found {
                        next &= !(1 << l);
                        break;
                    }
                }
            }
            if next == alive {
                return alive;
            }
            alive = next;
        }
    }

    /// Depth-first over bijections extending `phi[..k]`, lexicographic in the
    /// images; returns the best (count, witness, subset) and stops once every
    /// line is kept.
    fn search(
        &self,
        k: usize,
        phi: &mut Vec<usize>,
        used: &mut u64,
        pulled: &mut Vec<u16>,
        best: &mut Option<(usize, Vec<usize>, u32)>,
    ) -> bool {
        if k == self.n {
            let s = self.invariant_subset(pulled);
            let c = s.count_ones() as usize;
            if best.as_ref().is_none_or(|b| c > b.0) {
                *best = Some((c, phi.clone(), s));
            }
            return c == self.line_count;
        }
        for q in 0..self.n {
            if *used >> q & 1 == 1 {
                continue;
            }
            phi.push(q);
            *used |= 1 << q;
            for &l in &self.lines_through[q] {
                pulled[l] |= 1 << k;
            }
            let done = self.search(k + 1, phi, used, pulled, best);
            for &l in &self.lines_through[q] {
                pulled[l] &= !(1 << k);
            }
            *used &= !(1 << q);
            phi.pop();
            if done {
                return true;
            }
        }
        false
    }
}

/// Maximum, over bijections from group points to incidence points, of the
/// largest set of lines mapped onto itself by every generator.
///
/// The first point is only sent to automorphism-orbit representatives of
/// the incidence, which loses no maxima. The witness is the
/// lexicographically first optimal bijection under that restriction.
pub fn max_stabilized_lines(p: &PermutationGroup, inc: &Incidence) -> Result<LineStabilization, GroupError> {
    let n = p.degree();
    if n != inc.points {
        return Err(GroupError::DegreeMismatch(inc.points, n));
    }
    if n > MAX_STABILIZE_DEGREE {
        return Err(GroupError::DegreeCap(n));
    }
    let line_count = inc.lines.len();
    let image: Vec<Vec<u16>> = p
        .generators()
        .iter()
        .map(|g| (0..1u64 << n).map(|m| g.apply_mask(m) as u16).collect())
        .collect();
    let mut lines_through = vec![Vec::new(); n];
    for (l, line) in inc.lines.iter().enumerate() {
        for &q in line {
            lines_through[q].push(l);
        }
    }
    let st = Stabilizer {
        n,
        image,
        lines_through,
        line_count,
    };
    if n == 0 {
        return Ok(LineStabilization {
            lines_total: line_count,
            max_stabilized: line_count,
            witness: vec![],
            stabilized_lines: (0..line_count).collect(),
            all_lines_preserved: true,
            transitive_on_lines: line_count <= 1,
        });
    }

    // tasks: (φ(0), φ(1)) with φ(0) an orbit representative
    let reps = inc.point_orbit_representatives();
    let tasks: Vec<(usize, usize)> = reps
        .iter()
        .flat_map(|&a| (0..n).filter(move |&b| b != a || n == 1).map(move |b| (a, b)))
        .collect();
    let results: Vec<(usize, Vec<usize>, u32)> = tasks
        .par_iter()
        .map(|&(a, b)| {
            let mut phi = vec![a];
            let mut used = 1u64 << a;
            let mut pulled = vec![0u16; line_count];
            for &l in &st.lines_through[a] {
                pulled[l] |= 1;
            }
            let mut best = None;
            if n == 1 {
                st.search(1, &mut phi, &mut used, &mut pulled, &mut best);
            } else {
                phi.push(b);
                used |= 1 << b;
                for &l in &st.lines_through[b] {
                    pulled[l] |= 2;
                }
                st.search(2, &mut phi, &mut used, &mut pulled, &mut best);
            }
            best.expect("at least one bijection")
        })
        .collect();
    let (count, witness, subset) = results
        .into_iter()
        .reduce(|a, b| if b.0 > a.0 { b } else { a })
        .expect("at least one task");

    let stabilized_lines: Vec<usize> = (0..line_count).filter(|&l| subset >> l & 1 == 1).collect();
    let all = count == line_count;
    let transitive_on_lines = all && line_orbit_is_everything(p, inc, &witness);
    Ok(LineStabilization {
        lines_total: line_count,
        max_stabilized: count,
        witness,
        stabilized_lines,
        all_lines_preserved: all,
        transitive_on_lines,
    })
}

fn line_orbit_is_everything(p: &PermutationGroup, inc: &Incidence, phi: &[usize]) -> bool {
    let n = phi.len();
    let mut inverse = vec![0; n];
    for (i, &q) in phi.iter().enumerate() {
        inverse[q] = i;
    }
    let pulled: Vec<u64> = inc
        .lines
        .iter()
        .map(|l| l.iter().fold(0, |m, &q| m | 1 << inverse[q]))
        .collect();
    if pulled.is_empty() {
        return true;
    }
    let mut seen = vec![false; pulled.len()];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(l) = stack.pop() {
        for g in p.generators() {
            let img = g.apply_mask(pulled[l]);
            if let Some(k) = pulled.iter().position(|&m| m == img) {
                if !seen[k] {
                    seen[k] = true;
                    stack.push(k);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dessins::known;
    use crate::perm::Perm;

    fn group_of(m: &crate::dessins::Hypermap) -> PermutationGroup {
        PermutationGroup::new(m.half_edges(), vec![m.alpha().clone(), m.beta().clone()]).unwrap()
    }

    #[test]
    fn standard_incidences() {
        let f = Incidence::fano_plane();
        assert_eq!(f.lines.len(), 7);
        assert_eq!(f.point_orbit_representatives(), [0]);
        let p = Incidence::pentagram();
        assert!(p.lines.iter().all(|l| l.len() == 4));
        assert_eq!(p.point_orbit_representatives(), [0]);
        assert_eq!(Incidence::grid().point_orbit_representatives(), [0]);
        // a path of two lines has two kinds of points
        let path = Incidence::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(path.point_orbit_representatives(), [0, 1]);
    }

    #[test]
    fn fano_group_stabilizes_every_line() {
        let r = max_stabilized_lines(&group_of(&known::fano_dessin()), &Incidence::fano_plane()).unwrap();
        assert_eq!(r.max_stabilized, 7);
        assert!(r.all_lines_preserved && r.transitive_on_lines);
    }

    #[test]
    fn square_group_stabilizes_every_line() {
        let r = max_stabilized_lines(&group_of(&known::mermin_square_dessin()), &Incidence::grid()).unwrap();
        assert_eq!(r.max_stabilized, 6);
        assert!(r.all_lines_preserved);
    }

    #[test]
    fn witness_is_checked_independently() {
        let g = PermutationGroup::cyclic(7).unwrap();
        let inc = Incidence::fano_plane();
        let r = max_stabilized_lines(&g, &inc).unwrap();
        // the 7-cycle is a Singer cycle of the plane
        assert_eq!(r.max_stabilized, 7);
        let phi = Perm::from_images(r.witness.clone()).unwrap();
        let masks = inc.masks();
        let gen = phi.inverse().then(&g.generators()[0]).then(&phi);
        for &m in &masks {
            assert!(masks.contains(&gen.apply_mask(m)));
        }
    }

    #[test]
    fn symmetric_group_keeps_nothing() {
        let s7 = PermutationGroup::symmetric(7).unwrap();
        let r = max_stabilized_lines(&s7, &Incidence::fano_plane()).unwrap();
        assert_eq!(r.max_stabilized, 0);
        assert!(!r.all_lines_preserved);
    }

    #[test]
    fn degree_mismatch() {
        let g = PermutationGroup::cyclic(6).unwrap();
        assert!(matches!(
            max_stabilized_lines(&g, &Incidence::fano_plane()),
            Err(GroupError::DegreeMismatch(7, 6))
        ));
    }
}
