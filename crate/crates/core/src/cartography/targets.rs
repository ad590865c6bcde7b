use std::fmt;
use std::str::FromStr;

use super::iso::is_isomorphic;
use super::lowindex::{coset_group, CosetTable};
use super::permgroup::PermutationGroup;
use super::GroupError;
use crate::perm::Perm;

/// Points `3r + c` of the 3×3 grid.
pub fn grid_lines() -> Vec<Vec<usize>> {
    let mut lines: Vec<Vec<usize>> = (0..3).map(|r| (0..3).map(|c| 3 * r + c).collect()).collect();
    lines.extend((0..3).map(|c| (0..3).map(|r| 3 * r + c).collect::<Vec<_>>()));
    lines
}

/// Every permutation of the nine grid points that maps grid lines to grid
/// lines, by exhaustive search over all `9!` candidates.
pub fn grid_preserving_permutations() -> Vec<Perm> {
    let masks: Vec<u64> = grid_lines()
        .iter()
        .map(|l| l.iter().fold(0, |m, &p| m | 1 << p))
        .collect();
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..9).collect();
    permute(&mut images, 0, &mut |imgs| {
        let p = Perm::from_images(imgs.to_vec()).expect("permutation");
        if masks.iter().all(|&m| masks.contains(&p.apply_mask(m))) {
            out.push(p);
        }
    });
    out.sort();
    out
}

fn permute(a: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == a.len() {
        visit(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permute(a, k + 1, visit);
        a.swap(k, i);
    }
}

/// Small generating set picked greedily from a full element list.
pub fn generated_by_subset(degree: usize, elements: &[Perm]) -> PermutationGroup {
    let mut gens: Vec<Perm> = Vec::new();
    let mut g = PermutationGroup::new(degree, vec![]).expect("degree within cap");
    for e in elements {
        if !g.contains(e) {
            gens.push(e.clone());
            g = PermutationGroup::new(degree, gens.clone()).expect("degree within cap");
        }
    }
    g
}

/// Symmetry group of the 3×3 grid, order 72.
pub fn grid_group() -> PermutationGroup {
    generated_by_subset(9, &grid_preserving_permutations())
}

/// Groups the searches look for among coset groups.
#[derive(Debug, Clone)]
pub enum TargetGroup {
    /// Order 168 and simple; this characterizes PSL(2,7).
    Psl27,
    /// Isomorphic to the grid symmetry group.
    Square72,
    /// Isomorphic to the symmetric group on five letters.
    S5,
    /// Isomorphic to the given group.
    Isomorphic(PermutationGroup),
}

impl TargetGroup {
    pub const NAMES: [&'static str; 3] = ["psl27", "square72", "s5"];

    pub fn name(&self) -> &str {
        match self {
            TargetGroup::Psl27 => "psl27",
            TargetGroup::Square72 => "square72",
            TargetGroup::S5 => "s5",
            TargetGroup::Isomorphic(_) => "custom",
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            TargetGroup::Psl27 => 168,
            TargetGroup::Square72 => 72,
            TargetGroup::S5 => 120,
            TargetGroup::Isomorphic(g) => g.order(),
        }
    }

    /// Concrete group to compare against, where the test is an isomorphism.
    pub fn reference(&self) -> Option<PermutationGroup> {
        match self {
            TargetGroup::Psl27 => None,
            TargetGroup::Square72 => Some(grid_group()),
            TargetGroup::S5 => Some(PermutationGroup::symmetric(5).expect("S5")),
            TargetGroup::Isomorphic(g) => Some(g.clone()),
        }
    }

    pub fn matches(&self, g: &PermutationGroup) -> Result<bool, GroupError> {
        self.matcher().matches(g)
    }

    /// A matcher holding the reference group, for repeated tests.
    pub fn matcher(&self) -> TargetMatcher {
        TargetMatcher {
            order: self.order(),
            reference: self.reference(),
        }
    }
}

pub struct TargetMatcher {
    order: u64,
    reference: Option<PermutationGroup>,
}

impl TargetMatcher {
    pub fn matches(&self, g: &PermutationGroup) -> Result<bool, GroupError> {
        if g.order() != self.order {
            return Ok(false);
        }
        match &self.reference {
            None => g.is_simple(),
            Some(r) => is_isomorphic(g, r),
        }
    }
}

impl FromStr for TargetGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "psl27" => Ok(TargetGroup::Psl27),
            "square72" => Ok(TargetGroup::Square72),
            "s5" => Ok(TargetGroup::S5),
            other => Err(GroupError::UnknownTarget(other.to_string())),
        }
    }
}

impl fmt::Display for TargetGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Tables whose coset group matches `target`, with their positions in `tables`.
pub fn filter_by_target(tables: &[CosetTable], target: &TargetGroup) -> Result<Vec<(usize, CosetTable)>, GroupError> {
    let m = target.matcher();
    let mut out = Vec::new();
    for (i, t) in tables.iter().enumerate() {
        if m.matches(&coset_group(t))? {
            out.push((i, t.clone()));
        }
    }
    Ok(out)
}
