//! Finitely presented groups, low-index subgroup enumeration, permutation
//! groups and the dessin searches built on them.
//!
//! A subgroup of index `n` of the cartographic group `<ρ0, ρ1, ρ2 | ρ1², ρ0ρ1ρ2>`
//! is the same thing as a connected map on `n` half-edges: `α` is the coset
//! action of `ρ0` and `β` that of `ρ1`.

mod fpgroup;
mod iso;
mod lowindex;
mod permgroup;
mod stabilize;
mod targets;

use serde::Serialize;
use thiserror::Error;

use crate::dessins::{Hypermap, HypermapError, Passport};

pub use fpgroup::{free_reduce, invert_word, FinitelyPresentedGroup, Letter, Reduction, Word};
pub use iso::{find_isomorphism, is_isomorphic, MAX_ISO_ORDER};
pub use lowindex::{coset_group, low_index_subgroups, CosetTable, MAX_INDEX};
pub use permgroup::{PermutationGroup, MAX_DEGREE, MAX_ENUMERATED_ORDER};
pub use stabilize::{max_stabilized_lines, Incidence, LineStabilization, MAX_STABILIZE_DEGREE};
pub use targets::{
    filter_by_target, generated_by_subset, grid_group, grid_lines, grid_preserving_permutations, TargetGroup,
    TargetMatcher,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("index {0} outside 1..=12")]
    IndexCap(usize),
    #[error("degree {0} exceeds the cap")]
    DegreeCap(usize),
    #[error("degree mismatch: expected {0}, got {1}")]
    DegreeMismatch(usize, usize),
    #[error("group order {0} exceeds the cap for this operation")]
    OrderCap(u64),
    #[error("generator actions are not transitive")]
    Intransitive,
    #[error("presentation error: {0}")]
    Presentation(String),
    #[error("unknown target group {0:?} (known: psl27, square72, s5)")]
    UnknownTarget(String),
    #[error("incidence error: {0}")]
    Incidence(String),
    #[error("invalid coset table JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Hypermap(#[from] HypermapError),
}

/// One class passing the target filter.
#[derive(Debug, Clone, Serialize)]
pub struct SearchHit {
    /// Position in the sorted low-index list.
    pub position: usize,
    #[serde(serialize_with = "table_json")]
    pub table: CosetTable,
    pub group_order: u64,
    pub passport: Passport,
    pub genus: usize,
    pub stabilization: LineStabilization,
}

fn table_json<S: serde::Serializer>(t: &CosetTable, s: S) -> Result<S::Ok, S::Error> {
    t.to_json().serialize(s)
}

#[derive(Debug, Clone, Serialize)]
pub struct DessinSearch {
    pub index: usize,
    pub target: String,
    pub classes: usize,
    pub hits: Vec<SearchHit>,
    /// Best line count over all hits.
    pub max_stabilized: usize,
    pub lines_total: usize,
}

impl DessinSearch {
    /// Some hit carries the whole incidence.
    pub fn realizable(&self) -> bool {
        self.hits.iter().any(|h| h.stabilization.all_lines_preserved)
    }
}

/// Low-index classes of the cartographic group at `index`, filtered by
/// `target`, each measured against `incidence`.
pub fn dessin_search(index: usize, target: &TargetGroup, incidence: &Incidence) -> Result<DessinSearch, GroupError> {
    let g = FinitelyPresentedGroup::cartographic();
    let tables = low_index_subgroups(&g, index)?;
    let classes = tables.len();
    let mut hits = Vec::new();
    for (position, table) in filter_by_target(&tables, target)? {
        let group = coset_group(&table);
        let map = Hypermap::from_coset_action(&table)?;
        let stabilization = max_stabilized_lines(&group, incidence)?;
        hits.push(SearchHit {
            position,
            group_order: group.order(),
            passport: map.passport()?,
            genus: map.genus()?,
            stabilization,
            table,
        });
    }
    let max_stabilized = hits.iter().map(|h| h.stabilization.max_stabilized).max().unwrap_or(0);
    Ok(DessinSearch {
        index,
        target: target.name().to_string(),
        classes,
        hits,
        max_stabilized,
        lines_total: incidence.lines.len(),
    })
}
