//! Conjugacy classes of finite-index subgroups by coset-table backtracking.
//!
//! Tables are filled in scan order (coset, column). Each open entry is tried
//! against every existing coset and one fresh coset. A partial table is
//! discarded when relabeling it from another root coset yields a
//! lexicographically smaller standard table, so exactly one table per
//! conjugacy class survives.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fpgroup::{FinitelyPresentedGroup, Letter, Word};
use super::permgroup::PermutationGroup;
use super::GroupError;
use crate::perm::Perm;

pub const MAX_INDEX: usize = 12;
const UNDEF: usize = usize::MAX;

/// Transitive action of each generator on the cosets of a subgroup; coset
/// 0 is the subgroup itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetTable {
    index: usize,
    generators: Vec<String>,
    actions: Vec<Perm>,
    canonical: bool,
}

#[derive(Serialize, Deserialize)]
struct CosetTableJson {
    index: usize,
    generators: Vec<String>,
    actions: Vec<Vec<usize>>,
    canonical: bool,
}

impl CosetTable {
    /// Checks degrees and transitivity; the canonical flag is computed.
    pub fn from_actions(generators: Vec<String>, actions: Vec<Perm>) -> Result<Self, GroupError> {
        if generators.len() != actions.len() || actions.is_empty() {
            return Err(GroupError::Presentation("one action per generator required".into()));
        }
        let index = actions[0].degree();
        if let Some(p) = actions.iter().find(|p| p.degree() != index) {
            return Err(GroupError::DegreeMismatch(index, p.degree()));
        }
        let mut t = CosetTable {
            index,
            generators,
            actions,
            canonical: false,
        };
        if !t.is_transitive() {
            return Err(GroupError::Intransitive);
        }
        t.canonical = t.canonical_relabeling().is_identity();
        Ok(t)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn actions(&self) -> &[Perm] {
        &self.actions
    }

    pub fn action(&self, name: &str) -> Option<&Perm> {
        self.generators.iter().position(|g| g == name).map(|i| &self.actions[i])
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.index];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for p in &self.actions {
                let y = p.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.index
    }

    /// Coset action of a word, letters applied left to right.
    pub fn word_action(&self, w: &[Letter]) -> Perm {
        w.iter().fold(Perm::identity(self.index), |acc, l| {
            let p = &self.actions[l.generator];
            if l.inverse {
                acc.then(&p.inverse())
            } else {
                acc.then(p)
            }
        })
    }

    /// Every relator acts trivially on every coset.
    pub fn satisfies(&self, g: &FinitelyPresentedGroup) -> bool {
        g.generators() == self.generators.as_slice()
            && g.relators().iter().all(|r| self.word_action(r).is_identity())
    }

    /// Table rows `(g0, g0⁻¹, g1, g1⁻¹, ...)` as seen from coset `root`,
    /// with cosets renamed in order of first appearance.
    fn standard_from(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let cols: Vec<Perm> = self
            .actions
            .iter()
            .flat_map(|p| [p.clone(), p.inverse()])
            .collect();
        let mut new_of = vec![UNDEF; self.index];
        let mut old_of = vec![root];
        new_of[root] = 0;
        let mut rows = Vec::with_capacity(self.index * cols.len());
        let mut p = 0;
        while p < old_of.len() {
            let old = old_of[p];
            for c in &cols {
                let img = c.apply(old);
                if new_of[img] == UNDEF {
                    new_of[img] = old_of.len();
                    old_of.push(img);
                }
                rows.push(new_of[img]);
            }
            p += 1;
        }
        (rows, new_of)
    }

    /// Relabeling (old coset → new coset) onto the minimal standard table.
    pub fn canonical_relabeling(&self) -> Perm {
        let (_, map) = (0..self.index)
            .map(|r| self.standard_from(r))
            .min_by(|a, b| a.0.cmp(&b.0))
            .expect("nonempty table");
        Perm::from_images(map).expect("relabeling is a bijection")
    }

    /// Minimal representative of the conjugacy class of the subgroup.
    pub fn canonical_form(&self) -> CosetTable {
        let r = self.canonical_relabeling();
        CosetTable {
            index: self.index,
            generators: self.generators.clone(),
            actions: self.actions.iter().map(|p| r.conjugate(p)).collect(),
            canonical: true,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CosetTableJson {
            index: self.index,
            generators: self.generators.clone(),
            actions: self
                .actions
                .iter()
                .map(|p| p.images().iter().map(|x| x + 1).collect())
                .collect(),
            canonical: self.canonical,
        })
        .expect("table serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, GroupError> {
        let raw: CosetTableJson =
            serde_json::from_value(value.clone()).map_err(|e| GroupError::Json(e.to_string()))?;
        let actions = raw
            .actions
            .into_iter()
            .map(|imgs| {
                let zero: Option<Vec<usize>> = imgs.iter().map(|&x| x.checked_sub(1)).collect();
                Perm::from_images(zero.ok_or_else(|| GroupError::Json("cosets are 1-based".into()))?)
                    .map_err(|e| GroupError::Json(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let t = Self::from_actions(raw.generators, actions)?;
        if raw.index != t.index {
            return Err(GroupError::Json("index does not match the actions".into()));
        }
        Ok(t)
    }
}

/// Permutation group generated by the coset actions.
pub fn coset_group(t: &CosetTable) -> PermutationGroup {
    PermutationGroup::new(t.index(), t.actions().to_vec()).expect("index within the degree cap")
}

/// Column layout of the reduced presentation.
struct Layout {
    width: usize,
    inverse_col: Vec<usize>,
    /// Column carrying generator `g`.
    gen_col: Vec<usize>,
    relators: Vec<Vec<usize>>,
}

impl Layout {
    fn new(g: &FinitelyPresentedGroup) -> Self {
        let invol = g.involutions();
        let mut gen_col = Vec::new();
        let mut inverse_col = Vec::new();
        for &inv in &invol {
            let c = inverse_col.len();
            gen_col.push(c);
            if inv {
                inverse_col.push(c);
            } else {
                inverse_col.push(c + 1);
                inverse_col.push(c);
            }
        }
        let col = |l: &Letter| {
            let c = gen_col[l.generator];
            if l.inverse {
                inverse_col[c]
            } else {
                c
            }
        };
        let relators = g
            .relators()
            .iter()
            .filter(|w| !(w.len() == 2 && w[0] == w[1] && invol[w[0].generator]))
            .map(|w| w.iter().map(col).collect())
            .collect();
        Layout {
            width: inverse_col.len(),
            inverse_col,
            gen_col,
            relators,
        }
    }
}

#[derive(Clone)]
struct State {
    table: Vec<usize>,
    count: usize,
}

struct Search<'a> {
    layout: &'a Layout,
    n: usize,
}

impl Search<'_> {
    fn root(&self) -> State {
        State {
            table: vec![UNDEF; self.n * self.layout.width],
            count: 1,
        }
    }

    fn first_open(&self, s: &State) -> Option<(usize, usize)> {
        let w = self.layout.width;
        s.table[..s.count * w].iter().position(|&x| x == UNDEF).map(|i| (i / w, i % w))
    }

    fn relators_ok(&self, s: &State) -> bool {
        let w = self.layout.width;
        for rel in &self.layout.relators {
            for c in 0..s.count {
                let mut x = c;
                let mut done = true;
                for &k in rel {
                    let y = s.table[x * w + k];
                    if y == UNDEF {
                        done = false;
                        break;
                    }
                    x = y;
                }
                if done && x != c {
                    return false;
                }
            }
        }
        true
    }

    /// `false` if some other root gives a smaller standard table on the
    /// already determined prefix.
    fn canonical_ok(&self, s: &State, new_of: &mut [usize], old_of: &mut Vec<usize>) -> bool {
        let w = self.layout.width;
        'roots: for r in 1..s.count {
            new_of[..s.count].fill(UNDEF);
            old_of.clear();
            old_of.push(r);
            new_of[r] = 0;
            let mut p = 0;
            while p < old_of.len() {
                let old = old_of[p];
                for k in 0..w {
                    let cur = s.table[p * w + k];
                    let img = s.table[old * w + k];
                    if cur == UNDEF || img == UNDEF {
                        continue 'roots;
                    }
                    if new_of[img] == UNDEF {
                        new_of[img] = old_of.len();
                        old_of.push(img);
                    }
                    let lab = new_of[img];
                    if lab < cur {
                        return false;
                    }
                    if lab > cur {
                        continue 'roots;
                    }
                }
                p += 1;
            }
        }
        true
    }

    fn children(&self, s: &State, scratch: &mut (Vec<usize>, Vec<usize>)) -> (Vec<State>, bool) {
        let Some((c, k)) = self.first_open(s) else {
            return (Vec::new(), true);
        };
        let w = self.layout.width;
        let k2 = self.layout.inverse_col[k];
        let top = if s.count < self.n { s.count + 1 } else { s.count };
        let mut out = Vec::new();
        for t in 0..top {
            if t < s.count && s.table[t * w + k2] != UNDEF {
                continue;
            }
            let mut child = s.clone();
            if t == s.count {
                child.count += 1;
            }
            child.table[c * w + k] = t;
            child.table[t * w + k2] = c;
            if self.relators_ok(&child) && self.canonical_ok(&child, &mut scratch.0, &mut scratch.1) {
                out.push(child);
            }
        }
        (out, false)
    }

    fn run(&self, s: State, found: &mut Vec<State>, scratch: &mut (Vec<usize>, Vec<usize>)) {
        let (kids, complete) = self.children(&s, scratch);
        if complete {
            if s.count == self.n {
                found.push(s);
            }
            return;
        }
        for k in kids {
            self.run(k, found, scratch);
        }
    }

    fn scratch(&self) -> (Vec<usize>, Vec<usize>) {
        (vec![UNDEF; self.n], Vec::with_capacity(self.n))
    }
}

/// One coset table per conjugacy class of subgroups of index exactly `n`,
/// canonical and sorted. Generator actions are given for every generator of
/// `g`, including the eliminated ones.
pub fn low_index_subgroups(g: &FinitelyPresentedGroup, n: usize) -> Result<Vec<CosetTable>, GroupError> {
    if n == 0 || n > MAX_INDEX {
        return Err(GroupError::IndexCap(n));
    }
    let reduction = g.eliminate_generators();
    let layout = Layout::new(&reduction.group);
    let search = Search { layout: &layout, n };

    // split the forest at a shallow depth, then search the subtrees in parallel
    let target = 8 * rayon::current_num_threads().max(1);
    let mut frontier = vec![search.root()];
    let mut finished = Vec::new();
    let mut scratch = search.scratch();
    while frontier.len() < target {
        let mut next = Vec::new();
        let mut grew = false;
        for s in frontier {
            let (kids, complete) = search.children(&s, &mut scratch);
            if complete {
                if s.count == n {
                    finished.push(s);
                }
            } else {
                grew = true;
                next.extend(kids);
            }
        }
        frontier = next;
        if !grew {
            break;
        }
    }
    let found: Vec<State> = frontier
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut out = Vec::new();
            let mut scratch = search.scratch();
            search.run(s, &mut out, &mut scratch);
            out
        })
        .collect();
    finished.extend(found);

    let w = layout.width;
    let mut tables: Vec<CosetTable> = finished
        .into_iter()
        .map(|s| {
            let reduced: Vec<Perm> = layout
                .gen_col
                .iter()
                .map(|&c| Perm::from_images((0..n).map(|x| s.table[x * w + c]).collect()).expect("complete table"))
                .collect();
            let actions = reduction
                .substitution
                .iter()
                .map(|word| evaluate(word, &reduced, n))
                .collect();
            CosetTable {
                index: n,
                generators: g.generators().to_vec(),
                actions,
                canonical: false,
            }
            .canonical_form()
        })
        .collect();
    tables.sort();
    Ok(tables)
}

fn evaluate(w: &Word, actions: &[Perm], n: usize) -> Perm {
    w.iter().fold(Perm::identity(n), |acc, l| {
        let p = &actions[l.generator];
        if l.inverse {
            acc.then(&p.inverse())
        } else {
            acc.then(p)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn counts(g: &FinitelyPresentedGroup, upto: usize) -> Vec<usize> {
        (1..=upto).map(|n| low_index_subgroups(g, n).unwrap().len()).collect()
    }

    #[test]
    fn cartographic_small_indices() {
        // independent brute force over (α, involution β) pairs up to conjugacy
        let g = FinitelyPresentedGroup::cartographic();
        assert_eq!(counts(&g, 6), [1, 3, 3, 10, 15, 56]);
    }

    #[test]
    fn free_group_and_cyclic() {
        let r = Letter::new;
        let z = FinitelyPresentedGroup::new(vec!["a".into()], vec![]).unwrap();
        // Z has exactly one subgroup of each index
        assert_eq!(counts(&z, 5), [1, 1, 1, 1, 1]);
        let z6 = FinitelyPresentedGroup::new(vec!["a".into()], vec![vec![r(0); 6]]).unwrap();
        assert_eq!(counts(&z6, 7), [1, 1, 1, 0, 0, 1, 0]);
        // free group of rank 2: 1, 3, 13, 71 subgroups in 1, 3, 7, 26 classes
        let f2 = FinitelyPresentedGroup::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        assert_eq!(counts(&f2, 4), [1, 3, 7, 26]);
    }

    #[test]
    fn s3_presentation() {
        let r = Letter::new;
        let s3 = FinitelyPresentedGroup::new(
            vec!["a".into(), "b".into()],
            vec![vec![r(0); 3], vec![r(1); 2], vec![r(0), r(1), r(0), r(1)]],
        )
        .unwrap();
        // classes: the whole group, A3, ⟨transposition⟩, trivial
        assert_eq!(counts(&s3, 6), [1, 1, 1, 0, 0, 1]);
    }

    #[test]
    fn tables_are_valid_and_distinct() {
        let g = FinitelyPresentedGroup::cartographic();
        let tables = low_index_subgroups(&g, 5).unwrap();
        let mut forms = HashSet::new();
        for t in &tables {
            assert!(t.satisfies(&g));
            assert!(t.is_canonical());
            assert!(coset_group(t).is_transitive());
            assert!(forms.insert(t.canonical_form()));
        }
    }

    #[test]
    fn index_cap() {
        let g = FinitelyPresentedGroup::cartographic();
        assert!(matches!(low_index_subgroups(&g, 13), Err(GroupError::IndexCap(13))));
        assert!(matches!(low_index_subgroups(&g, 0), Err(GroupError::IndexCap(0))));
    }

    #[test]
    fn json_round_trip() {
        let g = FinitelyPresentedGroup::cartographic();
        for t in low_index_subgroups(&g, 4).unwrap() {
            assert_eq!(CosetTable::from_json(&t.to_json()).unwrap(), t);
        }
    }

    #[test]
    fn canonical_form_is_conjugation_invariant() {
        let g = FinitelyPresentedGroup::cartographic();
        let t = &low_index_subgroups(&g, 6).unwrap()[17];
        let shift = Perm::from_images(vec![3, 5, 0, 1, 4, 2]).unwrap();
        let moved = CosetTable::from_actions(
            t.generators().to_vec(),
            t.actions().iter().map(|p| shift.conjugate(p)).collect(),
        )
        .unwrap();
        assert_eq!(moved.canonical_form(), *t);
    }
}
