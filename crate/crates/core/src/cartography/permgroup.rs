use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::OnceLock;

use super::GroupError;
use crate::perm::Perm;

pub const MAX_DEGREE: usize = 16;
/// Upper bound for operations that list every element.
pub const MAX_ENUMERATED_ORDER: u64 = 10_000;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// `transversal[y]` maps the base point to `y`.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some(Perm::identity(degree));
        let mut queue = vec![self.base];
        while let Some(x) = queue.pop() {
            let ux = self.transversal[x].clone().expect("orbit point has a representative");
            for s in &self.gens {
                let y = s.apply(x);
                if self.transversal[y].is_none() {
                    self.transversal[y] = Some(ux.then(s));
                    queue.push(y);
                }
            }
        }
    }

    fn orbit(&self) -> impl Iterator<Item = usize> + '_ {
        self.transversal
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_some())
            .map(|(i, _)| i)
    }

    fn orbit_len(&self) -> usize {
        self.orbit().count()
    }
}

/// Deterministic Schreier–Sims stabilizer chain.
#[derive(Debug, Clone)]
struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            if let Some((residue, depth)) = chain.sift_from(g, 0) {
                chain.add_strong_generator(residue, 0, depth);
            }
        }
        chain.close();
        chain
    }

    /// Sifts `g` from level `start`; `None` if it reduces to the identity,
    /// otherwise the residue and the level where sifting stopped.
    fn sift_from(&self, g: &Perm, start: usize) -> Option<(Perm, usize)> {
        let mut h = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let y = h.apply(level.base);
            match &level.transversal[y] {
                Some(u) => h = h.then(&u.inverse()),
                None => return Some((h, j)),
            }
        }
        if h.is_identity() {
            None
        } else {
            Some((h, self.levels.len()))
        }
    }

    /// Adds `g` (which fixes the base points of levels `< from`) as a
    /// generator of levels `from..=to`.
    fn add_strong_generator(&mut self, g: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let base = (0..self.degree)
                .find(|&x| g.apply(x) != x)
                .expect("non-identity residue moves a point");
            self.levels.push(Level::new(base, self.degree));
        }
        for level in &mut self.levels[from..=to] {
            level.gens.push(g.clone());
            level.rebuild_orbit();
        }
    }

    /// Adds sifted Schreier generators until every level is closed.
    fn close(&mut self) {
        loop {
            let mut changed = false;
            let mut i = 0;
            while i < self.levels.len() {
                let level = self.levels[i].clone();
                'scan: for y in level.orbit() {
                    let uy = level.transversal[y].as_ref().expect("orbit point");
                    for s in &level.gens {
                        let ys = s.apply(y);
                        let uys = level.transversal[ys].as_ref().expect("orbit is closed");
                        let schreier = uy.then(s).then(&uys.inverse());
                        if let Some((residue, depth)) = self.sift_from(&schreier, i + 1) {
                            self.add_strong_generator(residue, i + 1, depth);
                            changed = true;
                            break 'scan;
                        }
                    }
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
    }

    fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit_len() as u64).product()
    }

    fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift_from(g, 0).is_none()
    }
}

/// A permutation group on `{0..degree}` given by generators; the stabilizer
/// chain is built on first use.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        if degree > MAX_DEGREE {
            return Err(GroupError::DegreeCap(degree));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch(degree, g.degree()));
        }
        Ok(PermutationGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("degree within cap")
    }

    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![1, 2]]).expect("transposition"));
            gens.push(Perm::from_cycles(n, &[(1..=n).collect()]).expect("long cycle"));
        }
        Self::new(n, gens)
    }

    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        let gens = if n >= 2 {
            vec![Perm::from_cycles(n, &[(1..=n).collect()]).expect("long cycle")]
        } else {
            Vec::new()
        };
        Self::new(n, gens)
    }

    /// Symmetries of a regular `n`-gon acting on its vertices (order `2n`).
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        let rot = Perm::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("rotation");
        let refl = Perm::from_images((0..n).map(|i| (n - i) % n).collect()).expect("reflection");
        Self::new(n, vec![rot, refl])
    }

    /// `(Z2)^k` acting regularly on `2^k` points by XOR.
    pub fn elementary_abelian_2(k: u32) -> Result<Self, GroupError> {
        let n = 1usize << k;
        let gens = (0..k)
            .map(|b| Perm::from_images((0..n).map(|x| x ^ (1 << b)).collect()).expect("xor"))
            .collect();
        Self::new(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    /// Base points of the stabilizer chain.
    pub fn base(&self) -> Vec<usize> {
        self.chain().levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut stack = vec![point];
        let mut out = vec![point];
        while let Some(x) = stack.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// All elements by closure under right multiplication by generators.
    pub fn elements(&self) -> Result<Vec<Perm>, GroupError> {
        let order = self.order();
        if order > MAX_ENUMERATED_ORDER {
            return Err(GroupError::OrderCap(order));
        }
        Ok(closure(self.degree, &self.generators))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.then(b) == b.then(a)))
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Perm]) -> PermutationGroup {
        let mut gens: Vec<Perm> = seeds.iter().filter(|g| !g.is_identity()).cloned().collect();
        loop {
            let current = PermutationGroup::new(self.degree, gens.clone()).expect("same degree");
            let mut extra = None;
            'find: for h in &gens {
                for s in &self.generators {
                    let c = s.conjugate(h);
                    if !current.contains(&c) {
                        extra = Some(c);
                        break 'find;
                    }
                }
            }
            match extra {
                Some(c) => gens.push(c),
                None => return current,
            }
        }
    }

    /// Commutator subgroup.
    pub fn derived_subgroup(&self) -> PermutationGroup {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                comms.push(a.inverse().then(&b.inverse()).then(a).then(b));
            }
        }
        self.normal_closure(&comms)
    }

    /// Order of the abelianization `G / G'`.
    pub fn abelianization_order(&self) -> u64 {
        self.order() / self.derived_subgroup().order()
    }

    pub fn center_order(&self) -> Result<usize, GroupError> {
        Ok(self
            .elements()?
            .iter()
            .filter(|z| self.generators.iter().all(|g| z.then(g) == g.then(z)))
            .count())
    }

    /// Element order → number of elements of that order.
    pub fn element_order_histogram(&self) -> Result<BTreeMap<u64, usize>, GroupError> {
        let mut h = BTreeMap::new();
        for g in self.elements()? {
            *h.entry(g.order()).or_insert(0) += 1;
        }
        Ok(h)
    }

    /// One element from each conjugacy class.
    pub fn conjugacy_class_representatives(&self) -> Result<Vec<Perm>, GroupError> {
        let elements = self.elements()?;
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut reps = Vec::new();
        for g in elements {
            if seen.contains(&g) {
                continue;
            }
            let mut stack = vec![g.clone()];
            seen.insert(g.clone());
            while let Some(x) = stack.pop() {
                for s in &self.generators {
                    let y = s.conjugate(&x);
                    if seen.insert(y.clone()) {
                        stack.push(y);
                    }
                }
            }
            reps.push(g);
        }
        Ok(reps)
    }

    /// Nontrivial and every nonidentity normal closure is the whole group.
    pub fn is_simple(&self) -> Result<bool, GroupError> {
        let order = self.order();
        if order == 1 {
            return Ok(false);
        }
        for rep in self.conjugacy_class_representatives()? {
            if rep.is_identity() {
                continue;
            }
            if self.normal_closure(std::slice::from_ref(&rep)).order() != order {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub(crate) fn closure(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let id = Perm::identity(degree);
    let mut index: HashMap<Perm, usize> = HashMap::new();
    index.insert(id.clone(), 0);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for s in gens {
            let y = out[i].then(s);
            if !index.contains_key(&y) {
                index.insert(y.clone(), out.len());
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dessins::known;

    fn group_of(m: &crate::dessins::Hypermap) -> PermutationGroup {
        PermutationGroup::new(m.half_edges(), vec![m.alpha().clone(), m.beta().clone()]).unwrap()
    }

    #[test]
    fn orders_of_reference_groups() {
        assert_eq!(PermutationGroup::symmetric(5).unwrap().order(), 120);
        assert_eq!(PermutationGroup::symmetric(10).unwrap().order(), 3_628_800);
        assert_eq!(PermutationGroup::dihedral(4).unwrap().order(), 8);
        assert_eq!(PermutationGroup::cyclic(7).unwrap().order(), 7);
        assert_eq!(PermutationGroup::trivial(7).order(), 1);
        assert_eq!(PermutationGroup::elementary_abelian_2(3).unwrap().order(), 8);
    }

    #[test]
    fn chain_order_matches_closure() {
        for g in [
            PermutationGroup::symmetric(6).unwrap(),
            PermutationGroup::dihedral(9).unwrap(),
            group_of(&known::fano_dessin()),
            group_of(&known::mermin_square_dessin()),
            group_of(&known::chsh_dessin()),
        ] {
            assert_eq!(g.order() as usize, closure(g.degree(), g.generators()).len());
        }
    }

    #[test]
    fn known_dessin_groups() {
        assert_eq!(group_of(&known::fano_dessin()).order(), 168);
        assert_eq!(group_of(&known::mermin_square_dessin()).order(), 72);
        assert_eq!(group_of(&known::chsh_dessin()).order(), 8);
    }

    #[test]
    fn membership() {
        let a5 = PermutationGroup::new(
            5,
            vec![
                Perm::parse_cycles(5, "(1,2,3)").unwrap(),
                Perm::parse_cycles(5, "(1,2,3,4,5)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a5.order(), 60);
        assert!(a5.contains(&Perm::parse_cycles(5, "(1,2)(3,4)").unwrap()));
        assert!(!a5.contains(&Perm::parse_cycles(5, "(1,2)").unwrap()));
    }

    #[test]
    fn simplicity() {
        assert!(group_of(&known::fano_dessin()).is_simple().unwrap());
        assert!(!PermutationGroup::dihedral(4).unwrap().is_simple().unwrap());
        assert!(PermutationGroup::cyclic(7).unwrap().is_simple().unwrap());
        assert!(!PermutationGroup::cyclic(6).unwrap().is_simple().unwrap());
        assert!(!PermutationGroup::symmetric(5).unwrap().is_simple().unwrap());
        assert!(!PermutationGroup::trivial(3).is_simple().unwrap());
    }

    #[test]
    fn abelianization_and_centre() {
        let s5 = PermutationGroup::symmetric(5).unwrap();
        assert_eq!(s5.abelianization_order(), 2);
        assert_eq!(s5.center_order().unwrap(), 1);
        let d4 = PermutationGroup::dihedral(4).unwrap();
        assert_eq!(d4.center_order().unwrap(), 2);
        assert_eq!(d4.abelianization_order(), 4);
    }

    #[test]
    fn degree_cap() {
        assert!(matches!(PermutationGroup::symmetric(17), Err(GroupError::DegreeCap(17))));
        assert!(matches!(
            PermutationGroup::symmetric(8).unwrap().elements(),
            Err(GroupError::OrderCap(40320))
        ));
    }
}
