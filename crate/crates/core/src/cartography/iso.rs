//! Isomorphism of small permutation groups by backtracking over images of
//! the generators.

use std::collections::HashMap;

use super::permgroup::{closure, PermutationGroup};
use super::GroupError;
use crate::perm::Perm;

pub const MAX_ISO_ORDER: u64 = 1000;

struct Indexed {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    orders: Vec<u64>,
}

impl Indexed {
    fn new(g: &PermutationGroup) -> Self {
        let elements = closure(g.degree(), g.generators());
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let orders = elements.iter().map(Perm::order).collect();
        Indexed { elements, index, orders }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].then(&self.elements[b])]
    }
}

/// Cheap invariants that must agree for isomorphic groups.
fn invariants_agree(p: &PermutationGroup, q: &PermutationGroup) -> Result<bool, GroupError> {
    Ok(p.order() == q.order()
        && p.is_abelian() == q.is_abelian()
        && p.element_order_histogram()? == q.element_order_histogram()?
        && p.center_order()? == q.center_order()?
        && p.abelianization_order() == q.abelianization_order())
}

/// An isomorphism `p → q` as the images of `p`'s generators, if one exists.
pub fn find_isomorphism(p: &PermutationGroup, q: &PermutationGroup) -> Result<Option<Vec<Perm>>, GroupError> {
    for g in [p, q] {
        if g.order() > MAX_ISO_ORDER {
            return Err(GroupError::OrderCap(g.order()));
        }
    }
    if !invariants_agree(p, q)? {
        return Ok(None);
    }
    let gens: Vec<Perm> = p.generators().iter().filter(|g| !g.is_identity()).cloned().collect();
    if gens.is_empty() {
        return Ok(Some(p.generators().iter().map(|_| Perm::identity(q.degree())).collect()));
    }
    let pi = Indexed::new(p);
    let qi = Indexed::new(q);
    let gen_idx: Vec<usize> = gens.iter().map(|g| pi.index[g]).collect();
    // right multiplication by each generator on p's elements
    let cayley: Vec<Vec<usize>> = gen_idx
        .iter()
        .map(|&s| (0..pi.elements.len()).map(|x| pi.mul(x, s)).collect())
        .collect();
    let candidates: Vec<Vec<usize>> = gen_idx
        .iter()
        .map(|&s| (0..qi.elements.len()).filter(|&t| qi.orders[t] == pi.orders[s]).collect())
        .collect();

    let mut chosen = Vec::with_capacity(gens.len());
    let found = backtrack(&pi, &qi, &gen_idx, &cayley, &candidates, &mut chosen);
    Ok(found.map(|images| {
        let by_gen: HashMap<&Perm, Perm> = gens
            .iter()
            .zip(images.iter().map(|&t| qi.elements[t].clone()))
            .collect();
        p.generators()
            .iter()
            .map(|g| by_gen.get(g).cloned().unwrap_or_else(|| Perm::identity(q.degree())))
            .collect()
    }))
}

fn backtrack(
    pi: &Indexed,
    qi: &Indexed,
    gen_idx: &[usize],
    cayley: &[Vec<usize>],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = chosen.len();
    if k == gen_idx.len() {
        return extends(pi, qi, cayley, chosen).then(|| chosen.clone());
    }
    for &t in &candidates[k] {
        // products of pairs of chosen generators must keep their orders
        let ok = chosen.iter().enumerate().all(|(j, &u)| {
            pi.orders[pi.mul(gen_idx[j], gen_idx[k])] == qi.orders[qi.mul(u, t)]
        });
        if !ok {
            continue;
        }
        chosen.push(t);
        if let Some(found) = backtrack(pi, qi, gen_idx, cayley, candidates, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Walks the Cayley graph of `p`; the generator assignment extends to a
/// homomorphism iff every edge is respected, and to an isomorphism iff the
/// image is everything.
fn extends(pi: &Indexed, qi: &Indexed, cayley: &[Vec<usize>], images: &[usize]) -> bool {
    let n = pi.elements.len();
    let mut map = vec![usize::MAX; n];
    let mut hit = vec![false; qi.elements.len()];
    map[0] = 0;
    hit[0] = true;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (s, col) in cayley.iter().enumerate() {
            let y = col[x];
            let fy = qi.mul(map[x], images[s]);
            if map[y] == usize::MAX {
                if hit[fy] {
                    return false;
                }
                map[y] = fy;
                hit[fy] = true;
                queue.push(y);
            } else if map[y] != fy {
                return false;
            }
        }
    }
    queue.len() == qi.elements.len()
}

pub fn is_isomorphic(p: &PermutationGroup, q: &PermutationGroup) -> Result<bool, GroupError> {
    Ok(find_isomorphism(p, q)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_vs_elementary_abelian() {
        let d4 = PermutationGroup::dihedral(4).unwrap();
        let e8 = PermutationGroup::elementary_abelian_2(3).unwrap();
        assert!(!is_isomorphic(&d4, &e8).unwrap());
        assert!(is_isomorphic(&d4, &d4).unwrap());
    }

    #[test]
    fn different_actions_same_group() {
        // S3 on 3 points vs S3 regular on 6 points via the dihedral D3
        let s3 = PermutationGroup::symmetric(3).unwrap();
        let d3 = PermutationGroup::dihedral(3).unwrap();
        assert!(is_isomorphic(&s3, &d3).unwrap());
        let z6 = PermutationGroup::cyclic(6).unwrap();
        assert!(!is_isomorphic(&s3, &z6).unwrap());
        // Z2×Z2 as Klein four on 4 points vs regular action
        let v4 = PermutationGroup::new(
            4,
            vec![
                Perm::parse_cycles(4, "(1,2)(3,4)").unwrap(),
                Perm::parse_cycles(4, "(1,3)(2,4)").unwrap(),
            ],
        )
        .unwrap();
        assert!(is_isomorphic(&v4, &PermutationGroup::elementary_abelian_2(2).unwrap()).unwrap());
    }

    #[test]
    fn returned_map_is_homomorphic() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        // S4 acting on the 6 edges of a tetrahedron, i.e. 2-subsets of 4 points
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        let on_pairs = |p: &Perm| {
            let imgs = pairs
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (p.apply(a), p.apply(b));
                    pairs.iter().position(|&e| e == (x.min(y), x.max(y))).unwrap()
                })
                .collect();
            Perm::from_images(imgs).unwrap()
        };
        let t = PermutationGroup::new(6, s4.generators().iter().map(on_pairs).collect()).unwrap();
        let images = find_isomorphism(&s4, &t).unwrap().unwrap();
        let a = &s4.generators()[0];
        let b = &s4.generators()[1];
        assert_eq!(a.then(b).order(), images[0].then(&images[1]).order());
    }

    #[test]
    fn order_cap() {
        let s7 = PermutationGroup::symmetric(7).unwrap();
        assert!(matches!(is_isomorphic(&s7, &s7), Err(GroupError::OrderCap(5040))));
    }
}
