use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_complex::Complex64;
use proptest::prelude::*;

use crate::belyi::{
    ramification_passport, roots_of, ComplexRationalMap, Polynomial, RootOptions,
};
use crate::capacity::{independence_number, strong_product, SmallGraph};
use crate::cartography::{
    coset_group, low_index_subgroups, CosetTable, FinitelyPresentedGroup, PermutationGroup,
};
use crate::dessins::Hypermap;
use crate::pauli::{PauliObservable, Phase};
use crate::Perm;

fn perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn observable(n: usize) -> impl Strategy<Value = PauliObservable> {
    let mask = (1u16 << n) - 1;
    (0u8..4, 0..=mask, 0..=mask).prop_map(move |(p, x, z)| {
        PauliObservable::new(n, Phase::from_exponent(p), x as u8, z as u8).unwrap()
    })
}

fn cartographic_tables() -> &'static Vec<CosetTable> {
    static TABLES: OnceLock<Vec<CosetTable>> = OnceLock::new();
    TABLES.get_or_init(|| {
        let g = FinitelyPresentedGroup::cartographic();
        (1..=6).flat_map(|n| low_index_subgroups(&g, n).unwrap()).collect()
    })
}

#[test]
fn commutation_matches_matrices_exhaustively() {
    for n in 1..=2 {
        let obs = PauliObservable::nonidentity(n).unwrap();
        for a in &obs {
            for b in &obs {
                let m = a.to_matrix().commutator(&b.to_matrix()).is_zero(1e-12);
                assert_eq!(a.commutes(b).unwrap(), m, "{a} {b}");
            }
        }
    }
}

proptest! {
    #[test]
    fn commutation_matches_matrices_three_qubits(a in observable(3), b in observable(3)) {
        let m = a.to_matrix().commutator(&b.to_matrix()).is_zero(1e-12);
        prop_assert_eq!(a.commutes(&b).unwrap(), m);
    }

    #[test]
    fn product_is_matrix_product(a in observable(3), b in observable(3)) {
        let ab = a.multiply(&b).unwrap();
        prop_assert!(ab.to_matrix().approx_eq(&(&a.to_matrix() * &b.to_matrix()), 1e-12));
    }

    #[test]
    fn multiplication_is_associative(a in observable(4), b in observable(4), c in observable(4)) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hermitian_observables_square_to_identity(a in observable(3)) {
        let h = a.hermitian_representative();
        prop_assert_eq!(h.multiply(&h).unwrap(), PauliObservable::identity(3).unwrap());
    }

    #[test]
    fn permutation_composition(p in perm(9), q in perm(9), r in perm(9)) {
        prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
        prop_assert!(p.then(&p.inverse()).is_identity());
        for x in 0..9 {
            prop_assert_eq!(p.then(&q).apply(x), q.apply(p.apply(x)));
        }
        prop_assert!(p.pow(p.order()).is_identity());
    }

    #[test]
    fn hypermap_euler_and_relabeling(alpha in perm(10), beta in perm(10), r in perm(10)) {
        let m = Hypermap::new(alpha, beta).unwrap();
        prop_assume!(m.is_connected());
        let (b, w, f) = m.vertex_face_counts().unwrap();
        prop_assert_eq!((b + w + f + m.half_edges()) % 2, 0);
        let g = m.genus().unwrap();
        prop_assert_eq!(b + w + f + 2 * g, m.half_edges() + 2);
        let moved = m.relabeled(&r);
        prop_assert_eq!(moved.genus().unwrap(), g);
        prop_assert_eq!(moved.passport().unwrap(), m.passport().unwrap());
        prop_assert!(m.alpha().then(m.beta()).then(&m.gamma()).is_identity());
    }

    #[test]
    fn low_index_tables_satisfy_relators(k in 0usize..1000) {
        let tables = cartographic_tables();
        let t = &tables[k % tables.len()];
        prop_assert!(t.satisfies(&FinitelyPresentedGroup::cartographic()));
        prop_assert!(coset_group(t).is_transitive());
        prop_assert!(t.is_canonical());
    }

    #[test]
    fn low_index_classes_are_not_conjugate(k in 0usize..1000, r in perm(6)) {
        let tables = cartographic_tables();
        let t = &tables[k % tables.len()];
        let n = t.index();
        let relabel = Perm::from_images(
            r.images().iter().copied().filter(|&x| x < n).collect(),
        ).unwrap();
        let moved = CosetTable::from_actions(
            t.generators().to_vec(),
            t.actions().iter().map(|a| relabel.conjugate(a)).collect(),
        ).unwrap();
        let form = moved.canonical_form();
        let hits = tables.iter().filter(|u| **u == form).count();
        prop_assert_eq!(hits, 1);
        prop_assert_eq!(&form, t);
    }

    #[test]
    fn group_order_is_conjugation_invariant(p in perm(7), q in perm(7), r in perm(7)) {
        let g = PermutationGroup::new(7, vec![p.clone(), q.clone()]).unwrap();
        let h = PermutationGroup::new(7, vec![r.conjugate(&p), r.conjugate(&q)]).unwrap();
        prop_assert_eq!(g.order(), h.order());
        prop_assert_eq!(g.contains(&p.then(&q)), true);
        prop_assert_eq!(5040 % g.order(), 0);
    }

    #[test]
    fn roots_stable_under_tolerance_halving(
        lattice in prop::collection::btree_set((-4i32..=4, -4i32..=4), 1..5),
        mults in prop::collection::vec(1usize..=3, 5),
    ) {
        let points: Vec<Complex64> = lattice.iter().map(|&(a, b)| Complex64::new(a as f64 * 0.5, b as f64 * 0.5)).collect();
        let mut all = Vec::new();
        for (p, m) in points.iter().zip(&mults) {
            all.extend(std::iter::repeat_n(*p, *m));
        }
        let poly = Polynomial::from_roots(&all);
        let coarse = roots_of(&poly, RootOptions::with_tol(1e-8)).unwrap();
        let fine = roots_of(&poly, RootOptions::with_tol(5e-9)).unwrap();
        prop_assert_eq!(coarse.len(), fine.len());
        prop_assert_eq!(coarse.len(), points.len());
        for (a, b) in coarse.iter().zip(&fine) {
            prop_assert_eq!(a.multiplicity, b.multiplicity);
            prop_assert!((a.value - b.value).norm() < 1e-6);
        }
        let found: BTreeSet<usize> = coarse.iter().map(|r| r.multiplicity).collect();
        let want: BTreeSet<usize> = mults[..points.len()].iter().copied().collect();
        prop_assert_eq!(found, want);
    }

    #[test]
    fn passport_invariant_under_rescaling(re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let s = Complex64::new(re, im);
        prop_assume!(s.norm() > 0.1);
        for f in [ComplexRationalMap::klein(), ComplexRationalMap::parse("z^3").unwrap()] {
            let g = f.rescaled(s).unwrap();
            prop_assert_eq!(ramification_passport(&g).unwrap(), ramification_passport(&f).unwrap());
        }
    }

    #[test]
    fn independence_is_supermultiplicative(
        e1 in prop::collection::vec((0usize..6, 0usize..6), 0..10),
        e2 in prop::collection::vec((0usize..5, 0usize..5), 0..8),
    ) {
        let build = |n: usize, e: &[(usize, usize)]| {
            let edges: Vec<_> = e.iter().copied().filter(|(u, v)| u != v).collect();
            SmallGraph::from_edges(n, &edges).unwrap()
        };
        let g = build(6, &e1);
        let h = build(5, &e2);
        let (a, _) = independence_number(&g);
        let (b, _) = independence_number(&h);
        let (ab, witness) = independence_number(&strong_product(&g, &h).unwrap());
        prop_assert!(ab >= a * b);
        prop_assert!(strong_product(&g, &h).unwrap().is_independent(&witness));
    }
}
