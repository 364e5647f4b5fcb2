mod common;

use coxpop::folding::{verify_sublattice, verify_unfold_equivariance, FoldKind, FoldingMap};
use coxpop::golden::golden;
use coxpop::verify::random_elements;
use coxpop::{NcLattice, PopEngine, Scalar, DEFAULT_BUDGET};
use proptest::prelude::*;
use std::collections::HashSet;

#[test]
fn foldings_preserve_coxeter_number_and_are_injective() {
    for kind in [FoldKind::AToB(2), FoldKind::AToB(4), FoldKind::DToB(4), FoldKind::DToB(6), FoldKind::E6ToF4] {
        let map = FoldingMap::build(kind).unwrap();
        let (s, t) = (map.source(), map.target());
        assert_eq!(s.coxeter_number(), t.coxeter_number(), "{kind}");
        assert_eq!(&map.unfold(s.coxeter_element()), t.coxeter_element(), "{kind}");
        let all = s.enumerate(DEFAULT_BUDGET).unwrap();
        let images: HashSet<_> = all.elements().iter().map(|w| map.unfold(w)).collect();
        assert_eq!(images.len(), all.len(), "{kind}");
    }
}

#[test]
fn exhaustive_equivariance_and_sublattice() {
    for kind in [FoldKind::DToB(4), FoldKind::AToB(3), FoldKind::CoxeterPlane("D4".parse().unwrap())] {
        let map = FoldingMap::build(kind).unwrap();
        let (s, t) = (map.source(), map.target());
        let (ls, lt) = (NcLattice::build(s), NcLattice::build(t));
        let (es, et) = (PopEngine::new(s, &ls), PopEngine::new(t, &lt));
        let all = s.enumerate(DEFAULT_BUDGET).unwrap();
        let report = verify_unfold_equivariance(&map, &es, &et, all.elements());
        assert!(report.passed(), "{kind}: {}", report.to_json());
        assert_eq!(verify_sublattice(&map, &ls, &lt), 0, "{kind}");
    }
}

#[test]
fn e8_element_is_an_unfolding_from_h4() {
    let map = FoldingMap::build(FoldKind::E8ToH4).unwrap();
    let e8 = map.target();
    let data = &golden().e8;
    let reflections: Vec<_> = data
        .roots
        .iter()
        .map(|r| {
            let i = e8
                .positive_roots()
                .iter()
                .position(|x| x.iter().zip(r).all(|(a, &b)| *a == Scalar::from_int(b)))
                .unwrap();
            e8.reflections()[i].clone()
        })
        .collect();
    let product = reflections.iter().skip(1).fold(reflections[0].clone(), |acc, t| e8.multiply(&acc, t));
    let word: Vec<usize> = data.h4_word.iter().map(|&k| k - 1).collect();
    let h4_element = map.source().from_word(&word).unwrap();
    assert_eq!(map.unfold(&h4_element), product.inverse());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn unfold_is_a_homomorphism(which in 0usize..4, seed in any::<u64>()) {
        let kind = [FoldKind::AToB(5), FoldKind::DToB(7), FoldKind::E6ToF4, FoldKind::E8ToH4][which];
        let map = FoldingMap::build(kind).unwrap();
        let s = map.source();
        let xs = random_elements(s, 2, seed);
        let (x, y) = (&xs[0], &xs[1]);
        prop_assert_eq!(map.unfold(&x.compose(y)), map.unfold(x).compose(&map.unfold(y)));
        prop_assert_eq!(map.unfold(&x.inverse()), map.unfold(x).inverse());
    }
}
