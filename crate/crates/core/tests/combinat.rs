mod common;

use common::{ctx, noncrossing_closure_brute, normalise_blocks};
use coxpop::combinat::{reflection_length, Kind, PermModel, SignedPerm};
use coxpop::verify::random_elements;
use coxpop::{NcLattice, PopEngine, DEFAULT_BUDGET};
use proptest::prelude::*;

#[test]
fn type_a_projection_is_brute_force_noncrossing_closure() {
    for rank in 2..=5 {
        let g = ctx(&format!("A{rank}"));
        let n = rank + 1;
        let lattice = NcLattice::build(&g);
        let engine = PopEngine::new(&g, &lattice);
        let model = PermModel::new(&g).unwrap();
        for w in g.enumerate(DEFAULT_BUDGET).unwrap().elements() {
            let cycles = model.to_perm(w).cycles_on(false);
            let expected = noncrossing_closure_brute(n, &cycles);
            let got = normalise_blocks(&model.to_perm(engine.project(w)).cycles_on(false));
            assert_eq!(got, expected);
        }
    }
}

#[test]
fn type_a_reflection_length_is_n_minus_cycles() {
    let g = ctx("A5");
    let model = PermModel::new(&g).unwrap();
    for w in g.enumerate(DEFAULT_BUDGET).unwrap().elements() {
        let one_line = model.to_perm(w).one_line();
        let n = one_line.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for s in 0..n {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = one_line[x] as usize - 1;
                }
            }
        }
        assert_eq!(g.reflection_length(w), n - cycles);
    }
}

#[test]
fn signed_reflection_length_matches_geometry() {
    for (name, kind) in [("B5", Kind::B), ("D5", Kind::D), ("D6", Kind::D), ("B6", Kind::B)] {
        let g = ctx(name);
        let model = PermModel::new(&g).unwrap();
        for w in random_elements(&g, 500, 7) {
            assert_eq!(reflection_length(&model.to_perm(&w), kind), g.reflection_length(&w), "{name}");
        }
    }
}

#[test]
fn worked_examples() {
    let g = ctx("A5");
    let model = PermModel::new(&g).unwrap();
    assert_eq!(model.format(&model.standard_coxeter()), "(123456)");
    let d = ctx("D4");
    let md = PermModel::new(&d).unwrap();
    assert_eq!(md.format(&md.to_perm(d.coxeter_element())), "(-1 -2 -3 1 2 3)(-4 4)");
    assert!(SignedPerm::parse_cycles(3, "(1 2").is_err());
    assert!(SignedPerm::parse_cycles(3, "(1 4)").is_err());
    assert!(SignedPerm::parse_cycles(3, "(1 2)(2 3)").is_err());
}

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPerm> {
    (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(
        |(values, signs)| {
            let v: Vec<i32> = values.iter().zip(&signs).map(|(&x, &s)| if s { -x } else { x }).collect();
            SignedPerm::from_one_line(&v).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn signed_perm_group_laws(p in signed_perm(7), q in signed_perm(7), r in signed_perm(7)) {
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
        prop_assert_eq!(p.then(&q), q.compose(&p));
        for x in 1..=7 {
            prop_assert_eq!(p.apply(-x), -p.apply(x));
        }
    }

    #[test]
    fn cycle_strings_roundtrip(p in signed_perm(6)) {
        let s = p.to_cycle_string();
        prop_assert_eq!(SignedPerm::parse_cycles(6, &s).unwrap(), p);
    }

    #[test]
    fn model_roundtrip(p in signed_perm(5)) {
        let g = ctx("B5");
        let model = PermModel::new(&g).unwrap();
        let w = model.to_element(&p).unwrap();
        prop_assert_eq!(model.to_perm(&w), p.clone());
        let d = ctx("D5");
        let md = PermModel::new(&d).unwrap();
        prop_assert_eq!(md.to_element(&p).is_ok(), p.negative_count() % 2 == 0);
    }
}
