mod common;

use common::{ctx, Oracle};
use coxpop::{CoxeterSpec, NcLattice, Projector};
use proptest::prelude::*;
use std::collections::HashSet;

#[test]
fn lattice_sizes_are_catalan_numbers() {
    // W-Catalan numbers, tabulated independently
    for (name, cat) in [
        ("A3", 14u64),
        ("A4", 42),
        ("B3", 20),
        ("B4", 70),
        ("D4", 50),
        ("D5", 182),
        ("F4", 105),
        ("H3", 32),
        ("H4", 280),
        ("E6", 833),
        ("I2(7)", 9),
    ] {
        let g = ctx(name);
        assert_eq!(NcLattice::build(&g).len() as u64, cat, "{name}");
        assert_eq!(g.cox_type().catalan(), cat, "{name}");
    }
}

#[test]
fn lattice_is_the_absolute_interval() {
    for name in ["A3", "B3", "H3"] {
        for spec in [CoxeterSpec::Standard, CoxeterSpec::Bipartite] {
            let g = ctx(name).with_coxeter(spec).unwrap();
            let oracle = Oracle::new(&g);
            let expected: HashSet<_> = oracle.noncrossing(g.coxeter_element()).into_iter().collect();
            let lattice = NcLattice::build(&g);
            let got: HashSet<_> = lattice.elements().iter().cloned().collect();
            assert_eq!(got, expected, "{name}");
            lattice.check_axioms(&g).unwrap();
        }
    }
}

#[test]
fn projection_is_the_brute_force_join() {
    for name in ["A3", "B3", "D4", "H3", "I2(6)"] {
        let g = ctx(name);
        let oracle = Oracle::new(&g);
        let nc = oracle.noncrossing(g.coxeter_element());
        let lattice = NcLattice::build(&g);
        let projector = Projector::new(&g, &lattice);
        for w in &oracle.elements {
            assert_eq!(projector.project(w), &oracle.project(&g, &nc, w), "{name}");
        }
    }
}

#[test]
fn kreweras_is_a_bijection_squaring_to_conjugation() {
    for name in ["A4", "B3", "H3", "F4"] {
        let g = ctx(name);
        let l = NcLattice::build(&g);
        let c = g.coxeter_element();
        let images: HashSet<usize> = l.elements().iter().map(|w| l.kreweras(w).unwrap()).collect();
        assert_eq!(images.len(), l.len());
        for (i, w) in l.elements().iter().enumerate() {
            let k = l.kreweras(w).unwrap();
            let kk = l.element(l.kreweras(l.element(k)).unwrap());
            assert_eq!(l.rank(k), g.rank() - l.rank(i));
            // K(w) = c w^-1, so K(K(w)) = c w c^-1
            assert_eq!(kk, &c.compose(w).compose(&c.inverse()));
        }
    }
}

#[test]
fn cache_roundtrip() {
    let dir = std::env::temp_dir().join(format!("coxpop-nc-test-{}", std::process::id()));
    let g = ctx("B4");
    let built = NcLattice::load_or_build(&g, Some(&dir));
    let loaded = NcLattice::load_or_build(&g, Some(&dir));
    assert_eq!(built.elements(), loaded.elements());
    let bytes = coxpop::nc::encode_cache(&g, &built);
    let mut corrupt = bytes.clone();
    let mid = corrupt.len() / 2;
    corrupt[mid] ^= 0xff;
    assert!(coxpop::nc::decode_cache(&g, &corrupt).is_err());
    assert!(coxpop::nc::decode_cache(&ctx("A4"), &bytes).is_err());
    std::fs::remove_dir_all(dir).ok();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lattice_laws(a in 0usize..105, b in 0usize..105, c in 0usize..105) {
        thread_local!(static F4: (coxpop::GroupContext, NcLattice) = {
            let g = ctx("F4");
            let l = NcLattice::build(&g);
            (g, l)
        });
        F4.with(|(_, l)| {
            let j = l.join(&[a, b]);
            let m = l.meet(&[a, b]);
            assert_eq!(j, l.join(&[b, a]));
            assert_eq!(m, l.meet(&[b, a]));
            assert!(l.leq(a, j) && l.leq(b, j) && l.leq(m, a) && l.leq(m, b));
            assert_eq!(l.join(&[a, l.meet(&[a, b])]), a);
            assert_eq!(l.meet(&[a, l.join(&[a, b])]), a);
            assert_eq!(l.join(&[l.join(&[a, b]), c]), l.join(&[a, l.join(&[b, c])]));
            assert!(l.leq(l.identity_index(), a) && l.leq(a, l.top_index()));
        });
    }
}
