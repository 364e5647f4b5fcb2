mod common;

use common::{ctx, Oracle};
use coxpop::dynamics::{pop_forest_dot, DepthTable};
use coxpop::verify::random_elements;
use coxpop::{CoxeterSpec, Element, NcLattice, PopEngine, Terminal, DEFAULT_BUDGET};
use proptest::prelude::*;
use std::collections::HashMap;

/// Depth counts by iterating a map until it reaches `e` or repeats.
fn naive_depths(elements: &[Element], pop: impl Fn(&Element) -> Element) -> (Vec<u64>, u64) {
    let mut counts = Vec::new();
    let mut periodic = 0;
    for w in elements {
        let mut x = w.clone();
        let mut steps = 0;
        loop {
            if x.is_identity() {
                if counts.len() <= steps {
                    counts.resize(steps + 1, 0);
                }
                counts[steps] += 1;
                break;
            }
            if steps > elements.len() {
                periodic += 1;
                break;
            }
            x = pop(&x);
            steps += 1;
        }
    }
    (counts, periodic)
}

#[test]
fn pop_matches_brute_force_definition() {
    for name in ["A3", "B3", "D4", "H3", "I2(8)"] {
        let g = ctx(name);
        let oracle = Oracle::new(&g);
        let nc = oracle.noncrossing(g.coxeter_element());
        let lattice = NcLattice::build(&g);
        let engine = PopEngine::new(&g, &lattice);
        for w in &oracle.elements {
            let pi = oracle.project(&g, &nc, w);
            assert_eq!(engine.pop(w), w.compose(&pi.inverse()), "{name}");
        }
    }
}

#[test]
fn depth_tables_match_naive_iteration() {
    for name in ["A4", "B4", "D4", "H3", "F4"] {
        let g = ctx(name);
        let lattice = NcLattice::build(&g);
        let engine = PopEngine::new(&g, &lattice);
        let all = g.enumerate(DEFAULT_BUDGET).unwrap();
        let table = engine.depth_table(&all, 2);
        let (counts, periodic) = naive_depths(all.elements(), |x| engine.pop(x));
        assert_eq!(table.counts, counts, "{name}");
        assert_eq!(table.periodic_count, periodic, "{name}");
        assert_eq!(table.total(), g.order());
    }
}

#[test]
fn threaded_pop_map_is_deterministic() {
    let g = ctx("B5");
    let lattice = NcLattice::build(&g);
    let engine = PopEngine::new(&g, &lattice);
    let all = g.enumerate(DEFAULT_BUDGET).unwrap();
    assert_eq!(engine.pop_map(&all, 1), engine.pop_map(&all, 4));
}

#[test]
fn f4_periodic_orbits() {
    let g = ctx("F4");
    let lattice = NcLattice::build(&g);
    let engine = PopEngine::new(&g, &lattice);
    let all = g.enumerate(DEFAULT_BUDGET).unwrap();
    let table = engine.depth_table(&all, 1);
    assert_eq!(table.periodic_count, 24);
    assert_eq!(table.periodic_orbit_sizes, vec![12, 12]);
    let periodic: Vec<_> = all.elements().iter().filter(|w| engine.forward_orbit(w).terminal == Terminal::PeriodicNonIdentity).collect();
    assert_eq!(periodic.len(), 24);
    let o = engine.forward_orbit(periodic[0]);
    assert_eq!((o.transient_length, o.cycle_length), (0, 12));
}

#[test]
fn generic_and_fast_paths_agree_on_whole_groups() {
    for name in ["A5", "B4", "D5"] {
        let g = ctx(name);
        let lattice = NcLattice::build(&g);
        let fast = PopEngine::new(&g, &lattice);
        let slow = PopEngine::generic(&g, &lattice);
        assert!(fast.uses_fast_path() && !slow.uses_fast_path());
        let all = g.enumerate(DEFAULT_BUDGET).unwrap();
        assert_eq!(fast.pop_map(&all, 2), slow.pop_map(&all, 2), "{name}");
    }
}

#[test]
fn nonstandard_coxeter_element_disables_fast_path() {
    let g = ctx("B3").with_coxeter(CoxeterSpec::Bipartite).unwrap();
    let lattice = NcLattice::build(&g);
    assert!(!PopEngine::new(&g, &lattice).uses_fast_path());
}

#[test]
fn table_serialisations() {
    // A2: e, three reflections, two rotations c and c^-1 needing 1 and 2 steps
    let g = ctx("A2");
    let lattice = NcLattice::build(&g);
    let engine = PopEngine::new(&g, &lattice);
    let all = g.enumerate(DEFAULT_BUDGET).unwrap();
    let table: DepthTable = engine.depth_table(&all, 1);
    assert_eq!(table.counts, vec![1, 4, 1]);
    assert_eq!(table.to_tsv(), "depth\tcount\n0\t1\n1\t4\n2\t1\ninf\t0\n");
    let json: serde_json::Value = serde_json::from_str(&table.to_json()).unwrap();
    assert_eq!(json["counts"], serde_json::json!([1, 4, 1]));
    let next = engine.pop_map(&all, 1);
    let dot = pop_forest_dot(&all, &next, |w| format!("{:?}", w.length()));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), all.len() - 1);
}

#[test]
fn preimages_of_identity_form_the_lattice() {
    let g = ctx("H3");
    let lattice = NcLattice::build(&g);
    let engine = PopEngine::new(&g, &lattice);
    let all = g.enumerate(DEFAULT_BUDGET).unwrap();
    let mut pre = engine.preimages(g.identity(), all.elements().iter());
    let mut nc = lattice.elements().to_vec();
    pre.sort_by_key(|w| w.root_image().to_vec());
    nc.sort_by_key(|w| w.root_image().to_vec());
    assert_eq!(pre, nc);
}

thread_local! {
    static ENGINES: HashMap<&'static str, (coxpop::GroupContext, NcLattice)> = ["D6", "E6", "H4", "B6"]
        .into_iter()
        .map(|n| {
            let g = ctx(n);
            let l = NcLattice::build(&g);
            (n, (g, l))
        })
        .collect();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pop_invariants(which in 0usize..4, seed in any::<u64>()) {
        let name = ["D6", "E6", "H4", "B6"][which];
        ENGINES.with(|m| {
            let (g, l) = &m[name];
            let engine = PopEngine::new(g, l);
            let w = random_elements(g, 1, seed).pop().unwrap();
            let pi = engine.project_index(&w);
            // every reflection below w lies below pi_T(w)
            for t in g.reflections_below(&w).iter() {
                assert!(g.abs_leq(&g.reflections()[t], l.element(pi)));
            }
            // pi_T(Pop(w)) <= pi_T(w)
            let p = engine.pop(&w);
            assert!(l.leq(engine.project_index(&p), pi));
            // c-equivariance
            let c = g.coxeter_element();
            let conj = |x: &Element| c.inverse().compose(x).compose(c);
            assert_eq!(engine.pop(&conj(&w)), conj(&p));
            // reflections and c pop to e
            let t = &g.reflections()[(seed as usize) % g.reflections().len()];
            assert!(engine.pop(t).is_identity());
            assert!(engine.pop(c).is_identity());
        });
    }
}
