//! The B3 `Pop_T` forest against a hand-transcribed edge list.
//!
//! The edge list writes elements in one-line notation composed as functions,
//! which is the inverse of this crate's cycle convention: a label `x` is the
//! element whose permutation is `x^-1`, and its Coxeter element `2 3 -1`
//! becomes `c^-1` here.

use coxpop::combinat::{PermModel, SignedPerm};
use coxpop::{CoxeterSpec, Element, GroupContext, NcLattice, PopEngine, DEFAULT_BUDGET};
use std::collections::HashMap;

const EDGES: &str = include_str!("data/b3_forest.txt");

fn one_line(s: &str) -> SignedPerm {
    SignedPerm::from_one_line(&s.split(' ').map(|x| x.parse().unwrap()).collect::<Vec<i32>>()).unwrap()
}

fn edges() -> Vec<(SignedPerm, SignedPerm)> {
    EDGES
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let (a, b) = l.split_once('\t').unwrap();
            (one_line(a), one_line(b))
        })
        .collect()
}

/// Canonical string of the rooted tree below `root`.
fn shape<T: Eq + std::hash::Hash + Clone>(children: &HashMap<T, Vec<T>>, root: &T) -> String {
    let mut parts: Vec<String> = children.get(root).map(|c| c.iter().map(|x| shape(children, x)).collect()).unwrap_or_default();
    parts.sort();
    format!("({})", parts.concat())
}

#[test]
fn labelled_edges_match() {
    let base = GroupContext::new("B3".parse().unwrap()).unwrap();
    let model = PermModel::new(&base).unwrap();
    let label = |p: &SignedPerm| model.to_element(&p.inverse()).unwrap();
    let g = base.with_coxeter(CoxeterSpec::Element(label(&one_line("2 3 -1")))).unwrap();
    let lattice = NcLattice::build(&g);
    let engine = PopEngine::new(&g, &lattice);
    let edges = edges();
    assert_eq!(edges.len(), 47);
    for (child, parent) in &edges {
        assert_eq!(engine.pop(&label(child)), label(parent), "{child:?} -> {parent:?}");
    }
}

#[test]
fn standard_forest_has_the_same_shape() {
    let g = GroupContext::new("B3".parse().unwrap()).unwrap();
    let lattice = NcLattice::build(&g);
    let engine = PopEngine::new(&g, &lattice);
    let all = g.enumerate(DEFAULT_BUDGET).unwrap();
    let next = engine.pop_map(&all, 1);
    let mut ours: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &j) in next.iter().enumerate() {
        if i != j as usize {
            ours.entry(j as usize).or_default().push(i);
        }
    }
    let mut figure: HashMap<Vec<i32>, Vec<Vec<i32>>> = HashMap::new();
    for (child, parent) in edges() {
        figure.entry(parent.one_line()).or_default().push(child.one_line());
    }
    let e: Element = g.identity().clone();
    assert_eq!(shape(&ours, &all.index_of(&e).unwrap()), shape(&figure, &vec![1, 2, 3]));
}
