//! Dual braid lifts read off `Pop_T` trajectories, SIF elements and the
//! block decomposition of an element over the noncrossing parabolic
//! subgroup of `pi_T(w)`.

use crate::dynamics::{PopEngine, Terminal};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::Enumeration;
use crate::refset::ReflectionSet;
use serde::Serialize;

/// A factorisation into noncrossing partitions, leftmost factor first:
/// `w = factors[0] factors[1] ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// Lattice indices of the factors.
    pub factors: Vec<usize>,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// The lift `w = pi_T(w_k) pi_T(w_{k-1}) ... pi_T(w_1)` where
/// `w_1 = w`, `w_{i+1} = Pop_T(w_i)` and `w_{k+1} = e`.
///
/// Fails with [`Error::Periodic`] when the trajectory never reaches `e`.
pub fn dual_braid_lift(engine: &PopEngine<'_>, w: &Element) -> Result<Factorization> {
    let orbit = engine.forward_orbit(w);
    if orbit.terminal == Terminal::PeriodicNonIdentity {
        return Err(Error::Periodic);
    }
    let mut factors: Vec<usize> = orbit
        .trajectory
        .iter()
        .filter(|x| !x.is_identity())
        .map(|x| engine.project_index(x))
        .collect();
    factors.reverse();
    Ok(Factorization { factors })
}

/// Product of the factors of a lift.
pub fn product(engine: &PopEngine<'_>, f: &Factorization) -> Element {
    let lattice = engine.lattice();
    f.factors.iter().fold(engine.context().identity().clone(), |acc, &i| acc.compose(lattice.element(i)))
}

/// Whether a lift multiplies back to `w`, has no identity factor, and its
/// factors increase weakly in absolute order from left to right.
pub fn lift_is_sound(engine: &PopEngine<'_>, w: &Element, f: &Factorization) -> bool {
    let lattice = engine.lattice();
    let e = lattice.identity_index();
    &product(engine, f) == w
        && f.factors.iter().all(|&i| i != e)
        && f.factors.windows(2).all(|p| lattice.leq(p[0], p[1]))
}

/// Number of SIF elements (`pi_T(w) = c`) in an enumeration.
pub fn sif_count(engine: &PopEngine<'_>, all: &Enumeration, jobs: usize) -> u64 {
    let n = all.len();
    let jobs = jobs.max(1).min(n.max(1));
    let count = |range: std::ops::Range<usize>| range.filter(|&i| engine.is_sif(all.get(i))).count() as u64;
    if jobs == 1 {
        return count(0..n);
    }
    let chunk = n.div_ceil(jobs);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs).map(|j| s.spawn(move || count(j * chunk..((j + 1) * chunk).min(n)))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).sum()
    })
}

/// One irreducible component of the noncrossing parabolic of `pi_T(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Reflections of the component.
    pub reflections: ReflectionSet,
    /// The component of `pi_T(w)`, used as the block's Coxeter element.
    pub coxeter: Element,
    /// The component of `w`.
    pub factor: Element,
}

/// `w` as a product of commuting factors, one per irreducible component of
/// `W_{pi_T(w)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    /// Whether every factor is SIF in its block: the join of the
    /// reflections below it is the block's Coxeter element.
    pub fn factors_are_sif(&self, engine: &PopEngine<'_>) -> bool {
        let ctx = engine.context();
        let lattice = engine.lattice();
        self.blocks.iter().all(|b| lattice.element(lattice.join_of_set(ctx.reflections_below(&b.factor))) == &b.coxeter)
    }
}

/// Connected components of the non-commutation graph on a set of
/// reflections.
pub fn commutation_components(engine: &PopEngine<'_>, set: ReflectionSet) -> Vec<ReflectionSet> {
    let refl = engine.context().reflections();
    let items: Vec<usize> = set.iter().collect();
    let commute = |a: usize, b: usize| refl[a].compose(&refl[b]) == refl[b].compose(&refl[a]);
    let mut comp = vec![usize::MAX; items.len()];
    let mut out = Vec::new();
    for start in 0..items.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = ReflectionSet::EMPTY;
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(i) = stack.pop() {
            members.insert(items[i]);
            for j in 0..items.len() {
                if comp[j] == usize::MAX && !commute(items[i], items[j]) {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        out.push(members);
    }
    out
}

/// Splits `w` over the irreducible components of `W_{pi_T(w)}`. Each factor
/// is the product, in order, of the reflections of a shortest reflection
/// factorisation of `w` that fall in its component.
pub fn block_decompose(engine: &PopEngine<'_>, w: &Element) -> BlockDecomposition {
    let ctx = engine.context();
    let lattice = engine.lattice();
    let pi = engine.project_index(w);
    let components = commutation_components(engine, lattice.refset(pi));
    let split = |x: &Element| -> Vec<Element> {
        let word = ctx.reflection_word(x);
        components
            .iter()
            .map(|c| {
                word.iter()
                    .filter(|&&t| c.contains(t))
                    .fold(ctx.identity().clone(), |acc, &t| acc.compose(&ctx.reflections()[t]))
            })
            .collect()
    };
    let factors = split(w);
    let coxeters = split(lattice.element(pi));
    let blocks = components
        .into_iter()
        .zip(coxeters)
        .zip(factors)
        .map(|((reflections, coxeter), factor)| Block { reflections, coxeter, factor })
        .collect();
    BlockDecomposition { blocks }
}
