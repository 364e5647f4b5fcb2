//! The pop-tsack torsing operator `Pop_T(w) = w pi_T(w)^-1`, its forward
//! orbits, whole-group depth tables, preimages and periodic orbits.

use crate::combinat::FastProjector;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::{Enumeration, GroupContext};
use crate::nc::{NcLattice, Projector};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt::Write as _;

/// Evaluates `pi_T` and `Pop_T` for one group and Coxeter element.
///
/// Types A, B and D with the standard Coxeter element use the noncrossing
/// closure of the cycle partition; everything else goes through the
/// memoised lattice join.
pub struct PopEngine<'a> {
    ctx: &'a GroupContext,
    lattice: &'a NcLattice,
    generic: Projector<'a>,
    fast: Option<FastProjector<'a>>,
}

impl<'a> PopEngine<'a> {
    pub fn new(ctx: &'a GroupContext, lattice: &'a NcLattice) -> Self {
        PopEngine { ctx, lattice, generic: Projector::new(ctx, lattice), fast: FastProjector::new(ctx, lattice) }
    }

    /// An engine that always uses the lattice join.
    pub fn generic(ctx: &'a GroupContext, lattice: &'a NcLattice) -> Self {
        PopEngine { ctx, lattice, generic: Projector::new(ctx, lattice), fast: None }
    }

    pub fn context(&self) -> &'a GroupContext {
        self.ctx
    }

    pub fn lattice(&self) -> &'a NcLattice {
        self.lattice
    }

    pub fn uses_fast_path(&self) -> bool {
        self.fast.is_some()
    }

    /// Lattice index of `pi_T(w)`.
    pub fn project_index(&self, w: &Element) -> usize {
        match &self.fast {
            Some(f) => f.project_index(w),
            None => self.generic.project_index(w),
        }
    }

    /// `pi_T(w)`.
    pub fn project(&self, w: &Element) -> &'a Element {
        self.lattice.element(self.project_index(w))
    }

    /// `Pop_T(w) = w pi_T(w)^-1`.
    pub fn pop(&self, w: &Element) -> Element {
        w.compose(&self.project(w).inverse())
    }

    /// Whether `pi_T(w) = c`.
    pub fn is_sif(&self, w: &Element) -> bool {
        self.project_index(w) == self.lattice.top_index()
    }

    /// Iterates `Pop_T` from `w` until an element repeats.
    pub fn forward_orbit(&self, w: &Element) -> OrbitRecord {
        let mut seen: HashMap<Element, usize> = HashMap::new();
        let mut trajectory = Vec::new();
        let mut x = w.clone();
        loop {
            if let Some(&first) = seen.get(&x) {
                let cycle_length = trajectory.len() - first;
                let terminal = if x.is_identity() { Terminal::ReachesIdentity } else { Terminal::PeriodicNonIdentity };
                return OrbitRecord { trajectory, transient_length: first, cycle_length, terminal };
            }
            seen.insert(x.clone(), trajectory.len());
            let next = self.pop(&x);
            trajectory.push(x);
            x = next;
        }
    }

    /// `Pop_T` on every element of an enumeration, as indices into it.
    pub fn pop_map(&self, all: &Enumeration, jobs: usize) -> Vec<u32> {
        let run = |range: std::ops::Range<usize>| -> Vec<u32> {
            range
                .map(|i| {
                    let y = self.pop(all.get(i));
                    all.index_of(&y).expect("Pop_T stays in the group") as u32
                })
                .collect()
        };
        let n = all.len();
        let jobs = jobs.max(1).min(n.max(1));
        if jobs == 1 {
            return run(0..n);
        }
        let chunk = n.div_ceil(jobs);
        std::thread::scope(|s| {
            let handles: Vec<_> =
                (0..jobs).map(|j| s.spawn(move || run(j * chunk..((j + 1) * chunk).min(n)))).collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    }

    /// Depth table of the whole group.
    pub fn depth_table(&self, all: &Enumeration, jobs: usize) -> DepthTable {
        DepthTable::from_pop_map(&self.pop_map(all, jobs), self.identity_index(all))
    }

    fn identity_index(&self, all: &Enumeration) -> usize {
        all.index_of(self.ctx.identity()).expect("identity is enumerated")
    }

    /// All `x` in `domain` with `Pop_T(x) = w`.
    pub fn preimages<'d, I>(&self, w: &Element, domain: I) -> Vec<Element>
    where
        I: IntoIterator<Item = &'d Element>,
    {
        domain.into_iter().filter(|x| &self.pop(x) == w).cloned().collect()
    }

    /// Conjugation equivariance `Pop_T(w)^c = Pop_T(w^c)` on the given
    /// elements; returns the failures.
    pub fn conjugation_failures<'d, I>(&self, domain: I) -> Vec<Element>
    where
        I: IntoIterator<Item = &'d Element>,
    {
        let c = self.ctx.coxeter_element();
        let cinv = c.inverse();
        let conj = |x: &Element| cinv.compose(x).compose(c);
        domain.into_iter().filter(|w| conj(&self.pop(w)) != self.pop(&conj(w))).cloned().collect()
    }
}

/// How a forward orbit ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Terminal {
    ReachesIdentity,
    PeriodicNonIdentity,
}

/// A `Pop_T` trajectory up to the first repetition.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    /// Distinct elements `w, Pop_T(w), ...` in order.
    pub trajectory: Vec<Element>,
    /// Index in `trajectory` where the cycle starts.
    pub transient_length: usize,
    pub cycle_length: usize,
    pub terminal: Terminal,
}

impl OrbitRecord {
    pub fn start(&self) -> &Element {
        &self.trajectory[0]
    }

    /// Size of the forward orbit.
    pub fn len(&self) -> usize {
        self.trajectory.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trajectory.is_empty()
    }

    /// Iterations needed to reach the identity, if it is reached.
    pub fn depth(&self) -> Option<usize> {
        (self.terminal == Terminal::ReachesIdentity).then(|| self.trajectory.len() - 1)
    }
}

/// Number of elements needing exactly `i` iterations of `Pop_T` to reach
/// the identity, plus the elements on periodic orbits other than `{e}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthTable {
    pub counts: Vec<u64>,
    pub periodic_count: u64,
    /// Elements that are not periodic but never reach the identity.
    pub preperiodic_count: u64,
    /// Sizes of the periodic orbits other than `{e}`, sorted.
    pub periodic_orbit_sizes: Vec<usize>,
}

const UNSEEN: u32 = u32::MAX;
const ACTIVE: u32 = u32::MAX - 1;
const PERIODIC: u32 = u32::MAX - 2;
const PREPERIODIC: u32 = u32::MAX - 3;

impl DepthTable {
    /// Resolves depths from a function table `next` on `0..n` where
    /// `identity` is the fixed point `e`. Iterative, no recursion.
    pub fn from_pop_map(next: &[u32], identity: usize) -> Self {
        let depth = resolve_depths(next, identity);
        let mut counts = Vec::new();
        let (mut periodic_count, mut preperiodic_count) = (0, 0);
        for &d in &depth {
            match d {
                PERIODIC => periodic_count += 1,
                PREPERIODIC => preperiodic_count += 1,
                d => {
                    let d = d as usize;
                    if counts.len() <= d {
                        counts.resize(d + 1, 0);
                    }
                    counts[d] += 1;
                }
            }
        }
        let mut periodic_orbit_sizes = Vec::new();
        let mut done = vec![false; next.len()];
        for i in 0..next.len() {
            if depth[i] == PERIODIC && !done[i] {
                let mut len = 0;
                let mut x = i;
                while !done[x] {
                    done[x] = true;
                    len += 1;
                    x = next[x] as usize;
                }
                periodic_orbit_sizes.push(len);
            }
        }
        periodic_orbit_sizes.sort_unstable();
        DepthTable { counts, periodic_count, preperiodic_count, periodic_orbit_sizes }
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum::<u64>() + self.periodic_count + self.preperiodic_count
    }

    /// Largest finite depth.
    pub fn max_depth(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    /// Two columns `depth`, `count`, and a final row `inf`.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("depth\tcount\n");
        for (i, c) in self.counts.iter().enumerate() {
            let _ = writeln!(s, "{i}\t{c}");
        }
        let _ = writeln!(s, "inf\t{}", self.periodic_count);
        s
    }
}

/// Depth of every element: a finite value, [`PERIODIC`] or [`PREPERIODIC`].
fn resolve_depths(next: &[u32], identity: usize) -> Vec<u32> {
    let mut depth = vec![UNSEEN; next.len()];
    depth[identity] = 0;
    let mut path = Vec::new();
    for start in 0..next.len() {
        if depth[start] != UNSEEN {
            continue;
        }
        path.clear();
        let mut x = start;
        while depth[x] == UNSEEN {
            depth[x] = ACTIVE;
            path.push(x);
            x = next[x] as usize;
        }
        let mut tail = match depth[x] {
            ACTIVE => {
                // a new cycle: mark it periodic
                let pos = path.iter().position(|&p| p == x).expect("cycle start on path");
                for &p in &path[pos..] {
                    depth[p] = PERIODIC;
                }
                path.truncate(pos);
                PERIODIC
            }
            d => d,
        };
        for &p in path.iter().rev() {
            tail = match tail {
                PERIODIC | PREPERIODIC => PREPERIODIC,
                d => d + 1,
            };
            depth[p] = tail;
        }
    }
    depth
}

/// Per-element depths from a pop map: `Some(i)` for elements reaching the
/// identity after `i` steps, `None` otherwise.
pub fn depths(next: &[u32], identity: usize) -> Vec<Option<u32>> {
    resolve_depths(next, identity).into_iter().map(|d| (d < PREPERIODIC).then_some(d)).collect()
}

/// `O_k = {w : w^-1 c w = c^k}`: one solution `w0` from `domain`, then its
/// coset `{c^j w0}` under the centraliser `<c>`. Empty when `c^k` is not
/// conjugate to `c` within the scanned domain.
pub fn conjugation_orbit_set<'d, I>(ctx: &GroupContext, k: i64, domain: I) -> Vec<Element>
where
    I: IntoIterator<Item = &'d Element>,
{
    let c = ctx.coxeter_element();
    let ck = ctx.power(c, k);
    let Some(w0) = domain.into_iter().find(|w| w.inverse().compose(c).compose(w) == ck) else {
        return Vec::new();
    };
    let h = ctx.coxeter_number() as i64;
    let mut out: Vec<Element> = (0..h).map(|j| ctx.power(c, j).compose(w0)).collect();
    out.sort();
    out.dedup();
    out
}

/// Whether `set` is exactly one periodic `Pop_T` cycle.
pub fn is_single_cycle(engine: &PopEngine<'_>, set: &[Element]) -> bool {
    let Some(first) = set.first() else { return false };
    let orbit = engine.forward_orbit(first);
    if orbit.terminal != Terminal::PeriodicNonIdentity || orbit.transient_length != 0 || orbit.len() != set.len() {
        return false;
    }
    let mut a = orbit.trajectory.clone();
    a.sort();
    let mut b = set.to_vec();
    b.sort();
    a == b
}

/// DOT export of the functional graph `w -> Pop_T(w)`.
pub fn pop_forest_dot(all: &Enumeration, next: &[u32], label: impl Fn(&Element) -> String) -> String {
    let mut s = String::from("digraph pop {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (i, w) in all.elements().iter().enumerate() {
        let _ = writeln!(s, "  n{i} [label=\"{}\"];", label(w).replace('"', "\\\""));
    }
    for (i, &j) in next.iter().enumerate() {
        if i != j as usize {
            let _ = writeln!(s, "  n{i} -> n{j};");
        }
    }
    s.push_str("}\n");
    s
}

/// Result of comparing the dynamics for two Coxeter elements.
#[derive(Clone, Debug, Serialize)]
pub struct EquivarianceReport {
    pub first: DepthTable,
    pub second: DepthTable,
    pub tables_equal: bool,
    pub conjugation_checked: usize,
    pub conjugation_failures: usize,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.tables_equal && self.conjugation_failures == 0
    }
}

/// Compares depth tables for two Coxeter elements of the same group and
/// checks `Pop_T(w)^c = Pop_T(w^c)` on every element for both.
pub fn verify_equivariance(first: &GroupContext, second: &GroupContext, budget: u64) -> Result<EquivarianceReport> {
    if first.cox_type() != second.cox_type() {
        return Err(Error::Invalid(format!("{} and {} are different groups", first.cox_type(), second.cox_type())));
    }
    let all = first.enumerate(budget)?;
    let mut tables = Vec::new();
    let mut failures = 0;
    for ctx in [first, second] {
        let lattice = NcLattice::build(ctx);
        let engine = PopEngine::new(ctx, &lattice);
        tables.push(engine.depth_table(&all, 1));
        failures += engine.conjugation_failures(all.elements()).len();
    }
    let second_table = tables.pop().expect("two tables");
    let first_table = tables.pop().expect("two tables");
    Ok(EquivarianceReport {
        tables_equal: first_table == second_table,
        first: first_table,
        second: second_table,
        conjugation_checked: 2 * all.len(),
        conjugation_failures: failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_resolution_handles_cycles_and_tails() {
        // 0 = e, 1 -> 0, 2 -> 1, 3 <-> 4, 5 -> 3
        let next = [0, 0, 1, 4, 3, 3];
        let t = DepthTable::from_pop_map(&next, 0);
        assert_eq!(t.counts, vec![1, 1, 1]);
        assert_eq!(t.periodic_count, 2);
        assert_eq!(t.preperiodic_count, 1);
        assert_eq!(t.periodic_orbit_sizes, vec![2]);
        assert_eq!(depths(&next, 0), vec![Some(0), Some(1), Some(2), None, None, None]);
    }

    #[test]
    fn tsv_has_infinity_row() {
        let t = DepthTable::from_pop_map(&[0, 0], 0);
        assert_eq!(t.to_tsv(), "depth\tcount\n0\t1\n1\t1\ninf\t0\n");
    }
}
