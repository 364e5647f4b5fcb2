//! Foldings `W -> W'` of Coxeter diagrams and the induced injective
//! homomorphisms `unfold: W' -> W`, including the Coxeter-plane copy of the
//! dihedral group `I_2(h)` generated by `c_+` and `c_-`.
//!
//! A folding is described by its fibres: for each simple reflection `s'` of
//! `W'`, a set of pairwise commuting simple reflections of `W` whose product
//! is `unfold(s')`. The target context carries the Coxeter element
//! `unfold(c')`.

use crate::cartan::{CoxeterType, Family};
use crate::dynamics::{PopEngine, Terminal};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::{CoxeterSpec, GroupContext};
use crate::nc::NcLattice;
use serde::Serialize;
use std::fmt;

/// The supported foldings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoldKind {
    /// `A_{2n-1} -> B_n`.
    AToB(usize),
    /// `D_n -> B_{n-1}`.
    DToB(usize),
    E6ToF4,
    /// `E8 -> H4`; meant for single-element checks.
    E8ToH4,
    /// `I_2(h) -> W` through `c_+` and `c_-`.
    CoxeterPlane(CoxeterType),
}

impl fmt::Display for FoldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoldKind::AToB(n) => write!(f, "A{}->B{n}", 2 * n - 1),
            FoldKind::DToB(n) => write!(f, "D{n}->B{}", n - 1),
            FoldKind::E6ToF4 => write!(f, "E6->F4"),
            FoldKind::E8ToH4 => write!(f, "E8->H4"),
            FoldKind::CoxeterPlane(t) => write!(f, "{t}->I2({})", t.coxeter_number()),
        }
    }
}

/// A folding together with the two contexts it relates.
#[derive(Clone, Debug)]
pub struct FoldingMap {
    kind: FoldKind,
    /// The folded group `W'`.
    source: GroupContext,
    /// The unfolded group `W`.
    target: GroupContext,
    /// `fibres[k]`: simple reflections of `W` (0-based) over `s'_k`.
    fibres: Vec<Vec<usize>>,
    images: Vec<Element>,
}

impl FoldingMap {
    /// Builds a folding with the standard Coxeter element on `W'` (or, for
    /// the Coxeter plane, the bipartite one on `W`).
    pub fn build(kind: FoldKind) -> Result<Self> {
        let (source_ty, target_ty, fibres): (CoxeterType, CoxeterType, Vec<Vec<usize>>) = match kind {
            FoldKind::AToB(n) => {
                let m = 2 * n - 1;
                let fib = (0..n).map(|k| if k + 1 < n { vec![k, m - 1 - k] } else { vec![n - 1] }).collect();
                (CoxeterType::new(Family::B, n)?, CoxeterType::new(Family::A, m)?, fib)
            }
            FoldKind::DToB(n) => {
                if n < 4 {
                    return Err(Error::Invalid(format!("no folding D{n} -> B{}", n.saturating_sub(1))));
                }
                let fib = (0..n - 1).map(|k| if k + 2 < n { vec![k] } else { vec![n - 2, n - 1] }).collect();
                (CoxeterType::new(Family::B, n - 1)?, CoxeterType::new(Family::D, n)?, fib)
            }
            FoldKind::E6ToF4 => (
                CoxeterType::new(Family::F, 4)?,
                CoxeterType::new(Family::E, 6)?,
                vec![vec![1], vec![3], vec![2, 4], vec![0, 5]],
            ),
            FoldKind::E8ToH4 => (
                CoxeterType::new(Family::H, 4)?,
                CoxeterType::new(Family::E, 8)?,
                vec![vec![1, 4], vec![3, 5], vec![2, 6], vec![0, 7]],
            ),
            FoldKind::CoxeterPlane(ty) => {
                let (a, b) = ty.bipartition();
                (CoxeterType::dihedral(ty.coxeter_number())?, ty, vec![a, b])
            }
        };
        let source = GroupContext::new(source_ty)?;
        let target0 = GroupContext::new(target_ty)?;
        let images: Vec<Element> = fibres.iter().map(|f| target0.from_word(f)).collect::<Result<_>>()?;
        let map = FoldingMap { kind, target: target0, source, fibres, images };
        map.check_relations()?;
        // c = unfold(c'), with c' the standard Coxeter element of W'
        let c = map.unfold(map.source.coxeter_element());
        let word: Vec<usize> = map.source.reduced_word(map.source.coxeter_element());
        let spec = CoxeterSpec::Word(word.iter().flat_map(|&k| map.fibres[k].iter().copied()).collect());
        let target = map.target.with_coxeter(spec)?;
        debug_assert_eq!(target.coxeter_element(), &c);
        Ok(FoldingMap { target, ..map })
    }

    /// Fibres commute and the images satisfy the Coxeter relations of `W'`.
    fn check_relations(&self) -> Result<()> {
        let t = &self.target;
        for f in &self.fibres {
            for &a in f {
                for &b in f {
                    let (x, y) = (t.generator(a), t.generator(b));
                    if t.multiply(x, y) != t.multiply(y, x) {
                        return Err(Error::Invalid(format!("{}: fibre {f:?} does not commute", self.kind)));
                    }
                }
            }
        }
        let ty = self.source.cox_type();
        for i in 0..self.images.len() {
            for j in 0..self.images.len() {
                let m = ty.coxeter_matrix_entry(i, j) as u64;
                let order = t.order_of(&t.multiply(&self.images[i], &self.images[j]));
                if order != m {
                    return Err(Error::Invalid(format!(
                        "{}: (s'{} s'{}) has order {order}, expected {m}",
                        self.kind,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> FoldKind {
        self.kind
    }

    pub fn source(&self) -> &GroupContext {
        &self.source
    }

    pub fn target(&self) -> &GroupContext {
        &self.target
    }

    pub fn fibres(&self) -> &[Vec<usize>] {
        &self.fibres
    }

    /// `unfold(w')`, through a reduced word of `w'`.
    pub fn unfold(&self, w: &Element) -> Element {
        self.source
            .reduced_word(w)
            .iter()
            .fold(self.target.identity().clone(), |acc, &k| acc.compose(&self.images[k]))
    }
}

/// One failed identity in an equivariance check.
#[derive(Clone, Debug, Serialize)]
pub struct FoldCheck {
    /// Reduced word of `w'` (1-based).
    pub word: Vec<usize>,
    pub k: usize,
    pub pass: bool,
}

/// Outcome of [`verify_unfold_equivariance`].
#[derive(Clone, Debug, Serialize)]
pub struct FoldReport {
    pub folding: String,
    pub elements: usize,
    pub checks: usize,
    /// Elements with `pi_T(unfold(w')) != unfold(pi_T'(w'))`.
    pub projection_failures: usize,
    pub failures: Vec<FoldCheck>,
}

impl FoldReport {
    pub fn passed(&self) -> bool {
        self.projection_failures == 0 && self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }
}

/// Checks `unfold(Pop'^k(w')) = Pop^k(unfold(w'))` along the whole forward
/// orbit of each given `w'`, and `pi_T(unfold(w')) = unfold(pi_T'(w'))`.
pub fn verify_unfold_equivariance<'d, I>(
    map: &FoldingMap,
    source: &PopEngine<'_>,
    target: &PopEngine<'_>,
    elements: I,
) -> FoldReport
where
    I: IntoIterator<Item = &'d Element>,
{
    let mut report = FoldReport {
        folding: map.kind.to_string(),
        elements: 0,
        checks: 0,
        projection_failures: 0,
        failures: Vec::new(),
    };
    for w in elements {
        report.elements += 1;
        if &map.unfold(source.project(w)) != target.project(&map.unfold(w)) {
            report.projection_failures += 1;
        }
        let orbit = source.forward_orbit(w);
        let mut lifted = map.unfold(w);
        for (k, x) in orbit.trajectory.iter().enumerate() {
            report.checks += 1;
            if map.unfold(x) != lifted {
                let word = map.source.reduced_word(w).iter().map(|i| i + 1).collect();
                report.failures.push(FoldCheck { word, k, pass: false });
                break;
            }
            lifted = target.pop(&lifted);
        }
    }
    report
}

/// Sublattice and Kreweras checks for `NC(W', c') -> NC(W, c)`: joins,
/// meets and Kreweras complements commute with `unfold` on all pairs.
/// Returns the number of failing pairs.
pub fn verify_sublattice(map: &FoldingMap, source: &NcLattice, target: &NcLattice) -> usize {
    let lifted: Vec<usize> = source
        .elements()
        .iter()
        .map(|w| target.index_of(&map.unfold(w)).expect("unfold maps NC(W', c') into NC(W, c)"))
        .collect();
    let mut failures = 0;
    for a in 0..source.len() {
        let k = source.kreweras(source.element(a)).expect("in lattice");
        if target.kreweras(target.element(lifted[a])).expect("in lattice") != lifted[k] {
            failures += 1;
        }
        for b in 0..source.len() {
            let (ja, jb) = (source.join(&[a, b]), target.join(&[lifted[a], lifted[b]]));
            let (ma, mb) = (source.meet(&[a, b]), target.meet(&[lifted[a], lifted[b]]));
            if lifted[ja] != jb || lifted[ma] != mb {
                failures += 1;
            }
        }
    }
    failures
}

/// Whether every periodic orbit of `W'` unfolds into a periodic orbit of
/// `W` of the same size. Returns the number of periodic elements checked
/// and the number of failures.
pub fn periodic_orbits_lift(map: &FoldingMap, source: &PopEngine<'_>, target: &PopEngine<'_>, all: &[Element]) -> (usize, usize) {
    let (mut checked, mut failed) = (0, 0);
    for w in all {
        let o = source.forward_orbit(w);
        if o.terminal != Terminal::PeriodicNonIdentity || o.transient_length != 0 {
            continue;
        }
        checked += 1;
        let lifted = target.forward_orbit(&map.unfold(w));
        if lifted.terminal != Terminal::PeriodicNonIdentity || lifted.transient_length != 0 || lifted.cycle_length != o.cycle_length {
            failed += 1;
        }
    }
    (checked, failed)
}
