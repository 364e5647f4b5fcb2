//! Signed permutation models of the groups `A_{n-1}`, `B_n` and `D_n`.
//!
//! The roots are realised in coordinates `e_1, ..., e_n`:
//!
//! * `A_{n-1}`: `alpha_i = e_i - e_{i+1}`.
//! * `B_n`: `alpha_i = e_i - e_{i+1}` for `i < n`, `alpha_n = e_n`.
//! * `D_n`: `alpha_i = e_i - e_{i+1}` for `i < n`, `alpha_n = e_{n-1} + e_n`.
//!
//! A group element `g` permutes the signed coordinate vectors by some `sigma`
//! (`g e_k = ±e_{|sigma(k)|}`). Its cycle notation is that of `sigma^-1`, so
//! that a written product `u v` is "`u`, then `v`" (see
//! [`SignedPerm::then`]). With this convention the standard Coxeter element
//! `s_n ... s_1` is `(1 2 ... n)`, `(-1 ... -n 1 ... n)` and
//! `(-1 ... -(n-1) 1 ... n-1)(-n n)` respectively.

use super::closure::{nc_closure, partition_to_perm, Circle, Kind};
use super::signed::SignedPerm;
use crate::cartan::Family;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::nc::NcLattice;

/// Translation between root images and signed permutations.
#[derive(Clone, Debug)]
pub struct PermModel {
    kind: Kind,
    n: usize,
    /// Each positive root as up to two signed coordinates `±k` (1-based),
    /// second entry 0 for short roots `e_k`.
    root_terms: Vec<(i8, i8)>,
    /// Signed root index of each canonical term pair.
    lookup: Vec<u16>,
    /// For each coordinate `k`, positive roots whose images locate `sigma(k)`.
    probes: Vec<(usize, usize)>,
}

const NONE: u16 = u16::MAX;

fn pair_key(a: i8, b: i8) -> usize {
    ((a as i32 + 64) as usize) << 7 | (b as i32 + 64) as usize
}

/// Orders a pair of signed coordinates by absolute value.
fn canonical(a: i8, b: i8) -> (i8, i8) {
    if b == 0 || a.unsigned_abs() < b.unsigned_abs() { (a, b) } else { (b, a) }
}

impl PermModel {
    /// Builds the model for a context of type A, B or D.
    pub fn new(ctx: &GroupContext) -> Result<Self> {
        let ty = ctx.cox_type();
        let r = ty.rank();
        let (kind, n) = match ty.family() {
            Family::A => (Kind::A, r + 1),
            Family::B => (Kind::B, r),
            Family::D => (Kind::D, r),
            _ => return Err(Error::Unsupported(format!("signed permutation model for {ty}"))),
        };
        let simple_eps = |i: usize| -> Vec<i64> {
            let mut v = vec![0i64; n];
            match (kind, i + 1 == r) {
                (Kind::B, true) => v[i] = 1,
                (Kind::D, true) => {
                    v[n - 2] = 1;
                    v[n - 1] = 1;
                }
                _ => {
                    v[i] = 1;
                    v[i + 1] = -1;
                }
            }
            v
        };
        let num = ctx.num_roots();
        let mut root_terms = Vec::with_capacity(num);
        let mut lookup = vec![NONE; 1 << 14];
        for (idx, coords) in ctx.positive_roots().iter().enumerate() {
            let mut eps = vec![0i64; n];
            for (i, c) in coords.iter().enumerate() {
                let k = *c.rational_part().numer();
                debug_assert_eq!(*c.rational_part().denom(), 1);
                for (e, s) in eps.iter_mut().zip(simple_eps(i)) {
                    *e += k * s;
                }
            }
            let terms: Vec<i8> = eps
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(k, &v)| {
                    debug_assert!(v == 1 || v == -1);
                    (v as i8) * (k as i8 + 1)
                })
                .collect();
            let (a, b) = match terms.as_slice() {
                [a] => (*a, 0),
                [a, b] => canonical(*a, *b),
                _ => return Err(Error::Invalid("unexpected root shape".into())),
            };
            root_terms.push((a, b));
            lookup[pair_key(a, b)] = idx as u16;
            let (na, nb) = canonical(-a, if b == 0 { 0 } else { -b });
            lookup[pair_key(na, nb)] = (idx + num) as u16;
        }
        let find = |a: i8, b: i8| -> usize {
            let (x, y) = canonical(a, b);
            let v = lookup[pair_key(x, y)];
            assert_ne!(v, NONE, "missing root");
            v as usize
        };
        let probes = (1..=n as i8)
            .map(|k| {
                let other = if (k as usize) < n { k + 1 } else { k - 1 };
                match kind {
                    Kind::A => (find(k, -other), 0),
                    Kind::B => (find(k, 0), 0),
                    Kind::D => (find(k, -other), find(k, other)),
                }
            })
            .collect();
        Ok(PermModel { kind, n, root_terms, lookup, probes })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Number of points `n` of the permutation model.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn circle(&self) -> Circle {
        Circle::new(self.kind, self.n)
    }

    fn terms_of(&self, signed_root: usize) -> (i8, i8) {
        let num = self.root_terms.len();
        if signed_root < num {
            self.root_terms[signed_root]
        } else {
            let (a, b) = self.root_terms[signed_root - num];
            (-a, -b)
        }
    }

    /// The signed permutation `sigma` with `g e_k = ±e_{|sigma(k)|}`.
    fn action(&self, w: &Element) -> Vec<i8> {
        (0..self.n)
            .map(|k| {
                let (r1, r2) = self.probes[k];
                let (a, b) = self.terms_of(w.apply(r1));
                match self.kind {
                    Kind::B => a,
                    // w(e_k - e_j) = e_{sigma(k)} - e_{sigma(j)}
                    Kind::A => a.max(b),
                    // w(e_k - e_j) and w(e_k + e_j) share the term w(e_k)
                    Kind::D => {
                        let (c, d) = self.terms_of(w.apply(r2));
                        if a == c || a == d { a } else { b }
                    }
                }
            })
            .collect()
    }

    /// Cycle notation of a permutation of this model; signed kinds list the
    /// cycles on `±[n]`.
    pub fn format(&self, p: &SignedPerm) -> String {
        p.to_cycle_string_on(self.kind != Kind::A)
    }

    /// Parses cycle notation for this model.
    pub fn parse(&self, s: &str) -> Result<SignedPerm> {
        SignedPerm::parse_cycles(self.n, s)
    }

    /// Cycle-notation permutation of a group element.
    pub fn to_perm(&self, w: &Element) -> SignedPerm {
        let sigma = SignedPerm::from_one_line(&self.action(w).iter().map(|&x| x as i32).collect::<Vec<_>>())
            .expect("valid signed permutation");
        sigma.inverse()
    }

    /// Group element of a cycle-notation permutation. Fails when the
    /// permutation is not in the group (sign changes in type A, an odd
    /// number of them in type D).
    pub fn to_element(&self, p: &SignedPerm) -> Result<Element> {
        if p.n() != self.n {
            return Err(Error::Invalid(format!("expected a permutation of {} points", self.n)));
        }
        match self.kind {
            Kind::A if !p.is_unsigned() => return Err(Error::Invalid("type A permutations cannot change signs".into())),
            Kind::D if p.negative_count() % 2 == 1 => {
                return Err(Error::Invalid("type D needs an even number of sign changes".into()))
            }
            _ => {}
        }
        let sigma = p.inverse();
        let image = self
            .root_terms
            .iter()
            .map(|&(a, b)| {
                let map = |t: i8| if t == 0 { 0 } else { sigma.apply(t as i32) as i8 };
                let (x, y) = canonical(map(a), map(b));
                self.lookup[pair_key(x, y)] as u8
            })
            .collect();
        Ok(Element::from_root_image(image))
    }

    /// The Coxeter element `(1 2 ... n)`, `(-1 ... -n 1 ... n)` or
    /// `(-1 ... -(n-1) 1 ... n-1)(-n n)`.
    pub fn standard_coxeter(&self) -> SignedPerm {
        let n = self.n as i32;
        let one_line: Vec<i32> = match self.kind {
            Kind::A => (1..=n).map(|i| if i < n { i + 1 } else { 1 }).collect(),
            Kind::B => (1..=n).map(|i| if i < n { i + 1 } else { -1 }).collect(),
            Kind::D => (1..=n).map(|i| if i < n - 1 { i + 1 } else if i == n - 1 { -1 } else { -n }).collect(),
        };
        SignedPerm::from_one_line(&one_line).expect("valid")
    }

    /// Blocks given by the cycles of `w` (as sets); in type D every balanced
    /// cycle is merged into a single block, since reflections join any two
    /// entries of different balanced cycles.
    pub fn cycle_blocks(&self, p: &SignedPerm) -> Vec<Vec<i32>> {
        let cycles = p.cycles_on(self.kind != Kind::A);
        if self.kind != Kind::D {
            return cycles;
        }
        let (balanced, mut rest): (Vec<_>, Vec<_>) = cycles.into_iter().partition(|c| is_balanced(c));
        if !balanced.is_empty() {
            rest.push(balanced.into_iter().flatten().collect());
        }
        rest
    }

    /// `pi_T` computed through the noncrossing closure of the cycle partition.
    pub fn project_perm(&self, p: &SignedPerm) -> SignedPerm {
        let circle = self.circle();
        let blocks = nc_closure(&circle, &self.cycle_blocks(p));
        partition_to_perm(&circle, &blocks)
    }
}

/// Fast `pi_T` for types A, B and D with the standard Coxeter element.
pub struct FastProjector<'a> {
    model: PermModel,
    lattice: &'a NcLattice,
}

impl<'a> FastProjector<'a> {
    /// Available only for A, B, D contexts whose Coxeter element is the
    /// standard one.
    pub fn new(ctx: &GroupContext, lattice: &'a NcLattice) -> Option<Self> {
        let model = PermModel::new(ctx).ok()?;
        let c = model.to_element(&model.standard_coxeter()).ok()?;
        (&c == ctx.coxeter_element() && lattice.coxeter_element() == &c).then_some(FastProjector { model, lattice })
    }

    pub fn model(&self) -> &PermModel {
        &self.model
    }

    /// Lattice index of `pi_T(w)`.
    pub fn project_index(&self, w: &Element) -> usize {
        let p = self.model.project_perm(&self.model.to_perm(w));
        let e = self.model.to_element(&p).expect("noncrossing partitions are group elements");
        self.lattice.index_of(&e).expect("closure lands in NC(W, c)")
    }
}

/// Antiexceedance data of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AexcStat {
    pub aexc_set: Vec<i32>,
    pub aexc: usize,
}

/// Which points count as candidates in type B.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AexcDomain {
    /// All of `±[n]`.
    Signed,
    /// Only `[n]`.
    Positive,
}

/// Antiexceedances `i` with `i < w^-1(i)`. Type A uses the usual order on
/// `[n]`; types B and D use the circle order `-1 < ... < -n < 1 < ... < n`.
pub fn antiexceedances(p: &SignedPerm, kind: Kind, domain: AexcDomain) -> AexcStat {
    let inv = p.inverse();
    let circle = Circle::new(kind, p.n());
    let candidates: Vec<i32> = match (kind, domain) {
        (Kind::A, _) | (_, AexcDomain::Positive) => (1..=p.n() as i32).collect(),
        _ => circle.ground_set(),
    };
    let rank = |x: i32| circle.position(x).unwrap_or(usize::MAX);
    let mut set: Vec<i32> = candidates.into_iter().filter(|&i| rank(i) < rank(inv.apply(i))).collect();
    set.sort_by_key(|&x| rank(x));
    AexcStat { aexc: set.len(), aexc_set: set }
}

/// Positions `i` with `w(i) < i` (circle order), the antiexceedance
/// positions rather than values.
pub fn antiexceedance_positions(p: &SignedPerm, kind: Kind, domain: AexcDomain) -> Vec<i32> {
    let inv = p.inverse();
    let stat = antiexceedances(p, kind, domain);
    let circle = Circle::new(kind, p.n());
    let mut v: Vec<i32> = stat.aexc_set.iter().map(|&i| inv.apply(i)).collect();
    v.sort_by_key(|&x| circle.position(x).unwrap_or(usize::MAX));
    v
}

/// Number of cycles of length at least 2 (on `±[n]` for signed kinds).
pub fn nontrivial_cycle_count(p: &SignedPerm, kind: Kind) -> usize {
    p.cycles_on(kind != Kind::A).iter().filter(|c| c.len() > 1).count()
}

fn is_balanced(c: &[i32]) -> bool {
    c.iter().any(|&x| c.contains(&-x))
}

/// Reflection length from the cycle type: `n - #cycles` for permutations;
/// for signed permutations each pair of opposite cycles of length `k`
/// contributes `k - 1` and each balanced cycle half its number of entries.
pub fn reflection_length(p: &SignedPerm, kind: Kind) -> usize {
    if kind == Kind::A {
        return p.n() - p.cycles_on(false).len();
    }
    let (mut paired, mut balanced) = (0, 0);
    for c in p.cycles_on(true) {
        if is_balanced(&c) {
            balanced += c.len() / 2;
        } else {
            paired += c.len() - 1;
        }
    }
    paired / 2 + balanced
}

/// Whether the reflection `(i j)(-i -j)` lies below `w` in type D: `i` and
/// `j` share a cycle, or lie in two different balanced cycles.
pub fn reflection_below_d(p: &SignedPerm, i: i32, j: i32) -> Result<bool> {
    if i == j || i == -j {
        return Err(Error::Invalid(format!("({i} {j})(-{i} -{j}) is not a reflection")));
    }
    let cycles = p.cycles_on(true);
    let find = |x: i32| cycles.iter().position(|c| c.contains(&x)).expect("entry in some cycle");
    let (ci, cj) = (find(i), find(j));
    Ok(ci == cj || (is_balanced(&cycles[ci]) && is_balanced(&cycles[cj])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CoxeterType;
    use crate::nc::Projector;

    fn ctx(f: Family, r: usize) -> GroupContext {
        GroupContext::new(CoxeterType::new(f, r).unwrap()).unwrap()
    }

    #[test]
    fn standard_coxeter_matches_group() {
        for (f, r) in [(Family::A, 5), (Family::B, 4), (Family::D, 4), (Family::D, 6)] {
            let g = ctx(f, r);
            let m = PermModel::new(&g).unwrap();
            assert_eq!(&m.to_element(&m.standard_coxeter()).unwrap(), g.coxeter_element(), "{f:?}{r}");
            assert_eq!(m.to_perm(g.coxeter_element()), m.standard_coxeter());
        }
    }

    #[test]
    fn perm_roundtrip_and_homomorphism() {
        for (f, r) in [(Family::A, 4), (Family::B, 3), (Family::D, 4)] {
            let g = ctx(f, r);
            let m = PermModel::new(&g).unwrap();
            let all = g.enumerate(crate::DEFAULT_BUDGET).unwrap();
            let mut seen = std::collections::HashSet::new();
            for w in all.elements() {
                let p = m.to_perm(w);
                assert!(seen.insert(p.clone()));
                assert_eq!(&m.to_element(&p).unwrap(), w);
                assert_eq!(reflection_length(&p, m.kind()), g.reflection_length(w), "{}", m.format(&p));
            }
            for u in all.elements().iter().step_by(7) {
                for v in all.elements().iter().step_by(5) {
                    let uv = g.multiply(u, v);
                    assert_eq!(m.to_perm(&uv), m.to_perm(u).then(&m.to_perm(v)));
                }
            }
        }
    }

    #[test]
    fn fast_projection_agrees_with_lattice_join() {
        for (f, r) in [(Family::A, 5), (Family::B, 4), (Family::D, 4), (Family::D, 5)] {
            let g = ctx(f, r);
            let lat = NcLattice::build(&g);
            let slow = Projector::new(&g, &lat);
            let fast = FastProjector::new(&g, &lat).expect("standard c");
            for w in g.enumerate(crate::DEFAULT_BUDGET).unwrap().elements() {
                let p = fast.model().to_perm(w);
                assert_eq!(
                    fast.project_index(w),
                    slow.project_index(w),
                    "{f:?}{r} w = {}",
                    fast.model().format(&p)
                );
            }
        }
    }

    #[test]
    fn type_d_reflections_below() {
        let g = ctx(Family::D, 4);
        let m = PermModel::new(&g).unwrap();
        let refl: Vec<(i32, i32)> = (1..=4).flat_map(|i| (i + 1..=4).flat_map(move |j| [(i, j), (i, -j)])).collect();
        for w in g.enumerate(crate::DEFAULT_BUDGET).unwrap().elements() {
            let p = m.to_perm(w);
            for &(i, j) in &refl {
                let t = SignedPerm::from_cycles(4, &[vec![i, j]]).unwrap();
                let te = m.to_element(&t).unwrap();
                assert_eq!(reflection_below_d(&p, i, j).unwrap(), g.abs_leq(&te, w));
            }
        }
    }

    #[test]
    fn a5_example_pops_to_identity() {
        let g = ctx(Family::A, 5);
        let m = PermModel::new(&g).unwrap();
        let w = m.parse("(135642)").unwrap();
        let pi = m.project_perm(&w);
        assert_eq!(m.format(&w.then(&pi.inverse())), "(12634)");
    }
}
