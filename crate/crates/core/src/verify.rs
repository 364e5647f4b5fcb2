//! Property suites over whole groups, driven by `coxpop verify`.
//!
//! Each suite returns a list of named checks with a pass flag and a short
//! detail string. Scales are fixed so runs are reproducible.

use crate::cartan::{CoxeterType, Family};
use crate::combinat::{
    antiexceedance_positions, antiexceedances, nontrivial_cycle_count, AexcDomain, Kind, PermModel,
};
use crate::dynamics::{conjugation_orbit_set, is_single_cycle, PopEngine, Terminal};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::folding::{periodic_orbits_lift, verify_sublattice, verify_unfold_equivariance, FoldKind, FoldingMap};
use crate::golden::golden;
use crate::group::{CoxeterSpec, Enumeration, GroupContext};
use crate::nc::{NcLattice, Projector};
use crate::normal_form::{block_decompose, dual_braid_lift, lift_is_sound, sif_count};
use crate::notation::Notation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

/// The available suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Lattice,
    Dynamics,
    Folding,
    Antiexc,
    Nf,
    Sif,
}

impl Suite {
    pub const EACH: [Suite; 6] = [Suite::Lattice, Suite::Dynamics, Suite::Folding, Suite::Antiexc, Suite::Nf, Suite::Sif];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Lattice => "lattice",
            Suite::Dynamics => "dynamics",
            Suite::Folding => "folding",
            Suite::Antiexc => "antiexc",
            Suite::Nf => "nf",
            Suite::Sif => "sif",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::parse(s, "unknown suite"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Settings shared by all suites.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub budget: u64,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { budget: crate::DEFAULT_BUDGET, jobs: 1, cache_dir: None, seed: 0x5eed }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{}] {}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// A group with its lattice and element list.
pub struct Bench {
    pub ctx: GroupContext,
    pub lattice: NcLattice,
    pub all: Enumeration,
}

impl Bench {
    pub fn new(name: &str, cfg: &VerifyConfig) -> Result<Self> {
        let ty: CoxeterType = name.parse()?;
        Self::with_context(GroupContext::new(ty)?, cfg)
    }

    pub fn with_context(ctx: GroupContext, cfg: &VerifyConfig) -> Result<Self> {
        let all = ctx.enumerate(cfg.budget)?;
        let lattice = NcLattice::load_or_build(&ctx, cfg.cache_dir.as_deref());
        Ok(Bench { ctx, lattice, all })
    }

    pub fn engine(&self) -> PopEngine<'_> {
        PopEngine::new(&self.ctx, &self.lattice)
    }
}

struct Out {
    suite: Suite,
    checks: Vec<Check>,
}

impl Out {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { suite: self.suite.name().into(), name: name.into(), passed, detail: detail.into() });
    }
}

/// Runs one suite (or all of them).
pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    if suite == Suite::All {
        let mut all = Vec::new();
        for s in Suite::EACH {
            all.extend(run(s, cfg)?);
        }
        return Ok(all);
    }
    let mut out = Out { suite, checks: Vec::new() };
    match suite {
        Suite::Lattice => lattice_suite(&mut out, cfg)?,
        Suite::Dynamics => dynamics_suite(&mut out, cfg)?,
        Suite::Folding => folding_suite(&mut out)?,
        Suite::Antiexc => antiexc_suite(&mut out, cfg)?,
        Suite::Nf => nf_suite(&mut out, cfg)?,
        Suite::Sif => sif_suite(&mut out, cfg)?,
        Suite::All => unreachable!(),
    }
    Ok(out.checks)
}

/// Groups with full enumeration used across suites.
pub const STANDARD_GROUPS: &[&str] = &[
    "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "D4", "D5", "D6", "F4", "H3", "E6", "H4", "I2(3)", "I2(4)", "I2(5)",
    "I2(6)", "I2(7)", "I2(8)", "I2(9)", "I2(10)",
];

fn lattice_suite(out: &mut Out, cfg: &VerifyConfig) -> Result<()> {
    for name in STANDARD_GROUPS {
        let ctx = GroupContext::new(name.parse()?)?;
        let lattice = NcLattice::load_or_build(&ctx, cfg.cache_dir.as_deref());
        let catalan = ctx.cox_type().catalan();
        out.push(format!("{name}: |NC| = Catalan"), lattice.len() as u64 == catalan, format!("{} vs {catalan}", lattice.len()));
    }
    for name in ["A4", "B3", "D4", "H3"] {
        let b = Bench::new(name, cfg)?;
        let n = b.lattice.len();
        let bad = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| b.lattice.leq(i, j) != b.ctx.abs_leq(b.lattice.element(i), b.lattice.element(j)))
            .count();
        out.push(format!("{name}: refset order = absolute order"), bad == 0, format!("{bad} disagreements"));
    }
    {
        let b = Bench::new("B3", cfg)?;
        out.push("B3: lattice axioms", b.lattice.check_axioms(&b.ctx).is_ok(), "");
        let c = b.ctx.coxeter_element();
        let bad = b
            .lattice
            .elements()
            .iter()
            .filter(|w| {
                let k = b.lattice.kreweras(w).expect("in lattice");
                let kk = b.lattice.kreweras(b.lattice.element(k)).expect("in lattice");
                b.lattice.element(kk) != &c.compose(w).compose(&c.inverse())
            })
            .count();
        out.push("B3: K^2(w) = c w c^-1", bad == 0, format!("{bad} failures"));
    }
    {
        let b = Bench::new("B4", cfg)?;
        let engine = b.engine();
        let bad = b.all.elements().iter().filter(|w| {
            let p = engine.project(w);
            engine.project(p) != p
        });
        out.push("B4: pi_T idempotent", bad.count() == 0, "");
    }
    for name in ["A5", "B4", "D5"] {
        let b = Bench::new(name, cfg)?;
        let (count, bad) = oracle_agreement(&b.ctx, &b.lattice, b.all.elements().iter())?;
        out.push(format!("{name}: fast pi_T = generic pi_T"), bad == 0, format!("{count} elements, {bad} disagreements"));
    }
    {
        let ctx = GroupContext::new("D6".parse()?)?;
        let lattice = NcLattice::load_or_build(&ctx, cfg.cache_dir.as_deref());
        let samples = random_elements(&ctx, 100_000, cfg.seed);
        let (count, bad) = oracle_agreement(&ctx, &lattice, samples.iter())?;
        out.push("D6: fast pi_T = generic pi_T (samples)", bad == 0, format!("{count} samples, {bad} disagreements"));
    }
    for name in STANDARD_GROUPS {
        let ctx = GroupContext::new(name.parse()?)?;
        let lattice = NcLattice::load_or_build(&ctx, cfg.cache_dir.as_deref());
        let proj = Projector::new(&ctx, &lattice);
        let c = ctx.coxeter_element();
        let h = ctx.coxeter_number() as i64;
        let top = lattice.top_index();
        let orbits_ok = (0..ctx.reflections().len()).all(|t| {
            let orbit: Vec<usize> = (0..h)
                .map(|k| lattice.index_of(&ctx.conjugate(&ctx.reflections()[t], &ctx.power(c, k))).expect("reflection"))
                .collect();
            lattice.join(&orbit) == top
        });
        let powers_ok = (1..h).all(|i| proj.project_index(&ctx.power(c, -i)) == top);
        out.push(format!("{name}: join of c-orbits of reflections = c"), orbits_ok, "");
        out.push(format!("{name}: pi_T(c^-i) = c"), powers_ok, "");
    }
    Ok(())
}

/// Number of elements compared and number of disagreements between the
/// closure-based and the lattice-join `pi_T`.
pub fn oracle_agreement<'a, I>(ctx: &GroupContext, lattice: &NcLattice, elements: I) -> Result<(usize, usize)>
where
    I: Iterator<Item = &'a Element>,
{
    let fast = crate::combinat::FastProjector::new(ctx, lattice)
        .ok_or_else(|| Error::Unsupported(format!("no closure model for {}", ctx.cox_type())))?;
    let slow = Projector::new(ctx, lattice);
    let (mut count, mut bad) = (0, 0);
    for w in elements {
        count += 1;
        if fast.project_index(w) != slow.project_index(w) {
            bad += 1;
        }
    }
    Ok((count, bad))
}

/// Deterministic pseudo-random elements: products of 4N random simple
/// generators from a seeded ChaCha stream.
pub fn random_elements(ctx: &GroupContext, count: usize, seed: u64) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = 4 * ctx.num_roots();
    (0..count)
        .map(|_| {
            (0..len).fold(ctx.identity().clone(), |acc, _| acc.compose(ctx.generator(rng.gen_range(0..ctx.rank()))))
        })
        .collect()
}

fn is_coincidental(ty: CoxeterType) -> bool {
    matches!(ty.family(), Family::A | Family::B | Family::I) || (ty.family() == Family::H && ty.rank() == 3)
}

/// Checks on `O(c^-1)`, preimages and the identity's preimages.
pub fn inverse_coxeter_checks(b: &Bench, next: &[u32]) -> (bool, String) {
    let ctx = &b.ctx;
    let h = ctx.coxeter_number() as i64;
    let c = ctx.coxeter_element();
    let idx = |w: &Element| b.all.index_of(w).expect("enumerated");
    let mut preimage_count = vec![0usize; next.len()];
    for &j in next {
        preimage_count[j as usize] += 1;
    }
    let orbit_len = {
        let mut x = idx(&c.inverse());
        let mut seen = HashSet::new();
        while seen.insert(x) {
            x = next[x] as usize;
        }
        seen.len()
    };
    let cinv_none = preimage_count[idx(&c.inverse())] == 0;
    let unique = (2..h).all(|i| {
        let target = idx(&ctx.power(c, -i));
        preimage_count[target] == 1 && next[idx(&ctx.power(c, -(i - 1)))] as usize == target
    });
    let catalan = preimage_count[idx(ctx.identity())] as u64 == ctx.cox_type().catalan();
    let ok = orbit_len == h as usize && cinv_none && unique && catalan;
    (
        ok,
        format!(
            "|O(c^-1)| = {orbit_len} (h = {h}), c^-1 preimages {}, unique preimages {unique}, |Pop^-1(e)| = {}",
            preimage_count[idx(&c.inverse())],
            preimage_count[idx(ctx.identity())]
        ),
    )
}

fn dynamics_suite(out: &mut Out, cfg: &VerifyConfig) -> Result<()> {
    for name in STANDARD_GROUPS {
        let b = Bench::new(name, cfg)?;
        let engine = b.engine();
        let next = engine.pop_map(&b.all, cfg.jobs);
        let (ok, detail) = inverse_coxeter_checks(&b, &next);
        out.push(format!("{name}: c^-1 orbit, preimages, Pop^-1(e)"), ok, detail);
        let table = crate::dynamics::DepthTable::from_pop_map(&next, b.all.index_of(b.ctx.identity()).expect("e"));
        let ty = b.ctx.cox_type();
        let h = b.ctx.coxeter_number() as usize;
        if is_coincidental(ty) {
            let ok = table.max_depth() == h - 1 && table.counts[h - 1] == 1 && table.periodic_count == 0;
            out.push(format!("{name}: Pop^(h-1) = e, unique orbit of size h"), ok, format!("{:?}", table.counts));
        }
        if ty.family() == Family::D {
            let n = ty.rank();
            let ok = table.max_depth() == 2 * n - 3 && table.periodic_count == 0;
            out.push(format!("{name}: Pop^(2n-3) = e"), ok, format!("max depth {}", table.max_depth()));
        }
        if ty.is_dihedral() {
            let c = b.ctx.coxeter_element();
            let ok = (1..h as i64).all(|i| engine.forward_orbit(&b.ctx.power(c, -i)).depth() == Some(h - i as usize));
            out.push(format!("{name}: c^-i needs h - i iterations"), ok, "");
        }
    }
    for name in ["A5", "B4", "D4", "F4", "H3"] {
        let b = Bench::new(name, cfg)?;
        let engine = b.engine();
        let bad = b
            .all
            .elements()
            .iter()
            .filter(|x| !b.lattice.leq(engine.project_index(&engine.pop(x)), engine.project_index(x)))
            .count();
        out.push(format!("{name}: pi_T(Pop_T(x)) <= pi_T(x)"), bad == 0, format!("{bad} failures"));
    }
    {
        let b = Bench::new("B3", cfg)?;
        let engine = b.engine();
        let c = b.ctx.coxeter_element();
        let next = engine.pop_map(&b.all, 1);
        let bad = b
            .all
            .elements()
            .iter()
            .enumerate()
            .filter(|(_, w)| engine.is_sif(w))
            .filter(|(i, w)| {
                let allowed = b.all.index_of(&w.compose(c)).expect("enumerated");
                next.iter().enumerate().any(|(x, &y)| y as usize == *i && x != allowed)
            })
            .count();
        out.push("B3: pi_T(w) = c implies Pop^-1(w) in {wc}", bad == 0, format!("{bad} failures"));
    }
    for name in ["A4", "B3", "D4", "H3"] {
        let base = GroupContext::new(name.parse()?)?;
        let other = base.with_coxeter(CoxeterSpec::Bipartite)?;
        let report = crate::dynamics::verify_equivariance(&base, &other, cfg.budget)?;
        out.push(
            format!("{name}: depth table independent of c, Pop_T(w)^c = Pop_T(w^c)"),
            report.passed(),
            format!("{} conjugation checks, {} failures", report.conjugation_checked, report.conjugation_failures),
        );
    }
    for (name, ks) in golden().periodic_sets.iter().filter(|(k, _)| !k.contains('_')) {
        let b = Bench::new(name, cfg)?;
        let engine = b.engine();
        for &k in ks {
            let set = conjugation_orbit_set(&b.ctx, k, b.all.elements());
            let ok = set.len() == b.ctx.coxeter_number() as usize && is_single_cycle(&engine, &set);
            out.push(format!("{name}: O_{k} is a single Pop_T cycle of size h"), ok, format!("|O_{k}| = {}", set.len()));
        }
    }
    if let Some(ks) = golden().periodic_sets.get("H4_not_conjugate") {
        let b = Bench::new("H4", cfg)?;
        for &k in ks {
            let set = conjugation_orbit_set(&b.ctx, k, b.all.elements());
            out.push(format!("H4: c not conjugate to c^{k}"), set.is_empty(), "");
        }
    }
    Ok(())
}

fn folding_suite(out: &mut Out) -> Result<()> {
    let kinds = [
        FoldKind::AToB(2),
        FoldKind::AToB(3),
        FoldKind::DToB(4),
        FoldKind::DToB(5),
        FoldKind::E6ToF4,
        FoldKind::CoxeterPlane("A3".parse()?),
        FoldKind::CoxeterPlane("A4".parse()?),
        FoldKind::CoxeterPlane("B3".parse()?),
        FoldKind::CoxeterPlane("H3".parse()?),
    ];
    for kind in kinds {
        let map = FoldingMap::build(kind)?;
        let (s, t) = (map.source(), map.target());
        let (ls, lt) = (NcLattice::build(s), NcLattice::build(t));
        let (es, et) = (PopEngine::new(s, &ls), PopEngine::new(t, &lt));
        let all = s.enumerate(crate::DEFAULT_BUDGET)?;
        let images: HashSet<Element> = all.elements().iter().map(|w| map.unfold(w)).collect();
        out.push(format!("{kind}: unfold injective"), images.len() == all.len(), format!("{} elements", all.len()));
        out.push(
            format!("{kind}: Coxeter number preserved"),
            s.coxeter_number() == t.coxeter_number(),
            format!("h = {}", s.coxeter_number()),
        );
        let report = verify_unfold_equivariance(&map, &es, &et, all.elements());
        out.push(
            format!("{kind}: unfold(Pop'^k(w')) = Pop^k(unfold(w'))"),
            report.passed(),
            format!("{} elements, {} checks, {} failures", report.elements, report.checks, report.failures.len()),
        );
        if ls.len() <= 100 {
            let bad = verify_sublattice(&map, &ls, &lt);
            out.push(format!("{kind}: NC sublattice, Kreweras commutes"), bad == 0, format!("{bad} failures"));
        }
        if kind == FoldKind::E6ToF4 {
            let (checked, failed) = periodic_orbits_lift(&map, &es, &et, all.elements());
            out.push("E6->F4: periodic orbits lift", checked == 24 && failed == 0, format!("{checked} periodic elements"));
        }
    }
    Ok(())
}

/// Failures of the antiexceedance identities on a classical group:
/// `(law with pi_T, law with w, subset of positions)`.
pub fn antiexceedance_failures(b: &Bench, domain: AexcDomain) -> (usize, usize, usize) {
    let engine = b.engine();
    let model = PermModel::new(&b.ctx).expect("classical type");
    let kind = model.kind();
    let (mut with_pi, mut with_w, mut subset) = (0, 0, 0);
    for w in b.all.elements() {
        let p = model.to_perm(w);
        let q = model.to_perm(&engine.pop(w));
        let pi = model.to_perm(engine.project(w));
        let (a, a2) = (antiexceedances(&p, kind, domain).aexc, antiexceedances(&q, kind, domain).aexc);
        with_pi += (a2 + nontrivial_cycle_count(&pi, kind) != a) as usize;
        with_w += (a2 + nontrivial_cycle_count(&p, kind) != a) as usize;
        let (pos, pos2) = (antiexceedance_positions(&p, kind, domain), antiexceedance_positions(&q, kind, domain));
        subset += (!pos2.iter().all(|x| pos.contains(x))) as usize;
    }
    (with_pi, with_w, subset)
}

fn antiexc_suite(out: &mut Out, cfg: &VerifyConfig) -> Result<()> {
    for name in ["A1", "A2", "A3", "A4", "A5"] {
        let b = Bench::new(name, cfg)?;
        let (with_pi, _, subset) = antiexceedance_failures(&b, AexcDomain::Positive);
        out.push(format!("{name}: aexc(Pop(w)) = aexc(w) - cyc(pi_T(w))"), with_pi == 0, format!("{with_pi} failures"));
        out.push(format!("{name}: antiexceedance positions shrink"), subset == 0, format!("{subset} failures"));
        let model = PermModel::new(&b.ctx)?;
        let n = model.n();
        let cinv = b.ctx.coxeter_element().inverse();
        let max = b.all.elements().iter().filter(|w| antiexceedances(&model.to_perm(w), Kind::A, AexcDomain::Positive).aexc == n - 1);
        let maximisers: Vec<&Element> = max.collect();
        out.push(
            format!("{name}: c^-1 is the unique element with n-1 antiexceedances"),
            maximisers.len() == 1 && maximisers[0] == &cinv,
            "",
        );
    }
    for name in ["B2", "B3", "B4"] {
        let b = Bench::new(name, cfg)?;
        let (with_pi, with_w, subset) = antiexceedance_failures(&b, AexcDomain::Signed);
        let (pos_pi, pos_w, _) = antiexceedance_failures(&b, AexcDomain::Positive);
        out.push(
            format!("{name}: aexc(Pop(w)) = aexc(w) - cyc(pi_T(w)) on ±[n]"),
            with_pi == 0,
            format!("{with_pi} failures; variants: cyc(w) on ±[n] {with_w}, cyc(pi_T(w)) on [n] {pos_pi}, cyc(w) on [n] {pos_w}"),
        );
        out.push(format!("{name}: antiexceedance positions shrink"), subset == 0, format!("{subset} failures"));
        let model = PermModel::new(&b.ctx)?;
        let cinv = model.to_perm(&b.ctx.coxeter_element().inverse());
        let a = antiexceedances(&cinv, Kind::B, AexcDomain::Signed).aexc;
        out.push(format!("{name}: aexc(c^-1) = 2n - 1"), a == 2 * model.n() - 1, format!("{a}"));
    }
    Ok(())
}

fn nf_suite(out: &mut Out, cfg: &VerifyConfig) -> Result<()> {
    {
        let b = Bench::new("A5", cfg)?;
        let engine = b.engine();
        let notation = Notation::new(&b.ctx);
        let w = notation.parse(&b.ctx, "(135642)")?;
        let lift = dual_braid_lift(&engine, &w)?;
        let factors: Vec<&Element> = lift.factors.iter().map(|&i| b.lattice.element(i)).collect();
        let text = notation.format_product(&b.ctx, &factors);
        out.push("A5: lift of (135642)", text == "(246)·(12346)·(123456)", text);
    }
    for name in [
        "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5", "H3", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)",
        "I2(9)", "I2(10)",
    ] {
        let b = Bench::new(name, cfg)?;
        let engine = b.engine();
        let bad = b
            .all
            .elements()
            .iter()
            .filter(|w| dual_braid_lift(&engine, w).map(|f| !lift_is_sound(&engine, w, &f)).unwrap_or(true))
            .count();
        out.push(format!("{name}: lift sound"), bad == 0, format!("{bad} failures"));
    }
    {
        let b = Bench::new("B3", cfg)?;
        let engine = b.engine();
        let lifts: HashSet<Vec<usize>> =
            b.all.elements().iter().map(|w| dual_braid_lift(&engine, w).expect("no periodic orbits").factors).collect();
        out.push("B3: lift injective", lifts.len() == b.all.len(), "");
    }
    {
        let b = Bench::new("F4", cfg)?;
        let engine = b.engine();
        let periodic: Vec<&Element> = b
            .all
            .elements()
            .iter()
            .filter(|w| {
                let o = engine.forward_orbit(w);
                o.terminal == Terminal::PeriodicNonIdentity && o.transient_length == 0
            })
            .collect();
        let errors = periodic.iter().filter(|w| matches!(dual_braid_lift(&engine, w), Err(Error::Periodic))).count();
        out.push("F4: lift refused on periodic elements", periodic.len() == 24 && errors == 24, format!("{errors} of {}", periodic.len()));
    }
    {
        let b = Bench::new("A4", cfg)?;
        let engine = b.engine();
        let bad = b
            .all
            .elements()
            .iter()
            .filter(|w| {
                let d = block_decompose(&engine, w);
                let product = d.blocks.iter().fold(b.ctx.identity().clone(), |acc, x| acc.compose(&x.factor));
                let commute = d.blocks.iter().all(|x| {
                    d.blocks.iter().all(|y| x.factor.compose(&y.factor) == y.factor.compose(&x.factor))
                });
                &product != *w || !commute || !d.factors_are_sif(&engine)
            })
            .count();
        out.push("A4: block factors commute, are SIF and multiply to w", bad == 0, format!("{bad} failures"));
    }
    Ok(())
}

fn sif_suite(out: &mut Out, cfg: &VerifyConfig) -> Result<()> {
    let g = golden();
    let mut names: Vec<String> = g.sif.keys().filter(|k| k.as_str() != "D3").cloned().collect();
    names.extend((3..=10).map(|m| format!("I2({m})")));
    for name in names {
        let ty: CoxeterType = name.parse()?;
        if ty.order() > cfg.budget {
            out.push(format!("{name}: SIF count"), false, format!("order {} above budget {}", ty.order(), cfg.budget));
            continue;
        }
        let b = Bench::new(&name, cfg)?;
        let count = sif_count(&b.engine(), &b.all, cfg.jobs);
        let expected = g.sif_count(&name).expect("reference value");
        out.push(format!("{name}: SIF count"), count == expected, format!("{count} (reference {expected})"));
    }
    Ok(())
}
