//! The noncrossing partition lattice `NC(W, c) = [e, c]` in absolute order
//! and the noncrossing projection `pi_T`.
//!
//! Lattice elements are stored in order of reflection length, and each one
//! is identified by the set of reflections below it. The join of a family is
//! the first element (in that order) whose reflection set contains the union
//! of theirs; meets are joins of intersections.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::refset::ReflectionSet;
use parking_lot::RwLock;
use sha2::{Digest, Sha256};
use std::collections::{HashMap, HashSet};
use std::io::Write;
use std::path::{Path, PathBuf};

/// `NC(W, c)` with per-element reflection length and reflection sets.
#[derive(Clone, Debug)]
pub struct NcLattice {
    c: Element,
    elements: Vec<Element>,
    ranks: Vec<u8>,
    refsets: Vec<ReflectionSet>,
    index: HashMap<Element, u32>,
    by_refset: HashMap<ReflectionSet, u32>,
    /// `rank_start[r]` is the first index of rank `r`; one extra sentinel.
    rank_start: Vec<usize>,
}

impl NcLattice {
    /// Builds `[e, c]` breadth-first: `x` is extended by every reflection `t`
    /// not below `x` (so `l_T(xt) = l_T(x) + 1`) for which `xt <=_T c`.
    pub fn build(ctx: &GroupContext) -> Self {
        let n = ctx.rank();
        let c = ctx.coxeter_element().clone();
        let mut elements = vec![ctx.identity().clone()];
        let mut ranks = vec![0u8];
        let mut refsets = vec![ReflectionSet::EMPTY];
        let mut level = vec![0usize];
        for r in 0..n {
            let mut next = Vec::new();
            let mut tried: HashSet<Element> = HashSet::new();
            for &xi in &level {
                let x = elements[xi].clone();
                let below = refsets[xi];
                for (ti, t) in ctx.reflections().iter().enumerate() {
                    if below.contains(ti) {
                        continue;
                    }
                    let y = x.compose(t);
                    if !tried.insert(y.clone()) {
                        continue;
                    }
                    let rest = y.inverse().compose(&c);
                    if ctx.reflection_length(&rest) == n - r - 1 {
                        next.push(y);
                    }
                }
            }
            level.clear();
            for y in next {
                level.push(elements.len());
                refsets.push(ctx.reflections_below(&y));
                ranks.push(r as u8 + 1);
                elements.push(y);
            }
        }
        let lattice = Self::from_parts(c, elements, ranks, refsets);
        if cfg!(debug_assertions) {
            lattice.check_axioms(ctx).expect("noncrossing lattice axioms");
        }
        lattice
    }

    fn from_parts(c: Element, elements: Vec<Element>, ranks: Vec<u8>, refsets: Vec<ReflectionSet>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, w)| (w, i as u32)).collect();
        let by_refset = refsets.iter().enumerate().map(|(i, &s)| (s, i as u32)).collect();
        let max_rank = ranks.iter().copied().max().unwrap_or(0) as usize;
        let mut rank_start = vec![0; max_rank + 2];
        for r in 0..=max_rank + 1 {
            rank_start[r] = ranks.iter().position(|&x| x as usize >= r).unwrap_or(ranks.len());
        }
        NcLattice { c, elements, ranks, refsets, index, by_refset, rank_start }
    }

    /// Cheap structural checks: size, atoms, and that every element is the
    /// join of its atoms.
    pub fn check_axioms(&self, ctx: &GroupContext) -> Result<()> {
        let expected = ctx.cox_type().catalan() as usize;
        if self.len() != expected {
            return Err(Error::Invalid(format!("lattice has {} elements, expected {expected}", self.len())));
        }
        for (i, t) in ctx.reflections().iter().enumerate() {
            match self.index_of(t) {
                Some(a) if self.refsets[a] == ReflectionSet::singleton(i) => {}
                _ => return Err(Error::Invalid(format!("reflection {i} is not an atom"))),
            }
        }
        if self.by_refset.len() != self.len() {
            return Err(Error::Invalid("two lattice elements share a reflection set".into()));
        }
        for i in 0..self.len() {
            if self.join_of_set(self.refsets[i]) != i {
                return Err(Error::Invalid(format!("element {i} is not the join of its atoms")));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn coxeter_element(&self) -> &Element {
        &self.c
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i] as usize
    }

    pub fn refset(&self, i: usize) -> ReflectionSet {
        self.refsets[i]
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.index.get(w).map(|&i| i as usize)
    }

    pub fn contains(&self, w: &Element) -> bool {
        self.index.contains_key(w)
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn top_index(&self) -> usize {
        self.len() - 1
    }

    /// Indices of the elements of reflection length `r`.
    pub fn rank_range(&self, r: usize) -> std::ops::Range<usize> {
        let lo = self.rank_start.get(r).copied().unwrap_or(self.len());
        let hi = self.rank_start.get(r + 1).copied().unwrap_or(self.len());
        lo..hi
    }

    /// Smallest lattice element whose reflection set contains `s`.
    pub fn join_of_set(&self, s: ReflectionSet) -> usize {
        if let Some(&i) = self.by_refset.get(&s) {
            return i as usize;
        }
        // Two or more reflections only fit below elements of rank >= 2.
        let start = if s.len() > 1 { self.rank_start.get(2).copied().unwrap_or(0) } else { 0 };
        (start..self.len())
            .find(|&i| s.is_subset(&self.refsets[i]))
            .expect("c lies above every reflection")
    }

    /// Join of lattice elements given by index.
    pub fn join(&self, items: &[usize]) -> usize {
        let s = items.iter().fold(ReflectionSet::EMPTY, |acc, &i| acc.union(self.refsets[i]));
        self.join_of_set(s)
    }

    /// Meet of lattice elements given by index; the meet of nothing is `c`.
    pub fn meet(&self, items: &[usize]) -> usize {
        if items.is_empty() {
            return self.top_index();
        }
        let s = items.iter().fold(self.refsets[items[0]], |acc, &i| acc.intersection(self.refsets[i]));
        self.join_of_set(s)
    }

    /// Absolute order restricted to the lattice.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.refsets[a].is_subset(&self.refsets[b])
    }

    /// Kreweras complement `K(w) = c w^-1`. Fails for elements outside `[e, c]`.
    pub fn kreweras(&self, w: &Element) -> Result<usize> {
        if !self.contains(w) {
            return Err(Error::Invalid("Kreweras complement of an element outside NC(W, c)".into()));
        }
        let k = self.c.compose(&w.inverse());
        Ok(self.index_of(&k).expect("Kreweras complement stays in the lattice"))
    }

    /// Loads the lattice from `dir` when a valid cache file for this context
    /// exists, otherwise builds it and writes the cache. Unreadable, corrupt or
    /// mismatched files are rebuilt.
    pub fn load_or_build(ctx: &GroupContext, dir: Option<&Path>) -> Self {
        let Some(dir) = dir else {
            return Self::build(ctx);
        };
        let path = cache_path(ctx, dir);
        if let Ok(bytes) = std::fs::read(&path) {
            if let Ok(l) = decode_cache(ctx, &bytes) {
                return l;
            }
        }
        let lattice = Self::build(ctx);
        // A cache that cannot be written is only a missed optimisation.
        let _ = std::fs::create_dir_all(dir).and_then(|_| write_atomic(&path, &encode_cache(ctx, &lattice)));
        lattice
    }
}

const MAGIC: &[u8; 8] = b"COXPOPNC";
const FORMAT_VERSION: u32 = 1;

/// Cache file location for a context: one file per type and Coxeter element.
pub fn cache_path(ctx: &GroupContext, dir: &Path) -> PathBuf {
    let digest = Sha256::digest(ctx.coxeter_element().root_image());
    let tag: String = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
    dir.join(format!("nc-{}-{tag}.bin", ctx.cox_type()))
}

/// Serialises a lattice. All integers are little-endian:
///
/// ```text
/// magic "COXPOPNC" | u32 version | u16 len, type name | u32 rank
/// u32 N (positive roots) | N bytes: root image of c
/// u32 count | count * N bytes root images | count * 16 bytes reflection
/// sets (u128) | count bytes reflection lengths | 32 bytes SHA-256 of all
/// preceding bytes
/// ```
pub fn encode_cache(ctx: &GroupContext, l: &NcLattice) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    let name = ctx.cox_type().to_string();
    out.extend_from_slice(&(name.len() as u16).to_le_bytes());
    out.extend_from_slice(name.as_bytes());
    out.extend_from_slice(&(ctx.rank() as u32).to_le_bytes());
    out.extend_from_slice(&(ctx.num_roots() as u32).to_le_bytes());
    out.extend_from_slice(ctx.coxeter_element().root_image());
    out.extend_from_slice(&(l.len() as u32).to_le_bytes());
    for w in &l.elements {
        out.extend_from_slice(w.root_image());
    }
    for s in &l.refsets {
        out.extend_from_slice(&s.bits().to_le_bytes());
    }
    out.extend_from_slice(&l.ranks);
    let digest = Sha256::digest(&out);
    out.extend_from_slice(&digest);
    out
}

/// Parses a cache file, rejecting anything that does not match `ctx` exactly.
pub fn decode_cache(ctx: &GroupContext, bytes: &[u8]) -> Result<NcLattice> {
    let bad = |why: &str| Error::Cache(why.to_string());
    if bytes.len() < 32 + MAGIC.len() {
        return Err(bad("truncated"));
    }
    let (body, sum) = bytes.split_at(bytes.len() - 32);
    if Sha256::digest(body).as_slice() != sum {
        return Err(bad("checksum mismatch"));
    }
    let mut cur = Cursor { buf: body, pos: 0 };
    if cur.take(8)? != MAGIC {
        return Err(bad("bad magic"));
    }
    if cur.u32()? != FORMAT_VERSION {
        return Err(bad("unsupported version"));
    }
    let name_len = u16::from_le_bytes(cur.take(2)?.try_into().expect("2 bytes")) as usize;
    if cur.take(name_len)? != ctx.cox_type().to_string().as_bytes() {
        return Err(bad("type mismatch"));
    }
    if cur.u32()? as usize != ctx.rank() {
        return Err(bad("rank mismatch"));
    }
    let n = cur.u32()? as usize;
    if n != ctx.num_roots() || cur.take(n)? != ctx.coxeter_element().root_image() {
        return Err(bad("Coxeter element mismatch"));
    }
    let count = cur.u32()? as usize;
    if count as u64 != ctx.cox_type().catalan() {
        return Err(bad("wrong lattice size"));
    }
    let elements: Vec<Element> =
        (0..count).map(|_| cur.take(n).map(|b| Element::from_root_image(b.to_vec()))).collect::<Result<_>>()?;
    let refsets: Vec<ReflectionSet> = (0..count)
        .map(|_| cur.take(16).map(|b| ReflectionSet::from_bits(u128::from_le_bytes(b.try_into().expect("16 bytes")))))
        .collect::<Result<_>>()?;
    let ranks = cur.take(count)?.to_vec();
    if cur.pos != body.len() {
        return Err(bad("trailing bytes"));
    }
    Ok(NcLattice::from_parts(ctx.coxeter_element().clone(), elements, ranks, refsets))
}

struct Cursor<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, k: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(k).filter(|&e| e <= self.buf.len()).ok_or(Error::Cache("truncated".into()))?;
        let s = &self.buf[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut f = std::fs::File::create(&tmp)?;
    f.write_all(bytes)?;
    f.sync_all()?;
    std::fs::rename(tmp, path)
}

/// Computes `pi_T`, the join in `NC(W, c)` of the reflections below an
/// element, memoised by reflection set.
///
/// The memo is behind a read-write lock so one projector can be shared by
/// concurrent scans; results do not depend on the order of insertions.
pub struct Projector<'a> {
    ctx: &'a GroupContext,
    lattice: &'a NcLattice,
    memo: RwLock<HashMap<ReflectionSet, u32>>,
}

impl<'a> Projector<'a> {
    pub fn new(ctx: &'a GroupContext, lattice: &'a NcLattice) -> Self {
        Projector { ctx, lattice, memo: RwLock::new(HashMap::new()) }
    }

    pub fn context(&self) -> &'a GroupContext {
        self.ctx
    }

    pub fn lattice(&self) -> &'a NcLattice {
        self.lattice
    }

    /// Lattice index of the join of the reflections in `s`, memoised.
    pub fn join_index(&self, s: ReflectionSet) -> usize {
        if let Some(&i) = self.memo.read().get(&s) {
            return i as usize;
        }
        let i = self.lattice.join_of_set(s);
        self.memo.write().insert(s, i as u32);
        i
    }

    /// Lattice index of `pi_T(w)`.
    pub fn project_index(&self, w: &Element) -> usize {
        self.join_index(self.ctx.reflections_below(w))
    }

    /// `pi_T(w)`.
    pub fn project(&self, w: &Element) -> &'a Element {
        self.lattice.element(self.project_index(w))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_BUDGET;

    fn setup(name: &str) -> (GroupContext, NcLattice) {
        let ctx = GroupContext::new(name.parse().unwrap()).unwrap();
        let l = NcLattice::build(&ctx);
        (ctx, l)
    }

    #[test]
    fn sizes_are_catalan_numbers() {
        for (name, size) in [("A3", 14), ("B3", 20), ("H3", 32), ("D4", 50), ("I2(7)", 9), ("F4", 105)] {
            let (_, l) = setup(name);
            assert_eq!(l.len(), size, "{name}");
        }
    }

    #[test]
    fn refset_order_matches_absolute_order() {
        for name in ["A4", "B3", "D4", "H3"] {
            let (ctx, l) = setup(name);
            for a in 0..l.len() {
                for b in 0..l.len() {
                    assert_eq!(l.leq(a, b), ctx.abs_leq(l.element(a), l.element(b)), "{name} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn lattice_axioms_in_b3() {
        let (ctx, l) = setup("B3");
        let all: Vec<usize> = (0..l.len()).collect();
        for &a in &all {
            assert_eq!(l.meet(&[l.top_index(), a]), a);
            for &b in &all {
                let j = l.join(&[a, b]);
                let m = l.meet(&[a, b]);
                assert!(l.leq(a, j) && l.leq(b, j));
                assert!(l.leq(m, a) && l.leq(m, b));
                assert_eq!(l.join(&[a, l.meet(&[a, b])]), a);
                assert_eq!(l.meet(&[a, l.join(&[a, b])]), a);
                for &u in &all {
                    if l.leq(a, u) && l.leq(b, u) {
                        assert!(l.leq(j, u));
                    }
                }
            }
            // K^2(w) = c w c^-1
            let w = l.element(a);
            let k2 = l.kreweras(l.element(l.kreweras(w).unwrap())).unwrap();
            assert_eq!(l.element(k2), &ctx.conjugate(w, ctx.coxeter_element()));
        }
        assert_eq!(l.kreweras(ctx.identity()).unwrap(), l.top_index());
        assert_eq!(l.kreweras(ctx.coxeter_element()).unwrap(), l.identity_index());
    }

    #[test]
    fn kreweras_reverses_joins() {
        let (_, l) = setup("D4");
        for a in 0..l.len() {
            for b in (0..l.len()).step_by(3) {
                let j = l.join(&[a, b]);
                let ka = l.kreweras(l.element(a)).unwrap();
                let kb = l.kreweras(l.element(b)).unwrap();
                assert_eq!(l.kreweras(l.element(j)).unwrap(), l.meet(&[ka, kb]));
            }
        }
    }

    #[test]
    fn c_is_join_of_a_reflection_orbit() {
        let (ctx, l) = setup("E6");
        let c = ctx.coxeter_element();
        let h = ctx.coxeter_number() as i64;
        for t in ctx.reflections() {
            let items: Vec<usize> =
                (0..h).map(|k| l.index_of(&ctx.conjugate(t, &ctx.power(c, k))).unwrap()).collect();
            assert_eq!(l.join(&items), l.top_index());
        }
    }

    #[test]
    fn projection_of_inverse_coxeter_powers_is_c() {
        for name in ["A4", "B3", "H3", "I2(5)", "D5"] {
            let (ctx, l) = setup(name);
            let p = Projector::new(&ctx, &l);
            assert_eq!(p.project_index(ctx.identity()), 0);
            for i in 1..ctx.coxeter_number() as i64 {
                let w = ctx.power(ctx.coxeter_element(), -i);
                assert_eq!(p.project(&w), ctx.coxeter_element(), "{name} c^-{i}");
            }
        }
    }

    #[test]
    fn projection_is_idempotent_and_extensive() {
        let (ctx, l) = setup("B4");
        let p = Projector::new(&ctx, &l);
        for w in ctx.enumerate(DEFAULT_BUDGET).unwrap().elements() {
            let v = p.project(w);
            assert_eq!(p.project(v), v);
            assert!(ctx.reflections_below(w).is_subset(&l.refset(l.index_of(v).unwrap())));
        }
    }

    #[test]
    fn cache_roundtrip_and_corruption() {
        let (ctx, l) = setup("B3");
        let bytes = encode_cache(&ctx, &l);
        let back = decode_cache(&ctx, &bytes).unwrap();
        assert_eq!(back.elements(), l.elements());
        assert_eq!((0..l.len()).map(|i| back.refset(i)).collect::<Vec<_>>(), (0..l.len()).map(|i| l.refset(i)).collect::<Vec<_>>());
        let mut corrupt = bytes.clone();
        corrupt[40] ^= 1;
        assert!(decode_cache(&ctx, &corrupt).is_err());
        assert!(decode_cache(&ctx, &bytes[..bytes.len() - 1]).is_err());
        let other = ctx.with_coxeter(crate::CoxeterSpec::Bipartite).unwrap();
        assert!(decode_cache(&other, &bytes).is_err());
    }

    #[test]
    fn load_or_build_uses_and_repairs_cache() {
        let dir = std::env::temp_dir().join(format!("coxpop-nc-test-{}", std::process::id()));
        let ctx = GroupContext::new("A4".parse().unwrap()).unwrap();
        let first = NcLattice::load_or_build(&ctx, Some(&dir));
        let path = cache_path(&ctx, &dir);
        assert!(path.exists());
        let second = NcLattice::load_or_build(&ctx, Some(&dir));
        assert_eq!(first.elements(), second.elements());
        std::fs::write(&path, b"garbage").unwrap();
        let third = NcLattice::load_or_build(&ctx, Some(&dir));
        assert_eq!(first.elements(), third.elements());
        assert!(decode_cache(&ctx, &std::fs::read(&path).unwrap()).is_ok());
        let _ = std::fs::remove_dir_all(dir);
    }
}
