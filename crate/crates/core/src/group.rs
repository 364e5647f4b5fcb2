//! Finite Coxeter groups realised on their root systems.
//!
//! A [`GroupContext`] owns the positive roots (exact coordinates in the basis
//! of simple roots), the simple generators, all reflections, and a chosen
//! Coxeter element `c`. Elements are [`Element`] root images; products,
//! inverses and conjugates are permutation compositions on root indices.
//!
//! Reflection length uses the moved space: `l_T(w) = rank(M_w - I)` where
//! `M_w` is the matrix of `w` on the span of the roots, and a reflection
//! `t_beta` lies below `w` in absolute order exactly when `beta` lies in the
//! image of `M_w - I`.
//!
//! Dihedral groups `I_2(m)` skip the linear algebra. Their roots sit at
//! angles `j*pi/m` for `j in 0..2m` (index `j` is `-beta_{j-m}` for `j >= m`),
//! the simple roots are at `j = 0` and `j = m - 1`, and every element is a
//! rotation or a reflection read off from two root images.

use crate::cartan::CoxeterType;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::linalg::{determinant, Echelon};
use crate::refset::ReflectionSet;
use crate::scalar::Scalar;
use std::collections::{HashMap, VecDeque};

/// Default cap on the group order for full enumeration.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// How the Coxeter element of a context is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoxeterSpec {
    /// `s_n s_{n-1} ... s_1`. For A, B and D this is the long cycle
    /// `(1 2 ... n)`, `(-1 ... -n 1 ... n)` and `(-1 ... -(n-1) 1 ... n-1)(-n n)`
    /// in signed cycle notation.
    Standard,
    /// `c_+ c_-` where `c_+` is the product of the colour class of node 1 in
    /// the two-colouring of the diagram and `c_-` the product of the other.
    Bipartite,
    /// An explicit word in simple reflections (0-based), using each exactly once.
    Word(Vec<usize>),
    /// An explicit element, accepted when it is conjugate to a Coxeter element.
    Element(Element),
}

#[derive(Clone, Debug)]
enum Geometry {
    Linear {
        roots: Vec<Vec<Scalar>>,
    },
    Dihedral {
        m: usize,
    },
}

/// Kind of an element of a dihedral group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum DihedralKind {
    /// Rotation sending root index `j` to `j + shift` (mod `2m`).
    Rotation(usize),
    /// The reflection through the positive root with this index.
    Reflection(usize),
}

/// An immutable description of a finite Coxeter group with a chosen
/// Coxeter element. Cheap to share by reference across threads.
#[derive(Clone, Debug)]
pub struct GroupContext {
    ty: CoxeterType,
    geometry: Geometry,
    simple_roots: Vec<usize>,
    generators: Vec<Element>,
    reflections: Vec<Element>,
    reflection_index: HashMap<Element, usize>,
    identity: Element,
    c: Element,
    c_spec: CoxeterSpec,
}

impl GroupContext {
    /// Builds the group of type `ty` with the standard Coxeter element.
    pub fn new(ty: CoxeterType) -> Result<Self> {
        let mut ctx = match ty.dihedral_label() {
            Some(m) => Self::build_dihedral(ty, m as usize),
            None => Self::build_linear(ty),
        };
        ctx.set_coxeter(CoxeterSpec::Standard)?;
        Ok(ctx)
    }

    /// Same group, different Coxeter element.
    pub fn with_coxeter(&self, spec: CoxeterSpec) -> Result<Self> {
        let mut ctx = self.clone();
        ctx.set_coxeter(spec)?;
        Ok(ctx)
    }

    fn build_linear(ty: CoxeterType) -> Self {
        let n = ty.rank();
        let k = ty.cartan_matrix();
        let unit = |i: usize| {
            let mut v = vec![Scalar::ZERO; n];
            v[i] = Scalar::ONE;
            v
        };
        let mut roots: Vec<Vec<Scalar>> = (0..n).map(unit).collect();
        let mut lookup: HashMap<Vec<Scalar>, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        // parent[i] = Some((k, j)) when root i = s_k(root j)
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut queue: VecDeque<usize> = (0..n).collect();
        while let Some(j) = queue.pop_front() {
            for s in 0..n {
                if j == s {
                    continue;
                }
                let beta = &roots[j];
                let pairing = (0..n).fold(Scalar::ZERO, |acc, l| acc + k[s][l] * beta[l]);
                if pairing.is_zero() {
                    continue;
                }
                let mut gamma = beta.clone();
                gamma[s] -= pairing;
                if !lookup.contains_key(&gamma) {
                    let idx = roots.len();
                    lookup.insert(gamma.clone(), idx);
                    roots.push(gamma);
                    parent.push(Some((s, j)));
                    queue.push_back(idx);
                }
            }
        }
        let num = roots.len();
        let neg_lookup = |v: &Vec<Scalar>| -> usize {
            if let Some(&i) = lookup.get(v) {
                return i;
            }
            let neg: Vec<Scalar> = v.iter().map(|&x| -x).collect();
            lookup[&neg] + num
        };
        let generators: Vec<Element> = (0..n)
            .map(|s| {
                let image = roots
                    .iter()
                    .map(|beta| {
                        let pairing = (0..n).fold(Scalar::ZERO, |acc, l| acc + k[s][l] * beta[l]);
                        let mut gamma = beta.clone();
                        gamma[s] -= pairing;
                        neg_lookup(&gamma) as u8
                    })
                    .collect();
                Element::from_root_image(image)
            })
            .collect();
        let mut reflections: Vec<Element> = Vec::with_capacity(num);
        for (i, p) in parent.iter().enumerate() {
            let t = match p {
                None => generators[i].clone(),
                Some((s, j)) => {
                    let g = &generators[*s];
                    g.compose(&reflections[*j]).compose(g)
                }
            };
            reflections.push(t);
        }
        let reflection_index = reflections.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let identity = Element::identity(num);
        GroupContext {
            ty,
            geometry: Geometry::Linear { roots },
            simple_roots: (0..n).collect(),
            generators,
            reflections,
            reflection_index,
            c: identity.clone(),
            identity,
            c_spec: CoxeterSpec::Standard,
        }
    }

    fn build_dihedral(ty: CoxeterType, m: usize) -> Self {
        let refl = |a: usize| {
            let image = (0..m).map(|j| ((2 * a + 3 * m - j) % (2 * m)) as u8).collect();
            Element::from_root_image(image)
        };
        let reflections: Vec<Element> = (0..m).map(refl).collect();
        let generators = vec![reflections[0].clone(), reflections[m - 1].clone()];
        let reflection_index = reflections.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let identity = Element::identity(m);
        GroupContext {
            ty,
            geometry: Geometry::Dihedral { m },
            simple_roots: vec![0, m - 1],
            generators,
            reflections,
            reflection_index,
            c: identity.clone(),
            identity,
            c_spec: CoxeterSpec::Standard,
        }
    }

    fn set_coxeter(&mut self, spec: CoxeterSpec) -> Result<()> {
        let n = self.rank();
        let c = match &spec {
            CoxeterSpec::Standard => self.from_word(&(0..n).rev().collect::<Vec<_>>())?,
            CoxeterSpec::Bipartite => {
                let (first, second) = self.ty.bipartition();
                let word: Vec<usize> = first.into_iter().chain(second).collect();
                self.from_word(&word)?
            }
            CoxeterSpec::Word(word) => {
                let mut sorted = word.clone();
                sorted.sort_unstable();
                if sorted != (0..n).collect::<Vec<_>>() {
                    return Err(Error::InvalidCoxeterElement(format!(
                        "word {:?} does not use every simple reflection exactly once",
                        word.iter().map(|i| i + 1).collect::<Vec<_>>()
                    )));
                }
                self.from_word(word)?
            }
            CoxeterSpec::Element(w) => {
                self.check_member(w)?;
                if !self.is_conjugate_to_coxeter(w) {
                    return Err(Error::InvalidCoxeterElement(
                        "element is not conjugate to a Coxeter element".into(),
                    ));
                }
                w.clone()
            }
        };
        debug_assert_eq!(self.order_of(&c), self.coxeter_number() as u64);
        self.c = c;
        self.c_spec = spec;
        Ok(())
    }

    /// Whether `w` is conjugate to the product of the simple reflections.
    ///
    /// For dihedral groups this means a rotation by `±2pi/m`. Otherwise `w`
    /// must share the characteristic polynomial of a Coxeter element, which
    /// forces a primitive `h`-th root of unity among its eigenvalues; such
    /// elements are exactly the conjugates of Coxeter elements.
    pub fn is_conjugate_to_coxeter(&self, w: &Element) -> bool {
        match self.geometry {
            Geometry::Dihedral { m } => {
                matches!(self.dihedral_kind(w), DihedralKind::Rotation(s) if s == 2 || s == 2 * m - 2)
            }
            Geometry::Linear { .. } => {
                let reference = self.from_word(&(0..self.rank()).collect::<Vec<_>>()).expect("valid word");
                let n = self.rank();
                (0..=n as i64).all(|x| self.char_poly_at(w, x) == self.char_poly_at(&reference, x))
            }
        }
    }

    /// `det(x I - M_w)` on the span of the simple roots.
    fn char_poly_at(&self, w: &Element, x: i64) -> Scalar {
        let n = self.rank();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.image_coords(w, j)).collect();
        let m = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let diag = if r == c { Scalar::from_int(x) } else { Scalar::ZERO };
                        diag - cols[c][r]
                    })
                    .collect()
            })
            .collect();
        determinant(m)
    }

    pub fn cox_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// Number of positive roots, which equals the number of reflections.
    pub fn num_roots(&self) -> usize {
        self.reflections.len()
    }

    pub fn coxeter_number(&self) -> u32 {
        self.ty.coxeter_number()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.ty.degrees()
    }

    pub fn order(&self) -> u64 {
        self.ty.order()
    }

    /// Positive roots in simple-root coordinates. Empty for dihedral types,
    /// whose roots are indexed by angle.
    pub fn positive_roots(&self) -> &[Vec<Scalar>] {
        match &self.geometry {
            Geometry::Linear { roots } => roots,
            Geometry::Dihedral { .. } => &[],
        }
    }

    /// Index of the `k`-th simple root among the positive roots.
    pub fn simple_root(&self, k: usize) -> usize {
        self.simple_roots[k]
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn generator(&self, k: usize) -> &Element {
        &self.generators[k]
    }

    /// All reflections; reflection `i` is the reflection in positive root `i`.
    pub fn reflections(&self) -> &[Element] {
        &self.reflections
    }

    pub fn reflection_index(&self, w: &Element) -> Option<usize> {
        self.reflection_index.get(w).copied()
    }

    pub fn identity(&self) -> &Element {
        &self.identity
    }

    pub fn coxeter_element(&self) -> &Element {
        &self.c
    }

    pub fn coxeter_spec(&self) -> &CoxeterSpec {
        &self.c_spec
    }

    fn check_member(&self, w: &Element) -> Result<()> {
        if w.num_roots() != self.num_roots() {
            return Err(Error::ContextMismatch(w.num_roots(), self.num_roots()));
        }
        Ok(())
    }

    /// `u v`, checking that both factors belong to this group.
    pub fn try_multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_member(u)?;
        self.check_member(v)?;
        Ok(u.compose(v))
    }

    /// `u v` (apply `v`, then `u`). Panics on elements of another group.
    pub fn multiply(&self, u: &Element, v: &Element) -> Element {
        u.compose(v)
    }

    pub fn invert(&self, w: &Element) -> Element {
        w.inverse()
    }

    /// `g w g^-1`.
    pub fn conjugate(&self, w: &Element, g: &Element) -> Element {
        g.compose(w).compose(&g.inverse())
    }

    /// `w^k` for any integer `k`.
    pub fn power(&self, w: &Element, k: i64) -> Element {
        let base = if k < 0 { w.inverse() } else { w.clone() };
        let mut e = k.unsigned_abs();
        let mut result = self.identity.clone();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        result
    }

    pub fn order_of(&self, w: &Element) -> u64 {
        let mut x = w.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.compose(w);
            k += 1;
        }
        k
    }

    /// Product of simple reflections `s_{word[0]} s_{word[1]} ...` (0-based).
    pub fn from_word(&self, word: &[usize]) -> Result<Element> {
        let mut w = self.identity.clone();
        for &k in word {
            let g = self
                .generators
                .get(k)
                .ok_or_else(|| Error::Invalid(format!("no simple reflection s{}", k + 1)))?;
            w = w.compose(g);
        }
        Ok(w)
    }

    /// A reduced word for `w` (0-based), lexicographically first by right descents
    /// peeled from the end.
    pub fn reduced_word(&self, w: &Element) -> Vec<usize> {
        let mut word = Vec::new();
        let mut x = w.clone();
        'outer: while !x.is_identity() {
            for k in 0..self.rank() {
                if x.sends_negative(self.simple_roots[k]) {
                    x = x.compose(&self.generators[k]);
                    word.push(k);
                    continue 'outer;
                }
            }
            unreachable!("non-identity element without a descent");
        }
        word.reverse();
        word
    }

    /// Coordinates of `w(alpha_j)` in the simple root basis.
    fn image_coords(&self, w: &Element, j: usize) -> Vec<Scalar> {
        let Geometry::Linear { roots } = &self.geometry else {
            unreachable!("linear geometry only");
        };
        let n = roots.len();
        let r = w.apply(j);
        if r < n {
            roots[r].clone()
        } else {
            roots[r - n].iter().map(|&x| -x).collect()
        }
    }

    /// Row-reduced basis of the moved space `im(M_w - I)`.
    fn moved_space(&self, w: &Element) -> Echelon {
        let n = self.rank();
        let mut e = Echelon::new(n);
        for j in 0..n {
            if w.apply(j) == j {
                continue;
            }
            let mut v = self.image_coords(w, j);
            v[j] -= Scalar::ONE;
            e.insert(v);
        }
        e
    }

    fn dihedral_kind(&self, w: &Element) -> DihedralKind {
        let Geometry::Dihedral { m } = self.geometry else {
            unreachable!("dihedral geometry only");
        };
        let x0 = w.apply(0);
        let x1 = w.apply(1);
        if (x1 + 2 * m - x0) % (2 * m) == 1 {
            DihedralKind::Rotation(x0)
        } else {
            DihedralKind::Reflection(((x0 + m) % (2 * m)) / 2)
        }
    }

    /// Absolute (reflection) length `l_T(w)`.
    pub fn reflection_length(&self, w: &Element) -> usize {
        match self.geometry {
            Geometry::Dihedral { .. } => match self.dihedral_kind(w) {
                DihedralKind::Rotation(0) => 0,
                DihedralKind::Rotation(_) => 2,
                DihedralKind::Reflection(_) => 1,
            },
            Geometry::Linear { .. } => self.moved_space(w).rank(),
        }
    }

    /// Absolute order: `v <=_T w` iff `l_T(v) + l_T(v^-1 w) = l_T(w)`.
    pub fn abs_leq(&self, v: &Element, w: &Element) -> bool {
        self.reflection_length(v) + self.reflection_length(&v.inverse().compose(w)) == self.reflection_length(w)
    }

    /// The set of reflections `t` with `t <=_T w`.
    pub fn reflections_below(&self, w: &Element) -> ReflectionSet {
        match self.geometry {
            Geometry::Dihedral { m } => match self.dihedral_kind(w) {
                DihedralKind::Rotation(0) => ReflectionSet::EMPTY,
                DihedralKind::Rotation(_) => (0..m).collect(),
                DihedralKind::Reflection(a) => ReflectionSet::singleton(a),
            },
            Geometry::Linear { ref roots } => {
                let e = self.moved_space(w);
                match e.rank() {
                    0 => ReflectionSet::EMPTY,
                    r if r == e.dim() => (0..roots.len()).collect(),
                    _ => (0..roots.len()).filter(|&i| e.contains(&roots[i])).collect(),
                }
            }
        }
    }

    /// Reflection length together with the reflections below `w`.
    pub fn absolute_data(&self, w: &Element) -> (usize, ReflectionSet) {
        match self.geometry {
            Geometry::Dihedral { .. } => (self.reflection_length(w), self.reflections_below(w)),
            Geometry::Linear { ref roots } => {
                let e = self.moved_space(w);
                let set = match e.rank() {
                    0 => ReflectionSet::EMPTY,
                    r if r == e.dim() => (0..roots.len()).collect(),
                    _ => (0..roots.len()).filter(|&i| e.contains(&roots[i])).collect(),
                };
                (e.rank(), set)
            }
        }
    }

    /// A shortest factorisation of `w` into reflections (indices), built by
    /// repeatedly splitting off the lowest-indexed reflection below `w` on
    /// the right.
    pub fn reflection_word(&self, w: &Element) -> Vec<usize> {
        let mut word = Vec::new();
        let mut x = w.clone();
        while !x.is_identity() {
            let t = self.reflections_below(&x).iter().next().expect("non-identity has a reflection below");
            x = x.compose(&self.reflections[t]);
            word.push(t);
        }
        word.reverse();
        word
    }

    /// Enumerates the whole group breadth-first from the identity by right
    /// multiplication with simple generators. Fails if the order exceeds
    /// `budget`.
    pub fn enumerate(&self, budget: u64) -> Result<Enumeration> {
        let order = self.order();
        if order > budget {
            return Err(Error::BudgetExceeded { order, budget });
        }
        let mut elements = Vec::with_capacity(order as usize);
        let mut index = HashMap::with_capacity(order as usize);
        elements.push(self.identity.clone());
        index.insert(self.identity.clone(), 0u32);
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            head += 1;
            for g in &self.generators {
                let x = w.compose(g);
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elements.len() as u32);
                    elements.push(x);
                }
            }
        }
        debug_assert_eq!(elements.len() as u64, order);
        Ok(Enumeration { elements, index })
    }
}

/// All elements of a group in a fixed breadth-first order.
#[derive(Clone, Debug)]
pub struct Enumeration {
    elements: Vec<Element>,
    index: HashMap<Element, u32>,
}

impl Enumeration {
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &Element) -> Option<usize> {
        self.index.get(w).map(|&i| i as usize)
    }
}
