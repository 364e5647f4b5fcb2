//! Group elements stored as permutations of the root system.

use std::fmt;

/// A group element, recorded by where it sends each positive root.
///
/// Roots are addressed by signed indices in `0..2N`, where `N` is the number
/// of positive roots: index `i < N` is the positive root `beta_i` and
/// `i + N` is `-beta_i`. Entry `i` of the root image is the signed index of
/// `w(beta_i)`. Since a finite reflection group acts faithfully on its roots
/// this determines `w`, and comparing or hashing elements is a byte compare.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Box<[u8]>);

impl Element {
    pub(crate) fn from_root_image(image: Vec<u8>) -> Self {
        Element(image.into_boxed_slice())
    }

    pub(crate) fn identity(num_roots: usize) -> Self {
        Element((0..num_roots as u8).collect())
    }

    /// The signed root indices of `w(beta_0), w(beta_1), ...`.
    pub fn root_image(&self) -> &[u8] {
        &self.0
    }

    /// Number of positive roots of the ambient group.
    pub fn num_roots(&self) -> usize {
        self.0.len()
    }

    /// Image of the signed root index `r`.
    #[inline]
    pub fn apply(&self, r: usize) -> usize {
        let n = self.0.len();
        if r < n {
            self.0[r] as usize
        } else {
            let v = self.0[r - n] as usize;
            if v < n { v + n } else { v - n }
        }
    }

    /// The product `self * other`, acting as `other` followed by `self`.
    pub fn compose(&self, other: &Element) -> Element {
        assert_eq!(self.0.len(), other.0.len(), "elements from different groups");
        Element(other.0.iter().map(|&r| self.apply(r as usize) as u8).collect())
    }

    pub fn inverse(&self) -> Element {
        let n = self.0.len();
        let mut inv = vec![0u8; n];
        for (i, &v) in self.0.iter().enumerate() {
            let v = v as usize;
            if v < n {
                inv[v] = i as u8;
            } else {
                inv[v - n] = (i + n) as u8;
            }
        }
        Element(inv.into_boxed_slice())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.0.len();
        self.0.iter().filter(|&&v| v as usize >= n).count()
    }

    /// Whether the positive root `r` is sent to a negative root.
    pub fn sends_negative(&self, r: usize) -> bool {
        self.0[r] as usize >= self.0.len()
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element{:?}", &self.0[..])
    }
}
