//! Small dense linear algebra over Q(√5): incremental row reduction, span
//! membership and determinants.

use crate::scalar::Scalar;

/// A subspace kept in reduced row echelon form.
///
/// Every stored row has a leading 1 in its pivot column and zeros in the
/// pivot columns of all other rows, so a vector can be reduced against the
/// rows in any order.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p];
            if f.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= f * *r;
                }
            }
        }
    }

    /// Adds `v` to the spanning set. Returns `true` when the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = *x * inv;
            }
        }
        for row in self.rows.iter_mut() {
            let f = row[p];
            if f.is_zero() {
                continue;
            }
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= f * *r;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        if self.rows.len() == self.dim {
            return true;
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }
}

/// Rank of the span of `vectors`.
pub fn rank_of(dim: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> usize {
    let mut e = Echelon::new(dim);
    for v in vectors {
        e.insert(v);
        if e.rank() == dim {
            break;
        }
    }
    e.rank()
}

/// Determinant by Gaussian elimination. `m` is row-major and square.
pub fn determinant(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut det = Scalar::ONE;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Scalar::ZERO;
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col];
        det = det * p;
        let inv = p.recip().expect("nonzero pivot");
        for r in col + 1..n {
            let f = m[r][col] * inv;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = f * m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}
