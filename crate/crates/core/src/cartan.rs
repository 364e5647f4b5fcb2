//! Irreducible finite Coxeter types, their diagrams and invariants.
//!
//! Simple reflections are numbered `0..rank` internally and `1..=rank` in
//! every user-facing string. The diagrams follow the Bourbaki numbering:
//!
//! * `A_n`: chain `1 - 2 - ... - n`.
//! * `B_n`: chain with the double bond between `n-1` and `n`; node `n` is the
//!   short root `e_n`.
//! * `D_n`: chain `1 - ... - (n-1)` with node `n` attached to `n-2`.
//! * `E_n`: chain `1 - 3 - 4 - 5 - ... - n` with node `2` attached to `4`.
//! * `F_4`: `1 - 2 = 3 - 4` with `3, 4` short.
//! * `H_n`: the 5-bond joins nodes `1` and `2`, the rest is a chain.
//! * `I_2(m)`: two nodes with bond label `m`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Largest dihedral parameter supported (root images are stored in bytes).
pub const MAX_DIHEDRAL: u32 = 120;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I,
}

/// An irreducible finite Coxeter type such as `A5`, `E8` or `I2(7)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoxeterType {
    family: Family,
    rank: usize,
    /// Bond label for `I_2(m)`; zero otherwise.
    m: u32,
}

impl CoxeterType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::H => rank == 3 || rank == 4,
            Family::I => false,
        };
        if !ok {
            return Err(Error::InvalidType(format!("{family:?}{rank}")));
        }
        Ok(CoxeterType { family, rank, m: 0 })
    }

    /// The dihedral type `I_2(m)`, `3 <= m <= 120`.
    pub fn dihedral(m: u32) -> Result<Self> {
        if !(3..=MAX_DIHEDRAL).contains(&m) {
            return Err(Error::InvalidType(format!("I2({m})")));
        }
        Ok(CoxeterType { family: Family::I, rank: 2, m })
    }

    /// Builds a type from a family letter and a rank, as given on a command
    /// line. For `I` the second number is the bond label.
    pub fn from_parts(family: &str, rank: usize) -> Result<Self> {
        let fam = match family.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" | "C" => Family::B,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "H" => Family::H,
            "G" if rank == 2 => return Self::dihedral(6),
            "I" | "I2" => return Self::dihedral(rank as u32),
            other => return Err(Error::InvalidType(other.to_string())),
        };
        Self::new(fam, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bond label of a dihedral type, `None` for the other families.
    pub fn dihedral_label(&self) -> Option<u32> {
        (self.family == Family::I).then_some(self.m)
    }

    pub fn is_dihedral(&self) -> bool {
        self.family == Family::I
    }

    /// Whether the type is A, B or D, where signed permutation models exist.
    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::D)
    }

    /// Coxeter matrix entry `m(i, j)` (0-based nodes).
    pub fn coxeter_matrix_entry(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let n = self.rank;
        match self.family {
            Family::A => if hi == lo + 1 { 3 } else { 2 },
            Family::B => {
                if hi == lo + 1 {
                    if hi == n - 1 { 4 } else { 3 }
                } else {
                    2
                }
            }
            Family::D => {
                // chain 0..n-2, node n-1 attached to n-3
                if hi == n - 1 {
                    if lo == n - 3 { 3 } else { 2 }
                } else if hi == lo + 1 {
                    3
                } else {
                    2
                }
            }
            Family::E => {
                // Bourbaki: 1-3, 3-4, 4-5, ..., 2-4 (1-based)
                let edge = matches!((lo, hi), (0, 2) | (1, 3)) || (lo >= 2 && hi == lo + 1);
                if edge { 3 } else { 2 }
            }
            Family::F => match (lo, hi) {
                (0, 1) | (2, 3) => 3,
                (1, 2) => 4,
                _ => 2,
            },
            Family::H => {
                if hi != lo + 1 {
                    2
                } else if lo == 0 {
                    5
                } else {
                    3
                }
            }
            Family::I => self.m,
        }
    }

    /// The Cartan-type matrix `K[i][j] = <alpha_j, alpha_i^vee>` used to act on
    /// root coordinates: `s_i(alpha_j) = alpha_j - K[i][j] alpha_i`.
    ///
    /// Not defined for dihedral types, which are modelled on angles instead.
    pub fn cartan_matrix(&self) -> Vec<Vec<Scalar>> {
        let n = self.rank;
        let mut k = vec![vec![Scalar::ZERO; n]; n];
        for i in 0..n {
            for j in 0..n {
                k[i][j] = if i == j {
                    Scalar::from_int(2)
                } else {
                    match self.coxeter_matrix_entry(i, j) {
                        2 => Scalar::ZERO,
                        3 => Scalar::from_int(-1),
                        5 => -Scalar::phi(),
                        4 => {
                            // Double bond: the long root sees -1, the short root -2.
                            if self.is_long(i) { Scalar::from_int(-1) } else { Scalar::from_int(-2) }
                        }
                        other => unreachable!("bond {other} in a non-dihedral type"),
                    }
                };
            }
        }
        k
    }

    fn is_long(&self, i: usize) -> bool {
        match self.family {
            Family::B => i != self.rank - 1,
            Family::F => i < 2,
            _ => true,
        }
    }

    /// Fundamental degrees, in increasing order.
    pub fn degrees(&self) -> Vec<u32> {
        let n = self.rank as u32;
        let mut d = match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut v: Vec<u32> = (1..n).map(|i| 2 * i).collect();
                v.push(n);
                v
            }
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::H => if n == 3 { vec![2, 6, 10] } else { vec![2, 12, 20, 30] },
            Family::I => vec![2, self.m],
        };
        d.sort_unstable();
        d
    }

    /// Coxeter number `h`, the largest degree.
    pub fn coxeter_number(&self) -> u32 {
        *self.degrees().last().expect("nonempty degrees")
    }

    /// Group order, the product of the degrees.
    pub fn order(&self) -> u64 {
        self.degrees().iter().map(|&d| d as u64).product()
    }

    /// Number of reflections, `rank * h / 2`.
    pub fn num_reflections(&self) -> usize {
        self.rank * self.coxeter_number() as usize / 2
    }

    /// The W-Catalan number `prod (h + d_i) / d_i`, the size of the
    /// noncrossing partition lattice.
    pub fn catalan(&self) -> u64 {
        let h = self.coxeter_number() as u128;
        let degs = self.degrees();
        let num: u128 = degs.iter().map(|&d| h + d as u128).product();
        let den: u128 = degs.iter().map(|&d| d as u128).product();
        debug_assert_eq!(num % den, 0);
        (num / den) as u64
    }

    /// Nodes adjacent to `i` in the Coxeter diagram.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.rank).filter(|&j| j != i && self.coxeter_matrix_entry(i, j) >= 3).collect()
    }

    /// Two-colouring of the diagram (a tree), with node 0 in the first class.
    pub fn bipartition(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.rank;
        let mut colour = vec![None; n];
        colour[0] = Some(false);
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            let ci = colour[i].expect("coloured");
            for j in self.neighbours(i) {
                if colour[j].is_none() {
                    colour[j] = Some(!ci);
                    stack.push(j);
                }
            }
        }
        let first = (0..n).filter(|&i| colour[i] == Some(false)).collect();
        let second = (0..n).filter(|&i| colour[i] == Some(true)).collect();
        (first, second)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I => write!(f, "I2({})", self.m),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Accepts `A5`, `e8`, `I2(7)`, `I7`, `G2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let upper = t.to_ascii_uppercase();
        if let Some(rest) = upper.strip_prefix("I2(") {
            let m: u32 = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            return Self::dihedral(m);
        }
        let (head, digits) = upper.split_at(upper.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let rank: usize = digits.parse().map_err(|_| bad())?;
        Self::from_parts(head, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_catalan_numbers() {
        let cases = [
            ("A3", 24, 14),
            ("B3", 48, 20),
            ("D4", 192, 50),
            ("E6", 51840, 833),
            ("F4", 1152, 105),
            ("H3", 120, 32),
            ("H4", 14400, 280),
            ("E8", 696729600, 25080),
            ("I2(5)", 10, 7),
        ];
        for (name, order, cat) in cases {
            let t: CoxeterType = name.parse().unwrap();
            assert_eq!(t.order(), order, "{name}");
            assert_eq!(t.catalan(), cat, "{name}");
        }
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for name in ["A1", "B2", "D7", "E7", "F4", "H4", "I2(9)"] {
            let t: CoxeterType = name.parse().unwrap();
            assert_eq!(t.to_string(), name);
        }
        assert_eq!("G2".parse::<CoxeterType>().unwrap().to_string(), "I2(6)");
        assert!("D3".parse::<CoxeterType>().is_err());
        assert!("E9".parse::<CoxeterType>().is_err());
        assert!("I2(2)".parse::<CoxeterType>().is_err());
    }

    #[test]
    fn e_diagram_is_bourbaki() {
        let t: CoxeterType = "E8".parse().unwrap();
        assert_eq!(t.neighbours(3), vec![1, 2, 4]);
        assert_eq!(t.neighbours(1), vec![3]);
        assert_eq!(t.neighbours(0), vec![2]);
    }

    #[test]
    fn number_of_reflections() {
        assert_eq!("E8".parse::<CoxeterType>().unwrap().num_reflections(), 120);
        assert_eq!("H3".parse::<CoxeterType>().unwrap().num_reflections(), 15);
        assert_eq!("I2(4)".parse::<CoxeterType>().unwrap().num_reflections(), 4);
    }
}
