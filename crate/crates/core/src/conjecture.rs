//! Conjectured counts of elements with the longest `Pop_T` trajectories,
//! evaluated against computed depth tables. These are reported, never
//! asserted.

use crate::cartan::{CoxeterType, Family};
use crate::dynamics::DepthTable;
use serde::Serialize;

/// Which conjecture to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conjecture {
    /// `A_{n-1}`: elements needing `n-2` or `n-1` iterations number
    /// `2^n - binom(n, 2)`.
    A,
    /// `B_n`: elements needing `2n-2` or `2n-1` iterations number `2^n - n`.
    B,
    /// `D_n`: elements needing `2n-3` iterations number `n (2^{n-1} - 2) + 1`.
    D,
}

impl Conjecture {
    pub fn family(self) -> Family {
        match self {
            Conjecture::A => Family::A,
            Conjecture::B => Family::B,
            Conjecture::D => Family::D,
        }
    }

    /// The parameter `n` for a group of this family.
    pub fn parameter(self, ty: CoxeterType) -> usize {
        match self {
            Conjecture::A => ty.rank() + 1,
            _ => ty.rank(),
        }
    }

    /// Depths whose counts are summed.
    pub fn depths(self, n: usize) -> Vec<usize> {
        match self {
            Conjecture::A => vec![n - 2, n - 1],
            Conjecture::B => vec![2 * n - 2, 2 * n - 1],
            Conjecture::D => vec![2 * n - 3],
        }
    }

    pub fn formula(self, n: usize) -> i64 {
        let n = n as i64;
        let p = |k: i64| 1i64 << k;
        match self {
            Conjecture::A => p(n) - n * (n - 1) / 2,
            Conjecture::B => p(n) - n,
            Conjecture::D => n * (p(n - 1) - 2) + 1,
        }
    }

    /// For type D, the formula with `n` replaced by `n - 1`.
    pub fn shifted_formula(self, n: usize) -> Option<i64> {
        (self == Conjecture::D).then(|| Conjecture::D.formula(n - 1))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Match,
    Mismatch,
}

/// One rank of a conjecture check.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub group: String,
    pub n: usize,
    pub depths: Vec<usize>,
    pub observed: u64,
    pub formula: i64,
    pub verdict: Verdict,
    /// Type D only: the shifted formula and whether it matches.
    pub shifted_formula: Option<i64>,
    pub shifted_verdict: Option<Verdict>,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
        })
    }
}

fn verdict(observed: u64, expected: i64) -> Verdict {
    if observed as i64 == expected {
        Verdict::Match
    } else {
        Verdict::Mismatch
    }
}

/// Evaluates a conjecture on one computed depth table.
pub fn check(which: Conjecture, ty: CoxeterType, table: &DepthTable) -> ConjectureRow {
    let n = which.parameter(ty);
    let depths = which.depths(n);
    let observed = depths.iter().map(|&d| table.counts.get(d).copied().unwrap_or(0)).sum();
    let formula = which.formula(n);
    let shifted_formula = which.shifted_formula(n);
    ConjectureRow {
        group: ty.to_string(),
        n,
        depths,
        observed,
        formula,
        verdict: verdict(observed, formula),
        shifted_formula,
        shifted_verdict: shifted_formula.map(|f| verdict(observed, f)),
    }
}

impl ConjectureRow {
    pub fn to_text(&self) -> String {
        let depths = self.depths.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("+");
        let mut s = format!(
            "{} n={} depth {}: observed {} formula {} {}",
            self.group, self.n, depths, self.observed, self.formula, self.verdict
        );
        if let (Some(f), Some(v)) = (self.shifted_formula, self.shifted_verdict) {
            s.push_str(&format!("; shifted formula {f} {v}"));
        }
        s
    }
}
