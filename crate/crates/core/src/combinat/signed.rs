//! Signed permutations of `±[n]` and their cycle notation.
//!
//! A [`SignedPerm`] is a bijection `w` of `{-n, ..., -1, 1, ..., n}` with
//! `w(-i) = -w(i)`; plain permutations of `[n]` are the ones that never
//! change sign. Products follow the convention of the cycle notation used
//! throughout this crate: `u.then(v)` applies `u` first, so the written
//! product `u v` of two cycle strings means "`u`, then `v`".

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    img: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm { img: (1..=n as i8).collect() }
    }

    /// From one-line notation `w(1) w(2) ... w(n)`.
    pub fn from_one_line(values: &[i32]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Invalid(format!("{values:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { img: values.iter().map(|&v| v as i8).collect() })
    }

    /// Builds a signed permutation from disjoint cycles. Each cycle maps an
    /// entry to the next one. Cycles of a signed permutation come in pairs
    /// `C`, `-C` (or are balanced, `C = -C`); when only one member of a pair
    /// is given its negative is filled in.
    pub fn from_cycles(n: usize, cycles: &[Vec<i32>]) -> Result<Self> {
        let mut img: Vec<i32> = vec![0; 2 * n + 1];
        let idx = |x: i32| (x + n as i32) as usize;
        let bad = |why: &str| Error::Invalid(why.to_string());
        for cyc in cycles {
            let mut here = vec![false; 2 * n + 1];
            for (k, &x) in cyc.iter().enumerate() {
                if x == 0 || x.unsigned_abs() as usize > n {
                    return Err(bad(&format!("entry {x} outside ±[{n}]")));
                }
                if here[idx(x)] {
                    return Err(bad(&format!("entry {x} appears twice")));
                }
                here[idx(x)] = true;
                let y = cyc[(k + 1) % cyc.len()];
                let slot = &mut img[idx(x)];
                if *slot != 0 && *slot != y {
                    return Err(bad(&format!("entry {x} appears twice")));
                }
                *slot = y;
            }
        }
        // fill in negatives of given cycles
        for x in 1..=n as i32 {
            for s in [x, -x] {
                if img[idx(s)] == 0 && img[idx(-s)] != 0 {
                    img[idx(s)] = -img[idx(-s)];
                }
            }
            if img[idx(x)] == 0 {
                img[idx(x)] = x;
                img[idx(-x)] = -x;
            }
        }
        for x in 1..=n as i32 {
            if img[idx(-x)] != -img[idx(x)] {
                return Err(bad("cycles are not closed under negation"));
            }
        }
        Self::from_one_line(&(1..=n as i32).map(|x| img[idx(x)]).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// `w(x)` for `x` in `±[n]`.
    #[inline]
    pub fn apply(&self, x: i32) -> i32 {
        if x > 0 {
            self.img[(x - 1) as usize] as i32
        } else {
            -(self.img[(-x - 1) as usize] as i32)
        }
    }

    pub fn one_line(&self) -> Vec<i32> {
        self.img.iter().map(|&v| v as i32).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut img = vec![0i8; self.n()];
        for (i, &v) in self.img.iter().enumerate() {
            let x = (i + 1) as i8;
            if v > 0 {
                img[(v - 1) as usize] = x;
            } else {
                img[(-v - 1) as usize] = -x;
            }
        }
        SignedPerm { img }
    }

    /// Functional composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &SignedPerm) -> Self {
        SignedPerm { img: other.img.iter().map(|&v| self.apply(v as i32) as i8).collect() }
    }

    /// The product "`self`, then `other`", i.e. `other ∘ self`.
    pub fn then(&self, other: &SignedPerm) -> Self {
        other.compose(self)
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Whether no entry changes sign (an ordinary permutation of `[n]`).
    pub fn is_unsigned(&self) -> bool {
        self.img.iter().all(|&v| v > 0)
    }

    /// Number of `i in [n]` with `w(i) < 0`.
    pub fn negative_count(&self) -> usize {
        self.img.iter().filter(|&&v| v < 0).count()
    }

    /// All cycles of `w` acting on `±[n]` (on `[n]` when unsigned), including
    /// fixed points. Each cycle starts at its smallest entry in the order
    /// `-1 < 1 < -2 < 2 < ...`, and cycles are sorted by first entry.
    pub fn cycles(&self) -> Vec<Vec<i32>> {
        self.cycles_on(!self.is_unsigned())
    }

    /// Cycles on `±[n]` when `signed`, else on `[n]` (which requires an
    /// unsigned permutation).
    pub fn cycles_on(&self, signed: bool) -> Vec<Vec<i32>> {
        let n = self.n() as i32;
        let domain: Vec<i32> = if !signed {
            (1..=n).collect()
        } else {
            (1..=n).flat_map(|x| [-x, x]).collect()
        };
        let mut seen = vec![false; 2 * n as usize + 1];
        let mut out = Vec::new();
        for &x in &domain {
            if seen[(x + n) as usize] {
                continue;
            }
            let mut cyc = vec![x];
            seen[(x + n) as usize] = true;
            let mut y = self.apply(x);
            while y != x {
                seen[(y + n) as usize] = true;
                cyc.push(y);
                y = self.apply(y);
            }
            out.push(cyc);
        }
        for cyc in out.iter_mut() {
            let start = (0..cyc.len()).min_by_key(|&k| entry_key(cyc[k])).expect("nonempty cycle");
            cyc.rotate_left(start);
        }
        out.sort_by_key(|c| entry_key(c[0]));
        out
    }

    /// Cycles with more than one entry.
    pub fn nontrivial_cycles(&self) -> Vec<Vec<i32>> {
        self.cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    /// Formats the permutation in cycle notation, omitting fixed points;
    /// the identity prints as `e`. Negative entries are written `-i`.
    /// Entries are run together without separators when every entry in the
    /// string is a single positive digit.
    pub fn to_cycle_string(&self) -> String {
        self.to_cycle_string_on(!self.is_unsigned())
    }

    /// Cycle notation over `±[n]` (when `signed`) or `[n]`.
    pub fn to_cycle_string_on(&self, signed: bool) -> String {
        let cycles: Vec<Vec<i32>> = self.cycles_on(signed).into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return "e".to_string();
        }
        let compact = cycles.iter().flatten().all(|&x| (1..=9).contains(&x));
        let sep = if compact { "" } else { " " };
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)))
            .collect()
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`, `(135642)` or
    /// `(-1 -3 6)(1 3 -6)`. An overline (U+0304 or U+0305) after an entry
    /// also negates it. Inside a cycle without separators every digit is an
    /// entry, which requires `n <= 9`. `e` and `()` denote the identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "e" || t == "()" || t.is_empty() {
            return Ok(Self::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let body_start = rest.strip_prefix('(').ok_or_else(|| Error::parse(s, "expected `(`"))?;
            let close = body_start.find(')').ok_or_else(|| Error::parse(s, "unbalanced parentheses"))?;
            let body = &body_start[..close];
            rest = &body_start[close + 1..];
            cycles.push(parse_cycle_body(s, body, n)?);
        }
        Self::from_cycles(n, &cycles).map_err(|e| Error::parse(s, e.to_string()))
    }
}

/// Sort key for entries: `-1 < 1 < -2 < 2 < ...`.
pub(crate) fn entry_key(x: i32) -> (u32, bool) {
    (x.unsigned_abs(), x > 0)
}

fn parse_cycle_body(input: &str, body: &str, n: usize) -> Result<Vec<i32>> {
    let is_bar = |c: char| c == '\u{0304}' || c == '\u{0305}';
    let separated = body.contains(|c: char| c.is_whitespace() || c == ',');
    let mut out = Vec::new();
    if separated {
        for tok in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let barred = tok.chars().any(is_bar);
            let digits: String = tok.chars().filter(|&c| !is_bar(c)).collect();
            let v: i32 = digits.parse().map_err(|_| Error::parse(input, format!("bad entry `{tok}`")))?;
            out.push(if barred { -v } else { v });
        }
    } else {
        if n > 9 && body.chars().filter(|c| c.is_ascii_digit()).count() > 1 {
            return Err(Error::parse(input, "separate entries with spaces when n > 9"));
        }
        let mut neg = false;
        for ch in body.chars() {
            match ch {
                '-' => neg = true,
                c if is_bar(c) => {
                    let last = out.last_mut().ok_or_else(|| Error::parse(input, "overline without entry"))?;
                    *last = -*last;
                }
                c if c.is_ascii_digit() => {
                    let v = c.to_digit(10).expect("digit") as i32;
                    out.push(if neg { -v } else { v });
                    neg = false;
                }
                c => return Err(Error::parse(input, format!("unexpected character `{c}`"))),
            }
        }
    }
    if out.is_empty() {
        return Err(Error::parse(input, "empty cycle"));
    }
    Ok(out)
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}
