//! Reading and printing group elements.
//!
//! Accepted input:
//!
//! * `e` for the identity, `c` for the Coxeter element, `c^k` and `c^-k`;
//! * `w:s1 s3 s2` (or `w:1 3 2`), a word in the simple reflections;
//! * cycle notation such as `(1 2 3)(4 5)` or `(-1 -3 6)(1 3 -6)` in types
//!   A, B and D, where an overline also marks a negative entry.
//!
//! Types A, B and D print in cycle notation; other types print a reduced
//! word in the simple reflections.

use crate::combinat::{Kind, PermModel};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::GroupContext;

/// Parser and printer for one context.
#[derive(Clone, Debug)]
pub struct Notation {
    model: Option<PermModel>,
}

impl Notation {
    pub fn new(ctx: &GroupContext) -> Self {
        Notation { model: PermModel::new(ctx).ok() }
    }

    pub fn model(&self) -> Option<&PermModel> {
        self.model.as_ref()
    }

    pub fn format(&self, ctx: &GroupContext, w: &Element) -> String {
        match &self.model {
            Some(m) => m.format(&m.to_perm(w)),
            None => format_word(ctx, w),
        }
    }

    /// A product written with `·` between factors.
    pub fn format_product(&self, ctx: &GroupContext, factors: &[&Element]) -> String {
        if factors.is_empty() {
            return "e".to_string();
        }
        factors.iter().map(|w| self.format(ctx, w)).collect::<Vec<_>>().join("·")
    }

    pub fn parse(&self, ctx: &GroupContext, input: &str) -> Result<Element> {
        let s = input.trim();
        if s == "e" || s == "()" {
            return Ok(ctx.identity().clone());
        }
        if s == "c" {
            return Ok(ctx.coxeter_element().clone());
        }
        if let Some(exp) = s.strip_prefix("c^") {
            let exp = exp.trim_start_matches('{').trim_end_matches('}');
            let k: i64 = exp.trim().parse().map_err(|_| Error::parse(input, "exponent of c must be an integer"))?;
            return Ok(ctx.power(ctx.coxeter_element(), k));
        }
        if let Some(word) = s.strip_prefix("w:") {
            let mut letters = Vec::new();
            for tok in word.split(|ch: char| ch.is_whitespace() || ch == ',').filter(|t| !t.is_empty()) {
                let num = tok.strip_prefix('s').unwrap_or(tok);
                let k: usize = num.parse().map_err(|_| Error::parse(input, format!("bad letter {tok:?}")))?;
                if k == 0 || k > ctx.rank() {
                    return Err(Error::parse(input, format!("no simple reflection s{k} in rank {}", ctx.rank())));
                }
                letters.push(k - 1);
            }
            return ctx.from_word(&letters);
        }
        if s.starts_with('(') {
            let Some(m) = &self.model else {
                return Err(Error::parse(input, format!("cycle notation needs type A, B or D, not {}", ctx.cox_type())));
            };
            let p = m.parse(s)?;
            if m.kind() == Kind::A && !p.is_unsigned() {
                return Err(Error::parse(input, "negative entries in type A"));
            }
            return m.to_element(&p).map_err(|e| Error::parse(input, e.to_string()));
        }
        Err(Error::parse(input, "expected e, c, c^k, w:<word> or cycle notation"))
    }
}

/// `e` or a reduced word such as `s1 s2 s1`.
pub fn format_word(ctx: &GroupContext, w: &Element) -> String {
    let word = ctx.reduced_word(w);
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|k| format!("s{}", k + 1)).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(name: &str) -> GroupContext {
        GroupContext::new(name.parse().unwrap()).unwrap()
    }

    #[test]
    fn coxeter_powers_and_words() {
        let g = ctx("B3");
        let n = Notation::new(&g);
        let c = g.coxeter_element();
        assert_eq!(&n.parse(&g, "c").unwrap(), c);
        assert_eq!(n.parse(&g, "c^-1").unwrap(), c.inverse());
        assert_eq!(n.parse(&g, "c^{-1}").unwrap(), c.inverse());
        assert_eq!(&n.parse(&g, "w:s3 s2 s1").unwrap(), c);
        assert_eq!(&n.parse(&g, "w:3,2,1").unwrap(), c);
        assert_eq!(n.format(&g, c), "(-1 -2 -3 1 2 3)");
        assert!(n.parse(&g, "w:s4").is_err());
        assert!(n.parse(&g, "c^x").is_err());
    }

    #[test]
    fn cycles_roundtrip() {
        let g = ctx("A5");
        let n = Notation::new(&g);
        let w = n.parse(&g, "(135642)").unwrap();
        assert_eq!(n.format(&g, &w), "(135642)");
        assert!(n.parse(&g, "(1 -2)").is_err());
        let d = ctx("D4");
        let nd = Notation::new(&d);
        assert!(nd.parse(&d, "(1 -1)").is_err());
        assert!(nd.parse(&d, "(1 -1)(2 -2)").is_ok());
    }

    #[test]
    fn generic_types_print_words() {
        let g = ctx("H3");
        let n = Notation::new(&g);
        assert_eq!(n.format(&g, g.identity()), "e");
        let w = n.parse(&g, "w:s1 s2").unwrap();
        assert_eq!(n.format(&g, &w), "s1 s2");
        assert!(n.parse(&g, "(12)").is_err());
    }
}
