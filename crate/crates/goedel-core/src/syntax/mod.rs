//! Formula syntax shared by the three logics.
//!
//! A [`Formula`] is an immutable tree over propositional variables, the
//! constants 0 and 1, and the connectives listed below. Three language
//! profiles restrict which connectives may occur:
//!
//! * `BiG` has `~` (Gödel negation), `D` (the 1-detector delta), `&`, `|`,
//!   `->` and the co-implication `-<`.
//! * `Ginv` adds the involutive negation `-`.
//! * `Gsquare` adds the strong negation `!` instead of `-`.
//!
//! Two pieces of surface syntax are sugar and never appear in the tree:
//! `a <-> b` expands to `(a -> b) & (b -> a)`, and the crisp-truth detector
//! `T a` expands to `Da & ~!a`. Keeping them out of the AST keeps the
//! evaluator clause set minimal.

mod nnf;
mod parse;

pub use nnf::{nnf_g2, nnf_ginv};
pub use parse::{parse, ParseError};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Propositional formula over variables, constants, and the connectives of
/// the bi-Gödel family.
///
/// Binary nodes are boxed pairs; the tree is immutable and cheap to clone
/// relative to the sizes this crate works with (dozens of nodes).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// Propositional variable.
    Var(String),
    /// The constant 0 (in the two-dimensional reading, `<0, 1>`).
    Const0,
    /// The constant 1 (in the two-dimensional reading, `<1, 0>`).
    Const1,
    /// Gödel negation `~a`: 1 at 0, else 0.
    GNeg(Box<Formula>),
    /// Involutive negation `-a`: value `1 - v(a)`.
    InvNeg(Box<Formula>),
    /// Strong negation `!a`: swaps the truth and falsity coordinates.
    StrongNeg(Box<Formula>),
    /// Delta `Da`: 1 if the value is 1, else 0.
    Delta(Box<Formula>),
    /// Conjunction, interpreted as minimum.
    And(Box<Formula>, Box<Formula>),
    /// Disjunction, interpreted as maximum.
    Or(Box<Formula>, Box<Formula>),
    /// Residuated implication `a -> b`: 1 if `a <= b`, else `b`.
    Impl(Box<Formula>, Box<Formula>),
    /// Co-implication `a -< b`: 0 if `a <= b`, else `a`.
    Coimpl(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn gneg(a: Formula) -> Self {
        Formula::GNeg(Box::new(a))
    }

    pub fn invneg(a: Formula) -> Self {
        Formula::InvNeg(Box::new(a))
    }

    pub fn strongneg(a: Formula) -> Self {
        Formula::StrongNeg(Box::new(a))
    }

    pub fn delta(a: Formula) -> Self {
        Formula::Delta(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Impl(Box::new(a), Box::new(b))
    }

    pub fn coimp(a: Formula, b: Formula) -> Self {
        Formula::Coimpl(Box::new(a), Box::new(b))
    }

    /// `a <-> b`, expanded immediately to `(a -> b) & (b -> a)`.
    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    /// The crisp-truth detector `T a`, expanded to `Da & ~!a`. Its value is
    /// `<1, 0>` exactly when `a` evaluates to `<1, 0>`.
    pub fn delta_top(a: Formula) -> Self {
        Formula::and(Formula::delta(a.clone()), Formula::gneg(Formula::strongneg(a)))
    }

    /// Variables occurring in the formula, sorted.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(name) => {
                out.insert(name.clone());
            }
            Formula::Const0 | Formula::Const1 => {}
            Formula::GNeg(a) | Formula::InvNeg(a) | Formula::StrongNeg(a) | Formula::Delta(a) => {
                a.collect_vars(out)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) | Formula::Coimpl(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Node count, used by the normal-form size bounds.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Const0 | Formula::Const1 => 1,
            Formula::GNeg(a) | Formula::InvNeg(a) | Formula::StrongNeg(a) | Formula::Delta(a) => {
                1 + a.size()
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) | Formula::Coimpl(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }
}

/// Precedence tiers used by the printer; higher binds tighter.
fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Var(_) | Formula::Const0 | Formula::Const1 => 4,
        Formula::GNeg(_) | Formula::InvNeg(_) | Formula::StrongNeg(_) | Formula::Delta(_) => 3,
        Formula::And(..) => 2,
        Formula::Or(..) => 1,
        Formula::Impl(..) | Formula::Coimpl(..) => 0,
    }
}

fn fmt_at(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if prec(f) < min {
        write!(out, "(")?;
        fmt_at(f, 0, out)?;
        return write!(out, ")");
    }
    match f {
        Formula::Var(name) => write!(out, "{name}"),
        Formula::Const0 => write!(out, "0"),
        Formula::Const1 => write!(out, "1"),
        Formula::GNeg(a) => {
            write!(out, "~")?;
            fmt_at(a, 3, out)
        }
        Formula::InvNeg(a) => {
            write!(out, "-")?;
            fmt_at(a, 3, out)
        }
        Formula::StrongNeg(a) => {
            write!(out, "!")?;
            fmt_at(a, 3, out)
        }
        Formula::Delta(a) => {
            write!(out, "D")?;
            fmt_at(a, 3, out)
        }
        Formula::And(a, b) => {
            fmt_at(a, 2, out)?;
            write!(out, " & ")?;
            fmt_at(b, 3, out)
        }
        Formula::Or(a, b) => {
            fmt_at(a, 1, out)?;
            write!(out, " | ")?;
            fmt_at(b, 2, out)
        }
        Formula::Impl(a, b) => {
            fmt_at(a, 1, out)?;
            write!(out, " -> ")?;
            fmt_at(b, 0, out)
        }
        // The right operand is printed at the `|` tier: a bare arrow there
        // would re-associate under `-<`, which the grammar rejects.
        Formula::Coimpl(a, b) => {
            fmt_at(a, 1, out)?;
            write!(out, " -< ")?;
            fmt_at(b, 1, out)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_at(self, 0, out)
    }
}

/// The three language profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Language {
    /// bi-Gödel base language: no involutive and no strong negation.
    BiG,
    /// bi-Gödel plus the involutive negation `-`.
    Ginv,
    /// bi-Gödel plus the strong negation `!`, evaluated over value pairs.
    Gsquare,
}

impl fmt::Display for Language {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Language::BiG => write!(out, "big"),
            Language::Ginv => write!(out, "ginv"),
            Language::Gsquare => write!(out, "g2"),
        }
    }
}

/// A connective was used outside its language profile.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("connective {connective} is not part of the {lang} language")]
pub struct LanguageError {
    pub connective: &'static str,
    pub lang: Language,
}

/// Returns the first connective of `f` not permitted in `lang`, if any.
pub fn first_violation(f: &Formula, lang: Language) -> Option<&'static str> {
    match f {
        Formula::Var(_) | Formula::Const0 | Formula::Const1 => None,
        Formula::InvNeg(a) => {
            if lang == Language::Ginv {
                first_violation(a, lang)
            } else {
                Some("-")
            }
        }
        Formula::StrongNeg(a) => {
            if lang == Language::Gsquare {
                first_violation(a, lang)
            } else {
                Some("!")
            }
        }
        Formula::GNeg(a) | Formula::Delta(a) => first_violation(a, lang),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Impl(a, b) | Formula::Coimpl(a, b) => {
            first_violation(a, lang).or_else(|| first_violation(b, lang))
        }
    }
}

/// True iff every node of `f` is permitted in `lang`.
pub fn check_language(f: &Formula, lang: Language) -> bool {
    first_violation(f, lang).is_none()
}

/// Checks `f` against `lang`, returning the offending connective on failure.
pub fn require_language(f: &Formula, lang: Language) -> Result<(), LanguageError> {
    match first_violation(f, lang) {
        None => Ok(()),
        Some(connective) => Err(LanguageError { connective, lang }),
    }
}

/// Deterministically picks a variable name not in `avoid`, following the
/// scheme `_t0`, `_t1`, ... The leading underscore keeps generated names out
/// of the user-facing variable space, which starts with a letter.
pub fn fresh_variable(avoid: &BTreeSet<String>) -> String {
    (0..)
        .map(|i| format!("_t{i}"))
        .find(|name| !avoid.contains(name))
        .expect("unbounded name supply")
}
