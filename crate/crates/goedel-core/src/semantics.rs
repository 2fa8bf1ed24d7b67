//! Exact values and the evaluation clauses of the three logics.
//!
//! All arithmetic is over rationals in the closed unit interval, wrapped in
//! [`UnitRational`] so out-of-range values cannot be constructed. The
//! two-dimensional logic evaluates into [`ValuePair`], a pair of unit
//! rationals read as independent supports of truth and of falsity.
//!
//! The connective clauses only ever compare values and reuse inputs (plus
//! the complement `1 - v` for the involutive negation), so evaluating a
//! formula cannot leave the finite set generated by the valuation, the
//! constants, and their complements. The decision procedures rely on that
//! closure property; a property test pins it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::syntax::{require_language, Formula, Language, LanguageError};

/// A rational in `[0, 1]`, always in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitRational(Ratio<i64>);

/// Failure to build or parse a [`UnitRational`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("{numer}/{denom} is outside [0, 1]")]
    OutOfRange { numer: i64, denom: i64 },
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a rational (expected n or n/d)")]
    Malformed(String),
}

impl UnitRational {
    pub const fn zero() -> Self {
        UnitRational(Ratio::new_raw(0, 1))
    }

    pub const fn one() -> Self {
        UnitRational(Ratio::new_raw(1, 1))
    }

    pub const fn half() -> Self {
        UnitRational(Ratio::new_raw(1, 2))
    }

    /// Builds `numer / denom`, rejecting values outside the unit interval.
    pub fn new(numer: i64, denom: i64) -> Result<Self, ValueError> {
        if denom == 0 {
            return Err(ValueError::ZeroDenominator);
        }
        let r = Ratio::new(numer, denom);
        if r < Ratio::zero() || r > Ratio::one() {
            return Err(ValueError::OutOfRange { numer, denom });
        }
        Ok(UnitRational(r))
    }

    pub(crate) fn from_ratio(r: Ratio<i64>) -> Result<Self, ValueError> {
        if r < Ratio::zero() || r > Ratio::one() {
            return Err(ValueError::OutOfRange {
                numer: *r.numer(),
                denom: *r.denom(),
            });
        }
        Ok(UnitRational(r))
    }

    pub(crate) fn ratio(self) -> Ratio<i64> {
        self.0
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(self) -> bool {
        self.0.is_one()
    }

    /// The complement `1 - v`, total on the unit interval.
    pub fn complement(self) -> Self {
        UnitRational(Ratio::one() - self.0)
    }
}

impl fmt::Display for UnitRational {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{}", self.0)
    }
}

impl FromStr for UnitRational {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<Self, ValueError> {
        let s = s.trim();
        let malformed = || ValueError::Malformed(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let numer: i64 = n.trim().parse().map_err(|_| malformed())?;
                let denom: i64 = d.trim().parse().map_err(|_| malformed())?;
                if denom == 0 {
                    return Err(ValueError::ZeroDenominator);
                }
                UnitRational::new(numer, denom)
            }
            None => {
                let numer: i64 = s.parse().map_err(|_| malformed())?;
                UnitRational::new(numer, 1)
            }
        }
    }
}

/// Two-dimensional value: independent supports of truth and of falsity.
///
/// The truth order compares the first coordinate upward and the second
/// downward; `<1, 0>` is the top and `<0, 1>` the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValuePair {
    /// Support of truth.
    pub first: UnitRational,
    /// Support of falsity.
    pub second: UnitRational,
}

impl ValuePair {
    pub fn new(first: UnitRational, second: UnitRational) -> Self {
        ValuePair { first, second }
    }

    /// `<1, 0>`, the designated top of the truth order.
    pub fn top() -> Self {
        ValuePair::new(UnitRational::one(), UnitRational::zero())
    }

    /// `<0, 1>`, the bottom of the truth order.
    pub fn bottom() -> Self {
        ValuePair::new(UnitRational::zero(), UnitRational::one())
    }

    /// Truth-order comparison: more true and less false.
    pub fn le_truth(self, other: Self) -> bool {
        self.first <= other.first && self.second >= other.second
    }
}

impl fmt::Display for ValuePair {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "<{}, {}>", self.first, self.second)
    }
}

/// Assignment of scalar values to variables.
pub type Valuation1 = BTreeMap<String, UnitRational>;

/// Assignment of value pairs to variables.
pub type Valuation2 = BTreeMap<String, ValuePair>;

/// Evaluation failure: a connective outside the language or a variable with
/// no assigned value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Language(#[from] LanguageError),
    #[error("variable {0} has no value in the valuation")]
    UnboundVariable(String),
}

/// `min(a, b)`.
pub fn godel_and(a: UnitRational, b: UnitRational) -> UnitRational {
    a.min(b)
}

/// `max(a, b)`.
pub fn godel_or(a: UnitRational, b: UnitRational) -> UnitRational {
    a.max(b)
}

/// Residuated implication: 1 if `a <= b`, else `b`.
pub fn godel_impl(a: UnitRational, b: UnitRational) -> UnitRational {
    if a <= b {
        UnitRational::one()
    } else {
        b
    }
}

/// Co-implication, the dual residuum: 0 if `a <= b`, else `a`.
pub fn godel_coimpl(a: UnitRational, b: UnitRational) -> UnitRational {
    if a <= b {
        UnitRational::zero()
    } else {
        a
    }
}

/// Gödel negation: 1 at 0, else 0. Equals `a -> 0`.
pub fn godel_neg(a: UnitRational) -> UnitRational {
    if a.is_zero() {
        UnitRational::one()
    } else {
        UnitRational::zero()
    }
}

/// Delta: 1 at 1, else 0. Equals `1 -< (1 -< a)`.
pub fn godel_delta(a: UnitRational) -> UnitRational {
    if a.is_one() {
        UnitRational::one()
    } else {
        UnitRational::zero()
    }
}

fn lookup1(v: &Valuation1, name: &str) -> Result<UnitRational, EvalError> {
    v.get(name)
        .copied()
        .ok_or_else(|| EvalError::UnboundVariable(name.to_string()))
}

fn lookup2(v: &Valuation2, name: &str) -> Result<ValuePair, EvalError> {
    v.get(name)
        .copied()
        .ok_or_else(|| EvalError::UnboundVariable(name.to_string()))
}

/// Evaluates a base-language formula over the unit interval.
pub fn eval_big(f: &Formula, v: &Valuation1) -> Result<UnitRational, EvalError> {
    require_language(f, Language::BiG)?;
    eval1(f, v, Language::BiG)
}

/// Evaluates a formula of the involutive language over the unit interval.
pub fn eval_ginv(f: &Formula, v: &Valuation1) -> Result<UnitRational, EvalError> {
    require_language(f, Language::Ginv)?;
    eval1(f, v, Language::Ginv)
}

fn eval1(f: &Formula, v: &Valuation1, lang: Language) -> Result<UnitRational, EvalError> {
    Ok(match f {
        Formula::Var(name) => lookup1(v, name)?,
        Formula::Const0 => UnitRational::zero(),
        Formula::Const1 => UnitRational::one(),
        Formula::GNeg(a) => godel_neg(eval1(a, v, lang)?),
        Formula::Delta(a) => godel_delta(eval1(a, v, lang)?),
        Formula::InvNeg(a) => eval1(a, v, lang)?.complement(),
        Formula::And(a, b) => godel_and(eval1(a, v, lang)?, eval1(b, v, lang)?),
        Formula::Or(a, b) => godel_or(eval1(a, v, lang)?, eval1(b, v, lang)?),
        Formula::Impl(a, b) => godel_impl(eval1(a, v, lang)?, eval1(b, v, lang)?),
        Formula::Coimpl(a, b) => godel_coimpl(eval1(a, v, lang)?, eval1(b, v, lang)?),
        Formula::StrongNeg(_) => unreachable!("language checked before evaluation"),
    })
}

/// Evaluates a two-dimensional formula into a value pair.
///
/// The two coordinates evolve in lockstep: the lattice connectives act as
/// `<min, max>` and `<max, min>`, the arrows pair each residuum with the
/// dual residuum on swapped falsity arguments, strong negation swaps the
/// coordinates, and `~` and `D` read one coordinate and emit crisp bits on
/// both.
pub fn eval_g2(f: &Formula, v: &Valuation2) -> Result<ValuePair, EvalError> {
    require_language(f, Language::Gsquare)?;
    eval2(f, v)
}

fn eval2(f: &Formula, v: &Valuation2) -> Result<ValuePair, EvalError> {
    Ok(match f {
        Formula::Var(name) => lookup2(v, name)?,
        Formula::Const0 => ValuePair::bottom(),
        Formula::Const1 => ValuePair::top(),
        Formula::StrongNeg(a) => {
            let a = eval2(a, v)?;
            ValuePair::new(a.second, a.first)
        }
        Formula::GNeg(a) => {
            let a = eval2(a, v)?;
            ValuePair::new(
                godel_neg(a.first),
                godel_coimpl(UnitRational::one(), a.second),
            )
        }
        Formula::Delta(a) => {
            let a = eval2(a, v)?;
            ValuePair::new(godel_delta(a.first), godel_neg(godel_neg(a.second)))
        }
        Formula::And(a, b) => {
            let a = eval2(a, v)?;
            let b = eval2(b, v)?;
            ValuePair::new(godel_and(a.first, b.first), godel_or(a.second, b.second))
        }
        Formula::Or(a, b) => {
            let a = eval2(a, v)?;
            let b = eval2(b, v)?;
            ValuePair::new(godel_or(a.first, b.first), godel_and(a.second, b.second))
        }
        Formula::Impl(a, b) => {
            let a = eval2(a, v)?;
            let b = eval2(b, v)?;
            ValuePair::new(
                godel_impl(a.first, b.first),
                godel_coimpl(b.second, a.second),
            )
        }
        Formula::Coimpl(a, b) => {
            let a = eval2(a, v)?;
            let b = eval2(b, v)?;
            ValuePair::new(
                godel_coimpl(a.first, b.first),
                godel_impl(b.second, a.second),
            )
        }
        Formula::InvNeg(_) => unreachable!("language checked before evaluation"),
    })
}

/// The conflated valuation `p -> <1 - second, 1 - first>`.
///
/// Evaluation commutes with conflation coordinatewise: if a formula takes
/// the value `<x, y>` under `v`, it takes `<1 - y, 1 - x>` under the
/// conflated valuation. This symmetry halves several case analyses over
/// two-dimensional filters.
pub fn conflate(v: &Valuation2) -> Valuation2 {
    v.iter()
        .map(|(name, pair)| {
            (
                name.clone(),
                ValuePair::new(pair.second.complement(), pair.first.complement()),
            )
        })
        .collect()
}

/// Infimum of the premise values; 1 for an empty premise set.
pub fn inf_premises1(
    premises: &[Formula],
    v: &Valuation1,
    lang: Language,
) -> Result<UnitRational, EvalError> {
    let mut inf = UnitRational::one();
    for f in premises {
        require_language(f, lang)?;
        inf = inf.min(eval1(f, v, lang)?);
    }
    Ok(inf)
}

/// Truth-order infimum of the premise values: coordinatewise `<min, max>`.
/// The empty premise set gives `<1, 0>`.
pub fn inf_premises2(premises: &[Formula], v: &Valuation2) -> Result<ValuePair, EvalError> {
    let mut first = UnitRational::one();
    let mut second = UnitRational::zero();
    for f in premises {
        require_language(f, Language::Gsquare)?;
        let val = eval2(f, v)?;
        first = first.min(val.first);
        second = second.max(val.second);
    }
    Ok(ValuePair::new(first, second))
}
