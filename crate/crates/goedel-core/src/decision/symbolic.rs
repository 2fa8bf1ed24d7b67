//! Evaluation of formulas over an order configuration.
//!
//! Every connective clause returns one of its argument points, a constant
//! point, or a complement point, with the choice depending only on rank
//! comparisons. Evaluating symbolically therefore needs no arithmetic, and
//! the result names a tracked point of the universe, which is the closure
//! property the enumeration rests on.

use crate::syntax::{Formula, Language};

use super::order::{OrderConfig, SymbolicPoint, Universe};
use super::DecisionError;

/// Result of symbolic evaluation: the point (or coordinate pair of points)
/// the formula's value coincides with in the given configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicValue {
    Scalar(SymbolicPoint),
    Pair(SymbolicPoint, SymbolicPoint),
}

/// Evaluates `f` in the configuration without computing numbers. The
/// formula must fit the universe's language and variables.
pub fn symbolic_eval(f: &Formula, cfg: &OrderConfig) -> Result<SymbolicValue, DecisionError> {
    let u = cfg.universe();
    crate::syntax::require_language(f, u.lang())?;
    for var in f.vars() {
        if u.var_index(&var).is_none() {
            return Err(DecisionError::unbound(&var));
        }
    }
    Ok(match u.lang() {
        Language::BiG | Language::Ginv => {
            let idx = eval_scalar(f, u, cfg);
            SymbolicValue::Scalar(u.describe(idx))
        }
        Language::Gsquare => {
            let (a, b) = eval_pair(f, u, cfg);
            SymbolicValue::Pair(u.describe(a), u.describe(b))
        }
    })
}

/// Scalar clauses by rank comparison. Returns a point index.
pub(crate) fn eval_scalar(f: &Formula, u: &Universe, cfg: &OrderConfig) -> u8 {
    match f {
        Formula::Var(name) => u.var_point(u.var_index(name).expect("variables checked")),
        Formula::Const0 => u.const0(),
        Formula::Const1 => u.const1(),
        Formula::And(l, r) => {
            let a = eval_scalar(l, u, cfg);
            let b = eval_scalar(r, u, cfg);
            if cfg.rank(a) <= cfg.rank(b) {
                a
            } else {
                b
            }
        }
        Formula::Or(l, r) => {
            let a = eval_scalar(l, u, cfg);
            let b = eval_scalar(r, u, cfg);
            if cfg.rank(a) >= cfg.rank(b) {
                a
            } else {
                b
            }
        }
        Formula::Impl(l, r) => {
            let a = eval_scalar(l, u, cfg);
            let b = eval_scalar(r, u, cfg);
            if cfg.rank(a) <= cfg.rank(b) {
                u.const1()
            } else {
                b
            }
        }
        Formula::Coimpl(l, r) => {
            let a = eval_scalar(l, u, cfg);
            let b = eval_scalar(r, u, cfg);
            if cfg.rank(a) <= cfg.rank(b) {
                u.const0()
            } else {
                a
            }
        }
        Formula::GNeg(a) => {
            let a = eval_scalar(a, u, cfg);
            if cfg.rank(a) == cfg.rank(u.const0()) {
                u.const1()
            } else {
                u.const0()
            }
        }
        Formula::Delta(a) => {
            let a = eval_scalar(a, u, cfg);
            if cfg.rank(a) == cfg.rank(u.const1()) {
                u.const1()
            } else {
                u.const0()
            }
        }
        Formula::InvNeg(a) => {
            let a = eval_scalar(a, u, cfg);
            u.mirror_point(a)
        }
        Formula::StrongNeg(_) => unreachable!("language checked before evaluation"),
    }
}

/// Pair clauses by rank comparison on each coordinate. Returns two point
/// indices, first coordinate first.
pub(crate) fn eval_pair(f: &Formula, u: &Universe, cfg: &OrderConfig) -> (u8, u8) {
    let crisp = |cond: bool| if cond { u.const1() } else { u.const0() };
    match f {
        Formula::Var(name) => {
            let p = u.var_point(u.var_index(name).expect("variables checked"));
            (p, p + 1)
        }
        Formula::Const0 => (u.const0(), u.const1()),
        Formula::Const1 => (u.const1(), u.const0()),
        Formula::StrongNeg(a) => {
            let (a1, a2) = eval_pair(a, u, cfg);
            (a2, a1)
        }
        Formula::GNeg(a) => {
            let (a1, a2) = eval_pair(a, u, cfg);
            (
                crisp(cfg.rank(a1) == cfg.rank(u.const0())),
                crisp(cfg.rank(a2) < cfg.rank(u.const1())),
            )
        }
        Formula::Delta(a) => {
            let (a1, a2) = eval_pair(a, u, cfg);
            (
                crisp(cfg.rank(a1) == cfg.rank(u.const1())),
                crisp(cfg.rank(a2) > cfg.rank(u.const0())),
            )
        }
        Formula::And(l, r) => {
            let (a1, a2) = eval_pair(l, u, cfg);
            let (b1, b2) = eval_pair(r, u, cfg);
            (
                if cfg.rank(a1) <= cfg.rank(b1) { a1 } else { b1 },
                if cfg.rank(a2) >= cfg.rank(b2) { a2 } else { b2 },
            )
        }
        Formula::Or(l, r) => {
            let (a1, a2) = eval_pair(l, u, cfg);
            let (b1, b2) = eval_pair(r, u, cfg);
            (
                if cfg.rank(a1) >= cfg.rank(b1) { a1 } else { b1 },
                if cfg.rank(a2) <= cfg.rank(b2) { a2 } else { b2 },
            )
        }
        Formula::Impl(l, r) => {
            let (a1, a2) = eval_pair(l, u, cfg);
            let (b1, b2) = eval_pair(r, u, cfg);
            let first = if cfg.rank(a1) <= cfg.rank(b1) {
                u.const1()
            } else {
                b1
            };
            let second = if cfg.rank(b2) <= cfg.rank(a2) {
                u.const0()
            } else {
                b2
            };
            (first, second)
        }
        Formula::Coimpl(l, r) => {
            let (a1, a2) = eval_pair(l, u, cfg);
            let (b1, b2) = eval_pair(r, u, cfg);
            let first = if cfg.rank(a1) <= cfg.rank(b1) {
                u.const0()
            } else {
                a1
            };
            let second = if cfg.rank(b2) <= cfg.rank(a2) {
                u.const1()
            } else {
                a2
            };
            (first, second)
        }
        Formula::InvNeg(_) => unreachable!("language checked before evaluation"),
    }
}
