//! Exact decision procedures for filter entailment, degree-order
//! entailment, and validity.
//!
//! # Algorithm
//!
//! A query mentions finitely many variables and finitely many constants
//! (0, 1, and the filter bounds). Build the [`Universe`] of tracked points
//! for them and enumerate its [`OrderConfig`]s: by the closure property of
//! the connective clauses (see [`symbolic_eval`]), the concrete value of
//! every formula coincides with a tracked point, and whether a
//! configuration falsifies the query depends only on ranks. The query
//! fails exactly when some configuration makes all premises designated and
//! the conclusion not; the first such configuration, in enumeration order,
//! is realized into a concrete counter-valuation and re-checked by direct
//! evaluation before being returned.
//!
//! [`decide_entailment_grid`] is an independent check, not an optimization:
//! it scans a finite grid of valuations by direct evaluation only. Its
//! counterexamples are always genuine; exhausting the grid proves nothing
//! beyond the grid, so it only ever refutes.

mod order;
mod symbolic;

pub use order::{ConfigIter, OrderConfig, SymbolicPoint, Universe};
pub use symbolic::{symbolic_eval, SymbolicValue};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::filters::{classify, EntailmentClass, Filter, FilterError};
use crate::semantics::{
    eval_big, eval_g2, eval_ginv, inf_premises1, inf_premises2, EvalError, UnitRational,
    Valuation1, Valuation2, ValuePair,
};
use crate::syntax::{require_language, Formula, Language, LanguageError};

/// A falsifying valuation, scalar or pair depending on the language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    One(Valuation1),
    Two(Valuation2),
}

/// Outcome of a decision. `witness` is present exactly when the query
/// fails; `class_used` reports the entailment class of the filter and is
/// absent for order queries and validity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub class_used: Option<EntailmentClass>,
}

impl Verdict {
    fn holds(class_used: Option<EntailmentClass>) -> Self {
        Verdict {
            holds: true,
            witness: None,
            class_used,
        }
    }

    fn fails(witness: Witness, class_used: Option<EntailmentClass>) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
            class_used,
        }
    }
}

/// Resource bounds for the exact decider.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of distinct variables in a query.
    pub max_vars: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vars: 4 }
    }
}

/// How premises enter the designation test. The two modes agree for every
/// filter (designation is meet-closed); the redundancy exists to be
/// asserted against, not chosen between.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PremiseMode {
    /// Test the infimum of the premise values.
    Infimum,
    /// Test each premise value on its own.
    EachPremise,
}

/// Decision failure: a malformed query or an exceeded budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error("{count} variables exceed the budget of {limit}; raise the variable limit if this is intended")]
    TooManyVariables { count: usize, limit: usize },
    #[error("grid search is limited to {max_vars} variables and denominator {max_denom}, got {vars} and {denom}")]
    GridBudget {
        vars: usize,
        denom: i64,
        max_vars: usize,
        max_denom: i64,
    },
    #[error(
        "a {lang} universe abstracts {expected} valuations, not the kind supplied"
    )]
    WrongValuation {
        lang: Language,
        expected: &'static str,
    },
    #[error(transparent)]
    Language(#[from] LanguageError),
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl DecisionError {
    pub(crate) fn unbound(name: &str) -> Self {
        DecisionError::Eval(EvalError::UnboundVariable(name.to_string()))
    }
}

fn query_vars(premises: &[Formula], conclusion: &Formula) -> BTreeSet<String> {
    let mut vars = conclusion.vars();
    for f in premises {
        vars.extend(f.vars());
    }
    vars
}

fn check_query(
    premises: &[Formula],
    conclusion: &Formula,
    lang: Language,
    limits: &Limits,
) -> Result<BTreeSet<String>, DecisionError> {
    for f in premises.iter().chain(std::iter::once(conclusion)) {
        require_language(f, lang)?;
    }
    let vars = query_vars(premises, conclusion);
    if vars.len() > limits.max_vars {
        return Err(DecisionError::TooManyVariables {
            count: vars.len(),
            limit: limits.max_vars,
        });
    }
    Ok(vars)
}

/// Designation tests for one configuration, with the filter bounds resolved
/// to constant points up front.
enum Designation {
    Unit { bound: u8, strict: bool },
    Pair { x: u8, xs: bool, y: u8, ys: bool },
}

impl Designation {
    fn from_filter(filter: &Filter, u: &Universe) -> Self {
        match filter {
            Filter::Unit(d) => Designation::Unit {
                bound: u
                    .const_point(d.bound())
                    .expect("filter bound is a universe constant"),
                strict: d.is_strict(),
            },
            Filter::Pair(d) => Designation::Pair {
                x: u.const_point(d.x()).expect("filter bound is a universe constant"),
                xs: d.x_strict(),
                y: u.const_point(d.y()).expect("filter bound is a universe constant"),
                ys: d.y_strict(),
            },
        }
    }

    fn scalar(&self, cfg: &OrderConfig, point: u8) -> bool {
        match self {
            Designation::Unit { bound, strict } => {
                if *strict {
                    cfg.rank(point) > cfg.rank(*bound)
                } else {
                    cfg.rank(point) >= cfg.rank(*bound)
                }
            }
            Designation::Pair { .. } => unreachable!("scalar test on a pair filter"),
        }
    }

    fn pair(&self, cfg: &OrderConfig, p1: u8, p2: u8) -> bool {
        match self {
            Designation::Pair { x, xs, y, ys } => {
                let first = if *xs {
                    cfg.rank(p1) > cfg.rank(*x)
                } else {
                    cfg.rank(p1) >= cfg.rank(*x)
                };
                let second = if *ys {
                    cfg.rank(p2) < cfg.rank(*y)
                } else {
                    cfg.rank(p2) <= cfg.rank(*y)
                };
                first && second
            }
            Designation::Unit { .. } => unreachable!("pair test on a scalar filter"),
        }
    }
}

/// Symbolic infimum of the premises in a configuration: the minimum-rank
/// point, or the constant 1 for no premises.
fn premise_inf_scalar(premises: &[Formula], u: &Universe, cfg: &OrderConfig) -> u8 {
    let mut inf = u.const1();
    for f in premises {
        let p = symbolic::eval_scalar(f, u, cfg);
        if cfg.rank(p) < cfg.rank(inf) {
            inf = p;
        }
    }
    inf
}

/// Coordinatewise symbolic infimum in the truth order: minimum first rank,
/// maximum second rank.
fn premise_inf_pair(premises: &[Formula], u: &Universe, cfg: &OrderConfig) -> (u8, u8) {
    let mut inf = (u.const1(), u.const0());
    for f in premises {
        let (p1, p2) = symbolic::eval_pair(f, u, cfg);
        if cfg.rank(p1) < cfg.rank(inf.0) {
            inf.0 = p1;
        }
        if cfg.rank(p2) > cfg.rank(inf.1) {
            inf.1 = p2;
        }
    }
    inf
}

/// Decides whether the premises entail the conclusion over the filter, by
/// exhaustive configuration search. On failure the witness is the
/// realization of the first falsifying configuration.
pub fn decide_entailment(
    premises: &[Formula],
    conclusion: &Formula,
    filter: &Filter,
    lang: Language,
    limits: &Limits,
) -> Result<Verdict, DecisionError> {
    decide_entailment_with_mode(premises, conclusion, filter, lang, limits, PremiseMode::Infimum)
}

/// [`decide_entailment`] with an explicit premise handling mode.
pub fn decide_entailment_with_mode(
    premises: &[Formula],
    conclusion: &Formula,
    filter: &Filter,
    lang: Language,
    limits: &Limits,
    mode: PremiseMode,
) -> Result<Verdict, DecisionError> {
    let vars = check_query(premises, conclusion, lang, limits)?;
    let class = classify(filter, lang)?;
    let bound_consts: Vec<UnitRational> = match filter {
        Filter::Unit(d) => vec![d.bound()],
        Filter::Pair(d) => vec![d.x(), d.y()],
    };
    let u = Universe::new(lang, vars, &bound_consts);
    let designation = Designation::from_filter(filter, &u);

    for cfg in u.configs() {
        let falsified = match lang {
            Language::BiG | Language::Ginv => {
                let premises_designated = match mode {
                    PremiseMode::Infimum => {
                        designation.scalar(&cfg, premise_inf_scalar(premises, &u, &cfg))
                    }
                    PremiseMode::EachPremise => premises
                        .iter()
                        .all(|f| designation.scalar(&cfg, symbolic::eval_scalar(f, &u, &cfg))),
                };
                premises_designated
                    && !designation.scalar(&cfg, symbolic::eval_scalar(conclusion, &u, &cfg))
            }
            Language::Gsquare => {
                let premises_designated = match mode {
                    PremiseMode::Infimum => {
                        let (i1, i2) = premise_inf_pair(premises, &u, &cfg);
                        designation.pair(&cfg, i1, i2)
                    }
                    PremiseMode::EachPremise => premises.iter().all(|f| {
                        let (p1, p2) = symbolic::eval_pair(f, &u, &cfg);
                        designation.pair(&cfg, p1, p2)
                    }),
                };
                let (c1, c2) = symbolic::eval_pair(conclusion, &u, &cfg);
                premises_designated && !designation.pair(&cfg, c1, c2)
            }
        };
        if falsified {
            let witness = cfg.realize();
            recheck_entailment(premises, conclusion, filter, lang, &witness);
            return Ok(Verdict::fails(witness, Some(class)));
        }
    }
    Ok(Verdict::holds(Some(class)))
}

/// Asserts by direct evaluation that the realized witness indeed falsifies
/// the query. A failure here is a bug in the enumeration or realization,
/// never a property of the query.
fn recheck_entailment(
    premises: &[Formula],
    conclusion: &Formula,
    filter: &Filter,
    lang: Language,
    witness: &Witness,
) {
    let genuine = match (lang, witness) {
        (Language::BiG | Language::Ginv, Witness::One(v)) => {
            let d = match filter {
                Filter::Unit(d) => d,
                Filter::Pair(_) => unreachable!("carrier checked by classify"),
            };
            let inf = inf_premises1(premises, v, lang).expect("witness covers the query");
            let concl = match lang {
                Language::BiG => eval_big(conclusion, v),
                _ => eval_ginv(conclusion, v),
            }
            .expect("witness covers the query");
            d.member(inf) && !d.member(concl)
        }
        (Language::Gsquare, Witness::Two(v)) => {
            let d = match filter {
                Filter::Pair(d) => d,
                Filter::Unit(_) => unreachable!("carrier checked by classify"),
            };
            let inf = inf_premises2(premises, v).expect("witness covers the query");
            let concl = eval_g2(conclusion, v).expect("witness covers the query");
            d.member(inf) && !d.member(concl)
        }
        _ => false,
    };
    assert!(
        genuine,
        "realized witness failed its concrete re-check for {} |= {} over {}",
        premises
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(", "),
        conclusion,
        filter,
    );
}

/// Decides degree-order entailment: in every valuation the conclusion's
/// value must lie at or above the infimum of the premise values (in the
/// truth order for the pair language).
pub fn decide_order_entailment(
    premises: &[Formula],
    conclusion: &Formula,
    lang: Language,
    limits: &Limits,
) -> Result<Verdict, DecisionError> {
    let vars = check_query(premises, conclusion, lang, limits)?;
    let u = Universe::new(lang, vars, &[]);
    for cfg in u.configs() {
        let falsified = match lang {
            Language::BiG | Language::Ginv => {
                let inf = premise_inf_scalar(premises, &u, &cfg);
                let concl = symbolic::eval_scalar(conclusion, &u, &cfg);
                cfg.rank(inf) > cfg.rank(concl)
            }
            Language::Gsquare => {
                let (i1, i2) = premise_inf_pair(premises, &u, &cfg);
                let (c1, c2) = symbolic::eval_pair(conclusion, &u, &cfg);
                cfg.rank(i1) > cfg.rank(c1) || cfg.rank(i2) < cfg.rank(c2)
            }
        };
        if falsified {
            let witness = cfg.realize();
            recheck_order(premises, conclusion, lang, &witness);
            return Ok(Verdict::fails(witness, None));
        }
    }
    Ok(Verdict::holds(None))
}

fn recheck_order(premises: &[Formula], conclusion: &Formula, lang: Language, witness: &Witness) {
    let genuine = match (lang, witness) {
        (Language::BiG | Language::Ginv, Witness::One(v)) => {
            let inf = inf_premises1(premises, v, lang).expect("witness covers the query");
            let concl = match lang {
                Language::BiG => eval_big(conclusion, v),
                _ => eval_ginv(conclusion, v),
            }
            .expect("witness covers the query");
            inf > concl
        }
        (Language::Gsquare, Witness::Two(v)) => {
            let inf = inf_premises2(premises, v).expect("witness covers the query");
            let concl = eval_g2(conclusion, v).expect("witness covers the query");
            !inf.le_truth(concl)
        }
        _ => false,
    };
    assert!(
        genuine,
        "realized witness failed its concrete re-check for the order query on {conclusion}"
    );
}

/// Decides validity: the formula must evaluate to 1 (to `<1, 0>` for the
/// pair language) in every valuation.
///
/// For the pair language the loop also tracks whether a first coordinate
/// pinned at 1 ever comes with a nonzero second coordinate; by the
/// conflation symmetry that cannot happen for a formula whose first
/// coordinate is always 1, and the loop asserts it.
pub fn check_validity(
    f: &Formula,
    lang: Language,
    limits: &Limits,
) -> Result<Verdict, DecisionError> {
    let vars = check_query(&[], f, lang, limits)?;
    let u = Universe::new(lang, vars, &[]);
    let mut top_first_nonzero_second: Option<OrderConfig> = None;
    for cfg in u.configs() {
        match lang {
            Language::BiG | Language::Ginv => {
                let value = symbolic::eval_scalar(f, &u, &cfg);
                if cfg.rank(value) != cfg.rank(u.const1()) {
                    let witness = cfg.realize();
                    recheck_invalidity(f, lang, &witness);
                    return Ok(Verdict::fails(witness, None));
                }
            }
            Language::Gsquare => {
                let (v1, v2) = symbolic::eval_pair(f, &u, &cfg);
                if cfg.rank(v1) != cfg.rank(u.const1()) {
                    let witness = cfg.realize();
                    recheck_invalidity(f, lang, &witness);
                    return Ok(Verdict::fails(witness, None));
                }
                if cfg.rank(v2) != cfg.rank(u.const0()) {
                    top_first_nonzero_second = Some(cfg.clone());
                }
            }
        }
    }
    assert!(
        top_first_nonzero_second.is_none(),
        "first coordinate 1 everywhere must force second coordinate 0, violated by {:?}",
        top_first_nonzero_second.map(|cfg| cfg.realize()),
    );
    Ok(Verdict::holds(None))
}

fn recheck_invalidity(f: &Formula, lang: Language, witness: &Witness) {
    let genuine = match (lang, witness) {
        (Language::BiG, Witness::One(v)) => {
            !eval_big(f, v).expect("witness covers the formula").is_one()
        }
        (Language::Ginv, Witness::One(v)) => {
            !eval_ginv(f, v).expect("witness covers the formula").is_one()
        }
        (Language::Gsquare, Witness::Two(v)) => {
            eval_g2(f, v).expect("witness covers the formula") != ValuePair::top()
        }
        _ => false,
    };
    assert!(
        genuine,
        "realized witness failed its concrete re-check for validity of {f}"
    );
}

const GRID_MAX_VARS: usize = 3;
const GRID_MAX_DENOM: i64 = 12;

/// Refutation-only check on the grid of all valuations with coordinates
/// `k / denom`. A returned witness is genuine by construction; a `holds`
/// verdict means only that the grid contains no counterexample.
pub fn decide_entailment_grid(
    premises: &[Formula],
    conclusion: &Formula,
    filter: &Filter,
    lang: Language,
    denom: i64,
) -> Result<Verdict, DecisionError> {
    for f in premises.iter().chain(std::iter::once(conclusion)) {
        require_language(f, lang)?;
    }
    let class = classify(filter, lang)?;
    let vars: Vec<String> = query_vars(premises, conclusion).into_iter().collect();
    if vars.len() > GRID_MAX_VARS || denom < 1 || denom > GRID_MAX_DENOM {
        return Err(DecisionError::GridBudget {
            vars: vars.len(),
            denom,
            max_vars: GRID_MAX_VARS,
            max_denom: GRID_MAX_DENOM,
        });
    }
    let levels: Vec<UnitRational> = (0..=denom)
        .map(|k| UnitRational::new(k, denom).expect("grid levels lie in the unit interval"))
        .collect();

    let dims = match lang {
        Language::BiG | Language::Ginv => vars.len(),
        Language::Gsquare => 2 * vars.len(),
    };
    let mut counter = vec![0usize; dims];
    loop {
        let falsified = match lang {
            Language::BiG | Language::Ginv => {
                let v: Valuation1 = vars
                    .iter()
                    .enumerate()
                    .map(|(i, name)| (name.clone(), levels[counter[i]]))
                    .collect();
                let d = filter.as_unit(lang)?;
                let inf = inf_premises1(premises, &v, lang)?;
                let concl = match lang {
                    Language::BiG => eval_big(conclusion, &v)?,
                    _ => eval_ginv(conclusion, &v)?,
                };
                if d.member(inf) && !d.member(concl) {
                    Some(Witness::One(v))
                } else {
                    None
                }
            }
            Language::Gsquare => {
                let v: Valuation2 = vars
                    .iter()
                    .enumerate()
                    .map(|(i, name)| {
                        (
                            name.clone(),
                            ValuePair::new(levels[counter[2 * i]], levels[counter[2 * i + 1]]),
                        )
                    })
                    .collect();
                let d = filter.as_pair(lang)?;
                let inf = inf_premises2(premises, &v)?;
                let concl = eval_g2(conclusion, &v)?;
                if d.member(inf) && !d.member(concl) {
                    Some(Witness::Two(v))
                } else {
                    None
                }
            }
        };
        if let Some(witness) = falsified {
            return Ok(Verdict::fails(witness, Some(class)));
        }
        // Odometer step over the grid.
        let mut dim = 0;
        loop {
            if dim == dims {
                return Ok(Verdict::holds(Some(class)));
            }
            counter[dim] += 1;
            if counter[dim] < levels.len() {
                break;
            }
            counter[dim] = 0;
            dim += 1;
        }
    }
}
