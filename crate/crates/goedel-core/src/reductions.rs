//! Rewriting point-generated filter entailment as order entailment.
//!
//! For a class induced by a point-generated filter the entailment question
//! can be re-asked at the degree order: relativize every premise and the
//! conclusion to a fresh variable `p` standing in for the filter bound, and
//! add crisp marker premises pinning `p` to the region the bound lives in.
//! [`reduce_ginv`] and [`reduce_g2`] emit these transformed sequents;
//! [`verify_reduction`] replays the claimed equivalence on the decision
//! engine, deciding both the original sequent over the class representative
//! and the transformed sequent over the order.
//!
//! Every marker evaluates to a crisp value under every valuation: 0 or 1 on
//! the interval, top or bottom on value pairs. Crispness is load-bearing: a
//! falsified marker must pull the premise infimum to the bottom so that the
//! valuation stops counting, while a half-true pair such as `<0, 0>` or
//! `<1, 1>` would leave the infimum refutable with the variable pinned to
//! the wrong region.
//!
//! Classes induced by non-principal filters get no recipe: the scheme needs
//! an attained bound, and no translation is on record for the open-bound
//! classes. [`reduce_ginv`] and [`reduce_g2`] return
//! [`ReductionError::NoRecipe`] for them instead of guessing.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::decision::{decide_entailment, decide_order_entailment, DecisionError, Limits};
use crate::filters::{canonical_representative, EntailmentClass, G2Class, GinvClass};
use crate::syntax::{fresh_variable, Formula};

/// A transformed sequent, order-equivalent to filter entailment for
/// [`class`](ReductionRecipe::class).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRecipe {
    /// The class whose entailment this recipe reduces.
    pub class: EntailmentClass,
    /// Relativized premises followed by the marker formulas.
    pub premises: Vec<Formula>,
    /// Relativized conclusion.
    pub conclusion: Formula,
    /// The fresh variable used for relativizing, absent when the recipe
    /// needs none.
    pub fresh: Option<String>,
}

/// Why a reduction could not be produced or verified.
#[derive(Debug, Error)]
pub enum ReductionError {
    /// The class has no known order-entailment translation.
    #[error("class {0} has no order-entailment reduction")]
    NoRecipe(EntailmentClass),
    /// The decision engine rejected or could not afford the query.
    #[error(transparent)]
    Decision(#[from] DecisionError),
}

fn fresh_for(premises: &[Formula], conclusion: &Formula) -> String {
    let mut avoid: BTreeSet<String> = conclusion.vars();
    for phi in premises {
        avoid.extend(phi.vars());
    }
    fresh_variable(&avoid)
}

/// Reduces entailment over an involutive-negation class to order
/// entailment.
///
/// * `One` maps `Γ ⊨ χ` to `ΔΓ ⊨≤ χ`.
/// * `UpperOpen`, `HalfClosed` and `LowerOpen` relativize the sequent to a
///   fresh `p` and add one marker placing `p` above, at, or below the
///   midpoint: `~D(p -> -p)`, `D(p <-> -p)`, `~D(-p -> p)` respectively.
/// * `HalfOpen` and `NoZero` have no recipe.
pub fn reduce_ginv(
    premises: &[Formula],
    conclusion: &Formula,
    class: GinvClass,
) -> Result<ReductionRecipe, ReductionError> {
    let tag = EntailmentClass::Ginv(class);
    match class {
        GinvClass::One => Ok(ReductionRecipe {
            class: tag,
            premises: premises.iter().cloned().map(Formula::delta).collect(),
            conclusion: conclusion.clone(),
            fresh: None,
        }),
        GinvClass::UpperOpen | GinvClass::HalfClosed | GinvClass::LowerOpen => {
            let p = fresh_for(premises, conclusion);
            let pv = || Formula::var(&p);
            let marker = match class {
                GinvClass::UpperOpen => {
                    Formula::gneg(Formula::delta(Formula::imp(pv(), Formula::invneg(pv()))))
                }
                GinvClass::HalfClosed => {
                    Formula::delta(Formula::iff(pv(), Formula::invneg(pv())))
                }
                GinvClass::LowerOpen => {
                    Formula::gneg(Formula::delta(Formula::imp(Formula::invneg(pv()), pv())))
                }
                _ => unreachable!(),
            };
            let mut transformed: Vec<Formula> = premises
                .iter()
                .map(|phi| Formula::delta(Formula::imp(pv(), phi.clone())))
                .collect();
            transformed.push(marker);
            Ok(ReductionRecipe {
                class: tag,
                premises: transformed,
                conclusion: Formula::delta(Formula::imp(pv(), conclusion.clone())),
                fresh: Some(p),
            })
        }
        GinvClass::HalfOpen | GinvClass::NoZero => Err(ReductionError::NoRecipe(tag)),
    }
}

/// Reduces entailment over a two-dimensional class to order entailment.
///
/// * `Top` maps `Γ ⊨ χ` to `TΓ ⊨≤ χ` and `Prime` to `DΓ ⊨≤ χ`.
/// * `OneDimensional`, `Upper`, `Diagonal` and `Lower` relativize to a
///   fresh `p` under `T(p -> ·)` and add markers pinning `v(p)` to the
///   matching region of the value square: strictly above the co-diagonal
///   with one coordinate at its crisp end (`OneDimensional`), or strictly
///   above, on, or strictly below it with both coordinates kept off the
///   crisp ends by `T~Dp` and its mirror `T~D!p` (`Upper`, `Diagonal`,
///   `Lower`).
/// * `PrimeSharp`, `LowerCorner`, `Order`, `Edge` and `EdgeOpen` have no
///   recipe.
pub fn reduce_g2(
    premises: &[Formula],
    conclusion: &Formula,
    class: G2Class,
) -> Result<ReductionRecipe, ReductionError> {
    let tag = EntailmentClass::Gsquare(class);
    match class {
        G2Class::Top => Ok(ReductionRecipe {
            class: tag,
            premises: premises.iter().cloned().map(Formula::delta_top).collect(),
            conclusion: conclusion.clone(),
            fresh: None,
        }),
        G2Class::Prime => Ok(ReductionRecipe {
            class: tag,
            premises: premises.iter().cloned().map(Formula::delta).collect(),
            conclusion: conclusion.clone(),
            fresh: None,
        }),
        G2Class::OneDimensional | G2Class::Upper | G2Class::Diagonal | G2Class::Lower => {
            let p = fresh_for(premises, conclusion);
            let pv = || Formula::var(&p);
            let np = || Formula::strongneg(pv());
            let above = || Formula::delta_top(Formula::imp(np(), pv()));
            let below = || Formula::delta_top(Formula::imp(pv(), np()));
            // T~Dp is crisp and holds iff the first coordinate of v(p) is
            // below 1 and the second above 0; the !p variant mirrors it.
            let interior = || Formula::delta_top(Formula::gneg(Formula::delta(pv())));
            let interior_mirror = || Formula::delta_top(Formula::gneg(Formula::delta(np())));
            let markers = match class {
                G2Class::OneDimensional => vec![
                    above(),
                    Formula::gneg(below()),
                    Formula::iff(Formula::delta(pv()), Formula::strongneg(Formula::delta(pv()))),
                ],
                G2Class::Upper => vec![above(), Formula::gneg(below()), interior()],
                G2Class::Diagonal => {
                    vec![Formula::delta_top(Formula::iff(np(), pv())), interior()]
                }
                G2Class::Lower => vec![Formula::gneg(above()), below(), interior_mirror()],
                _ => unreachable!(),
            };
            let mut transformed: Vec<Formula> = premises
                .iter()
                .map(|phi| Formula::delta_top(Formula::imp(pv(), phi.clone())))
                .collect();
            transformed.extend(markers);
            Ok(ReductionRecipe {
                class: tag,
                premises: transformed,
                conclusion: Formula::delta_top(Formula::imp(pv(), conclusion.clone())),
                fresh: Some(p),
            })
        }
        G2Class::PrimeSharp
        | G2Class::LowerCorner
        | G2Class::Order
        | G2Class::Edge
        | G2Class::EdgeOpen => Err(ReductionError::NoRecipe(tag)),
    }
}

fn recipe_for(
    premises: &[Formula],
    conclusion: &Formula,
    class: EntailmentClass,
) -> Result<ReductionRecipe, ReductionError> {
    match class {
        EntailmentClass::Big(_) => Err(ReductionError::NoRecipe(class)),
        EntailmentClass::Ginv(c) => reduce_ginv(premises, conclusion, c),
        EntailmentClass::Gsquare(c) => reduce_g2(premises, conclusion, c),
    }
}

/// Checks the reduction equivalence on one sequent: decides the original
/// query over the class representative and the transformed query over the
/// order, and reports whether the verdicts agree.
pub fn verify_reduction(
    premises: &[Formula],
    conclusion: &Formula,
    class: EntailmentClass,
    limits: &Limits,
) -> Result<bool, ReductionError> {
    let recipe = recipe_for(premises, conclusion, class)?;
    let lang = class.lang();
    let representative = canonical_representative(class);
    let direct = decide_entailment(premises, conclusion, &representative, lang, limits)?;
    let reduced = decide_order_entailment(&recipe.premises, &recipe.conclusion, lang, limits)?;
    Ok(direct.holds == reduced.holds)
}
