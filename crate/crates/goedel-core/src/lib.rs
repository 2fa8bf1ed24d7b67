//! Exact decision engine for filter-induced entailment in Gödel logics.
//!
//! The library covers three propositional logics over the rational unit
//! interval: bi-Gödel logic (implication plus co-implication), its extension
//! with an involutive negation, and a two-dimensional paraconsistent variant
//! whose values are pairs of support degrees. In each of them a consequence
//! relation is induced by a filter of designated values, and only finitely
//! many distinct relations arise this way. The crate makes that landscape
//! executable:
//!
//! * [`syntax`] — formulas, the three language profiles, parsing, printing,
//!   and negation normal forms.
//! * [`semantics`] — exact rational values, valuations, and evaluation.
//! * [`filters`] — designated-value filters, membership, and classification
//!   into the finitely many entailment classes.
//! * [`decision`] — sound and complete entailment, order-entailment, and
//!   validity decisions via weak-order abstraction, plus an independent
//!   grid refuter.
//! * [`reductions`] — premise-set transformations turning point-generated
//!   filter entailment into order entailment, machine-checkable.
//! * [`catalog`] — the frozen separation tables, class counts, hierarchy
//!   checks, and named witness sequents that document the landscape.
//!
//! All arithmetic is exact; no floating point is involved anywhere. Every
//! "fails" verdict carries a concrete rational counter-valuation that has
//! been re-checked by direct evaluation.

pub mod catalog;
pub mod decision;
pub mod filters;
pub mod reductions;
pub mod semantics;
pub mod syntax;
