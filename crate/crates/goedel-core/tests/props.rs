//! Property suites for the structural invariants the engine rests on.
//!
//! The decision procedure is sound because formula values never leave the
//! tracked point set (value closure), because symbolic evaluation agrees
//! with arithmetic on every configuration, and because abstraction and
//! realization are inverse on configurations. Each suite here hammers one
//! of those claims with random formulas and valuations; a failure in any
//! of them would invalidate verdicts wholesale.

use std::collections::BTreeSet;

use proptest::prelude::*;

use goedel_core::decision::{
    decide_entailment, decide_entailment_with_mode, decide_order_entailment, symbolic_eval,
    Limits, PremiseMode, SymbolicPoint, SymbolicValue, Universe, Witness,
};
use goedel_core::filters::Filter;
use goedel_core::semantics::{
    conflate, eval_big, eval_g2, eval_ginv, inf_premises1, inf_premises2, UnitRational,
    Valuation1, Valuation2, ValuePair,
};
use goedel_core::syntax::{nnf_g2, nnf_ginv, parse, Formula, Language};

fn q(n: i64, d: i64) -> UnitRational {
    UnitRational::new(n, d).unwrap()
}

fn rational() -> impl Strategy<Value = UnitRational> {
    (1i64..=12).prop_flat_map(|d| (0..=d).prop_map(move |n| q(n, d)))
}

fn pair_value() -> impl Strategy<Value = ValuePair> {
    (rational(), rational()).prop_map(|(a, b)| ValuePair::new(a, b))
}

fn valuation1() -> impl Strategy<Value = Valuation1> {
    (rational(), rational()).prop_map(|(p, qv)| {
        [("p".to_string(), p), ("q".to_string(), qv)]
            .into_iter()
            .collect()
    })
}

fn valuation2() -> impl Strategy<Value = Valuation2> {
    (pair_value(), pair_value()).prop_map(|(p, qv)| {
        [("p".to_string(), p), ("q".to_string(), qv)]
            .into_iter()
            .collect()
    })
}

/// Random formulas over `p`, `q` in the connective set of `lang`.
fn formula(lang: Language, depth: u32) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        2 => prop_oneof![Just("p"), Just("q")].prop_map(Formula::var),
        1 => Just(Formula::Const0),
        1 => Just(Formula::Const1),
    ];
    leaf.prop_recursive(depth, 32, 2, move |inner| {
        let unary = {
            let base = prop_oneof![
                inner.clone().prop_map(Formula::gneg),
                inner.clone().prop_map(Formula::delta),
            ];
            match lang {
                Language::BiG => base.boxed(),
                Language::Ginv => {
                    prop_oneof![base, inner.clone().prop_map(Formula::invneg)].boxed()
                }
                Language::Gsquare => {
                    prop_oneof![base, inner.clone().prop_map(Formula::strongneg)].boxed()
                }
            }
        };
        let binary = (0u8..4, inner.clone(), inner).prop_map(|(op, l, r)| match op {
            0 => Formula::and(l, r),
            1 => Formula::or(l, r),
            2 => Formula::imp(l, r),
            _ => Formula::coimp(l, r),
        });
        prop_oneof![1 => unary, 2 => binary]
    })
    .boxed()
}

fn premises(lang: Language, depth: u32) -> impl Strategy<Value = Vec<Formula>> {
    prop::collection::vec(formula(lang, depth), 0..=2)
}

fn scalar_filters() -> Vec<Filter> {
    ["[1,1]", "[3/4,1]", "(1/2,1]", "[1/2,1]", "[1/3,1]", "(0,1]"]
        .into_iter()
        .map(|t| t.parse().unwrap())
        .collect()
}

fn pair_filters() -> Vec<Filter> {
    [
        "bi[1,0]",
        "bi[1/2,0]",
        "bi[1,1]",
        "bi[1,1)",
        "bi[2/3,1/3]",
        "bi[1/2,1/2]",
        "bi[1/3,2/3]",
        "bi(1/3,1)",
        "bi[1/2,1]",
        "bi(0,1]",
        "bi(0,1)",
    ]
    .into_iter()
    .map(|t| t.parse().unwrap())
    .collect()
}

/// The realized value of a symbolic point under a witness valuation.
fn point_value(point: &SymbolicPoint, witness: &Witness) -> UnitRational {
    match (point, witness) {
        (SymbolicPoint::Const(c), _) => *c,
        (SymbolicPoint::Var(name), Witness::One(v)) => v[name],
        (SymbolicPoint::Mirror(name), Witness::One(v)) => v[name].complement(),
        (SymbolicPoint::Coord1(name), Witness::Two(v)) => v[name].first,
        (SymbolicPoint::Coord2(name), Witness::Two(v)) => v[name].second,
        _ => panic!("symbolic point kind does not match the witness kind"),
    }
}

/// Checks symbolic evaluation against arithmetic on every configuration of
/// the formula's universe.
fn assert_symbolic_matches_concrete(f: &Formula, lang: Language) {
    let universe = Universe::new(lang, f.vars(), &[]);
    for cfg in universe.configs() {
        let witness = cfg.realize();
        let symbolic = symbolic_eval(f, &cfg).unwrap();
        match (&symbolic, &witness) {
            (SymbolicValue::Scalar(point), Witness::One(v)) => {
                let concrete = match lang {
                    Language::BiG => eval_big(f, v).unwrap(),
                    _ => eval_ginv(f, v).unwrap(),
                };
                assert_eq!(
                    point_value(point, &witness),
                    concrete,
                    "symbolic {symbolic:?} diverges on {f} at {v:?}"
                );
            }
            (SymbolicValue::Pair(first, second), Witness::Two(v)) => {
                let concrete = eval_g2(f, v).unwrap();
                assert_eq!(
                    ValuePair::new(point_value(first, &witness), point_value(second, &witness)),
                    concrete,
                    "symbolic {symbolic:?} diverges on {f} at {v:?}"
                );
            }
            _ => panic!("symbolic value kind does not match the witness kind"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Interval values never leave the set generated by the variable
    /// values and the constants.
    #[test]
    fn value_closure_interval(f in formula(Language::BiG, 4), v in valuation1()) {
        let allowed: BTreeSet<UnitRational> =
            [UnitRational::zero(), UnitRational::one(), v["p"], v["q"]]
                .into_iter()
                .collect();
        let value = eval_big(&f, &v).unwrap();
        prop_assert!(allowed.contains(&value), "{f} escaped to {value}");
    }

    /// The involution adds the complements of the variable values to the
    /// closure set and nothing else.
    #[test]
    fn value_closure_involutive(f in formula(Language::Ginv, 4), v in valuation1()) {
        let allowed: BTreeSet<UnitRational> = [
            UnitRational::zero(),
            UnitRational::one(),
            v["p"],
            v["q"],
            v["p"].complement(),
            v["q"].complement(),
        ]
        .into_iter()
        .collect();
        let value = eval_ginv(&f, &v).unwrap();
        prop_assert!(allowed.contains(&value), "{f} escaped to {value}");
    }

    /// Pair coordinates never leave the coordinate pool of the valuation
    /// plus the two constants; the coordinates mix but nothing new appears.
    #[test]
    fn value_closure_pair(f in formula(Language::Gsquare, 4), v in valuation2()) {
        let allowed: BTreeSet<UnitRational> = [
            UnitRational::zero(),
            UnitRational::one(),
            v["p"].first,
            v["p"].second,
            v["q"].first,
            v["q"].second,
        ]
        .into_iter()
        .collect();
        let value = eval_g2(&f, &v).unwrap();
        prop_assert!(
            allowed.contains(&value.first) && allowed.contains(&value.second),
            "{f} escaped to {value}"
        );
    }

    /// Conflating the valuation conflates the value: evaluation commutes
    /// with the mirror `<a, b> -> <1-b, 1-a>` on every formula.
    #[test]
    fn conflation_commutes_with_evaluation(f in formula(Language::Gsquare, 4), v in valuation2()) {
        let direct = eval_g2(&f, &v).unwrap();
        let mirrored = eval_g2(&f, &conflate(&v)).unwrap();
        prop_assert_eq!(
            mirrored,
            ValuePair::new(direct.second.complement(), direct.first.complement()),
            "conflation does not commute on {}", f
        );
    }

    /// The involutive normal form preserves values, pushes the involution
    /// to variables, and at most doubles the size.
    #[test]
    fn involutive_normal_form_is_sound(f in formula(Language::Ginv, 4), v in valuation1()) {
        let n = nnf_ginv(&f).unwrap();
        prop_assert_eq!(eval_ginv(&n, &v).unwrap(), eval_ginv(&f, &v).unwrap());
        prop_assert!(n.size() <= 2 * f.size(), "{} blew up to {}", f, n);
        prop_assert!(invneg_only_on_variables(&n), "{} kept a buried involution: {}", f, n);
    }

    /// The strong normal form preserves values, pushes the strong negation
    /// down to atoms and the crisp prefixes, and at most doubles the size.
    #[test]
    fn strong_normal_form_is_sound(f in formula(Language::Gsquare, 4), v in valuation2()) {
        let n = nnf_g2(&f).unwrap();
        prop_assert_eq!(eval_g2(&n, &v).unwrap(), eval_g2(&f, &v).unwrap());
        prop_assert!(n.size() <= 2 * f.size(), "{} blew up to {}", f, n);
        prop_assert!(strongneg_only_on_atoms(&n), "{} kept a buried strong negation: {}", f, n);
    }

    /// Abstracting a valuation and realizing the configuration lands in
    /// the same configuration again.
    #[test]
    fn abstraction_is_stable_under_realization(v in valuation1()) {
        for lang in [Language::BiG, Language::Ginv] {
            let universe = Universe::new(lang, ["p".to_string(), "q".to_string()], &[]);
            let cfg = universe.abstract1(&v).unwrap();
            let Witness::One(w) = cfg.realize() else { panic!("scalar universe") };
            let again = universe.abstract1(&w).unwrap();
            prop_assert_eq!(cfg.ranks(), again.ranks(), "{:?} moved configurations", v);
        }
    }

    /// The pair-language version of the same round trip.
    #[test]
    fn pair_abstraction_is_stable_under_realization(v in valuation2()) {
        let universe = Universe::new(Language::Gsquare, ["p".to_string(), "q".to_string()], &[]);
        let cfg = universe.abstract2(&v).unwrap();
        let Witness::Two(w) = cfg.realize() else { panic!("pair universe") };
        let again = universe.abstract2(&w).unwrap();
        prop_assert_eq!(cfg.ranks(), again.ranks(), "{:?} moved configurations", v);
    }

    /// Rank-comparison evaluation agrees with exact arithmetic on every
    /// configuration a two-variable formula can see.
    #[test]
    fn symbolic_evaluation_matches_arithmetic_interval(f in formula(Language::BiG, 4)) {
        assert_symbolic_matches_concrete(&f, Language::BiG);
    }

    #[test]
    fn symbolic_evaluation_matches_arithmetic_involutive(f in formula(Language::Ginv, 4)) {
        assert_symbolic_matches_concrete(&f, Language::Ginv);
    }

    #[test]
    fn symbolic_evaluation_matches_arithmetic_pair(f in formula(Language::Gsquare, 4)) {
        assert_symbolic_matches_concrete(&f, Language::Gsquare);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Testing the premise infimum and testing each premise separately
    /// give the same verdict on every finite premise set.
    #[test]
    fn premise_modes_agree_interval(
        premises in premises(Language::Ginv, 3),
        conclusion in formula(Language::Ginv, 3),
        filter_idx in 0usize..6,
    ) {
        let filter = scalar_filters()[filter_idx];
        let limits = Limits::default();
        let by_inf = decide_entailment_with_mode(
            &premises, &conclusion, &filter, Language::Ginv, &limits, PremiseMode::Infimum,
        ).unwrap();
        let by_each = decide_entailment_with_mode(
            &premises, &conclusion, &filter, Language::Ginv, &limits, PremiseMode::EachPremise,
        ).unwrap();
        prop_assert_eq!(by_inf.holds, by_each.holds, "modes split on {:?} |- {}", premises, conclusion);
    }

    #[test]
    fn premise_modes_agree_pair(
        premises in premises(Language::Gsquare, 3),
        conclusion in formula(Language::Gsquare, 3),
        filter_idx in 0usize..11,
    ) {
        let filter = pair_filters()[filter_idx];
        let limits = Limits::default();
        let by_inf = decide_entailment_with_mode(
            &premises, &conclusion, &filter, Language::Gsquare, &limits, PremiseMode::Infimum,
        ).unwrap();
        let by_each = decide_entailment_with_mode(
            &premises, &conclusion, &filter, Language::Gsquare, &limits, PremiseMode::EachPremise,
        ).unwrap();
        prop_assert_eq!(by_inf.holds, by_each.holds, "modes split on {:?} |- {}", premises, conclusion);
    }

    /// Every failing entailment verdict carries a witness valuation that
    /// designates the premises and not the conclusion when re-evaluated.
    #[test]
    fn failing_entailments_recheck_interval(
        premises in premises(Language::Ginv, 3),
        conclusion in formula(Language::Ginv, 3),
        filter_idx in 0usize..6,
    ) {
        let filter = scalar_filters()[filter_idx];
        let verdict = decide_entailment(
            &premises, &conclusion, &filter, Language::Ginv, &Limits::default(),
        ).unwrap();
        if !verdict.holds {
            let Some(Witness::One(v)) = verdict.witness else {
                return Err(TestCaseError::fail("failing verdict lost its witness"));
            };
            let d = filter.as_unit(Language::Ginv).unwrap();
            let inf = inf_premises1(&premises, &v, Language::Ginv).unwrap();
            let concl = eval_ginv(&conclusion, &v).unwrap();
            prop_assert!(d.member(inf), "witness premises undesignated on {:?}", premises);
            prop_assert!(!d.member(concl), "witness conclusion designated on {}", conclusion);
        }
    }

    #[test]
    fn failing_entailments_recheck_pair(
        premises in premises(Language::Gsquare, 3),
        conclusion in formula(Language::Gsquare, 3),
        filter_idx in 0usize..11,
    ) {
        let filter = pair_filters()[filter_idx];
        let verdict = decide_entailment(
            &premises, &conclusion, &filter, Language::Gsquare, &Limits::default(),
        ).unwrap();
        if !verdict.holds {
            let Some(Witness::Two(v)) = verdict.witness else {
                return Err(TestCaseError::fail("failing verdict lost its witness"));
            };
            let d = filter.as_pair(Language::Gsquare).unwrap();
            let inf = inf_premises2(&premises, &v).unwrap();
            let concl = eval_g2(&conclusion, &v).unwrap();
            prop_assert!(d.member(inf), "witness premises undesignated on {:?}", premises);
            prop_assert!(!d.member(concl), "witness conclusion designated on {}", conclusion);
        }
    }

    /// Order-entailment failures carry a witness where the premise infimum
    /// strictly beats the conclusion.
    #[test]
    fn failing_order_entailments_recheck(
        premises in premises(Language::Ginv, 3),
        conclusion in formula(Language::Ginv, 3),
    ) {
        let verdict = decide_order_entailment(
            &premises, &conclusion, Language::Ginv, &Limits::default(),
        ).unwrap();
        if !verdict.holds {
            let Some(Witness::One(v)) = verdict.witness else {
                return Err(TestCaseError::fail("failing verdict lost its witness"));
            };
            let inf = inf_premises1(&premises, &v, Language::Ginv).unwrap();
            let concl = eval_ginv(&conclusion, &v).unwrap();
            prop_assert!(inf > concl, "witness does not break the order on {:?} |- {}", premises, conclusion);
        }
    }

    #[test]
    fn failing_pair_order_entailments_recheck(
        premises in premises(Language::Gsquare, 3),
        conclusion in formula(Language::Gsquare, 3),
    ) {
        let verdict = decide_order_entailment(
            &premises, &conclusion, Language::Gsquare, &Limits::default(),
        ).unwrap();
        if !verdict.holds {
            let Some(Witness::Two(v)) = verdict.witness else {
                return Err(TestCaseError::fail("failing verdict lost its witness"));
            };
            let inf = inf_premises2(&premises, &v).unwrap();
            let concl = eval_g2(&conclusion, &v).unwrap();
            prop_assert!(!inf.le_truth(concl), "witness does not break the order on {:?} |- {}", premises, conclusion);
        }
    }

    /// Printing and reparsing is the identity on every formula.
    #[test]
    fn printing_round_trips_through_the_parser(f in formula(Language::Gsquare, 4)) {
        let text = f.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(back, f, "printer emitted {}", text);
    }

    #[test]
    fn involutive_printing_round_trips(f in formula(Language::Ginv, 4)) {
        let text = f.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(back, f, "printer emitted {}", text);
    }
}

/// True when every involution in the formula applies directly to a variable.
fn invneg_only_on_variables(f: &Formula) -> bool {
    match f {
        Formula::InvNeg(a) => matches!(**a, Formula::Var(_)),
        Formula::Var(_) | Formula::Const0 | Formula::Const1 => true,
        Formula::GNeg(a) | Formula::Delta(a) | Formula::StrongNeg(a) => invneg_only_on_variables(a),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(l, r) | Formula::Coimpl(l, r) => {
            invneg_only_on_variables(l) && invneg_only_on_variables(r)
        }
    }
}

/// True when every strong negation applies to a variable or to one of the
/// crisp prefixes it cannot move through.
fn strongneg_only_on_atoms(f: &Formula) -> bool {
    match f {
        Formula::StrongNeg(a) => {
            matches!(**a, Formula::Var(_) | Formula::GNeg(_) | Formula::Delta(_))
                && strongneg_only_on_atoms(a)
        }
        Formula::Var(_) | Formula::Const0 | Formula::Const1 => true,
        Formula::GNeg(a) | Formula::Delta(a) | Formula::InvNeg(a) => strongneg_only_on_atoms(a),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(l, r) | Formula::Coimpl(l, r) => {
            strongneg_only_on_atoms(l) && strongneg_only_on_atoms(r)
        }
    }
}
