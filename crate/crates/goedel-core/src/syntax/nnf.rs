//! Negation normal forms for the two extended languages.
//!
//! Both transforms push one designated negation inward until it sits on the
//! smallest possible subformulas, using the De Morgan and arrow-swap laws
//! that hold for the intended semantics. The other connectives are left in
//! place with normalized children. Output size is at most twice the input
//! node count; a property test pins that bound.

use super::{require_language, Formula, Language, LanguageError};

/// Pushes the involutive negation down to variables.
///
/// After the rewrite every `-` node sits directly on a variable. The other
/// clauses follow the value identities `1 - min = max` of `1 -`, and the
/// swap of `->` with `-<` under complement. `-~a` and `-Da` become
/// `1 -< ~a'` and `1 -< a'` because the complement of a crisp value is
/// crisp membership in the lower cell.
pub fn nnf_ginv(f: &Formula) -> Result<Formula, LanguageError> {
    require_language(f, Language::Ginv)?;
    Ok(nnf_inv(f))
}

fn nnf_inv(f: &Formula) -> Formula {
    match f {
        Formula::Var(_) | Formula::Const0 | Formula::Const1 => f.clone(),
        Formula::GNeg(a) => Formula::gneg(nnf_inv(a)),
        Formula::Delta(a) => Formula::delta(nnf_inv(a)),
        Formula::And(a, b) => Formula::and(nnf_inv(a), nnf_inv(b)),
        Formula::Or(a, b) => Formula::or(nnf_inv(a), nnf_inv(b)),
        Formula::Impl(a, b) => Formula::imp(nnf_inv(a), nnf_inv(b)),
        Formula::Coimpl(a, b) => Formula::coimp(nnf_inv(a), nnf_inv(b)),
        Formula::InvNeg(a) => push_inv(a),
        Formula::StrongNeg(_) => unreachable!("language checked before rewrite"),
    }
}

fn push_inv(a: &Formula) -> Formula {
    match a {
        Formula::Var(_) => Formula::invneg(a.clone()),
        Formula::Const0 => Formula::Const1,
        Formula::Const1 => Formula::Const0,
        Formula::InvNeg(b) => nnf_inv(b),
        Formula::GNeg(b) => Formula::coimp(Formula::Const1, push_inv(b)),
        Formula::Delta(b) => Formula::coimp(Formula::Const1, nnf_inv(b)),
        Formula::And(l, r) => Formula::or(push_inv(l), push_inv(r)),
        Formula::Or(l, r) => Formula::and(push_inv(l), push_inv(r)),
        Formula::Impl(l, r) => Formula::coimp(push_inv(r), push_inv(l)),
        Formula::Coimpl(l, r) => Formula::imp(push_inv(r), push_inv(l)),
        Formula::StrongNeg(_) => unreachable!("language checked before rewrite"),
    }
}

/// Pushes the strong negation down as far as the two-dimensional clauses
/// allow.
///
/// `!` distributes over the lattice and arrow connectives by coordinate
/// swap, cancels with itself, and flips the constants. It does not commute
/// with `~` or `D` (those collapse a pair to a crisp value before the swap
/// could happen), so above them it stays in place with a normalized child.
pub fn nnf_g2(f: &Formula) -> Result<Formula, LanguageError> {
    require_language(f, Language::Gsquare)?;
    Ok(nnf_strong(f))
}

fn nnf_strong(f: &Formula) -> Formula {
    match f {
        Formula::Var(_) | Formula::Const0 | Formula::Const1 => f.clone(),
        Formula::GNeg(a) => Formula::gneg(nnf_strong(a)),
        Formula::Delta(a) => Formula::delta(nnf_strong(a)),
        Formula::And(a, b) => Formula::and(nnf_strong(a), nnf_strong(b)),
        Formula::Or(a, b) => Formula::or(nnf_strong(a), nnf_strong(b)),
        Formula::Impl(a, b) => Formula::imp(nnf_strong(a), nnf_strong(b)),
        Formula::Coimpl(a, b) => Formula::coimp(nnf_strong(a), nnf_strong(b)),
        Formula::StrongNeg(a) => push_strong(a),
        Formula::InvNeg(_) => unreachable!("language checked before rewrite"),
    }
}

fn push_strong(a: &Formula) -> Formula {
    match a {
        Formula::Var(_) => Formula::strongneg(a.clone()),
        Formula::Const0 => Formula::Const1,
        Formula::Const1 => Formula::Const0,
        Formula::StrongNeg(b) => nnf_strong(b),
        Formula::GNeg(b) => Formula::strongneg(Formula::gneg(nnf_strong(b))),
        Formula::Delta(b) => Formula::strongneg(Formula::delta(nnf_strong(b))),
        Formula::And(l, r) => Formula::or(push_strong(l), push_strong(r)),
        Formula::Or(l, r) => Formula::and(push_strong(l), push_strong(r)),
        Formula::Impl(l, r) => Formula::coimp(push_strong(r), push_strong(l)),
        Formula::Coimpl(l, r) => Formula::imp(push_strong(r), push_strong(l)),
        Formula::InvNeg(_) => unreachable!("language checked before rewrite"),
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn ginv_normal_form_examples() {
        let f = parse("-(p -> q)").unwrap();
        assert_eq!(nnf_ginv(&f).unwrap(), parse("-q -< -p").unwrap());
        let g = parse("-~p").unwrap();
        assert_eq!(nnf_ginv(&g).unwrap(), parse("1 -< -p").unwrap());
        let h = parse("-Dp").unwrap();
        assert_eq!(nnf_ginv(&h).unwrap(), parse("1 -< p").unwrap());
        let k = parse("- -p").unwrap();
        assert_eq!(nnf_ginv(&k).unwrap(), parse("p").unwrap());
        let c = parse("-0 & -1").unwrap();
        assert_eq!(nnf_ginv(&c).unwrap(), parse("1 & 0").unwrap());
    }

    #[test]
    fn g2_normal_form_examples() {
        let f = parse("!(p & q)").unwrap();
        assert_eq!(nnf_g2(&f).unwrap(), parse("!p | !q").unwrap());
        let g = parse("!(p -> q)").unwrap();
        assert_eq!(nnf_g2(&g).unwrap(), parse("!q -< !p").unwrap());
        // Strong negation stays above the crisp operators.
        let h = parse("!~!!p").unwrap();
        assert_eq!(nnf_g2(&h).unwrap(), parse("!~p").unwrap());
        let k = parse("!Dp").unwrap();
        assert_eq!(nnf_g2(&k).unwrap(), parse("!Dp").unwrap());
    }

    #[test]
    fn wrong_language_is_rejected() {
        let f = parse("!p").unwrap();
        assert!(nnf_ginv(&f).is_err());
        let g = parse("-p").unwrap();
        assert!(nnf_g2(&g).is_err());
    }
}
