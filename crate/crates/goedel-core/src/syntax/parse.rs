//! Recursive-descent parser for the ASCII formula grammar.
//!
//! Precedence from loosest to tightest:
//!
//! ```text
//! arrow := arm (("->" | "-<" | "<->") arm)*     right-folded, see below
//! arm   := and ("|" and)*                       left-associative
//! and   := unary ("&" unary)*                   left-associative
//! unary := ("~" | "!" | "-" | "D" | "T") unary | atom
//! atom  := "0" | "1" | variable | "(" arrow ")"
//! ```
//!
//! The arrow tier is parsed as a flat chain and then folded to the right, so
//! `a -> b -> c` is `a -> (b -> c)` and a single `-<` may ride along inside a
//! chain of `->`. Chains with two or more `-<` are rejected (the operator is
//! not associative), as are chains mixing `<->` with anything else.
//!
//! Variables match `[a-z][a-zA-Z0-9_]*`; the lexer additionally accepts a
//! leading underscore so mechanically generated premise sets reparse. The
//! uppercase letters `D` and `T` are operator tokens, not identifier heads.

use std::fmt;

use thiserror::Error;

use super::Formula;

/// Parse failure with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("expected {expected} at byte {pos}, found {found}")]
    Unexpected {
        pos: usize,
        expected: &'static str,
        found: String,
    },
    #[error("input ended while expecting {expected}")]
    UnexpectedEnd { expected: &'static str },
    #[error("second -< in one chain at byte {pos}; the operator is not associative, add parentheses")]
    RepeatedCoimpl { pos: usize },
    #[error("<-> cannot be chained with other arrows at byte {pos}; add parentheses")]
    MixedIff { pos: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Tilde,
    Bang,
    Dash,
    DeltaOp,
    CrispOp,
    Amp,
    Pipe,
    Arrow,
    Coimp,
    Iff,
    LParen,
    RParen,
    Zero,
    One,
    Ident,
}

impl fmt::Display for Tok {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Tok::Tilde => "~",
            Tok::Bang => "!",
            Tok::Dash => "-",
            Tok::DeltaOp => "D",
            Tok::CrispOp => "T",
            Tok::Amp => "&",
            Tok::Pipe => "|",
            Tok::Arrow => "->",
            Tok::Coimp => "-<",
            Tok::Iff => "<->",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Zero => "0",
            Tok::One => "1",
            Tok::Ident => "identifier",
        };
        write!(out, "{text}")
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
    /// Identifier text; empty for non-identifier tokens.
    text: String,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let pos = i;
        let b = bytes[i];
        let simple = |tok| Token {
            tok,
            pos,
            text: String::new(),
        };
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'~' => {
                out.push(simple(Tok::Tilde));
                i += 1;
            }
            b'!' => {
                out.push(simple(Tok::Bang));
                i += 1;
            }
            b'&' => {
                out.push(simple(Tok::Amp));
                i += 1;
            }
            b'|' => {
                out.push(simple(Tok::Pipe));
                i += 1;
            }
            b'(' => {
                out.push(simple(Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push(simple(Tok::RParen));
                i += 1;
            }
            b'D' => {
                out.push(simple(Tok::DeltaOp));
                i += 1;
            }
            b'T' => {
                out.push(simple(Tok::CrispOp));
                i += 1;
            }
            b'0' => {
                out.push(simple(Tok::Zero));
                i += 1;
            }
            b'1' => {
                out.push(simple(Tok::One));
                i += 1;
            }
            b'-' => match bytes.get(i + 1) {
                Some(b'>') => {
                    out.push(simple(Tok::Arrow));
                    i += 2;
                }
                Some(b'<') => {
                    out.push(simple(Tok::Coimp));
                    i += 2;
                }
                _ => {
                    out.push(simple(Tok::Dash));
                    i += 1;
                }
            },
            b'<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    out.push(simple(Tok::Iff));
                    i += 3;
                } else {
                    return Err(ParseError::UnexpectedChar { pos, ch: '<' });
                }
            }
            b'a'..=b'z' | b'_' => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident,
                    pos,
                    text: input[start..i].to_string(),
                });
            }
            _ => {
                let ch = input[i..].chars().next().expect("byte inside input");
                return Err(ParseError::UnexpectedChar { pos, ch });
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    cursor: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).cloned();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<Token, ParseError> {
        match self.bump() {
            Some(t) if t.tok == tok => Ok(t),
            Some(t) => Err(ParseError::Unexpected {
                pos: t.pos,
                expected,
                found: t.tok.to_string(),
            }),
            None => Err(ParseError::UnexpectedEnd { expected }),
        }
    }

    fn parse_arrow(&mut self) -> Result<Formula, ParseError> {
        let mut operands = vec![self.parse_or()?];
        let mut ops: Vec<(Tok, usize)> = Vec::new();
        while let Some(t) = self.peek() {
            match t.tok {
                Tok::Arrow | Tok::Coimp | Tok::Iff => {
                    let t = self.bump().expect("peeked token");
                    ops.push((t.tok, t.pos));
                    operands.push(self.parse_or()?);
                }
                _ => break,
            }
        }
        if ops.is_empty() {
            return Ok(operands.pop().expect("one operand parsed"));
        }
        if ops.iter().any(|(t, _)| *t == Tok::Iff) {
            if ops.len() > 1 {
                let pos = ops[1].1;
                return Err(ParseError::MixedIff { pos });
            }
            let right = operands.pop().expect("two operands");
            let left = operands.pop().expect("two operands");
            return Ok(Formula::iff(left, right));
        }
        if let Some(&(_, pos)) = ops
            .iter()
            .filter(|(t, _)| *t == Tok::Coimp)
            .nth(1)
        {
            return Err(ParseError::RepeatedCoimpl { pos });
        }
        let mut result = operands.pop().expect("operand per op plus one");
        for ((op, _), left) in ops.into_iter().zip(operands).rev() {
            result = match op {
                Tok::Arrow => Formula::imp(left, result),
                Tok::Coimp => Formula::coimp(left, result),
                _ => unreachable!("iff handled above"),
            };
        }
        Ok(result)
    }

    fn parse_or(&mut self) -> Result<Formula, ParseError> {
        let mut result = self.parse_and()?;
        while self.peek().map(|t| t.tok) == Some(Tok::Pipe) {
            self.bump();
            result = Formula::or(result, self.parse_and()?);
        }
        Ok(result)
    }

    fn parse_and(&mut self) -> Result<Formula, ParseError> {
        let mut result = self.parse_unary()?;
        while self.peek().map(|t| t.tok) == Some(Tok::Amp) {
            self.bump();
            result = Formula::and(result, self.parse_unary()?);
        }
        Ok(result)
    }

    fn parse_unary(&mut self) -> Result<Formula, ParseError> {
        let tok = match self.peek() {
            Some(t) => t.tok,
            None => return Err(ParseError::UnexpectedEnd { expected: "a formula" }),
        };
        match tok {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::gneg(self.parse_unary()?))
            }
            Tok::Bang => {
                self.bump();
                Ok(Formula::strongneg(self.parse_unary()?))
            }
            Tok::Dash => {
                self.bump();
                Ok(Formula::invneg(self.parse_unary()?))
            }
            Tok::DeltaOp => {
                self.bump();
                Ok(Formula::delta(self.parse_unary()?))
            }
            Tok::CrispOp => {
                self.bump();
                Ok(Formula::delta_top(self.parse_unary()?))
            }
            _ => self.parse_atom(),
        }
    }

    fn parse_atom(&mut self) -> Result<Formula, ParseError> {
        match self.bump() {
            Some(t) => match t.tok {
                Tok::Zero => Ok(Formula::Const0),
                Tok::One => Ok(Formula::Const1),
                Tok::Ident => Ok(Formula::Var(t.text)),
                Tok::LParen => {
                    let inner = self.parse_arrow()?;
                    self.expect(Tok::RParen, "closing parenthesis")?;
                    Ok(inner)
                }
                other => Err(ParseError::Unexpected {
                    pos: t.pos,
                    expected: "a formula",
                    found: other.to_string(),
                }),
            },
            None => Err(ParseError::UnexpectedEnd { expected: "a formula" }),
        }
    }
}

/// Parses a formula from the ASCII grammar; the whole input must be consumed.
pub fn parse(input: &str) -> Result<Formula, ParseError> {
    let tokens = lex(input)?;
    let mut parser = Parser { tokens, cursor: 0 };
    let f = parser.parse_arrow()?;
    match parser.peek() {
        None => Ok(f),
        Some(t) => Err(ParseError::Unexpected {
            pos: t.pos,
            expected: "end of input",
            found: t.tok.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::super::Formula;
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }

    fn q() -> Formula {
        Formula::var("q")
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("p & q | r").unwrap(),
            Formula::or(Formula::and(p(), q()), Formula::var("r"))
        );
        assert_eq!(
            parse("p -> q -> r").unwrap(),
            Formula::imp(p(), Formula::imp(q(), Formula::var("r")))
        );
        assert_eq!(
            parse("p | q -> r").unwrap(),
            Formula::imp(Formula::or(p(), q()), Formula::var("r"))
        );
        // One co-implication may ride inside an arrow chain; the fold stays
        // to the right.
        assert_eq!(
            parse("p -> q -< r").unwrap(),
            Formula::imp(p(), Formula::coimp(q(), Formula::var("r")))
        );
    }

    #[test]
    fn prefixes_bind_tightest() {
        assert_eq!(
            parse("~Dp & q").unwrap(),
            Formula::and(Formula::gneg(Formula::delta(p())), q())
        );
        assert_eq!(parse("- -p").unwrap(), Formula::invneg(Formula::invneg(p())));
        assert_eq!(parse("Tp").unwrap(), Formula::delta_top(p()));
    }

    #[test]
    fn iff_expands_and_rejects_chains() {
        assert_eq!(parse("p <-> q").unwrap(), Formula::iff(p(), q()));
        assert!(matches!(
            parse("p <-> q <-> r"),
            Err(ParseError::MixedIff { .. })
        ));
        assert!(matches!(
            parse("p <-> q -> r"),
            Err(ParseError::MixedIff { .. })
        ));
    }

    #[test]
    fn repeated_coimplication_is_rejected() {
        assert!(matches!(
            parse("p -< q -< r"),
            Err(ParseError::RepeatedCoimpl { .. })
        ));
        assert!(parse("p -< (q -< r)").is_ok());
        assert!(parse("(p -< q) -< r").is_ok());
    }

    #[test]
    fn error_positions_point_at_the_offender() {
        match parse("p @ q") {
            Err(ParseError::UnexpectedChar { pos, ch }) => {
                assert_eq!((pos, ch), (2, '@'));
            }
            other => panic!("expected character error, got {other:?}"),
        }
        assert!(matches!(parse("p &"), Err(ParseError::UnexpectedEnd { .. })));
        assert!(matches!(parse("p q"), Err(ParseError::Unexpected { .. })));
        assert!(matches!(parse("Pq"), Err(ParseError::UnexpectedChar { .. })));
    }

    #[test]
    fn identifiers_may_continue_with_digits_and_underscores() {
        assert_eq!(parse("p1_x").unwrap(), Formula::var("p1_x"));
        assert_eq!(parse("_t0").unwrap(), Formula::var("_t0"));
    }
}
