//! Hand-rolled lexer and recursive-descent parser for the ASCII grammar
//!
//! ```text
//! formula  := iff
//! iff      := impl ('<->' impl)?            (non-associative)
//! impl     := disj ('->' impl)?             (right-associative)
//! disj     := conj ('|' conj)*
//! conj     := unary ('&' unary)*
//! unary    := '~' unary | quant | primary
//! quant    := ('forall' | 'exists') IDENT '.' formula
//! primary  := 'false' | IDENT ('(' terms ')')? | '(' formula ')'
//! term     := IDENT ('(' terms ')')?
//! sequent  := (IDENT ':' formula (',' IDENT ':' formula)*)? '|-' formula
//! ```
//!
//! `A <-> B` is input sugar for `(A -> B) & (B -> A)`.  The Unicode aliases
//! `⊥ ¬ ∧ ∨ → ↔ ∀ ∃ ⊢` are accepted wherever their ASCII spellings are.
//! Quantifier bodies extend as far right as possible.

use super::{conj, disj, exists, forall, imp, neg, Formula, Sequent, Term};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    False,
    Forall,
    Exists,
    Not,
    And,
    Or,
    Arrow,
    Iff,
    LParen,
    RParen,
    Dot,
    Comma,
    Colon,
    Turnstile,
    Eof,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Tok::Ident(n) => return write!(f, "identifier `{n}`"),
            Tok::False => "`false`",
            Tok::Forall => "`forall`",
            Tok::Exists => "`exists`",
            Tok::Not => "`~`",
            Tok::And => "`&`",
            Tok::Or => "`|`",
            Tok::Arrow => "`->`",
            Tok::Iff => "`<->`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::Dot => "`.`",
            Tok::Comma => "`,`",
            Tok::Colon => "`:`",
            Tok::Turnstile => "`|-`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, message: message.into() }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, u32, u32)>, ParseError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, col) = (self.line, self.col);
            let c = match self.chars.peek() {
                None => {
                    out.push((Tok::Eof, line, col));
                    return Ok(out);
                }
                Some(c) => *c,
            };
            let tok = match c {
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                '.' => {
                    self.bump();
                    Tok::Dot
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                ':' => {
                    self.bump();
                    Tok::Colon
                }
                '⊢' => {
                    self.bump();
                    Tok::Turnstile
                }
                '~' | '¬' => {
                    self.bump();
                    Tok::Not
                }
                '&' | '∧' => {
                    self.bump();
                    Tok::And
                }
                '∨' => {
                    self.bump();
                    Tok::Or
                }
                '|' => {
                    self.bump();
                    if self.chars.peek() == Some(&'-') {
                        self.bump();
                        Tok::Turnstile
                    } else {
                        Tok::Or
                    }
                }
                '→' => {
                    self.bump();
                    Tok::Arrow
                }
                '↔' => {
                    self.bump();
                    Tok::Iff
                }
                '⊥' => {
                    self.bump();
                    Tok::False
                }
                '∀' => {
                    self.bump();
                    Tok::Forall
                }
                '∃' => {
                    self.bump();
                    Tok::Exists
                }
                '-' => {
                    self.bump();
                    if self.chars.peek() == Some(&'>') {
                        self.bump();
                        Tok::Arrow
                    } else {
                        return Err(self.error("expected `>` after `-`"));
                    }
                }
                '<' => {
                    self.bump();
                    if self.chars.peek() == Some(&'-') {
                        self.bump();
                        if self.chars.peek() == Some(&'>') {
                            self.bump();
                            Tok::Iff
                        } else {
                            return Err(self.error("expected `>` after `<-`"));
                        }
                    } else {
                        return Err(self.error("expected `-` after `<`"));
                    }
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut name = String::new();
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                    {
                        name.push(self.bump().unwrap());
                    }
                    match name.as_str() {
                        "false" => Tok::False,
                        "forall" => Tok::Forall,
                        "exists" => Tok::Exists,
                        _ => Tok::Ident(name),
                    }
                }
                c => return Err(self.error(format!("unexpected character `{c}`"))),
            };
            out.push((tok, line, col));
        }
    }
}

struct Parser {
    toks: Vec<(Tok, u32, u32)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let (_, line, col) = self.toks[self.pos];
        ParseError { line, col, message: message.into() }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!("expected {tok}, found {}", self.peek())))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let left = self.implication()?;
        if *self.peek() == Tok::Iff {
            self.bump();
            let right = self.implication()?;
            if *self.peek() == Tok::Iff {
                return Err(self.error_here("`<->` is non-associative; use parentheses"));
            }
            Ok(conj(imp(left.clone(), right.clone()), imp(right, left)))
        } else {
            Ok(left)
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let left = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let right = self.implication()?;
            Ok(imp(left, right))
        } else {
            Ok(left)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            f = disj(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            f = conj(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(neg(self.unary()?))
            }
            Tok::Forall | Tok::Exists => self.quantifier(),
            _ => self.primary(),
        }
    }

    fn quantifier(&mut self) -> Result<Formula, ParseError> {
        let universal = matches!(self.peek(), Tok::Forall);
        self.bump();
        let var = match self.bump() {
            Tok::Ident(x) => x,
            other => {
                return Err(self.error_here(format!("expected a variable after the quantifier, found {other}")))
            }
        };
        self.expect(Tok::Dot)?;
        let body = self.formula()?;
        Ok(if universal { forall(var, body) } else { exists(var, body) })
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.bump() {
            Tok::False => Ok(Formula::Bottom),
            Tok::Ident(name) => {
                if *self.peek() == Tok::LParen {
                    self.bump();
                    let args = self.term_list()?;
                    self.expect(Tok::RParen)?;
                    Ok(Formula::Atom(name, args))
                } else {
                    Ok(Formula::Atom(name, Vec::new()))
                }
            }
            Tok::LParen => {
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            other => Err(self.error_here_prev(format!("expected a formula, found {other}"))),
        }
    }

    fn error_here_prev(&self, message: String) -> ParseError {
        let idx = self.pos.saturating_sub(1);
        let (_, line, col) = self.toks[idx];
        ParseError { line, col, message }
    }

    fn term_list(&mut self) -> Result<Vec<Term>, ParseError> {
        if *self.peek() == Tok::RParen {
            return Ok(Vec::new());
        }
        let mut args = vec![self.term()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.term()?);
        }
        Ok(args)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.bump() {
            Tok::Ident(name) => {
                if *self.peek() == Tok::LParen {
                    self.bump();
                    let args = self.term_list()?;
                    self.expect(Tok::RParen)?;
                    Ok(Term::App(name, args))
                } else {
                    Ok(Term::Var(name))
                }
            }
            other => Err(self.error_here_prev(format!("expected a term, found {other}"))),
        }
    }
}

/// Check that every predicate and every function symbol is used with one
/// arity throughout the formula.  Predicates and functions are separate
/// namespaces.
fn check_arities(f: &Formula) -> Result<(), ParseError> {
    fn term_go(t: &Term, funs: &mut HashMap<String, usize>) -> Result<(), ParseError> {
        if let Term::App(name, args) = t {
            if let Some(prev) = funs.insert(name.clone(), args.len()) {
                if prev != args.len() {
                    return Err(ParseError {
                        line: 1,
                        col: 1,
                        message: format!(
                            "arity mismatch: function symbol `{name}` used with {prev} and {} arguments",
                            args.len()
                        ),
                    });
                }
            }
            for a in args {
                term_go(a, funs)?;
            }
        }
        Ok(())
    }
    fn go(
        f: &Formula,
        preds: &mut HashMap<String, usize>,
        funs: &mut HashMap<String, usize>,
    ) -> Result<(), ParseError> {
        match f {
            Formula::Bottom => Ok(()),
            Formula::Atom(name, args) => {
                if let Some(prev) = preds.insert(name.clone(), args.len()) {
                    if prev != args.len() {
                        return Err(ParseError {
                            line: 1,
                            col: 1,
                            message: format!(
                                "arity mismatch: predicate `{name}` used with {prev} and {} arguments",
                                args.len()
                            ),
                        });
                    }
                }
                for a in args {
                    term_go(a, funs)?;
                }
                Ok(())
            }
            Formula::Conj(a, b) | Formula::Disj(a, b) | Formula::Impl(a, b) => {
                go(a, preds, funs)?;
                go(b, preds, funs)
            }
            Formula::Forall(_, a) | Formula::Exists(_, a) => go(a, preds, funs),
        }
    }
    go(f, &mut HashMap::new(), &mut HashMap::new())
}

/// Parse a formula from text.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, pos: 0 };
    let f = p.formula()?;
    p.expect(Tok::Eof)?;
    check_arities(&f)?;
    Ok(f)
}

/// Parse a standalone term (used by the proof-term file format).
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, pos: 0 };
    let t = p.term()?;
    p.expect(Tok::Eof)?;
    Ok(t)
}

/// Parse a labeled sequent `h1: G1, ..., hn: Gn |- A` (the hypothesis list
/// may be empty).  Arities are checked across the whole sequent.
pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, pos: 0 };
    let mut hypotheses = Vec::new();
    if *p.peek() != Tok::Turnstile {
        loop {
            let label = match p.peek().clone() {
                Tok::Ident(l) => {
                    p.bump();
                    l
                }
                other => {
                    return Err(p.error_here(format!("expected a hypothesis label, found {other}")))
                }
            };
            p.expect(Tok::Colon)?;
            hypotheses.push((label, p.formula()?));
            if *p.peek() == Tok::Comma {
                p.bump();
            } else {
                break;
            }
        }
    }
    p.expect(Tok::Turnstile)?;
    let conclusion = p.formula()?;
    p.expect(Tok::Eof)?;
    let mut combined = conclusion.clone();
    for (_, g) in &hypotheses {
        combined = conj(g.clone(), combined);
    }
    check_arities(&combined)?;
    Ok(Sequent::new(hypotheses, conclusion))
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn precedence_or_binds_tighter_than_arrow() {
        assert_eq!(parse("P -> Q | R").unwrap(), imp(atom("P"), disj(atom("Q"), atom("R"))));
    }

    #[test]
    fn negation_is_implication_to_bottom() {
        assert_eq!(parse("~P").unwrap(), imp(atom("P"), bot()));
        assert_eq!(parse("~~P").unwrap(), dneg(atom("P")));
    }

    #[test]
    fn quantifier_body_extends_right() {
        let f = parse("forall x. P(x) -> Q").unwrap();
        assert_eq!(f, forall("x", imp(pred("P", vec![Term::var("x")]), atom("Q"))));
    }

    #[test]
    fn and_binds_tighter_than_or() {
        assert_eq!(parse("P & Q | R").unwrap(), disj(conj(atom("P"), atom("Q")), atom("R")));
    }

    #[test]
    fn arrow_is_right_associative() {
        assert_eq!(parse("P -> Q -> R").unwrap(), imp(atom("P"), imp(atom("Q"), atom("R"))));
    }

    #[test]
    fn iff_desugars_to_both_implications() {
        assert_eq!(parse("P <-> Q").unwrap(), conj(imp(atom("P"), atom("Q")), imp(atom("Q"), atom("P"))));
        assert!(parse("P <-> Q <-> R").is_err());
    }

    #[test]
    fn unicode_aliases_accepted() {
        assert_eq!(parse("¬P ∧ ⊥").unwrap(), parse("~P & false").unwrap());
        assert_eq!(parse("∀x. P(x) → Q").unwrap(), parse("forall x. P(x) -> Q").unwrap());
        assert_eq!(parse("∃y. P(y) ∨ Q").unwrap(), parse("exists y. P(y) | Q").unwrap());
        assert_eq!(parse("P ↔ Q").unwrap(), parse("P <-> Q").unwrap());
    }

    #[test]
    fn terms_and_nested_functions() {
        let f = parse("Q(x, f(y))").unwrap();
        assert_eq!(
            f,
            pred("Q", vec![Term::var("x"), Term::app("f", vec![Term::var("y")])])
        );
        // Zero-argument application is a constant, distinct from a variable.
        assert_eq!(parse("P(c())").unwrap(), pred("P", vec![Term::app("c", vec![])]));
    }

    #[test]
    fn negated_quantifier_without_parens() {
        let f = parse("~exists x. ~P(x)").unwrap();
        assert_eq!(f, neg(exists("x", neg(pred("P", vec![Term::var("x")])))));
    }

    #[test]
    fn errors_carry_line_and_column() {
        let err = parse("P &\n& Q").unwrap_err();
        assert_eq!((err.line, err.col), (2, 1));
        let err = parse("P @ Q").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let err = parse("P(x) & P").unwrap_err();
        assert!(err.message.contains("arity"), "{}", err.message);
        let err = parse("Q(f(x), f(x, y))").unwrap_err();
        assert!(err.message.contains("arity"), "{}", err.message);
        // Same name as predicate and function is allowed (separate namespaces).
        assert!(parse("P(P(x))").is_ok());
    }

    #[test]
    fn trailing_garbage_rejected() {
        assert!(parse("P Q").is_err());
        assert!(parse("(P").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn sequents_parse_with_and_without_hypotheses() {
        let s = parse_sequent("h: ~~P, k: P -> Q |- Q").unwrap();
        assert_eq!(s.hypotheses.len(), 2);
        assert_eq!(s.hypotheses[0], ("h".to_string(), parse("~~P").unwrap()));
        assert_eq!(s.hypotheses[1], ("k".to_string(), parse("P -> Q").unwrap()));
        assert_eq!(s.conclusion, atom("Q"));

        let s = parse_sequent("|- P | Q").unwrap();
        assert!(s.hypotheses.is_empty());
        assert_eq!(s.conclusion, disj(atom("P"), atom("Q")));

        let s = parse_sequent("h: P(x) ⊢ ∃y. P(y)").unwrap();
        assert_eq!(s.conclusion, exists("y", pred("P", vec![Term::var("y")])));
    }

    #[test]
    fn sequents_round_trip_through_display() {
        for text in ["|- P", "h: ~~P |- P", "a: P & Q, b: ~P |- Q | R"] {
            let s = parse_sequent(text).unwrap();
            assert_eq!(format!("{s}"), text);
            assert_eq!(parse_sequent(&format!("{s}")).unwrap(), s);
        }
    }

    #[test]
    fn sequent_errors() {
        assert!(parse_sequent("P |- Q").is_err(), "missing label");
        assert!(parse_sequent("h: P, |- Q").is_err(), "dangling comma");
        assert!(parse_sequent("h: P").is_err(), "missing turnstile");
        assert!(parse_sequent("|- P(x) & P").is_err(), "arity across sequent");
        assert!(parse_sequent("h: P(x, y) |- P(x)").is_err(), "arity across parts");
    }
}
