//! A plain-text file format for proofs, used by the `check-proof` command.
//!
//! A proof file holds two s-expressions.  The first states the sequent and
//! the logic to check against; the second is the proof term:
//!
//! ```text
//! (sequent (hyp h "~~P") "P" cl)
//! (dne (hyp h))
//! ```
//!
//! Formulas and first-order terms appear as double-quoted strings in the
//! usual ASCII syntax.  The term spellings mirror the constructor helpers:
//!
//! ```text
//! (hyp l)          (lam l "A" t)     (app t t)       (pair t t)
//! (fst t)          (snd t)           (inl t "B")     (inr "A" t)
//! (case t l t l t) (gen x t)         (inst t "f(x)") (wit "f(x)" t "exists x. A")
//! (unpack t x l t) (efq t "A")       (dne t)
//! ```
//!
//! `;` starts a comment running to the end of the line.

use super::{
    app, case, dne, efq, fst, gen, hyp, inl, inr, inst, lam, pair, snd, unpack, wit, ProofTerm,
};
use crate::syntax::{parse, parse_term, Formula, LogicId, RenderStyle, Sequent, Term};
use std::fmt::Write as _;

/// A parsed proof file: the claimed sequent, the logic to check under, and
/// the proof term.
#[derive(Debug, Clone, PartialEq)]
pub struct ProofFile {
    pub sequent: Sequent,
    pub logic: LogicId,
    pub term: ProofTerm,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct ProofFileError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

// ---------------------------------------------------------------------------
// Reading.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Sexp {
    Ident(String, u32, u32),
    Str(String, u32, u32),
    List(Vec<Sexp>, u32, u32),
}

impl Sexp {
    fn position(&self) -> (u32, u32) {
        match self {
            Sexp::Ident(_, l, c) | Sexp::Str(_, l, c) | Sexp::List(_, l, c) => (*l, *c),
        }
    }
}

fn err(position: (u32, u32), message: impl Into<String>) -> ProofFileError {
    ProofFileError { line: position.0, col: position.1, message: message.into() }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        Reader { chars: text.chars().peekable(), line: 1, col: 1 }
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

    fn skip_blank(&mut self) {
        loop {
            match self.chars.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some(';') => {
                    while !matches!(self.chars.peek(), None | Some('\n')) {
                        self.bump();
                    }
                }
                _ => return,
            }
        }
    }

    /// Read the next s-expression, or `None` at end of input.
    fn next_sexp(&mut self) -> Result<Option<Sexp>, ProofFileError> {
        self.skip_blank();
        let (line, col) = (self.line, self.col);
        match self.chars.peek() {
            None => Ok(None),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_blank();
                    match self.chars.peek() {
                        Some(')') => {
                            self.bump();
                            return Ok(Some(Sexp::List(items, line, col)));
                        }
                        None => return Err(err((self.line, self.col), "unclosed `(`")),
                        _ => match self.next_sexp()? {
                            Some(s) => items.push(s),
                            None => return Err(err((self.line, self.col), "unclosed `(`")),
                        },
                    }
                }
            }
            Some(')') => Err(err((line, col), "unmatched `)`")),
            Some('"') => {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        None => return Err(err((self.line, self.col), "unterminated string")),
                        Some('"') => return Ok(Some(Sexp::Str(s, line, col))),
                        Some(c) => s.push(c),
                    }
                }
            }
            Some(_) => {
                let mut name = String::new();
                while matches!(
                    self.chars.peek(),
                    Some(c) if !c.is_whitespace() && !matches!(c, '(' | ')' | '"' | ';')
                ) {
                    name.push(self.bump().unwrap());
                }
                Ok(Some(Sexp::Ident(name, line, col)))
            }
        }
    }
}

fn as_ident(s: &Sexp, what: &str) -> Result<String, ProofFileError> {
    match s {
        Sexp::Ident(name, ..) => Ok(name.clone()),
        other => Err(err(other.position(), format!("expected {what}"))),
    }
}

fn as_formula(s: &Sexp) -> Result<Formula, ProofFileError> {
    match s {
        Sexp::Str(text, line, col) => parse(text).map_err(|e| ProofFileError {
            line: *line,
            col: *col,
            message: format!("in formula string: {e}"),
        }),
        other => Err(err(other.position(), "expected a quoted formula")),
    }
}

fn as_term(s: &Sexp) -> Result<Term, ProofFileError> {
    match s {
        Sexp::Str(text, line, col) => parse_term(text).map_err(|e| ProofFileError {
            line: *line,
            col: *col,
            message: format!("in term string: {e}"),
        }),
        other => Err(err(other.position(), "expected a quoted first-order term")),
    }
}

fn list<'s>(
    s: &'s Sexp,
    head: &str,
    arity: usize,
) -> Result<Option<&'s [Sexp]>, ProofFileError> {
    let Sexp::List(items, line, col) = s else {
        return Ok(None);
    };
    match items.first() {
        Some(Sexp::Ident(name, ..)) if name == head => {
            if items.len() != arity + 1 {
                Err(err(
                    (*line, *col),
                    format!("`{head}` takes {arity} arguments, found {}", items.len() - 1),
                ))
            } else {
                Ok(Some(&items[1..]))
            }
        }
        _ => Ok(None),
    }
}

fn proof_term(s: &Sexp) -> Result<ProofTerm, ProofFileError> {
    if let Some(a) = list(s, "hyp", 1)? {
        return Ok(hyp(as_ident(&a[0], "a hypothesis label")?));
    }
    if let Some(a) = list(s, "lam", 3)? {
        return Ok(lam(
            as_ident(&a[0], "a hypothesis label")?,
            as_formula(&a[1])?,
            proof_term(&a[2])?,
        ));
    }
    if let Some(a) = list(s, "app", 2)? {
        return Ok(app(proof_term(&a[0])?, proof_term(&a[1])?));
    }
    if let Some(a) = list(s, "pair", 2)? {
        return Ok(pair(proof_term(&a[0])?, proof_term(&a[1])?));
    }
    if let Some(a) = list(s, "fst", 1)? {
        return Ok(fst(proof_term(&a[0])?));
    }
    if let Some(a) = list(s, "snd", 1)? {
        return Ok(snd(proof_term(&a[0])?));
    }
    if let Some(a) = list(s, "inl", 2)? {
        return Ok(inl(proof_term(&a[0])?, as_formula(&a[1])?));
    }
    if let Some(a) = list(s, "inr", 2)? {
        return Ok(inr(as_formula(&a[0])?, proof_term(&a[1])?));
    }
    if let Some(a) = list(s, "case", 5)? {
        return Ok(case(
            proof_term(&a[0])?,
            as_ident(&a[1], "a hypothesis label")?,
            proof_term(&a[2])?,
            as_ident(&a[3], "a hypothesis label")?,
            proof_term(&a[4])?,
        ));
    }
    if let Some(a) = list(s, "gen", 2)? {
        return Ok(gen(as_ident(&a[0], "an eigenvariable")?, proof_term(&a[1])?));
    }
    if let Some(a) = list(s, "inst", 2)? {
        return Ok(inst(proof_term(&a[0])?, as_term(&a[1])?));
    }
    if let Some(a) = list(s, "wit", 3)? {
        return Ok(wit(as_term(&a[0])?, proof_term(&a[1])?, as_formula(&a[2])?));
    }
    if let Some(a) = list(s, "unpack", 4)? {
        return Ok(unpack(
            proof_term(&a[0])?,
            as_ident(&a[1], "an eigenvariable")?,
            as_ident(&a[2], "a hypothesis label")?,
            proof_term(&a[3])?,
        ));
    }
    if let Some(a) = list(s, "efq", 2)? {
        return Ok(efq(proof_term(&a[0])?, as_formula(&a[1])?));
    }
    if let Some(a) = list(s, "dne", 1)? {
        return Ok(dne(proof_term(&a[0])?));
    }
    match s {
        Sexp::List(items, line, col) => match items.first() {
            Some(Sexp::Ident(name, ..)) => Err(err(
                (*line, *col),
                format!("unknown proof-term form `{name}`"),
            )),
            _ => Err(err((*line, *col), "expected a proof-term form")),
        },
        other => Err(err(other.position(), "expected a proof-term form")),
    }
}

fn sequent_header(s: &Sexp) -> Result<(Sequent, LogicId), ProofFileError> {
    let Sexp::List(items, line, col) = s else {
        return Err(err(s.position(), "expected `(sequent ...)`"));
    };
    if !matches!(items.first(), Some(Sexp::Ident(name, ..)) if name == "sequent") {
        return Err(err((*line, *col), "expected `(sequent ...)`"));
    }
    if items.len() < 3 {
        return Err(err(
            (*line, *col),
            "`sequent` takes hypotheses, a conclusion, and a logic",
        ));
    }
    let mut hypotheses = Vec::new();
    for item in &items[1..items.len() - 2] {
        let Some(a) = list(item, "hyp", 2)? else {
            return Err(err(item.position(), "expected `(hyp label \"formula\")`"));
        };
        hypotheses.push((as_ident(&a[0], "a hypothesis label")?, as_formula(&a[1])?));
    }
    let conclusion = as_formula(&items[items.len() - 2])?;
    let logic_item = &items[items.len() - 1];
    let logic_name = as_ident(logic_item, "a logic (`ml`, `il`, or `cl`)")?;
    let logic = LogicId::parse(&logic_name).ok_or_else(|| {
        err(
            logic_item.position(),
            format!("unknown logic `{logic_name}` (expected `ml`, `il`, or `cl`)"),
        )
    })?;
    Ok((Sequent::new(hypotheses, conclusion), logic))
}

/// Parse a proof file.
pub fn parse_proof_file(text: &str) -> Result<ProofFile, ProofFileError> {
    let mut reader = Reader::new(text);
    let header = reader
        .next_sexp()?
        .ok_or_else(|| err((reader.line, reader.col), "empty proof file"))?;
    let (sequent, logic) = sequent_header(&header)?;
    let term_sexp = reader
        .next_sexp()?
        .ok_or_else(|| err((reader.line, reader.col), "missing proof term"))?;
    let term = proof_term(&term_sexp)?;
    if let Some(extra) = reader.next_sexp()? {
        return Err(err(extra.position(), "unexpected content after the proof term"));
    }
    Ok(ProofFile { sequent, logic, term })
}

// ---------------------------------------------------------------------------
// Writing.
// ---------------------------------------------------------------------------

fn quoted_formula(f: &Formula) -> String {
    format!("\"{}\"", crate::syntax::render(f, RenderStyle::Ascii))
}

fn write_term(t: &ProofTerm, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match t {
        ProofTerm::Hyp(l) => {
            let _ = write!(out, "{pad}(hyp {l})");
        }
        ProofTerm::Abst(l, f, b) => {
            let _ = write!(out, "{pad}(lam {l} {}\n", quoted_formula(f));
            write_term(b, indent + 1, out);
            out.push(')');
        }
        ProofTerm::Apply(a, b) => {
            let _ = write!(out, "{pad}(app\n");
            write_term(a, indent + 1, out);
            out.push('\n');
            write_term(b, indent + 1, out);
            out.push(')');
        }
        ProofTerm::Pair(a, b) => {
            let _ = write!(out, "{pad}(pair\n");
            write_term(a, indent + 1, out);
            out.push('\n');
            write_term(b, indent + 1, out);
            out.push(')');
        }
        ProofTerm::ProjL(t) => {
            let _ = write!(out, "{pad}(fst\n");
            write_term(t, indent + 1, out);
            out.push(')');
        }
        ProofTerm::ProjR(t) => {
            let _ = write!(out, "{pad}(snd\n");
            write_term(t, indent + 1, out);
            out.push(')');
        }
        ProofTerm::InjL(t, right) => {
            let _ = write!(out, "{pad}(inl\n");
            write_term(t, indent + 1, out);
            let _ = write!(out, " {})", quoted_formula(right));
        }
        ProofTerm::InjR(left, t) => {
            let _ = write!(out, "{pad}(inr {}\n", quoted_formula(left));
            write_term(t, indent + 1, out);
            out.push(')');
        }
        ProofTerm::Case(s, ll, bl, lr, br) => {
            let _ = write!(out, "{pad}(case\n");
            write_term(s, indent + 1, out);
            let _ = write!(out, "\n{pad}  {ll}\n");
            write_term(bl, indent + 1, out);
            let _ = write!(out, "\n{pad}  {lr}\n");
            write_term(br, indent + 1, out);
            out.push(')');
        }
        ProofTerm::Gen(x, t) => {
            let _ = write!(out, "{pad}(gen {x}\n");
            write_term(t, indent + 1, out);
            out.push(')');
        }
        ProofTerm::Inst(t, term) => {
            let _ = write!(out, "{pad}(inst\n");
            write_term(t, indent + 1, out);
            let _ = write!(out, " \"{term}\")");
        }
        ProofTerm::Witness(term, t, target) => {
            let _ = write!(out, "{pad}(wit \"{term}\"\n");
            write_term(t, indent + 1, out);
            let _ = write!(out, " {})", quoted_formula(target));
        }
        ProofTerm::Unpack(s, x, l, b) => {
            let _ = write!(out, "{pad}(unpack\n");
            write_term(s, indent + 1, out);
            let _ = write!(out, "\n{pad}  {x} {l}\n");
            write_term(b, indent + 1, out);
            out.push(')');
        }
        ProofTerm::ExFalso(t, f) => {
            let _ = write!(out, "{pad}(efq\n");
            write_term(t, indent + 1, out);
            let _ = write!(out, " {})", quoted_formula(f));
        }
        ProofTerm::DoubleNegElim(t) => {
            let _ = write!(out, "{pad}(dne\n");
            write_term(t, indent + 1, out);
            out.push(')');
        }
    }
}

/// Render a proof file in the format [`parse_proof_file`] reads.
pub fn write_proof_file(file: &ProofFile) -> String {
    let mut out = String::from("(sequent");
    for (label, formula) in &file.sequent.hypotheses {
        let _ = write!(out, " (hyp {label} {})", quoted_formula(formula));
    }
    let _ = write!(
        out,
        " {} {})\n",
        quoted_formula(&file.sequent.conclusion),
        file.logic
    );
    write_term(&file.term, 0, &mut out);
    out.push('\n');
    out
}
