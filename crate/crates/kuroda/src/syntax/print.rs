//! Rendering formulas back to concrete syntax.
//!
//! The printer inverts the parser: `parse(render(f, style)) == f` for either
//! style.  Operands of binary connectives are parenthesized whenever they are
//! themselves conjunctions, disjunctions, or implications, so precedence never
//! has to be remembered when reading output.  Negations print with `~`/`¬` and
//! a double negation prints as a `~~` prefix on its operand.  A quantifier or
//! a negated quantifier may appear bare only where its maximally-right body
//! cannot capture following tokens.

use super::{Formula, Term};

/// Output alphabet: ASCII keywords (`~ & | -> forall exists false`) or the
/// corresponding Unicode symbols (`¬ ∧ ∨ → ∀ ∃ ⊥`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderStyle {
    Ascii,
    Unicode,
}

struct Symbols {
    not: &'static str,
    and: &'static str,
    or: &'static str,
    arrow: &'static str,
    forall: &'static str,
    exists: &'static str,
    bottom: &'static str,
}

const ASCII: Symbols = Symbols {
    not: "~",
    and: " & ",
    or: " | ",
    arrow: " -> ",
    forall: "forall ",
    exists: "exists ",
    bottom: "false",
};

const UNICODE: Symbols = Symbols {
    not: "¬",
    and: " ∧ ",
    or: " ∨ ",
    arrow: " → ",
    forall: "∀",
    exists: "∃",
    bottom: "⊥",
};

/// Render a formula as a string that parses back to the same formula.
pub fn render(f: &Formula, style: RenderStyle) -> String {
    let sym = match style {
        RenderStyle::Ascii => &ASCII,
        RenderStyle::Unicode => &UNICODE,
    };
    let mut out = String::new();
    go(f, sym, true, &mut out);
    out
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut out = String::new();
        render_term(self, &mut out);
        f.write_str(&out)
    }
}

fn render_term(t: &Term, out: &mut String) {
    match t {
        Term::Var(x) => out.push_str(x),
        Term::App(name, args) => {
            out.push_str(name);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                render_term(a, out);
            }
            out.push(')');
        }
    }
}

fn render_atom(name: &str, args: &[Term], out: &mut String) {
    out.push_str(name);
    if !args.is_empty() {
        out.push('(');
        for (i, a) in args.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            render_term(a, out);
        }
        out.push(')');
    }
}

/// `right_edge` is true when everything to the right of this subformula in
/// the output is a closing parenthesis or the end of the string; only there a
/// bare quantifier body cannot swallow later tokens.
fn go(f: &Formula, sym: &Symbols, right_edge: bool, out: &mut String) {
    if let Some(inner) = f.as_dneg() {
        out.push_str(sym.not);
        out.push_str(sym.not);
        if inner.is_atomic() {
            go(inner, sym, true, out);
        } else {
            out.push('(');
            go(inner, sym, true, out);
            out.push(')');
        }
        return;
    }
    if let Some(inner) = f.as_neg() {
        out.push_str(sym.not);
        match inner {
            Formula::Forall(..) | Formula::Exists(..) if right_edge => {
                go(inner, sym, true, out);
            }
            f if f.is_atomic() => go(inner, sym, true, out),
            _ => {
                out.push('(');
                go(inner, sym, true, out);
                out.push(')');
            }
        }
        return;
    }
    match f {
        Formula::Bottom => out.push_str(sym.bottom),
        Formula::Atom(name, args) => render_atom(name, args, out),
        Formula::Conj(a, b) => {
            operand(a, sym, false, out);
            out.push_str(sym.and);
            operand(b, sym, right_edge, out);
        }
        Formula::Disj(a, b) => {
            operand(a, sym, false, out);
            out.push_str(sym.or);
            operand(b, sym, right_edge, out);
        }
        Formula::Impl(a, b) => {
            operand(a, sym, false, out);
            out.push_str(sym.arrow);
            operand(b, sym, right_edge, out);
        }
        Formula::Forall(x, body) => {
            out.push_str(sym.forall);
            out.push_str(x);
            out.push_str(". ");
            go(body, sym, true, out);
        }
        Formula::Exists(x, body) => {
            out.push_str(sym.exists);
            out.push_str(x);
            out.push_str(". ");
            go(body, sym, true, out);
        }
    }
}

/// Render a direct operand of a binary connective.
fn operand(f: &Formula, sym: &Symbols, right_edge: bool, out: &mut String) {
    if f.as_neg().is_some() {
        // Covers double negations too; `go` parenthesizes what follows the
        // negation sign as needed, and the result binds tighter than any
        // binary connective.
        go(f, sym, right_edge, out);
        return;
    }
    match f {
        Formula::Bottom | Formula::Atom(..) => go(f, sym, true, out),
        Formula::Forall(..) | Formula::Exists(..) if right_edge => go(f, sym, true, out),
        _ => {
            out.push('(');
            go(f, sym, true, out);
            out.push(')');
        }
    }
}
