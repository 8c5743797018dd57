//! First-order formulas over `⊥, ∧, ∨, →, ∀, ∃` with negation as the
//! abbreviation `¬A := A → ⊥`.  Equality of formulas is alpha-equivalence:
//! bound variables are compared positionally, free variables by name, and the
//! spelled names are kept for printing.

mod parse;
mod print;

pub use parse::{parse, parse_sequent, parse_term, ParseError};
pub use print::{render, RenderStyle};

use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

/// First-order terms.  A bare identifier in term position is a variable;
/// constants are written as zero-argument applications `c()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn app(symbol: impl Into<String>, args: Vec<Term>) -> Term {
        Term::App(symbol.into(), args)
    }

    pub fn variables(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::App(_, args) => {
                for a in args {
                    a.variables(out);
                }
            }
        }
    }

    fn contains_var(&self, x: &str) -> bool {
        match self {
            Term::Var(y) => x == y,
            Term::App(_, args) => args.iter().any(|a| a.contains_var(x)),
        }
    }

    fn subst(&self, x: &str, t: &Term) -> Term {
        match self {
            Term::Var(y) if x == y => t.clone(),
            Term::Var(_) => self.clone(),
            Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| a.subst(x, t)).collect()),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Formula {
    Bottom,
    Atom(String, Vec<Term>),
    Conj(Box<Formula>, Box<Formula>),
    Disj(Box<Formula>, Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

pub fn atom(name: impl Into<String>) -> Formula {
    Formula::Atom(name.into(), Vec::new())
}

pub fn pred(name: impl Into<String>, args: Vec<Term>) -> Formula {
    Formula::Atom(name.into(), args)
}

pub fn bot() -> Formula {
    Formula::Bottom
}

pub fn conj(a: Formula, b: Formula) -> Formula {
    Formula::Conj(Box::new(a), Box::new(b))
}

pub fn disj(a: Formula, b: Formula) -> Formula {
    Formula::Disj(Box::new(a), Box::new(b))
}

pub fn imp(a: Formula, b: Formula) -> Formula {
    Formula::Impl(Box::new(a), Box::new(b))
}

pub fn neg(a: Formula) -> Formula {
    imp(a, Formula::Bottom)
}

pub fn dneg(a: Formula) -> Formula {
    neg(neg(a))
}

pub fn forall(x: impl Into<String>, body: Formula) -> Formula {
    Formula::Forall(x.into(), Box::new(body))
}

pub fn exists(x: impl Into<String>, body: Formula) -> Formula {
    Formula::Exists(x.into(), Box::new(body))
}

/// `A ↔ B`, spelled out as the conjunction of both implications.
pub fn iff(a: Formula, b: Formula) -> Formula {
    conj(imp(a.clone(), b.clone()), imp(b, a))
}

impl Formula {
    /// If the formula is a negation `X → ⊥`, return `X`.
    pub fn as_neg(&self) -> Option<&Formula> {
        match self {
            Formula::Impl(a, b) if matches!(**b, Formula::Bottom) => Some(a),
            _ => None,
        }
    }

    /// If the formula is a double negation `(X → ⊥) → ⊥`, return `X`.
    pub fn as_dneg(&self) -> Option<&Formula> {
        self.as_neg().and_then(|inner| inner.as_neg())
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Formula::Bottom | Formula::Atom(..))
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Bottom | Formula::Atom(..) => true,
            Formula::Conj(a, b) | Formula::Disj(a, b) | Formula::Impl(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::Forall(..) | Formula::Exists(..) => false,
        }
    }

    /// Node count with `¬X` counted as a single node on top of `X`.
    pub fn size(&self) -> usize {
        if let Some(inner) = self.as_neg() {
            return 1 + inner.size();
        }
        match self {
            Formula::Bottom | Formula::Atom(..) => 1,
            Formula::Conj(a, b) | Formula::Disj(a, b) | Formula::Impl(a, b) => 1 + a.size() + b.size(),
            Formula::Forall(_, a) | Formula::Exists(_, a) => 1 + a.size(),
        }
    }

    /// All variable names occurring anywhere (free or bound, including binders).
    pub fn all_variables(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Bottom => {}
            Formula::Atom(_, args) => {
                for t in args {
                    t.variables(out);
                }
            }
            Formula::Conj(a, b) | Formula::Disj(a, b) | Formula::Impl(a, b) => {
                a.all_variables(out);
                b.all_variables(out);
            }
            Formula::Forall(x, a) | Formula::Exists(x, a) => {
                out.insert(x.clone());
                a.all_variables(out);
            }
        }
    }
}

fn alpha_eq(a: &Formula, b: &Formula, env: &mut Vec<(String, String)>) -> bool {
    match (a, b) {
        (Formula::Bottom, Formula::Bottom) => true,
        (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
            p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| term_alpha_eq(x, y, env))
        }
        (Formula::Conj(a1, a2), Formula::Conj(b1, b2))
        | (Formula::Disj(a1, a2), Formula::Disj(b1, b2))
        | (Formula::Impl(a1, a2), Formula::Impl(b1, b2)) => {
            alpha_eq(a1, b1, env) && alpha_eq(a2, b2, env)
        }
        (Formula::Forall(x, a1), Formula::Forall(y, b1))
        | (Formula::Exists(x, a1), Formula::Exists(y, b1)) => {
            env.push((x.clone(), y.clone()));
            let r = alpha_eq(a1, b1, env);
            env.pop();
            r
        }
        _ => false,
    }
}

fn var_alpha_eq(x: &str, y: &str, env: &[(String, String)]) -> bool {
    for (bx, by) in env.iter().rev() {
        let hit_left = bx == x;
        let hit_right = by == y;
        if hit_left || hit_right {
            return hit_left && hit_right;
        }
    }
    x == y
}

fn term_alpha_eq(a: &Term, b: &Term, env: &[(String, String)]) -> bool {
    match (a, b) {
        (Term::Var(x), Term::Var(y)) => var_alpha_eq(x, y, env),
        (Term::App(f, xs), Term::App(g, ys)) => {
            f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| term_alpha_eq(x, y, env))
        }
        _ => false,
    }
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        alpha_eq(self, other, &mut Vec::new())
    }
}

impl Eq for Formula {}

impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        fn go<H: Hasher>(f: &Formula, env: &mut Vec<String>, state: &mut H) {
            match f {
                Formula::Bottom => 0u8.hash(state),
                Formula::Atom(p, args) => {
                    1u8.hash(state);
                    p.hash(state);
                    for t in args {
                        term_go(t, env, state);
                    }
                }
                Formula::Conj(a, b) => {
                    2u8.hash(state);
                    go(a, env, state);
                    go(b, env, state);
                }
                Formula::Disj(a, b) => {
                    3u8.hash(state);
                    go(a, env, state);
                    go(b, env, state);
                }
                Formula::Impl(a, b) => {
                    4u8.hash(state);
                    go(a, env, state);
                    go(b, env, state);
                }
                Formula::Forall(x, a) | Formula::Exists(x, a) => {
                    if matches!(f, Formula::Forall(..)) { 5u8 } else { 6u8 }.hash(state);
                    env.push(x.clone());
                    go(a, env, state);
                    env.pop();
                }
            }
        }
        fn term_go<H: Hasher>(t: &Term, env: &[String], state: &mut H) {
            match t {
                Term::Var(x) => match env.iter().rposition(|b| b == x) {
                    Some(i) => {
                        10u8.hash(state);
                        i.hash(state);
                    }
                    None => {
                        11u8.hash(state);
                        x.hash(state);
                    }
                },
                Term::App(f, args) => {
                    12u8.hash(state);
                    f.hash(state);
                    args.len().hash(state);
                    for a in args {
                        term_go(a, env, state);
                    }
                }
            }
        }
        go(self, &mut Vec::new(), state);
    }
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render(self, RenderStyle::Ascii))
    }
}

/// Free variables of a formula.
pub fn free_variables(f: &Formula) -> BTreeSet<String> {
    fn go(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match f {
            Formula::Bottom => {}
            Formula::Atom(_, args) => {
                let mut vars = BTreeSet::new();
                for t in args {
                    t.variables(&mut vars);
                }
                for v in vars {
                    if !bound.iter().any(|b| *b == v) {
                        out.insert(v);
                    }
                }
            }
            Formula::Conj(a, b) | Formula::Disj(a, b) | Formula::Impl(a, b) => {
                go(a, bound, out);
                go(b, bound, out);
            }
            Formula::Forall(x, a) | Formula::Exists(x, a) => {
                bound.push(x.clone());
                go(a, bound, out);
                bound.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(f, &mut Vec::new(), &mut out);
    out
}

/// A name based on `base` that avoids everything in `taken`.
fn fresh_name(base: &str, taken: &BTreeSet<String>) -> String {
    if !taken.contains(base) {
        return base.to_string();
    }
    let stem: String = base.trim_end_matches(|c: char| c.is_ascii_digit()).to_string();
    let stem = if stem.is_empty() { "v".to_string() } else { stem };
    for i in 0.. {
        let candidate = format!("{stem}{i}");
        if !taken.contains(&candidate) {
            return candidate;
        }
    }
    unreachable!()
}

/// Capture-avoiding substitution of `t` for the free occurrences of `x`.
/// Binders that would capture a variable of `t` are renamed to a fresh name.
pub fn substitute(f: &Formula, x: &str, t: &Term) -> Formula {
    match f {
        Formula::Bottom => Formula::Bottom,
        Formula::Atom(p, args) => {
            Formula::Atom(p.clone(), args.iter().map(|a| a.subst(x, t)).collect())
        }
        Formula::Conj(a, b) => conj(substitute(a, x, t), substitute(b, x, t)),
        Formula::Disj(a, b) => disj(substitute(a, x, t), substitute(b, x, t)),
        Formula::Impl(a, b) => imp(substitute(a, x, t), substitute(b, x, t)),
        Formula::Forall(y, a) | Formula::Exists(y, a) => {
            let rebuild = |v: String, body: Formula| {
                if matches!(f, Formula::Forall(..)) {
                    forall(v, body)
                } else {
                    exists(v, body)
                }
            };
            if y == x || !free_variables(f).contains(x) {
                return rebuild(y.clone(), (**a).clone());
            }
            if t.contains_var(y) {
                // Rename the binder before substituting so `t`'s occurrence of
                // `y` stays free.
                let mut taken = free_variables(a);
                t.variables(&mut taken);
                taken.insert(x.to_string());
                taken.insert(y.clone());
                let y2 = fresh_name(y, &taken);
                let renamed = substitute(a, y, &Term::Var(y2.clone()));
                rebuild(y2, substitute(&renamed, x, t))
            } else {
                rebuild(y.clone(), substitute(a, x, t))
            }
        }
    }
}

/// Replace `⊥` everywhere by the given formula (used for the "⊥ as a fresh
/// atom" reduction of minimal to intuitionistic provability).
pub fn replace_bottom(f: &Formula, r: &Formula) -> Formula {
    match f {
        Formula::Bottom => r.clone(),
        Formula::Atom(..) => f.clone(),
        Formula::Conj(a, b) => conj(replace_bottom(a, r), replace_bottom(b, r)),
        Formula::Disj(a, b) => disj(replace_bottom(a, r), replace_bottom(b, r)),
        Formula::Impl(a, b) => imp(replace_bottom(a, r), replace_bottom(b, r)),
        Formula::Forall(x, a) => forall(x.clone(), replace_bottom(a, r)),
        Formula::Exists(x, a) => exists(x.clone(), replace_bottom(a, r)),
    }
}

/// Membership in the `¬,∨,∃` fragment: built from non-`⊥` atoms, disjunction,
/// existential quantification, and negation.  Bare `⊥`, conjunction, universal
/// quantification and non-negation implications are excluded.
pub fn in_clprime_fragment(f: &Formula) -> bool {
    match f {
        Formula::Bottom => false,
        Formula::Atom(..) => true,
        Formula::Disj(a, b) => in_clprime_fragment(a) && in_clprime_fragment(b),
        Formula::Exists(_, a) => in_clprime_fragment(a),
        Formula::Impl(a, b) => matches!(**b, Formula::Bottom) && in_clprime_fragment(a),
        Formula::Conj(..) | Formula::Forall(..) => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum LogicId {
    Ml,
    Il,
    Cl,
}

impl LogicId {
    pub fn parse(s: &str) -> Option<LogicId> {
        match s.to_ascii_lowercase().as_str() {
            "ml" => Some(LogicId::Ml),
            "il" => Some(LogicId::Il),
            "cl" => Some(LogicId::Cl),
            _ => None,
        }
    }
}

impl std::fmt::Display for LogicId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LogicId::Ml => "ml",
            LogicId::Il => "il",
            LogicId::Cl => "cl",
        })
    }
}

/// A labeled sequent `h1: G1, ..., hn: Gn ⊢ A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequent {
    pub hypotheses: Vec<(String, Formula)>,
    pub conclusion: Formula,
}

impl Sequent {
    pub fn new(hypotheses: Vec<(String, Formula)>, conclusion: Formula) -> Sequent {
        Sequent { hypotheses, conclusion }
    }

    /// A sequent with no hypotheses.
    pub fn entails(conclusion: Formula) -> Sequent {
        Sequent { hypotheses: Vec::new(), conclusion }
    }

    pub fn duplicate_label(&self) -> Option<&str> {
        for (i, (l, _)) in self.hypotheses.iter().enumerate() {
            if self.hypotheses[..i].iter().any(|(m, _)| m == l) {
                return Some(l);
            }
        }
        None
    }

    pub fn is_quantifier_free(&self) -> bool {
        self.conclusion.is_quantifier_free()
            && self.hypotheses.iter().all(|(_, g)| g.is_quantifier_free())
    }
}

impl std::fmt::Display for Sequent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (label, hyp)) in self.hypotheses.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{label}: {hyp}")?;
        }
        if !self.hypotheses.is_empty() {
            write!(f, " ")?;
        }
        write!(f, "|- {}", self.conclusion)
    }
}
