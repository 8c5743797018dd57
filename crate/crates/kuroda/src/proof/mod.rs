//! Natural-deduction proof terms for minimal, intuitionistic, and classical
//! logic, in Curry-Howard style.
//!
//! The three calculi share all introduction and elimination rules for
//! `&`, `|`, `->`, `forall`, `exists`; intuitionistic logic adds
//! [`ProofTerm::ExFalso`], classical logic additionally
//! [`ProofTerm::DoubleNegElim`].  That two-rule ladder is the entire
//! difference, so "check under ML/IL/CL" is one checker with two gates.
//!
//! On top of the checker ([`check_proof`]) sit proof *transformers* that
//! realize translation soundness constructively: [`kuroda_transform`] turns
//! a classical derivation into an intuitionistic derivation of the
//! `K`-translated sequent, [`leivant_transform`] turns an intuitionistic
//! derivation into a minimal-logic derivation of the `Tᵢ`-translated
//! sequent, and the synthesizers in [`synth`](self) produce minimal-logic
//! equivalence proofs connecting the translations, so the two transformers
//! compose into [`soundness_pipeline`]: a classical proof of `Γ ⊢ A` becomes
//! a minimal-logic proof of `KᵢΓ ⊢ KᵢA` for `i = 1..4`.

mod check;
pub mod corpus;
mod file;
pub mod lemmas;
mod synth;
mod transform;

pub use check::{check_proof, CheckResult, ReasonCode, Rejection};
pub use file::{parse_proof_file, write_proof_file, ProofFile, ProofFileError};
pub use synth::{
    synthesize_absorption, synthesize_equiv_k678, synthesize_equiv_leivant,
    synthesize_equiv_shoenfield, NegativeVariant,
};
pub use transform::{kuroda_transform, leivant_transform, soundness_pipeline, TransformError};

use crate::syntax::{Formula, Term};
use std::collections::BTreeSet;

/// A natural-deduction derivation, carried as a term.  Enough formulas are
/// stored in the nodes (the hypothesis of an abstraction, the unused side of
/// an injection, the targets of `exists`-introduction and ex falso) that
/// checking is plain type synthesis, no inference required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofTerm {
    /// Use a hypothesis by label.
    Hyp(String),
    /// `->` introduction: discharge `label: hypothesis` in `body`.
    Abst(String, Formula, Box<ProofTerm>),
    /// `->` elimination.
    Apply(Box<ProofTerm>, Box<ProofTerm>),
    /// `&` introduction.
    Pair(Box<ProofTerm>, Box<ProofTerm>),
    /// `&` elimination, left projection.
    ProjL(Box<ProofTerm>),
    /// `&` elimination, right projection.
    ProjR(Box<ProofTerm>),
    /// `|` introduction from the left disjunct; the formula is the absent
    /// right disjunct.
    InjL(Box<ProofTerm>, Formula),
    /// `|` introduction from the right disjunct; the formula is the absent
    /// left disjunct.
    InjR(Formula, Box<ProofTerm>),
    /// `|` elimination: case split discharging one label in each arm.
    Case(Box<ProofTerm>, String, Box<ProofTerm>, String, Box<ProofTerm>),
    /// `forall` introduction with an eigenvariable.
    Gen(String, Box<ProofTerm>),
    /// `forall` elimination at a term.
    Inst(Box<ProofTerm>, Term),
    /// `exists` introduction: the witness term, a proof of the instance, and
    /// the target `exists`-formula.
    Witness(Term, Box<ProofTerm>, Formula),
    /// `exists` elimination with an eigenvariable and a discharged label.
    Unpack(Box<ProofTerm>, String, String, Box<ProofTerm>),
    /// Ex falso quodlibet (intuitionistic and classical only).
    ExFalso(Box<ProofTerm>, Formula),
    /// Double-negation elimination (classical only).
    DoubleNegElim(Box<ProofTerm>),
}

// Construction helpers, named after the proof-file spellings.

pub fn hyp(label: impl Into<String>) -> ProofTerm {
    ProofTerm::Hyp(label.into())
}

pub fn lam(label: impl Into<String>, hypothesis: Formula, body: ProofTerm) -> ProofTerm {
    ProofTerm::Abst(label.into(), hypothesis, Box::new(body))
}

pub fn app(f: ProofTerm, a: ProofTerm) -> ProofTerm {
    ProofTerm::Apply(Box::new(f), Box::new(a))
}

pub fn pair(l: ProofTerm, r: ProofTerm) -> ProofTerm {
    ProofTerm::Pair(Box::new(l), Box::new(r))
}

pub fn fst(t: ProofTerm) -> ProofTerm {
    ProofTerm::ProjL(Box::new(t))
}

pub fn snd(t: ProofTerm) -> ProofTerm {
    ProofTerm::ProjR(Box::new(t))
}

pub fn inl(t: ProofTerm, right: Formula) -> ProofTerm {
    ProofTerm::InjL(Box::new(t), right)
}

pub fn inr(left: Formula, t: ProofTerm) -> ProofTerm {
    ProofTerm::InjR(left, Box::new(t))
}

pub fn case(
    scrutinee: ProofTerm,
    left_label: impl Into<String>,
    left_body: ProofTerm,
    right_label: impl Into<String>,
    right_body: ProofTerm,
) -> ProofTerm {
    ProofTerm::Case(
        Box::new(scrutinee),
        left_label.into(),
        Box::new(left_body),
        right_label.into(),
        Box::new(right_body),
    )
}

pub fn gen(variable: impl Into<String>, body: ProofTerm) -> ProofTerm {
    ProofTerm::Gen(variable.into(), Box::new(body))
}

pub fn inst(t: ProofTerm, term: Term) -> ProofTerm {
    ProofTerm::Inst(Box::new(t), term)
}

pub fn wit(term: Term, t: ProofTerm, target: Formula) -> ProofTerm {
    ProofTerm::Witness(term, Box::new(t), target)
}

pub fn unpack(
    scrutinee: ProofTerm,
    variable: impl Into<String>,
    label: impl Into<String>,
    body: ProofTerm,
) -> ProofTerm {
    ProofTerm::Unpack(Box::new(scrutinee), variable.into(), label.into(), Box::new(body))
}

pub fn efq(t: ProofTerm, target: Formula) -> ProofTerm {
    ProofTerm::ExFalso(Box::new(t), target)
}

pub fn dne(t: ProofTerm) -> ProofTerm {
    ProofTerm::DoubleNegElim(Box::new(t))
}

impl ProofTerm {
    /// Every hypothesis label occurring in the term, bound or used.
    pub fn labels(&self, out: &mut BTreeSet<String>) {
        match self {
            ProofTerm::Hyp(l) => {
                out.insert(l.clone());
            }
            ProofTerm::Abst(l, _, b) => {
                out.insert(l.clone());
                b.labels(out);
            }
            ProofTerm::Apply(a, b) | ProofTerm::Pair(a, b) => {
                a.labels(out);
                b.labels(out);
            }
            ProofTerm::ProjL(t)
            | ProofTerm::ProjR(t)
            | ProofTerm::InjL(t, _)
            | ProofTerm::InjR(_, t)
            | ProofTerm::Gen(_, t)
            | ProofTerm::Inst(t, _)
            | ProofTerm::Witness(_, t, _)
            | ProofTerm::ExFalso(t, _)
            | ProofTerm::DoubleNegElim(t) => t.labels(out),
            ProofTerm::Case(s, ll, bl, lr, br) => {
                out.insert(ll.clone());
                out.insert(lr.clone());
                s.labels(out);
                bl.labels(out);
                br.labels(out);
            }
            ProofTerm::Unpack(s, _, l, b) => {
                out.insert(l.clone());
                s.labels(out);
                b.labels(out);
            }
        }
    }

    /// Every first-order variable mentioned anywhere in the term: in
    /// eigenvariable positions, instantiation and witness terms, and the
    /// formulas stored in nodes.
    pub fn term_variables(&self, out: &mut BTreeSet<String>) {
        match self {
            ProofTerm::Hyp(_) => {}
            ProofTerm::Abst(_, f, b) => {
                f.all_variables(out);
                b.term_variables(out);
            }
            ProofTerm::Apply(a, b) | ProofTerm::Pair(a, b) => {
                a.term_variables(out);
                b.term_variables(out);
            }
            ProofTerm::ProjL(t) | ProofTerm::ProjR(t) | ProofTerm::DoubleNegElim(t) => {
                t.term_variables(out)
            }
            ProofTerm::InjL(t, f) | ProofTerm::ExFalso(t, f) => {
                t.term_variables(out);
                f.all_variables(out);
            }
            ProofTerm::InjR(f, t) => {
                f.all_variables(out);
                t.term_variables(out);
            }
            ProofTerm::Case(s, _, bl, _, br) => {
                s.term_variables(out);
                bl.term_variables(out);
                br.term_variables(out);
            }
            ProofTerm::Gen(x, t) => {
                out.insert(x.clone());
                t.term_variables(out);
            }
            ProofTerm::Inst(t, term) => {
                t.term_variables(out);
                term.variables(out);
            }
            ProofTerm::Witness(term, t, f) => {
                term.variables(out);
                t.term_variables(out);
                f.all_variables(out);
            }
            ProofTerm::Unpack(s, x, _, b) => {
                out.insert(x.clone());
                s.term_variables(out);
                b.term_variables(out);
            }
        }
    }

    /// Number of nodes, for reporting.
    pub fn size(&self) -> usize {
        match self {
            ProofTerm::Hyp(_) => 1,
            ProofTerm::Abst(_, _, t)
            | ProofTerm::ProjL(t)
            | ProofTerm::ProjR(t)
            | ProofTerm::InjL(t, _)
            | ProofTerm::InjR(_, t)
            | ProofTerm::Gen(_, t)
            | ProofTerm::Inst(t, _)
            | ProofTerm::Witness(_, t, _)
            | ProofTerm::ExFalso(t, _)
            | ProofTerm::DoubleNegElim(t) => 1 + t.size(),
            ProofTerm::Apply(a, b) | ProofTerm::Pair(a, b) => 1 + a.size() + b.size(),
            ProofTerm::Case(s, _, a, _, b) => 1 + s.size() + a.size() + b.size(),
            ProofTerm::Unpack(s, _, _, b) => 1 + s.size() + b.size(),
        }
    }
}

/// Replace every free use of the hypothesis `label` by `replacement`.
/// Binders for the same label shadow as usual, and the substitution does not
/// descend into spliced-in replacements.  Callers are responsible for
/// picking replacement labels that the surrounding term does not bind; the
/// fresh-name discipline in [`lemmas::Builder`] guarantees that for all
/// generated proofs.
pub fn subst_hyp(term: &ProofTerm, label: &str, replacement: &ProofTerm) -> ProofTerm {
    match term {
        ProofTerm::Hyp(l) => {
            if l == label {
                replacement.clone()
            } else {
                term.clone()
            }
        }
        ProofTerm::Abst(l, f, b) => {
            let body = if l == label { (**b).clone() } else { subst_hyp(b, label, replacement) };
            ProofTerm::Abst(l.clone(), f.clone(), Box::new(body))
        }
        ProofTerm::Apply(a, b) => app(
            subst_hyp(a, label, replacement),
            subst_hyp(b, label, replacement),
        ),
        ProofTerm::Pair(a, b) => pair(
            subst_hyp(a, label, replacement),
            subst_hyp(b, label, replacement),
        ),
        ProofTerm::ProjL(t) => fst(subst_hyp(t, label, replacement)),
        ProofTerm::ProjR(t) => snd(subst_hyp(t, label, replacement)),
        ProofTerm::InjL(t, f) => inl(subst_hyp(t, label, replacement), f.clone()),
        ProofTerm::InjR(f, t) => inr(f.clone(), subst_hyp(t, label, replacement)),
        ProofTerm::Case(s, ll, bl, lr, br) => {
            let s = subst_hyp(s, label, replacement);
            let bl = if ll == label { (**bl).clone() } else { subst_hyp(bl, label, replacement) };
            let br = if lr == label { (**br).clone() } else { subst_hyp(br, label, replacement) };
            case(s, ll.clone(), bl, lr.clone(), br)
        }
        ProofTerm::Gen(x, t) => gen(x.clone(), subst_hyp(t, label, replacement)),
        ProofTerm::Inst(t, term_arg) => {
            inst(subst_hyp(t, label, replacement), term_arg.clone())
        }
        ProofTerm::Witness(term_arg, t, f) => wit(
            term_arg.clone(),
            subst_hyp(t, label, replacement),
            f.clone(),
        ),
        ProofTerm::Unpack(s, x, l, b) => {
            let s = subst_hyp(s, label, replacement);
            let body = if l == label { (**b).clone() } else { subst_hyp(b, label, replacement) };
            unpack(s, x.clone(), l.clone(), body)
        }
        ProofTerm::ExFalso(t, f) => efq(subst_hyp(t, label, replacement), f.clone()),
        ProofTerm::DoubleNegElim(t) => dne(subst_hyp(t, label, replacement)),
    }
}
