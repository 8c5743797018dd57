//! Syntax-directed proof checking.
//!
//! Every [`ProofTerm`] constructor carries enough formulas that its
//! conclusion can be synthesized bottom-up in one pass; checking a sequent
//! is synthesizing the term's conclusion under the sequent's hypotheses and
//! comparing with the stated conclusion up to alpha-equivalence.

use super::ProofTerm;
use crate::syntax::{free_variables, imp, substitute, Formula, LogicId, Sequent, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckResult {
    Accepted,
    Rejected(Rejection),
}

impl CheckResult {
    pub fn is_accepted(&self) -> bool {
        matches!(self, CheckResult::Accepted)
    }
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckResult::Accepted => write!(f, "accepted"),
            CheckResult::Rejected(r) => write!(f, "rejected: {r}"),
        }
    }
}

/// Why and where a proof failed to check.  `path` lists child indices from
/// the root to the offending node (subterm children only, in field order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub path: Vec<usize>,
    pub code: ReasonCode,
    pub detail: String,
}

impl std::fmt::Display for Rejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let path: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
        write!(f, "{} at [{}]: {}", self.code, path.join("."), self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReasonCode {
    UnknownHypothesis,
    DuplicateHypothesisLabel,
    ConnectiveMismatch,
    FormulaMismatch,
    EigenvariableViolation,
    RuleNotInLogic,
    ConclusionMismatch,
}

impl std::fmt::Display for ReasonCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ReasonCode::UnknownHypothesis => "unknown-hypothesis",
            ReasonCode::DuplicateHypothesisLabel => "duplicate-hypothesis-label",
            ReasonCode::ConnectiveMismatch => "connective-mismatch",
            ReasonCode::FormulaMismatch => "formula-mismatch",
            ReasonCode::EigenvariableViolation => "eigenvariable-violation",
            ReasonCode::RuleNotInLogic => "rule-not-in-logic",
            ReasonCode::ConclusionMismatch => "conclusion-mismatch",
        })
    }
}

struct Checker {
    logic: LogicId,
    /// In-scope hypotheses, innermost last; inner bindings shadow outer ones.
    env: Vec<(String, Formula)>,
    path: Vec<usize>,
}

impl Checker {
    fn reject(&self, code: ReasonCode, detail: impl Into<String>) -> Rejection {
        Rejection { path: self.path.clone(), code, detail: detail.into() }
    }

    /// Reject, blaming the child at `index` rather than the current node
    /// (used when a subterm's formula does not fit the surrounding rule).
    fn reject_at(&self, index: usize, code: ReasonCode, detail: impl Into<String>) -> Rejection {
        let mut path = self.path.clone();
        path.push(index);
        Rejection { path, code, detail: detail.into() }
    }

    fn lookup(&self, label: &str) -> Option<&Formula> {
        self.env.iter().rev().find(|(l, _)| l == label).map(|(_, f)| f)
    }

    fn child(&mut self, index: usize, term: &ProofTerm) -> Result<Formula, Rejection> {
        self.path.push(index);
        let r = self.synth(term);
        self.path.pop();
        r
    }

    fn child_under(
        &mut self,
        index: usize,
        label: &str,
        hypothesis: Formula,
        term: &ProofTerm,
    ) -> Result<Formula, Rejection> {
        self.env.push((label.to_string(), hypothesis));
        let r = self.child(index, term);
        self.env.pop();
        r
    }

    fn eigen_violation(&self, rule: &str, x: &str) -> Option<String> {
        for (label, f) in &self.env {
            if free_variables(f).contains(x) {
                return Some(format!(
                    "{rule} eigenvariable `{x}` occurs free in open hypothesis {label}: {f}"
                ));
            }
        }
        None
    }

    fn synth(&mut self, term: &ProofTerm) -> Result<Formula, Rejection> {
        match term {
            ProofTerm::Hyp(l) => self.lookup(l).cloned().ok_or_else(|| {
                self.reject(ReasonCode::UnknownHypothesis, format!("no hypothesis labelled `{l}`"))
            }),
            ProofTerm::Abst(l, f, body) => {
                let b = self.child_under(0, l, f.clone(), body)?;
                Ok(imp(f.clone(), b))
            }
            ProofTerm::Apply(fun, arg) => {
                let tf = self.child(0, fun)?;
                let Formula::Impl(a, b) = tf else {
                    return Err(self.reject_at(
                        0,
                        ReasonCode::ConnectiveMismatch,
                        format!("applied a proof of `{tf}`, which is not an implication"),
                    ));
                };
                let ta = self.child(1, arg)?;
                if ta != *a {
                    return Err(self.reject_at(
                        1,
                        ReasonCode::FormulaMismatch,
                        format!("argument proves `{ta}` but the implication expects `{a}`"),
                    ));
                }
                Ok(*b)
            }
            ProofTerm::Pair(l, r) => {
                let a = self.child(0, l)?;
                let b = self.child(1, r)?;
                Ok(Formula::Conj(Box::new(a), Box::new(b)))
            }
            ProofTerm::ProjL(t) | ProofTerm::ProjR(t) => {
                let tf = self.child(0, t)?;
                let Formula::Conj(a, b) = tf else {
                    return Err(self.reject_at(
                        0,
                        ReasonCode::ConnectiveMismatch,
                        format!("projected from a proof of `{tf}`, which is not a conjunction"),
                    ));
                };
                Ok(if matches!(term, ProofTerm::ProjL(_)) { *a } else { *b })
            }
            ProofTerm::InjL(t, right) => {
                let a = self.child(0, t)?;
                Ok(Formula::Disj(Box::new(a), Box::new(right.clone())))
            }
            ProofTerm::InjR(left, t) => {
                let b = self.child(0, t)?;
                Ok(Formula::Disj(Box::new(left.clone()), Box::new(b)))
            }
            ProofTerm::Case(s, ll, bl, lr, br) => {
                let ts = self.child(0, s)?;
                let Formula::Disj(a, b) = ts else {
                    return Err(self.reject_at(
                        0,
                        ReasonCode::ConnectiveMismatch,
                        format!("case split on a proof of `{ts}`, which is not a disjunction"),
                    ));
                };
                let ca = self.child_under(1, ll, *a, bl)?;
                let cb = self.child_under(2, lr, *b, br)?;
                if ca != cb {
                    return Err(self.reject(
                        ReasonCode::FormulaMismatch,
                        format!("case arms prove different formulas: `{ca}` vs `{cb}`"),
                    ));
                }
                Ok(ca)
            }
            ProofTerm::Gen(x, body) => {
                if let Some(detail) = self.eigen_violation("generalization", x) {
                    return Err(self.reject(ReasonCode::EigenvariableViolation, detail));
                }
                let a = self.child(0, body)?;
                Ok(Formula::Forall(x.clone(), Box::new(a)))
            }
            ProofTerm::Inst(t, at) => {
                let tf = self.child(0, t)?;
                let Formula::Forall(x, a) = tf else {
                    return Err(self.reject_at(
                        0,
                        ReasonCode::ConnectiveMismatch,
                        format!("instantiated a proof of `{tf}`, which is not universal"),
                    ));
                };
                Ok(substitute(&a, &x, at))
            }
            ProofTerm::Witness(at, t, target) => {
                let Formula::Exists(x, a) = target else {
                    return Err(self.reject(
                        ReasonCode::ConnectiveMismatch,
                        format!("witness target `{target}` is not existential"),
                    ));
                };
                let instance = substitute(a, x, at);
                let tf = self.child(0, t)?;
                if tf != instance {
                    return Err(self.reject_at(
                        0,
                        ReasonCode::FormulaMismatch,
                        format!("witness body proves `{tf}` but the instance is `{instance}`"),
                    ));
                }
                Ok(target.clone())
            }
            ProofTerm::Unpack(s, x, l, body) => {
                let ts = self.child(0, s)?;
                let Formula::Exists(y, a) = ts else {
                    return Err(self.reject_at(
                        0,
                        ReasonCode::ConnectiveMismatch,
                        format!("unpacked a proof of `{ts}`, which is not existential"),
                    ));
                };
                if free_variables(&Formula::Exists(y.clone(), a.clone())).contains(x) {
                    return Err(self.reject(
                        ReasonCode::EigenvariableViolation,
                        format!("unpack eigenvariable `{x}` occurs free in the scrutinee formula"),
                    ));
                }
                if let Some(detail) = self.eigen_violation("unpack", x) {
                    return Err(self.reject(ReasonCode::EigenvariableViolation, detail));
                }
                let instance = substitute(&a, &y, &Term::var(x));
                let c = self.child_under(1, l, instance, body)?;
                if free_variables(&c).contains(x) {
                    return Err(self.reject(
                        ReasonCode::EigenvariableViolation,
                        format!("unpack eigenvariable `{x}` occurs free in the conclusion `{c}`"),
                    ));
                }
                Ok(c)
            }
            ProofTerm::ExFalso(t, target) => {
                if self.logic == LogicId::Ml {
                    return Err(self.reject(
                        ReasonCode::RuleNotInLogic,
                        "ex falso is not available in minimal logic",
                    ));
                }
                let tf = self.child(0, t)?;
                if tf != Formula::Bottom {
                    return Err(self.reject_at(
                        0,
                        ReasonCode::FormulaMismatch,
                        format!("ex falso needs a proof of `false`, got `{tf}`"),
                    ));
                }
                Ok(target.clone())
            }
            ProofTerm::DoubleNegElim(t) => {
                if self.logic != LogicId::Cl {
                    return Err(self.reject(
                        ReasonCode::RuleNotInLogic,
                        "double-negation elimination is available only in classical logic",
                    ));
                }
                let tf = self.child(0, t)?;
                let Some(inner) = tf.as_dneg() else {
                    return Err(self.reject_at(
                        0,
                        ReasonCode::ConnectiveMismatch,
                        format!("double-negation elimination needs `~~A`, got `{tf}`"),
                    ));
                };
                Ok(inner.clone())
            }
        }
    }
}

/// Check that `proof` derives `sequent` in the calculus for `logic`.
pub fn check_proof(proof: &ProofTerm, sequent: &Sequent, logic: LogicId) -> CheckResult {
    if let Some(l) = sequent.duplicate_label() {
        return CheckResult::Rejected(Rejection {
            path: Vec::new(),
            code: ReasonCode::DuplicateHypothesisLabel,
            detail: format!("hypothesis label `{l}` occurs twice in the sequent"),
        });
    }
    let mut checker =
        Checker { logic, env: sequent.hypotheses.clone(), path: Vec::new() };
    match checker.synth(proof) {
        Err(r) => CheckResult::Rejected(r),
        Ok(found) => {
            if found == sequent.conclusion {
                CheckResult::Accepted
            } else {
                CheckResult::Rejected(Rejection {
                    path: Vec::new(),
                    code: ReasonCode::ConclusionMismatch,
                    detail: format!(
                        "proof derives `{found}` but the sequent claims `{}`",
                        sequent.conclusion
                    ),
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::*;
    use crate::syntax::*;

    fn accepted(proof: &ProofTerm, sequent: &Sequent, logic: LogicId) -> bool {
        check_proof(proof, sequent, logic).is_accepted()
    }

    fn rejected_with(proof: &ProofTerm, sequent: &Sequent, logic: LogicId) -> Rejection {
        match check_proof(proof, sequent, logic) {
            CheckResult::Rejected(r) => r,
            CheckResult::Accepted => panic!("expected rejection"),
        }
    }

    #[test]
    fn identity_checks_in_all_logics() {
        let p = lam("x", atom("P"), hyp("x"));
        let s = Sequent::entails(parse("P -> P").unwrap());
        for logic in [LogicId::Ml, LogicId::Il, LogicId::Cl] {
            assert!(accepted(&p, &s, logic));
        }
    }

    #[test]
    fn ex_falso_is_the_ml_il_gap() {
        let p = lam("x", bot(), efq(hyp("x"), atom("P")));
        let s = Sequent::entails(parse("false -> P").unwrap());
        let r = rejected_with(&p, &s, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::RuleNotInLogic);
        assert_eq!(r.path, vec![0]);
        assert!(accepted(&p, &s, LogicId::Il));
        assert!(accepted(&p, &s, LogicId::Cl));
    }

    #[test]
    fn double_negation_elimination_is_classical_only() {
        let p = lam("x", parse("~~P").unwrap(), dne(hyp("x")));
        let s = Sequent::entails(parse("~~P -> P").unwrap());
        assert_eq!(rejected_with(&p, &s, LogicId::Ml).code, ReasonCode::RuleNotInLogic);
        assert_eq!(rejected_with(&p, &s, LogicId::Il).code, ReasonCode::RuleNotInLogic);
        assert!(accepted(&p, &s, LogicId::Cl));
    }

    #[test]
    fn double_negation_introduction_checks_in_ml() {
        // The standard term for D -> ~~D with D := P.
        let p = lam(
            "d",
            atom("P"),
            lam("k", parse("~P").unwrap(), app(hyp("k"), hyp("d"))),
        );
        let s = Sequent::entails(parse("P -> ~~P").unwrap());
        assert!(accepted(&p, &s, LogicId::Ml));
    }

    #[test]
    fn sequent_hypotheses_are_available() {
        let s = Sequent::new(
            vec![("h".into(), parse("P & Q").unwrap())],
            parse("Q").unwrap(),
        );
        assert!(accepted(&snd(hyp("h")), &s, LogicId::Ml));
        let r = rejected_with(&fst(hyp("h")), &s, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::ConclusionMismatch);
    }

    #[test]
    fn unknown_and_duplicate_hypotheses() {
        let s = Sequent::entails(atom("P"));
        let r = rejected_with(&hyp("nope"), &s, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::UnknownHypothesis);
        assert!(r.path.is_empty());

        let dup = Sequent::new(
            vec![("h".into(), atom("P")), ("h".into(), atom("Q"))],
            atom("P"),
        );
        let r = rejected_with(&hyp("h"), &dup, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::DuplicateHypothesisLabel);
    }

    #[test]
    fn inner_abstraction_shadows_outer_label() {
        // lam x:P. lam x:Q. hyp x proves P -> (Q -> Q), not P -> (Q -> P).
        let p = lam("x", atom("P"), lam("x", atom("Q"), hyp("x")));
        assert!(accepted(&p, &Sequent::entails(parse("P -> (Q -> Q)").unwrap()), LogicId::Ml));
        assert!(!accepted(&p, &Sequent::entails(parse("P -> (Q -> P)").unwrap()), LogicId::Ml));
    }

    #[test]
    fn connective_and_formula_mismatches_carry_paths() {
        let s = Sequent::new(vec![("h".into(), atom("P"))], atom("P"));
        // Applying a non-implication: offending node is the function child.
        let r = rejected_with(&app(hyp("h"), hyp("h")), &s, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::ConnectiveMismatch);
        assert_eq!(r.path, vec![0]);

        let s2 = Sequent::new(
            vec![
                ("f".into(), parse("Q -> P").unwrap()),
                ("h".into(), atom("P")),
            ],
            atom("P"),
        );
        let r = rejected_with(&app(hyp("f"), hyp("h")), &s2, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::FormulaMismatch);
        assert!(r.detail.contains("expects `Q`"), "{}", r.detail);
    }

    #[test]
    fn case_split_checks_and_mismatched_arms_fail() {
        let s = Sequent::new(
            vec![("h".into(), parse("P | Q").unwrap())],
            parse("Q | P").unwrap(),
        );
        let good = case(
            hyp("h"),
            "a",
            inr(atom("Q"), hyp("a")),
            "b",
            inl(hyp("b"), atom("P")),
        );
        assert!(accepted(&good, &s, LogicId::Ml));

        let bad = case(
            hyp("h"),
            "a",
            inr(atom("Q"), hyp("a")),
            "b",
            inr(atom("Q"), hyp("b")),
        );
        let r = rejected_with(&bad, &s, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::FormulaMismatch);
    }

    #[test]
    fn quantifier_rules_check() {
        // forall x. P(x) |- forall y. P(y): instantiate at the eigenvariable.
        let px = |v: &str| pred("P", vec![Term::var(v)]);
        let s = Sequent::new(
            vec![("h".into(), forall("x", px("x")))],
            forall("y", px("y")),
        );
        let p = gen("y", inst(hyp("h"), Term::var("y")));
        assert!(accepted(&p, &s, LogicId::Ml));
        // Alpha-equivalence: the same proof against forall x. P(x).
        let s2 = Sequent::new(
            vec![("h".into(), forall("x", px("x")))],
            forall("x", px("x")),
        );
        assert!(accepted(&p, &s2, LogicId::Ml));

        // exists intro + elim: exists x. P(x) |- exists y. P(y).
        let s3 = Sequent::new(
            vec![("h".into(), exists("x", px("x")))],
            exists("y", px("y")),
        );
        let p3 = unpack(
            hyp("h"),
            "z",
            "inst",
            wit(Term::var("z"), hyp("inst"), exists("y", px("y"))),
        );
        assert!(accepted(&p3, &s3, LogicId::Ml));
    }

    #[test]
    fn generalization_eigenvariable_violation() {
        let px = |v: &str| pred("P", vec![Term::var(v)]);
        // P(x) |- forall x. P(x) must fail: x is free in an open hypothesis.
        let s = Sequent::new(vec![("h".into(), px("x"))], forall("x", px("x")));
        let r = rejected_with(&gen("x", hyp("h")), &s, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::EigenvariableViolation);
    }

    #[test]
    fn unpack_eigenvariable_violations() {
        let px = |v: &str| pred("P", vec![Term::var(v)]);
        // Leaking the eigenvariable into the conclusion.
        let s = Sequent::new(vec![("h".into(), exists("x", px("x")))], px("z"));
        let leak = unpack(hyp("h"), "z", "i", hyp("i"));
        let r = rejected_with(&leak, &s, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::EigenvariableViolation);

        // Reusing a variable free in the scrutinee's formula.
        let q = pred("Q", vec![Term::var("x"), Term::var("y")]);
        let s2 = Sequent::new(
            vec![("h".into(), exists("y", q.clone()))],
            exists("y", exists("x", q)),
        );
        let shadowed = unpack(
            hyp("h"),
            "x",
            "i",
            wit(
                Term::var("x"),
                wit(Term::var("x"), hyp("i"), parse("exists x. Q(x, x)").unwrap()),
                parse("exists y. exists x. Q(x, y)").unwrap(),
            ),
        );
        let r = rejected_with(&shadowed, &s2, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::EigenvariableViolation);
    }

    #[test]
    fn witness_requires_matching_instance() {
        let px = |v: &str| pred("P", vec![Term::var(v)]);
        let s = Sequent::new(
            vec![("h".into(), px("c"))],
            exists("x", px("x")),
        );
        // Wrong witness term: claims P(d) justifies exists x. P(x) via d.
        let bad = wit(Term::var("d"), hyp("h"), exists("x", px("x")));
        let r = rejected_with(&bad, &s, LogicId::Ml);
        assert_eq!(r.code, ReasonCode::FormulaMismatch);
        let good = wit(Term::var("c"), hyp("h"), exists("x", px("x")));
        assert!(accepted(&good, &s, LogicId::Ml));
    }

    #[test]
    fn rejection_formats_readably() {
        let s = Sequent::entails(atom("P"));
        let r = rejected_with(&app(hyp("a"), hyp("b")), &s, LogicId::Ml);
        let text = r.to_string();
        assert!(text.contains("unknown-hypothesis"), "{text}");
        assert!(text.contains("[0]"), "{text}");
    }
}
