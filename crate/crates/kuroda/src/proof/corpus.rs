//! A library of checked derivations: classical standards (excluded middle,
//! Peirce's law, De Morgan, the drinker), the intuitionistic and minimal
//! fragments around them, and a few sequents with hypotheses.  The
//! transformer tests and the verification harness run every entry through
//! the rewriting pipeline, so together the proofs exercise every rule.

use super::{
    app, case, dne, efq, fst, gen, hyp, inl, inr, inst, lam, pair, snd, unpack, wit, ProofTerm,
};
use crate::syntax::{parse, parse_sequent, Formula, LogicId, Sequent, Term};

/// A named sequent with a derivation and the weakest of the three logics
/// that accepts the derivation.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub logic: LogicId,
    pub sequent: Sequent,
    pub proof: ProofTerm,
}

fn f(text: &str) -> Formula {
    parse(text).expect("corpus formulas parse")
}

fn entry(name: &'static str, logic: LogicId, sequent: &str, proof: ProofTerm) -> CorpusEntry {
    CorpusEntry {
        name,
        logic,
        sequent: parse_sequent(sequent).expect("corpus sequents parse"),
        proof,
    }
}

/// All corpus derivations.  Every proof checks under its stated logic (and
/// anything stronger) — see the tests below, which also pin that the stated
/// logic is the weakest one.
pub fn entries() -> Vec<CorpusEntry> {
    vec![
        entry(
            "dne_law",
            LogicId::Cl,
            "|- ~~P -> P",
            lam("h", f("~~P"), dne(hyp("h"))),
        ),
        entry(
            "excluded_middle",
            LogicId::Cl,
            "|- P | ~P",
            dne(lam(
                "k",
                f("~(P | ~P)"),
                app(
                    hyp("k"),
                    inr(
                        f("P"),
                        lam("p", f("P"), app(hyp("k"), inl(hyp("p"), f("~P")))),
                    ),
                ),
            )),
        ),
        entry(
            "peirce",
            LogicId::Cl,
            "|- ((P -> Q) -> P) -> P",
            lam(
                "h",
                f("(P -> Q) -> P"),
                dne(lam(
                    "n",
                    f("~P"),
                    app(
                        hyp("n"),
                        app(
                            hyp("h"),
                            lam("p", f("P"), efq(app(hyp("n"), hyp("p")), f("Q"))),
                        ),
                    ),
                )),
            ),
        ),
        entry(
            "demorgan_conj",
            LogicId::Cl,
            "|- ~(P & Q) -> ~P | ~Q",
            lam(
                "h",
                f("~(P & Q)"),
                dne(lam(
                    "k",
                    f("~(~P | ~Q)"),
                    app(
                        hyp("k"),
                        inl(
                            lam(
                                "p",
                                f("P"),
                                app(
                                    hyp("k"),
                                    inr(
                                        f("~P"),
                                        lam(
                                            "q",
                                            f("Q"),
                                            app(hyp("h"), pair(hyp("p"), hyp("q"))),
                                        ),
                                    ),
                                ),
                            ),
                            f("~Q"),
                        ),
                    ),
                )),
            ),
        ),
        entry(
            "not_forall_exists_not",
            LogicId::Cl,
            "|- ~(forall x. P(x)) -> exists x. ~P(x)",
            lam(
                "h",
                f("~forall x. P(x)"),
                dne(lam(
                    "k",
                    f("~exists x. ~P(x)"),
                    app(
                        hyp("h"),
                        gen(
                            "x",
                            dne(lam(
                                "n",
                                f("~P(x)"),
                                app(
                                    hyp("k"),
                                    wit(Term::var("x"), hyp("n"), f("exists x. ~P(x)")),
                                ),
                            )),
                        ),
                    ),
                )),
            ),
        ),
        entry(
            "exists_not_not_forall",
            LogicId::Ml,
            "|- (exists x. ~P(x)) -> ~forall x. P(x)",
            lam(
                "h",
                f("exists x. ~P(x)"),
                lam(
                    "u",
                    f("forall x. P(x)"),
                    unpack(
                        hyp("h"),
                        "x",
                        "n",
                        app(hyp("n"), inst(hyp("u"), Term::var("x"))),
                    ),
                ),
            ),
        ),
        entry(
            "forall_dn_to_dn_forall",
            LogicId::Cl,
            "|- (forall x. ~~P(x)) -> ~~forall x. P(x)",
            lam(
                "h",
                f("forall x. ~~P(x)"),
                lam(
                    "k",
                    f("~forall x. P(x)"),
                    app(hyp("k"), gen("x", dne(inst(hyp("h"), Term::var("x"))))),
                ),
            ),
        ),
        entry(
            "impl_to_disj",
            LogicId::Cl,
            "|- (P -> Q) -> ~P | Q",
            lam(
                "h",
                f("P -> Q"),
                dne(lam(
                    "k",
                    f("~(~P | Q)"),
                    app(
                        hyp("k"),
                        inl(
                            lam(
                                "p",
                                f("P"),
                                app(hyp("k"), inr(f("~P"), app(hyp("h"), hyp("p")))),
                            ),
                            f("Q"),
                        ),
                    ),
                )),
            ),
        ),
        entry(
            "disj_to_impl",
            LogicId::Il,
            "|- (~P | Q) -> P -> Q",
            lam(
                "h",
                f("~P | Q"),
                lam(
                    "p",
                    f("P"),
                    case(
                        hyp("h"),
                        "n",
                        efq(app(hyp("n"), hyp("p")), f("Q")),
                        "q",
                        hyp("q"),
                    ),
                ),
            ),
        ),
        entry(
            "contraposition",
            LogicId::Ml,
            "|- (P -> Q) -> ~Q -> ~P",
            lam(
                "h",
                f("P -> Q"),
                lam(
                    "n",
                    f("~Q"),
                    lam("p", f("P"), app(hyp("n"), app(hyp("h"), hyp("p")))),
                ),
            ),
        ),
        entry(
            "contraposition_classical",
            LogicId::Cl,
            "|- (~Q -> ~P) -> P -> Q",
            lam(
                "h",
                f("~Q -> ~P"),
                lam(
                    "p",
                    f("P"),
                    dne(lam(
                        "n",
                        f("~Q"),
                        app(app(hyp("h"), hyp("n")), hyp("p")),
                    )),
                ),
            ),
        ),
        entry(
            "linearity",
            LogicId::Cl,
            "|- (P -> Q) | (Q -> P)",
            dne(lam(
                "k",
                f("~((P -> Q) | (Q -> P))"),
                app(
                    hyp("k"),
                    inl(
                        lam(
                            "p",
                            f("P"),
                            dne(lam(
                                "nq",
                                f("~Q"),
                                app(
                                    hyp("k"),
                                    inr(
                                        f("P -> Q"),
                                        lam(
                                            "q",
                                            f("Q"),
                                            efq(app(hyp("nq"), hyp("q")), f("P")),
                                        ),
                                    ),
                                ),
                            )),
                        ),
                        f("Q -> P"),
                    ),
                ),
            )),
        ),
        entry(
            "non_contradiction",
            LogicId::Ml,
            "|- ~(P & ~P)",
            lam("h", f("P & ~P"), app(snd(hyp("h")), fst(hyp("h")))),
        ),
        entry(
            "dn_intro",
            LogicId::Ml,
            "|- P -> ~~P",
            lam(
                "p",
                f("P"),
                lam("k", f("~P"), app(hyp("k"), hyp("p"))),
            ),
        ),
        entry(
            "curry",
            LogicId::Ml,
            "|- (P & Q -> R) -> P -> Q -> R",
            lam(
                "h",
                f("P & Q -> R"),
                lam(
                    "p",
                    f("P"),
                    lam("q", f("Q"), app(hyp("h"), pair(hyp("p"), hyp("q")))),
                ),
            ),
        ),
        entry(
            "uncurry",
            LogicId::Ml,
            "|- (P -> Q -> R) -> P & Q -> R",
            lam(
                "h",
                f("P -> Q -> R"),
                lam(
                    "c",
                    f("P & Q"),
                    app(app(hyp("h"), fst(hyp("c"))), snd(hyp("c"))),
                ),
            ),
        ),
        entry(
            "forall_conj_distrib",
            LogicId::Ml,
            "|- (forall x. (P(x) & Q(x))) -> (forall x. P(x)) & (forall x. Q(x))",
            lam(
                "h",
                f("forall x. (P(x) & Q(x))"),
                pair(
                    gen("x", fst(inst(hyp("h"), Term::var("x")))),
                    gen("x", snd(inst(hyp("h"), Term::var("x")))),
                ),
            ),
        ),
        entry(
            "neg_impl_conj",
            LogicId::Cl,
            "|- ~(P -> Q) -> P & ~Q",
            lam(
                "h",
                f("~(P -> Q)"),
                pair(
                    dne(lam(
                        "np",
                        f("~P"),
                        app(
                            hyp("h"),
                            lam("p", f("P"), efq(app(hyp("np"), hyp("p")), f("Q"))),
                        ),
                    )),
                    lam(
                        "q",
                        f("Q"),
                        app(hyp("h"), lam("p", f("P"), hyp("q"))),
                    ),
                ),
            ),
        ),
        entry(
            "efq_law",
            LogicId::Il,
            "|- false -> Q",
            lam("b", f("false"), efq(hyp("b"), f("Q"))),
        ),
        entry(
            "glivenko_em",
            LogicId::Ml,
            "|- ~~(P | ~P)",
            lam(
                "k",
                f("~(P | ~P)"),
                app(
                    hyp("k"),
                    inr(
                        f("P"),
                        lam("p", f("P"), app(hyp("k"), inl(hyp("p"), f("~P")))),
                    ),
                ),
            ),
        ),
        entry(
            "hyp_modus_tollens",
            LogicId::Ml,
            "h1: P -> Q, h2: ~Q |- ~P",
            lam("p", f("P"), app(hyp("h2"), app(hyp("h1"), hyp("p")))),
        ),
        entry(
            "hyp_dne_use",
            LogicId::Cl,
            "h: ~~(P & Q) |- P",
            fst(dne(hyp("h"))),
        ),
        entry(
            "hyp_case_hyps",
            LogicId::Ml,
            "h: P | Q, k: P -> R, l: Q -> R |- R",
            case(
                hyp("h"),
                "a",
                app(hyp("k"), hyp("a")),
                "b",
                app(hyp("l"), hyp("b")),
            ),
        ),
        entry(
            "hyp_exists_fo",
            LogicId::Ml,
            "h: exists x. (P(x) & Q(x)) |- exists x. P(x)",
            unpack(
                hyp("h"),
                "x",
                "u",
                wit(Term::var("x"), fst(hyp("u")), f("exists x. P(x)")),
            ),
        ),
        entry(
            "drinker",
            LogicId::Cl,
            "|- exists x. (P(x) -> forall y. P(y))",
            dne(lam(
                "k",
                f("~exists x. (P(x) -> forall y. P(y))"),
                app(
                    hyp("k"),
                    wit(
                        Term::app("c", vec![]),
                        lam(
                            "p",
                            f("P(c())"),
                            gen(
                                "y",
                                dne(lam(
                                    "n",
                                    f("~P(y)"),
                                    app(
                                        hyp("k"),
                                        wit(
                                            Term::var("y"),
                                            lam(
                                                "p2",
                                                f("P(y)"),
                                                efq(
                                                    app(hyp("n"), hyp("p2")),
                                                    f("forall y. P(y)"),
                                                ),
                                            ),
                                            f("exists x. (P(x) -> forall y. P(y))"),
                                        ),
                                    ),
                                )),
                            ),
                        ),
                        f("exists x. (P(x) -> forall y. P(y))"),
                    ),
                ),
            )),
        ),
    ]
}

/// Look up an entry by name.
pub fn find(name: &str) -> Option<CorpusEntry> {
    entries().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::{
        check_proof, kuroda_transform, soundness_pipeline, CheckResult,
    };
    use crate::translate::{self, LeivantId, TranslationId};
    use std::collections::BTreeSet;

    fn assert_checks(proof: &ProofTerm, sequent: &Sequent, logic: LogicId) {
        match check_proof(proof, sequent, logic) {
            CheckResult::Accepted => {}
            CheckResult::Rejected(r) => {
                panic!("proof of `{sequent}` failed to check under {logic}: {r}")
            }
        }
    }

    #[test]
    fn entries_have_unique_names() {
        let mut seen = BTreeSet::new();
        for e in entries() {
            assert!(seen.insert(e.name), "duplicate corpus name {}", e.name);
        }
        assert!(seen.len() >= 20);
        assert!(find("drinker").is_some());
        assert!(find("no_such_entry").is_none());
    }

    #[test]
    fn every_entry_checks_in_its_stated_logic_and_upward() {
        for e in entries() {
            let upward: &[LogicId] = match e.logic {
                LogicId::Ml => &[LogicId::Ml, LogicId::Il, LogicId::Cl],
                LogicId::Il => &[LogicId::Il, LogicId::Cl],
                LogicId::Cl => &[LogicId::Cl],
            };
            for &logic in upward {
                assert_checks(&e.proof, &e.sequent, logic);
            }
        }
    }

    #[test]
    fn the_stated_logic_is_the_weakest_one() {
        for e in entries() {
            let below = match e.logic {
                LogicId::Ml => continue,
                LogicId::Il => LogicId::Ml,
                LogicId::Cl => LogicId::Il,
            };
            assert!(
                !check_proof(&e.proof, &e.sequent, below).is_accepted(),
                "{} should not check under {below}",
                e.name
            );
        }
    }

    #[test]
    fn the_corpus_exercises_every_rule() {
        fn note(term: &ProofTerm, out: &mut BTreeSet<&'static str>) {
            let name = match term {
                ProofTerm::Hyp(..) => "hyp",
                ProofTerm::Abst(..) => "lam",
                ProofTerm::Apply(..) => "app",
                ProofTerm::Pair(..) => "pair",
                ProofTerm::ProjL(..) => "fst",
                ProofTerm::ProjR(..) => "snd",
                ProofTerm::InjL(..) => "inl",
                ProofTerm::InjR(..) => "inr",
                ProofTerm::Case(..) => "case",
                ProofTerm::Gen(..) => "gen",
                ProofTerm::Inst(..) => "inst",
                ProofTerm::Witness(..) => "wit",
                ProofTerm::Unpack(..) => "unpack",
                ProofTerm::ExFalso(..) => "efq",
                ProofTerm::DoubleNegElim(..) => "dne",
            };
            out.insert(name);
            match term {
                ProofTerm::Hyp(_) => {}
                ProofTerm::Abst(_, _, t)
                | ProofTerm::ProjL(t)
                | ProofTerm::ProjR(t)
                | ProofTerm::InjL(t, _)
                | ProofTerm::InjR(_, t)
                | ProofTerm::Gen(_, t)
                | ProofTerm::Inst(t, _)
                | ProofTerm::Witness(_, t, _)
                | ProofTerm::ExFalso(t, _)
                | ProofTerm::DoubleNegElim(t) => note(t, out),
                ProofTerm::Apply(a, b) | ProofTerm::Pair(a, b) => {
                    note(a, out);
                    note(b, out);
                }
                ProofTerm::Case(s, _, a, _, b) => {
                    note(s, out);
                    note(a, out);
                    note(b, out);
                }
                ProofTerm::Unpack(s, _, _, b) => {
                    note(s, out);
                    note(b, out);
                }
            }
        }
        let mut seen = BTreeSet::new();
        for e in entries() {
            note(&e.proof, &mut seen);
        }
        assert_eq!(seen.len(), 15, "missing rules: {seen:?}");
    }

    #[test]
    fn kuroda_transform_covers_the_corpus() {
        for e in entries() {
            let (translated, term) = kuroda_transform(&e.proof, &e.sequent).unwrap();
            assert_eq!(
                translated.conclusion,
                translate::translate(&TranslationId::K, &e.sequent.conclusion),
                "{}",
                e.name
            );
            assert_checks(&term, &translated, LogicId::Il);
        }
    }

    #[test]
    fn pipeline_covers_the_corpus_for_every_variant() {
        for e in entries() {
            for i in LeivantId::ALL {
                let (translated, term) = soundness_pipeline(i, &e.proof, &e.sequent).unwrap();
                let ki = i.kuroda_id();
                assert_eq!(
                    translated.conclusion,
                    translate::translate(&ki, &e.sequent.conclusion),
                    "{} under {i}",
                    e.name
                );
                for ((_, th), (_, sh)) in translated.hypotheses.iter().zip(&e.sequent.hypotheses)
                {
                    assert_eq!(*th, translate::translate(&ki, sh), "{} under {i}", e.name);
                }
                assert_checks(&term, &translated, LogicId::Ml);
            }
        }
    }
}
