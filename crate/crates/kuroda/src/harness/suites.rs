//! The suite bodies: one function per suite, each pushing a [`Failure`] for
//! every sample (and variant) on which its claim does not hold.
//!
//! Failures are appended in sample order by construction; the caller sorts
//! them again by index as a documented guarantee before building the report.

use super::generate::{random_formula, GeneratorConfig};
use super::{replay_line, Failure, HarnessError, SuiteId};
use crate::proof::{
    check_proof, corpus, soundness_pipeline, synthesize_absorption, synthesize_equiv_k678,
    synthesize_equiv_leivant, synthesize_equiv_shoenfield, CheckResult, NegativeVariant,
    ProofTerm,
};
use crate::prover::{classical_valid, countermodel, decide_formula, eval_model, Decision};
use crate::syntax::{
    atom, bot, conj, disj, dneg, imp, neg, render, replace_bottom, Formula, LogicId, RenderStyle,
    Sequent,
};
use crate::translate::{default_witness, leivant_translate, LeivantId, TranslationId, Translator};

fn show(f: &Formula) -> String {
    render(f, RenderStyle::Ascii)
}

fn verdict(d: Decision) -> &'static str {
    match d {
        Decision::Provable => "provable",
        Decision::Unprovable => "unprovable",
    }
}

fn iff(a: Formula, b: Formula) -> Formula {
    conj(imp(a.clone(), b.clone()), imp(b, a))
}

/// `decide(cl, A) == decide(ml, i(A))` for each selected variant `i`.
pub(super) fn soundness(
    tr: &Translator,
    config: &GeneratorConfig,
    variants: &[TranslationId],
    failures: &mut Vec<Failure>,
) -> Result<(), HarnessError> {
    for index in 0..config.samples {
        let sample = random_formula(config, index)?;
        let classical = decide_formula(LogicId::Cl, &sample)?;
        for id in variants {
            let minimal = decide_formula(LogicId::Ml, &tr.translate(id, &sample))?;
            if minimal != classical {
                failures.push(Failure {
                    index,
                    formula: show(&sample),
                    expected: format!(
                        "decide(ml, {id}(A)) = {}, matching decide(cl, A)",
                        verdict(classical)
                    ),
                    actual: format!("decide(ml, {id}(A)) = {}", verdict(minimal)),
                    replay: replay_line(
                        SuiteId::SoundnessDerivability,
                        config,
                        Some(id),
                        index + 1,
                    ),
                });
            }
        }
    }
    Ok(())
}

/// `A <-> i(A)` is classically valid for each selected translation `i`.
pub(super) fn characterisation(
    tr: &Translator,
    config: &GeneratorConfig,
    variants: &[TranslationId],
    failures: &mut Vec<Failure>,
) -> Result<(), HarnessError> {
    for index in 0..config.samples {
        let sample = random_formula(config, index)?;
        for id in variants {
            let equivalent = iff(sample.clone(), tr.translate(id, &sample));
            if !classical_valid(&equivalent)? {
                failures.push(Failure {
                    index,
                    formula: show(&sample),
                    expected: format!("A <-> {id}(A) is classically valid"),
                    actual: "a falsifying classical assignment exists".into(),
                    replay: replay_line(SuiteId::Characterisation, config, Some(id), index + 1),
                });
            }
        }
    }
    Ok(())
}

/// Each auxiliary translation applied after `K` lands, up to provable
/// minimal-logic equivalence, on the matching variant: `tᵢ(K A) <-> kᵢ(A)`.
pub(super) fn leivant_equivalence(
    tr: &Translator,
    config: &GeneratorConfig,
    failures: &mut Vec<Failure>,
) -> Result<(), HarnessError> {
    for index in 0..config.samples {
        let sample = random_formula(config, index)?;
        for i in LeivantId::ALL {
            let via_k = tr.leivant_translate(i, &tr.translate(&TranslationId::K, &sample));
            let direct = tr.translate(&i.kuroda_id(), &sample);
            let decision = decide_formula(LogicId::Ml, &iff(via_k, direct))?;
            if decision != Decision::Provable {
                failures.push(Failure {
                    index,
                    formula: show(&sample),
                    expected: format!(
                        "decide(ml, {i}(K A) <-> {}(A)) = provable",
                        i.kuroda_id()
                    ),
                    actual: format!(
                        "decide(ml, {i}(K A) <-> {}(A)) = unprovable",
                        i.kuroda_id()
                    ),
                    replay: replay_line(SuiteId::LeivantEquivalence, config, None, index + 1),
                });
            }
        }
    }
    Ok(())
}

/// Translating the classical-fragment image of `A` by `K` is equivalent,
/// provably in minimal logic, to translating `A` by `k5` directly.
pub(super) fn shoenfield_equivalence(
    tr: &Translator,
    config: &GeneratorConfig,
    failures: &mut Vec<Failure>,
) -> Result<(), HarnessError> {
    for index in 0..config.samples {
        let sample = random_formula(config, index)?;
        let classical_fragment = tr.shoenfield_translate(&sample, &default_witness())?;
        let via_k = tr.translate(&TranslationId::K, &classical_fragment);
        let direct = tr.translate(&TranslationId::K5, &sample);
        let decision = decide_formula(LogicId::Ml, &iff(via_k, direct))?;
        if decision != Decision::Provable {
            failures.push(Failure {
                index,
                formula: show(&sample),
                expected: "decide(ml, K(t5 A) <-> k5(A)) = provable".into(),
                actual: "decide(ml, K(t5 A) <-> k5(A)) = unprovable".into(),
                replay: replay_line(SuiteId::ShoenfieldEquivalence, config, None, index + 1),
            });
        }
    }
    Ok(())
}

/// The three negative implication clauses are interchangeable: the inner
/// `k6` translation is provably equivalent in minimal logic to the inner
/// `k7` and `k8` translations.
pub(super) fn k678_equivalence(
    tr: &Translator,
    config: &GeneratorConfig,
    failures: &mut Vec<Failure>,
) -> Result<(), HarnessError> {
    for index in 0..config.samples {
        let sample = random_formula(config, index)?;
        let base = tr.inner_translate(&TranslationId::K6, &sample);
        for id in [TranslationId::K7, TranslationId::K8] {
            let other = tr.inner_translate(&id, &sample);
            let decision = decide_formula(LogicId::Ml, &iff(base.clone(), other))?;
            if decision != Decision::Provable {
                failures.push(Failure {
                    index,
                    formula: show(&sample),
                    expected: format!("decide(ml, k6 inner(A) <-> {id} inner(A)) = provable"),
                    actual: format!("decide(ml, k6 inner(A) <-> {id} inner(A)) = unprovable"),
                    replay: replay_line(SuiteId::K678Equivalence, config, Some(&id), index + 1),
                });
            }
        }
    }
    Ok(())
}

/// The three minimal-logic lemmas behind the `k6` implication clause hold
/// for arbitrary instances: `D -> ~~D`, `~~(D -> ~E) -> (D -> ~E)`, and
/// `D | ~~E -> ~~(D | E)`.  Each sample index draws an independent `D`, `E`
/// pair (streams `2·index` and `2·index + 1`).
pub(super) fn k6_lemmas(
    config: &GeneratorConfig,
    failures: &mut Vec<Failure>,
) -> Result<(), HarnessError> {
    for index in 0..config.samples {
        let d = random_formula(config, 2 * index)?;
        let e = random_formula(config, 2 * index + 1)?;
        let lemmas = [
            imp(d.clone(), dneg(d.clone())),
            imp(
                dneg(imp(d.clone(), neg(e.clone()))),
                imp(d.clone(), neg(e.clone())),
            ),
            imp(disj(d.clone(), dneg(e.clone())), dneg(disj(d, e))),
        ];
        for lemma in lemmas {
            if decide_formula(LogicId::Ml, &lemma)? != Decision::Provable {
                failures.push(Failure {
                    index,
                    formula: show(&lemma),
                    expected: "provable in ml".into(),
                    actual: "unprovable in ml".into(),
                    replay: replay_line(SuiteId::K6Lemmas, config, None, index + 1),
                });
            }
        }
    }
    Ok(())
}

fn expect_checked(
    config: &GeneratorConfig,
    index: usize,
    sample: &Formula,
    claim: &str,
    term: &ProofTerm,
    statement: &Formula,
    failures: &mut Vec<Failure>,
) {
    let sequent = Sequent::entails(statement.clone());
    if let CheckResult::Rejected(rejection) = check_proof(term, &sequent, LogicId::Ml) {
        failures.push(Failure {
            index,
            formula: show(sample),
            expected: format!("{claim} checks in ml"),
            actual: format!("rejected: {rejection}"),
            replay: replay_line(SuiteId::Pipeline, config, None, index + 1),
        });
    }
}

/// Proof-level checks: every curated classical proof survives the full
/// pipeline into each auxiliary translation (fixed prologue, indexed by
/// corpus position and named in the formula field), and the synthesized
/// equivalence and absorption proofs for random formulas — quantifiers
/// allowed — all check in minimal logic.
pub(super) fn pipeline(
    config: &GeneratorConfig,
    failures: &mut Vec<Failure>,
) -> Result<(), HarnessError> {
    for (position, entry) in corpus::entries().iter().enumerate() {
        for i in LeivantId::ALL {
            let label = format!("corpus entry {}: {}", entry.name, entry.sequent);
            match soundness_pipeline(i, &entry.proof, &entry.sequent) {
                Err(error) => failures.push(Failure {
                    index: position,
                    formula: label,
                    expected: format!("pipeline({i}) produces a minimal-logic proof"),
                    actual: error.to_string(),
                    replay: replay_line(SuiteId::Pipeline, config, None, 0),
                }),
                Ok((sequent, term)) => {
                    if let CheckResult::Rejected(rejection) =
                        check_proof(&term, &sequent, LogicId::Ml)
                    {
                        failures.push(Failure {
                            index: position,
                            formula: label,
                            expected: format!("pipeline({i}) output checks in ml"),
                            actual: format!("rejected: {rejection}"),
                            replay: replay_line(SuiteId::Pipeline, config, None, 0),
                        });
                    }
                }
            }
        }
    }
    for index in 0..config.samples {
        let sample = random_formula(config, index)?;
        for i in LeivantId::ALL {
            let equivalence = synthesize_equiv_leivant(i, &sample);
            expect_checked(
                config,
                index,
                &sample,
                &format!("synthesized {i}(K A) <-> {}(A) equivalence", i.kuroda_id()),
                &equivalence.proof(),
                &equivalence.statement(),
                failures,
            );
            let absorption = synthesize_absorption(i, &sample);
            let goal = imp(bot(), leivant_translate(i, &sample));
            expect_checked(
                config,
                index,
                &sample,
                &format!("synthesized false -> {i}(A) absorption"),
                &absorption,
                &goal,
                failures,
            );
        }
        for variant in [NegativeVariant::K7, NegativeVariant::K8] {
            let equivalence = synthesize_equiv_k678(variant, &sample);
            expect_checked(
                config,
                index,
                &sample,
                &format!("synthesized k6(A) <-> {variant}(A) equivalence"),
                &equivalence.proof(),
                &equivalence.statement(),
                failures,
            );
        }
        match synthesize_equiv_shoenfield(&sample, &default_witness()) {
            Ok(equivalence) => expect_checked(
                config,
                index,
                &sample,
                "synthesized K(t5 A) <-> k5(A) equivalence",
                &equivalence.proof(),
                &equivalence.statement(),
                failures,
            ),
            Err(error) => failures.push(Failure {
                index,
                formula: show(&sample),
                expected: "the classical-fragment equivalence is synthesizable".into(),
                actual: error.to_string(),
                replay: replay_line(SuiteId::Pipeline, config, None, index + 1),
            }),
        }
    }
    Ok(())
}

/// Worlds tried per countermodel probe.  The bound keeps the suite fast;
/// search failure within it is not evidence of provability, so only found
/// models are judged.
const COUNTERMODEL_BOUND: usize = 4;

/// Cross-checks between the independent decision procedures: Glivenko's
/// bridge between the classical and intuitionistic provers, the reduction of
/// minimal to intuitionistic logic by an inert fresh atom in place of
/// `false`, and the refutation soundness of countermodel search against both
/// constructive provers.
pub(super) fn prover_cross(
    config: &GeneratorConfig,
    failures: &mut Vec<Failure>,
) -> Result<(), HarnessError> {
    let fresh = fresh_atom(config);
    for index in 0..config.samples {
        let sample = random_formula(config, index)?;
        let fail = |expected: String, actual: String, failures: &mut Vec<Failure>| {
            failures.push(Failure {
                index,
                formula: show(&sample),
                expected,
                actual,
                replay: replay_line(SuiteId::ProverCross, config, None, index + 1),
            });
        };

        let classical = decide_formula(LogicId::Cl, &sample)?;
        let doubly_negated = decide_formula(LogicId::Il, &dneg(sample.clone()))?;
        if classical != doubly_negated {
            fail(
                format!("decide(il, ~~A) = {}, matching decide(cl, A)", verdict(classical)),
                format!("decide(il, ~~A) = {}", verdict(doubly_negated)),
                failures,
            );
        }

        let minimal = decide_formula(LogicId::Ml, &sample)?;
        let reduced = decide_formula(LogicId::Il, &replace_bottom(&sample, &fresh))?;
        if minimal != reduced {
            fail(
                format!(
                    "decide(il, A[false := {fresh}]) = {}, matching decide(ml, A)",
                    verdict(minimal)
                ),
                format!("decide(il, A[false := {fresh}]) = {}", verdict(reduced)),
                failures,
            );
        }

        for logic in [LogicId::Ml, LogicId::Il] {
            let decision = decide_formula(logic, &sample)?;
            if let Some(model) = countermodel(logic, &sample, COUNTERMODEL_BOUND)? {
                if let Err(why) = model.validate() {
                    fail(
                        format!("countermodels returned for {logic} are well-formed"),
                        why,
                        failures,
                    );
                } else if eval_model(&model, &model.worlds[0], &sample)? {
                    fail(
                        format!("the root of a {logic} countermodel refutes A"),
                        "the root forces A".into(),
                        failures,
                    );
                } else if decision == Decision::Provable {
                    fail(
                        format!("decide({logic}, A) = provable admits no countermodel"),
                        format!("a {}-world countermodel exists", model.worlds.len()),
                        failures,
                    );
                }
            }
        }
    }
    Ok(())
}

/// The first of `F0`, `F1`, … not in the atom pool, used as the inert
/// replacement for `false` in the minimal-to-intuitionistic reduction.
fn fresh_atom(config: &GeneratorConfig) -> Formula {
    let mut n = 0;
    loop {
        let name = format!("F{n}");
        if !config.atoms.iter().any(|a| *a == name) {
            return atom(name);
        }
        n += 1;
    }
}
