//! Decision procedures for the propositional fragments of minimal,
//! intuitionistic, and classical logic, plus a finite Kripke countermodel
//! search used as an independent oracle.
//!
//! One contraction-free sequent engine serves both minimal and
//! intuitionistic logic (see [`g4`](self); the bottom rules are the entire
//! difference), classical logic is decided by truth tables, and
//! [`countermodel`] exhaustively enumerates small rooted Kripke models.

mod classical;
mod g4;
mod kripke;

pub use classical::classical_valid;
pub use g4::Transcript;
pub use kripke::{countermodel, eval_model, KripkeModel};

use crate::syntax::{render, Formula, LogicId, RenderStyle, Sequent};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

/// Atom name under which a Kripke valuation records the worlds forcing `⊥`.
pub const BOTTOM_MARKER: &str = "false";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Provable,
    Unprovable,
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Decision::Provable => "provable",
            Decision::Unprovable => "unprovable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProverError {
    #[error("the propositional decision procedures require quantifier-free input: `{formula}`")]
    QuantifierPresent { formula: String },
    #[error("countermodel search supports logics ml and il, not cl")]
    UnsupportedLogic,
    #[error("max_worlds must be at least 1")]
    InvalidMaxWorlds,
    #[error("world `{0}` does not occur in the model")]
    UnknownWorld(String),
    #[error("truth-table validity is limited to {limit} distinct atoms; the formula has {found}")]
    TooManyAtoms { limit: usize, found: usize },
}

/// Formula compiled to atom indices, shared by the truth-table and Kripke
/// evaluators.  `Bot` stands for a `⊥` that is constantly false; when `⊥` is
/// treated as an atom it is compiled to `Var` instead.
pub(crate) enum Compiled {
    Bot,
    Var(usize),
    And(Box<Compiled>, Box<Compiled>),
    Or(Box<Compiled>, Box<Compiled>),
    Imp(Box<Compiled>, Box<Compiled>),
}

/// Rendered names of the atoms occurring in a quantifier-free formula
/// (ground arguments included, e.g. `P(c)`).
pub(crate) fn collect_atom_names(f: &Formula) -> BTreeSet<String> {
    fn go(f: &Formula, out: &mut BTreeSet<String>) {
        match f {
            Formula::Bottom => {}
            Formula::Atom(..) => {
                out.insert(render(f, RenderStyle::Ascii));
            }
            Formula::Conj(a, b) | Formula::Disj(a, b) | Formula::Impl(a, b) => {
                go(a, out);
                go(b, out);
            }
            Formula::Forall(_, a) | Formula::Exists(_, a) => go(a, out),
        }
    }
    let mut out = BTreeSet::new();
    go(f, &mut out);
    out
}

pub(crate) fn compile(
    f: &Formula,
    index: &HashMap<String, usize>,
    bottom: Option<usize>,
) -> Compiled {
    match f {
        Formula::Bottom => bottom.map_or(Compiled::Bot, Compiled::Var),
        Formula::Atom(..) => Compiled::Var(index[&render(f, RenderStyle::Ascii)]),
        Formula::Conj(a, b) => Compiled::And(
            Box::new(compile(a, index, bottom)),
            Box::new(compile(b, index, bottom)),
        ),
        Formula::Disj(a, b) => Compiled::Or(
            Box::new(compile(a, index, bottom)),
            Box::new(compile(b, index, bottom)),
        ),
        Formula::Impl(a, b) => Compiled::Imp(
            Box::new(compile(a, index, bottom)),
            Box::new(compile(b, index, bottom)),
        ),
        Formula::Forall(..) | Formula::Exists(..) => {
            unreachable!("compile requires quantifier-free input")
        }
    }
}

/// Worlds forcing the compiled formula, as a bitmask.  `masks[i]` is the
/// (upward-closed) forcing set of atom `i`; `up[w]` is the set of worlds
/// above `w`, including `w` itself.
pub(crate) fn force_mask(c: &Compiled, masks: &[u32], up: &[u32]) -> u32 {
    match c {
        Compiled::Bot => 0,
        Compiled::Var(i) => masks[*i],
        Compiled::And(a, b) => force_mask(a, masks, up) & force_mask(b, masks, up),
        Compiled::Or(a, b) => force_mask(a, masks, up) | force_mask(b, masks, up),
        Compiled::Imp(a, b) => {
            let ma = force_mask(a, masks, up);
            let mb = force_mask(b, masks, up);
            let mut out = 0;
            for (w, &above) in up.iter().enumerate() {
                if above & ma & !mb == 0 {
                    out |= 1 << w;
                }
            }
            out
        }
    }
}

/// Decide a quantifier-free sequent in the given logic.
pub fn decide(logic: LogicId, sequent: &Sequent) -> Result<Decision, ProverError> {
    decide_inner(logic, sequent, None)
}

/// Like [`decide`], recording the rules applied during sequent search in the
/// transcript.  Classical truth tables leave it empty; a constructive query
/// settled by a classical countermodel records that single step.
pub fn decide_with_transcript(
    logic: LogicId,
    sequent: &Sequent,
    transcript: &mut Transcript,
) -> Result<Decision, ProverError> {
    decide_inner(logic, sequent, Some(transcript))
}

fn decide_inner(
    logic: LogicId,
    sequent: &Sequent,
    transcript: Option<&mut Transcript>,
) -> Result<Decision, ProverError> {
    if !sequent.is_quantifier_free() {
        return Err(ProverError::QuantifierPresent { formula: sequent.to_string() });
    }
    match logic {
        LogicId::Cl => classical::decide_cl(sequent),
        LogicId::Il | LogicId::Ml => {
            let mut transcript = transcript;
            // Both constructive logics are subsystems of classical logic, so
            // a truth-table refutation settles the question without sequent
            // search.  Too many atoms for the table: fall through.
            match classical::decide_cl(sequent) {
                Ok(Decision::Unprovable) => {
                    if let Some(t) = transcript.as_deref_mut() {
                        t.steps.push(format!("classical countermodel: {sequent}"));
                    }
                    return Ok(Decision::Unprovable);
                }
                Ok(Decision::Provable) => {}
                Err(ProverError::TooManyAtoms { .. }) => {}
                Err(e) => return Err(e),
            }
            let il_mode = logic == LogicId::Il;
            let provable = g4::Search::new(il_mode, transcript).prove_sequent(sequent);
            Ok(if provable { Decision::Provable } else { Decision::Unprovable })
        }
    }
}

/// Decide `⊢ formula`.
pub fn decide_formula(logic: LogicId, formula: &Formula) -> Result<Decision, ProverError> {
    decide(logic, &Sequent::entails(formula.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::*;
    use crate::translate::{default_witness, shoenfield_translate};
    use proptest::prelude::*;
    use Decision::*;

    fn d(logic: LogicId, input: &str) -> Decision {
        decide_formula(logic, &parse(input).unwrap()).unwrap()
    }

    #[test]
    fn minimal_logic_lemma_instances() {
        assert_eq!(d(LogicId::Ml, "P -> ~~P"), Provable);
        assert_eq!(d(LogicId::Ml, "~~(P -> ~Q) -> (P -> ~Q)"), Provable);
        assert_eq!(d(LogicId::Ml, "P | ~~Q -> ~~(P | Q)"), Provable);
    }

    #[test]
    fn explosion_separates_minimal_from_intuitionistic() {
        assert_eq!(d(LogicId::Ml, "false -> P"), Unprovable);
        assert_eq!(d(LogicId::Il, "false -> P"), Provable);
    }

    #[test]
    fn excluded_middle_separates_intuitionistic_from_classical() {
        assert_eq!(d(LogicId::Cl, "P | ~P"), Provable);
        assert_eq!(d(LogicId::Il, "P | ~P"), Unprovable);
        assert_eq!(d(LogicId::Il, "~~(P | ~P)"), Provable);
    }

    #[test]
    fn double_negation_elimination_is_classical_only() {
        assert_eq!(d(LogicId::Ml, "~~P -> P"), Unprovable);
        assert_eq!(d(LogicId::Il, "~~P -> P"), Unprovable);
        assert_eq!(d(LogicId::Cl, "~~P -> P"), Provable);
        // Triple negation collapses already in minimal logic.
        assert_eq!(d(LogicId::Ml, "~~~P -> ~P"), Provable);
        assert_eq!(d(LogicId::Ml, "~P -> ~~~P"), Provable);
    }

    #[test]
    fn hypotheses_are_used() {
        let seq = Sequent::new(
            vec![
                ("h".into(), parse("~~P -> P").unwrap()),
                ("k".into(), parse("~~P").unwrap()),
            ],
            parse("P").unwrap(),
        );
        assert_eq!(decide(LogicId::Ml, &seq).unwrap(), Provable);
        let seq = Sequent::new(vec![("h".into(), parse("false").unwrap())], parse("P").unwrap());
        assert_eq!(decide(LogicId::Ml, &seq).unwrap(), Unprovable);
        assert_eq!(decide(LogicId::Il, &seq).unwrap(), Provable);
    }

    #[test]
    fn classical_validity_examples() {
        let valid = |s: &str| classical_valid(&parse(s).unwrap()).unwrap();
        assert!(valid("P | ~P"));
        assert!(valid("false -> P"));
        assert!(valid("P <-> ~~(P | false)"));
        assert!(!valid("P -> Q"));
    }

    #[test]
    fn quantifiers_are_rejected() {
        let f = parse("forall x. P(x)").unwrap();
        assert!(matches!(
            decide_formula(LogicId::Ml, &f),
            Err(ProverError::QuantifierPresent { .. })
        ));
        assert!(matches!(classical_valid(&f), Err(ProverError::QuantifierPresent { .. })));
        assert!(matches!(
            countermodel(LogicId::Ml, &f, 2),
            Err(ProverError::QuantifierPresent { .. })
        ));
    }

    #[test]
    fn countermodel_for_double_negation_elimination_in_ml() {
        // In minimal-logic mode a single world forcing `false` already
        // refutes ~~P -> P: with ⊥ forced, ~~P holds while P does not.
        let f = parse("~~P -> P").unwrap();
        let m = countermodel(LogicId::Ml, &f, 2).unwrap().expect("refutable");
        m.validate().unwrap();
        assert_eq!(m.worlds, vec!["w0"]);
        assert_eq!(m.order, vec![("w0".to_string(), "w0".to_string())]);
        assert_eq!(
            m.valuation["w0"],
            std::iter::once(BOTTOM_MARKER.to_string()).collect::<std::collections::BTreeSet<_>>()
        );
        assert!(!eval_model(&m, "w0", &f).unwrap());
        assert_eq!(d(LogicId::Ml, "~~P -> P"), Unprovable);
    }

    #[test]
    fn countermodel_for_double_negation_elimination_in_il() {
        // Intuitionistically the minimal refutation is the two-world chain
        // with P forced only at the top.
        let f = parse("~~P -> P").unwrap();
        let m = countermodel(LogicId::Il, &f, 2).unwrap().expect("refutable");
        m.validate().unwrap();
        assert_eq!(m.worlds, vec!["w0", "w1"]);
        assert_eq!(
            m.order,
            vec![
                ("w0".to_string(), "w0".to_string()),
                ("w0".to_string(), "w1".to_string()),
                ("w1".to_string(), "w1".to_string()),
            ]
        );
        assert!(m.valuation["w0"].is_empty());
        assert_eq!(m.valuation["w1"], std::iter::once("P".to_string()).collect());
        assert!(!eval_model(&m, "w0", &f).unwrap());
        assert!(eval_model(&m, "w1", &f).unwrap());
    }

    #[test]
    fn countermodel_for_explosion_in_ml() {
        let f = parse("false -> P").unwrap();
        let m = countermodel(LogicId::Ml, &f, 1).unwrap().expect("refutable");
        m.validate().unwrap();
        assert_eq!(m.worlds.len(), 1);
        assert!(m.valuation["w0"].contains(BOTTOM_MARKER));
        assert!(!m.valuation["w0"].contains("P"));
        assert!(!eval_model(&m, "w0", &f).unwrap());
    }

    #[test]
    fn tautology_has_no_countermodel() {
        let f = parse("P -> P").unwrap();
        assert_eq!(countermodel(LogicId::Ml, &f, 4).unwrap(), None);
        assert_eq!(countermodel(LogicId::Il, &f, 4).unwrap(), None);
    }

    #[test]
    fn countermodel_argument_errors() {
        let f = parse("P").unwrap();
        assert_eq!(countermodel(LogicId::Cl, &f, 2), Err(ProverError::UnsupportedLogic));
        assert_eq!(countermodel(LogicId::Ml, &f, 0), Err(ProverError::InvalidMaxWorlds));
    }

    #[test]
    fn eval_model_examples() {
        let one = countermodel(LogicId::Il, &parse("P & Q").unwrap(), 1).unwrap().unwrap();
        // The first refutation has an empty valuation; force P by hand to
        // exercise a world where one conjunct holds and the other fails.
        let mut m = one;
        m.valuation.get_mut("w0").unwrap().insert("P".into());
        m.validate().unwrap();
        assert!(!eval_model(&m, "w0", &parse("P & Q").unwrap()).unwrap());
        assert!(eval_model(&m, "w0", &parse("P").unwrap()).unwrap());
        assert!(eval_model(&m, "w0", &parse("P -> P").unwrap()).unwrap());
        assert!(matches!(
            eval_model(&m, "w9", &parse("P").unwrap()),
            Err(ProverError::UnknownWorld(_))
        ));

        let two = countermodel(LogicId::Il, &parse("~~P -> P").unwrap(), 2).unwrap().unwrap();
        assert!(eval_model(&two, "w0", &parse("~~P").unwrap()).unwrap());
        assert!(!eval_model(&two, "w0", &parse("P").unwrap()).unwrap());
    }

    #[test]
    fn transcript_records_rules() {
        let mut t = Transcript::default();
        let seq = Sequent::entails(parse("P -> ~~P").unwrap());
        assert_eq!(decide_with_transcript(LogicId::Ml, &seq, &mut t).unwrap(), Provable);
        assert!(!t.steps.is_empty());
        assert!(t.steps[0].contains("R->"), "{}", t.steps[0]);
        assert!(t.to_string().contains("axiom"));
    }

    proptest! {
        #[test]
        fn glivenko(f in crate::testutil::propositional_strategy()) {
            let cl = decide_formula(LogicId::Cl, &f).unwrap();
            let il = decide_formula(LogicId::Il, &dneg(f)).unwrap();
            prop_assert_eq!(cl, il);
        }

        #[test]
        fn minimal_is_intuitionistic_over_a_fresh_atom(f in crate::testutil::propositional_strategy()) {
            let ml = decide_formula(LogicId::Ml, &f).unwrap();
            let il = decide_formula(LogicId::Il, &replace_bottom(&f, &atom("p0"))).unwrap();
            prop_assert_eq!(ml, il);
        }

        #[test]
        fn provability_is_monotone_across_logics(f in crate::testutil::propositional_strategy()) {
            let ml = decide_formula(LogicId::Ml, &f).unwrap();
            let il = decide_formula(LogicId::Il, &f).unwrap();
            let cl = decide_formula(LogicId::Cl, &f).unwrap();
            prop_assert!(ml != Provable || il == Provable);
            prop_assert!(il != Provable || cl == Provable);
        }

        #[test]
        fn classical_decision_agrees_with_truth_tables(f in crate::testutil::propositional_strategy()) {
            let by_decide = decide_formula(LogicId::Cl, &f).unwrap() == Provable;
            prop_assert_eq!(by_decide, classical_valid(&f).unwrap());
        }

        #[test]
        fn shoenfield_translation_is_classically_transparent(f in crate::testutil::propositional_strategy()) {
            let t5 = shoenfield_translate(&f, &default_witness()).unwrap();
            prop_assert!(classical_valid(&iff(f, t5)).unwrap());
        }

        #[test]
        fn countermodels_are_consistent_with_the_prover(f in crate::testutil::propositional_strategy()) {
            for logic in [LogicId::Ml, LogicId::Il] {
                let decision = decide_formula(logic, &f).unwrap();
                match countermodel(logic, &f, 3).unwrap() {
                    Some(m) => {
                        m.validate().unwrap();
                        prop_assert!(!eval_model(&m, &m.worlds[0], &f).unwrap());
                        prop_assert_eq!(decision, Unprovable);
                    }
                    None => {
                        // Within three worlds the bound can miss refutations,
                        // so NoneFound only has to agree with provable inputs.
                        if decision == Provable {
                            prop_assert_eq!(countermodel(logic, &f, 4).unwrap(), None);
                        }
                    }
                }
            }
        }
    }
}
