//! Negative translations: the double-negation translation `K`, its variants
//! `K1`–`K8`, and the auxiliary translations `T1`–`T4` and `T5`.
//!
//! `K` maps a formula `A` to `~~(inner A)` where the inner recursion leaves
//! atoms fixed, commutes with `&`, `|`, `->`, `exists`, and inserts `~~`
//! under every `forall`.  The eight variants change exactly one clause each:
//!
//! | variant | changed clause |
//! |---------|----------------|
//! | `K1` | atoms `P := P \| false` |
//! | `K2` | atoms `P := ~~P` |
//! | `K3` | atoms `P := (false -> P) -> P` |
//! | `K4` | `A -> B := A* -> (B* \| false)` |
//! | `K5` | `A -> B := ~A* \| B*` |
//! | `K6` | `A -> B := A* -> ~~B*` |
//! | `K7` | `A -> B := ~B* -> ~A*` |
//! | `K8` | `A -> B := ~(A* & ~B*)` |
//!
//! `T1`–`T3` rewrite atoms the same way as `K1`–`K3` but commute with every
//! connective and quantifier (no `~~` under `forall`); `T4` additionally
//! rewrites implications to `T4A -> (T4B | false)`.  `T5` is the
//! classical-fragment translation: it rewrites `false` to `~(~C | C)` for a
//! fixed closed witness `C`, conjunctions to `~(~· | ~·)`, implications to
//! `~· | ·`, universals to `~exists x. ~·`, and commutes with `|` and
//! `exists`, so its output only uses atoms, `|`, `exists`, and `~`.

use crate::syntax::{
    atom, bot, conj, disj, dneg, exists, forall, imp, neg, Formula,
};

/// Name of the reserved nullary witness predicate used when no explicit `T5`
/// witness is supplied.
pub const DEFAULT_WITNESS_NAME: &str = "C0";

/// The default `T5` witness: the reserved closed atom `C0`.
pub fn default_witness() -> Formula {
    atom(DEFAULT_WITNESS_NAME)
}

/// Which translation to apply.  `T5` carries its witness formula, which must
/// be closed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TranslationId {
    K,
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
    K7,
    K8,
    T1,
    T2,
    T3,
    T4,
    T5(Formula),
}

impl TranslationId {
    /// The command-line name of the translation (`k`, `k1`, …, `t5`).
    pub fn name(&self) -> &'static str {
        match self {
            TranslationId::K => "k",
            TranslationId::K1 => "k1",
            TranslationId::K2 => "k2",
            TranslationId::K3 => "k3",
            TranslationId::K4 => "k4",
            TranslationId::K5 => "k5",
            TranslationId::K6 => "k6",
            TranslationId::K7 => "k7",
            TranslationId::K8 => "k8",
            TranslationId::T1 => "t1",
            TranslationId::T2 => "t2",
            TranslationId::T3 => "t3",
            TranslationId::T4 => "t4",
            TranslationId::T5(_) => "t5",
        }
    }

    /// True for `K` and `K1`–`K8`, the translations with an inner recursion
    /// wrapped in a final double negation.
    pub fn is_kuroda_family(&self) -> bool {
        use TranslationId::*;
        matches!(self, K | K1 | K2 | K3 | K4 | K5 | K6 | K7 | K8)
    }

    /// `K` followed by the eight variants.
    pub fn kuroda_family() -> Vec<TranslationId> {
        use TranslationId::*;
        vec![K, K1, K2, K3, K4, K5, K6, K7, K8]
    }

    /// The eight variants `K1`–`K8` (without `K` itself).
    pub fn kuroda_variants() -> Vec<TranslationId> {
        use TranslationId::*;
        vec![K1, K2, K3, K4, K5, K6, K7, K8]
    }
}

impl std::fmt::Display for TranslationId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TranslationId {
    type Err = String;

    /// Accepts `k`, `k1`–`k8`, `t1`–`t4`, and `t5` (with the default
    /// witness); uppercase spellings are allowed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use TranslationId::*;
        Ok(match s.to_ascii_lowercase().as_str() {
            "k" => K,
            "k1" => K1,
            "k2" => K2,
            "k3" => K3,
            "k4" => K4,
            "k5" => K5,
            "k6" => K6,
            "k7" => K7,
            "k8" => K8,
            "t1" => T1,
            "t2" => T2,
            "t3" => T3,
            "t4" => T4,
            "t5" => T5(default_witness()),
            other => return Err(format!("unknown translation `{other}` (expected k, k1..k8, t1..t5)")),
        })
    }
}

/// The four translations accepted by [`leivant_translate`], as a dedicated
/// type so the restriction is enforced statically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeivantId {
    T1,
    T2,
    T3,
    T4,
}

impl LeivantId {
    pub const ALL: [LeivantId; 4] = [LeivantId::T1, LeivantId::T2, LeivantId::T3, LeivantId::T4];

    pub fn translation_id(self) -> TranslationId {
        match self {
            LeivantId::T1 => TranslationId::T1,
            LeivantId::T2 => TranslationId::T2,
            LeivantId::T3 => TranslationId::T3,
            LeivantId::T4 => TranslationId::T4,
        }
    }

    /// The matching Kuroda variant: `T1 ↦ K1`, …, `T4 ↦ K4`.
    pub fn kuroda_id(self) -> TranslationId {
        match self {
            LeivantId::T1 => TranslationId::K1,
            LeivantId::T2 => TranslationId::K2,
            LeivantId::T3 => TranslationId::K3,
            LeivantId::T4 => TranslationId::K4,
        }
    }
}

impl std::fmt::Display for LeivantId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.translation_id().name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TranslateError {
    #[error("T5 witness `{witness}` must be closed, but `{var}` occurs free")]
    OpenWitness { witness: String, var: String },
    #[error("the reserved default witness `C0` occurs in the input formula; supply an explicit closed witness")]
    ReservedWitnessClash,
}

/// A deliberately wrong clause, injectable through [`Translator`] to confirm
/// that the verification suites detect it.  Each value replaces exactly one
/// clause of one translation; the quantifier clauses are left alone because
/// the decision procedures that power the suites are propositional.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// `K`: swap the implication, `(A -> B)* := B* -> A*`.
    KImplSwap,
    /// `K1`: forget the `| false` on atoms.
    K1AtomPlain,
    /// `K2`: forget the `~~` on atoms.
    K2AtomPlain,
    /// `K3`: drop the trailing `-> P`, leaving atoms at `false -> P`.
    K3AtomDropConsequent,
    /// `K4`: forget the `| false`, collapsing the clause to `K`'s.
    K4ImplPlain,
    /// `K5`: forget the negation, `(A -> B)* := A* | B*`.
    K5ImplDropNeg,
    /// `K6`: forget the `~~`, collapsing the clause to `K`'s.
    K6ImplPlain,
    /// `K7`: contrapose without swapping, `(A -> B)* := ~A* -> ~B*`.
    K7ImplNoSwap,
    /// `K8`: forget the inner negation, `(A -> B)* := ~(A* & B*)`.
    K8DropInnerNeg,
    /// `T1`: forget the `| false` on atoms.
    T1AtomPlain,
    /// `T2`: forget the `~~` on atoms.
    T2AtomPlain,
    /// `T3`: drop the trailing `-> P` on atoms.
    T3AtomDropConsequent,
    /// `T5`: forget the negation, `T5(A -> B) := T5A | T5B`.
    T5ImplDropNeg,
}

impl Mutation {
    pub const ALL: [Mutation; 13] = [
        Mutation::KImplSwap,
        Mutation::K1AtomPlain,
        Mutation::K2AtomPlain,
        Mutation::K3AtomDropConsequent,
        Mutation::K4ImplPlain,
        Mutation::K5ImplDropNeg,
        Mutation::K6ImplPlain,
        Mutation::K7ImplNoSwap,
        Mutation::K8DropInnerNeg,
        Mutation::T1AtomPlain,
        Mutation::T2AtomPlain,
        Mutation::T3AtomDropConsequent,
        Mutation::T5ImplDropNeg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::KImplSwap => "k-impl-swap",
            Mutation::K1AtomPlain => "k1-atom-plain",
            Mutation::K2AtomPlain => "k2-atom-plain",
            Mutation::K3AtomDropConsequent => "k3-atom-drop-consequent",
            Mutation::K4ImplPlain => "k4-impl-plain",
            Mutation::K5ImplDropNeg => "k5-impl-drop-neg",
            Mutation::K6ImplPlain => "k6-impl-plain",
            Mutation::K7ImplNoSwap => "k7-impl-no-swap",
            Mutation::K8DropInnerNeg => "k8-drop-inner-neg",
            Mutation::T1AtomPlain => "t1-atom-plain",
            Mutation::T2AtomPlain => "t2-atom-plain",
            Mutation::T3AtomDropConsequent => "t3-atom-drop-consequent",
            Mutation::T5ImplDropNeg => "t5-impl-drop-neg",
        }
    }
}

impl std::fmt::Display for Mutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Translation engine with two knobs the plain functions leave at their
/// defaults:
///
/// - `bottom_atomic`: whether `false` takes the variant atomic clause in
///   `K1`–`K3` and `T1`–`T4` (default) or stays fixed.  Soundness and
///   characterisation hold under both readings; the verification harness
///   checks both.
/// - `mutation`: an optional deliberately wrong clause, used to confirm the
///   verification suites fail when they should.
#[derive(Debug, Clone)]
pub struct Translator {
    pub bottom_atomic: bool,
    pub mutation: Option<Mutation>,
}

impl Default for Translator {
    fn default() -> Self {
        Translator { bottom_atomic: true, mutation: None }
    }
}

impl Translator {
    pub fn with_mutation(mutation: Mutation) -> Self {
        Translator { mutation: Some(mutation), ..Translator::default() }
    }

    fn mutated(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }

    /// Whether `atomic` (an atom or `false`) takes the variant clause.
    fn takes_atom_clause(&self, atomic: &Formula) -> bool {
        !matches!(atomic, Formula::Bottom) || self.bottom_atomic
    }

    fn kuroda_atom(&self, id: &TranslationId, p: &Formula) -> Formula {
        use TranslationId::*;
        match id {
            K | K4 | K5 | K6 | K7 | K8 => p.clone(),
            K1 if self.takes_atom_clause(p) && !self.mutated(Mutation::K1AtomPlain) => {
                disj(p.clone(), bot())
            }
            K2 if self.takes_atom_clause(p) && !self.mutated(Mutation::K2AtomPlain) => {
                dneg(p.clone())
            }
            K3 if self.takes_atom_clause(p) => {
                if self.mutated(Mutation::K3AtomDropConsequent) {
                    imp(bot(), p.clone())
                } else {
                    imp(imp(bot(), p.clone()), p.clone())
                }
            }
            K1 | K2 | K3 => p.clone(),
            T1 | T2 | T3 | T4 | T5(_) => unreachable!("kuroda_atom is only called for K, K1..K8"),
        }
    }

    fn kuroda_impl(&self, id: &TranslationId, a: Formula, b: Formula) -> Formula {
        use TranslationId::*;
        match id {
            K if self.mutated(Mutation::KImplSwap) => imp(b, a),
            K | K1 | K2 | K3 => imp(a, b),
            K4 if self.mutated(Mutation::K4ImplPlain) => imp(a, b),
            K4 => imp(a, disj(b, bot())),
            K5 if self.mutated(Mutation::K5ImplDropNeg) => disj(a, b),
            K5 => disj(neg(a), b),
            K6 if self.mutated(Mutation::K6ImplPlain) => imp(a, b),
            K6 => imp(a, dneg(b)),
            K7 if self.mutated(Mutation::K7ImplNoSwap) => imp(neg(a), neg(b)),
            K7 => imp(neg(b), neg(a)),
            K8 if self.mutated(Mutation::K8DropInnerNeg) => neg(conj(a, b)),
            K8 => neg(conj(a, neg(b))),
            T1 | T2 | T3 | T4 | T5(_) => unreachable!("kuroda_impl is only called for K, K1..K8"),
        }
    }

    /// The inner recursion `A ↦ A*` of `K` and its variants: atoms per
    /// variant, `&`/`|`/`exists` commute, `->` per variant, and `forall x A`
    /// becomes `forall x. ~~A*`.
    ///
    /// # Panics
    ///
    /// If `id` is one of `T1`–`T5`; those translations have no inner/outer
    /// split.
    pub fn inner_translate(&self, id: &TranslationId, formula: &Formula) -> Formula {
        assert!(
            id.is_kuroda_family(),
            "inner_translate: `{id}` has no inner recursion (expected k or k1..k8)"
        );
        match formula {
            Formula::Bottom | Formula::Atom(..) => self.kuroda_atom(id, formula),
            Formula::Conj(a, b) => {
                conj(self.inner_translate(id, a), self.inner_translate(id, b))
            }
            Formula::Disj(a, b) => {
                disj(self.inner_translate(id, a), self.inner_translate(id, b))
            }
            Formula::Impl(a, b) => {
                let a = self.inner_translate(id, a);
                let b = self.inner_translate(id, b);
                self.kuroda_impl(id, a, b)
            }
            Formula::Forall(x, a) => forall(x.clone(), dneg(self.inner_translate(id, a))),
            Formula::Exists(x, a) => exists(x.clone(), self.inner_translate(id, a)),
        }
    }

    /// The full translation `A ↦ ~~A*` for `K` and `K1`–`K8`.
    ///
    /// # Panics
    ///
    /// If `id` is one of `T1`–`T5`.
    pub fn translate(&self, id: &TranslationId, formula: &Formula) -> Formula {
        dneg(self.inner_translate(id, formula))
    }

    fn leivant_atom(&self, id: LeivantId, p: &Formula) -> Formula {
        if !self.takes_atom_clause(p) {
            return p.clone();
        }
        match id {
            LeivantId::T1 if !self.mutated(Mutation::T1AtomPlain) => disj(p.clone(), bot()),
            LeivantId::T2 if !self.mutated(Mutation::T2AtomPlain) => dneg(p.clone()),
            LeivantId::T3 => {
                if self.mutated(Mutation::T3AtomDropConsequent) {
                    imp(bot(), p.clone())
                } else {
                    imp(imp(bot(), p.clone()), p.clone())
                }
            }
            LeivantId::T4 => disj(p.clone(), bot()),
            LeivantId::T1 | LeivantId::T2 => p.clone(),
        }
    }

    /// `T1`–`T4`: rewrite atoms (and, for `T4`, implications) and commute
    /// with everything else; no double negations are inserted anywhere.
    pub fn leivant_translate(&self, id: LeivantId, formula: &Formula) -> Formula {
        match formula {
            Formula::Bottom | Formula::Atom(..) => self.leivant_atom(id, formula),
            Formula::Conj(a, b) => {
                conj(self.leivant_translate(id, a), self.leivant_translate(id, b))
            }
            Formula::Disj(a, b) => {
                disj(self.leivant_translate(id, a), self.leivant_translate(id, b))
            }
            Formula::Impl(a, b) => {
                let a = self.leivant_translate(id, a);
                let b = self.leivant_translate(id, b);
                if id == LeivantId::T4 {
                    imp(a, disj(b, bot()))
                } else {
                    imp(a, b)
                }
            }
            Formula::Forall(x, a) => forall(x.clone(), self.leivant_translate(id, a)),
            Formula::Exists(x, a) => exists(x.clone(), self.leivant_translate(id, a)),
        }
    }

    /// `T5`: translate into the fragment built from atoms, `|`, `exists`,
    /// and `~`.  The witness must be closed; when it is the reserved default
    /// `C0`, the input must not mention `C0`.
    pub fn shoenfield_translate(
        &self,
        formula: &Formula,
        witness: &Formula,
    ) -> Result<Formula, TranslateError> {
        if let Some(var) = crate::syntax::free_variables(witness).into_iter().next() {
            return Err(TranslateError::OpenWitness {
                witness: witness.to_string(),
                var,
            });
        }
        if *witness == default_witness() && mentions_predicate(formula, DEFAULT_WITNESS_NAME) {
            return Err(TranslateError::ReservedWitnessClash);
        }
        Ok(self.shoenfield_go(formula, witness))
    }

    fn shoenfield_go(&self, formula: &Formula, witness: &Formula) -> Formula {
        match formula {
            Formula::Bottom => neg(disj(neg(witness.clone()), witness.clone())),
            Formula::Atom(..) => formula.clone(),
            Formula::Conj(a, b) => neg(disj(
                neg(self.shoenfield_go(a, witness)),
                neg(self.shoenfield_go(b, witness)),
            )),
            Formula::Disj(a, b) => {
                disj(self.shoenfield_go(a, witness), self.shoenfield_go(b, witness))
            }
            Formula::Impl(a, b) => {
                let a = self.shoenfield_go(a, witness);
                let b = self.shoenfield_go(b, witness);
                if self.mutated(Mutation::T5ImplDropNeg) {
                    disj(a, b)
                } else {
                    disj(neg(a), b)
                }
            }
            Formula::Forall(x, a) => {
                neg(exists(x.clone(), neg(self.shoenfield_go(a, witness))))
            }
            Formula::Exists(x, a) => exists(x.clone(), self.shoenfield_go(a, witness)),
        }
    }

    /// Dispatch on the translation id: `K`-family formulas get the full
    /// `~~`-wrapped translation, `T1`–`T4` the commuting recursion, `T5` the
    /// classical-fragment recursion with its carried witness.
    pub fn apply(&self, id: &TranslationId, formula: &Formula) -> Result<Formula, TranslateError> {
        use TranslationId::*;
        Ok(match id {
            K | K1 | K2 | K3 | K4 | K5 | K6 | K7 | K8 => self.translate(id, formula),
            T1 => self.leivant_translate(LeivantId::T1, formula),
            T2 => self.leivant_translate(LeivantId::T2, formula),
            T3 => self.leivant_translate(LeivantId::T3, formula),
            T4 => self.leivant_translate(LeivantId::T4, formula),
            T5(witness) => self.shoenfield_translate(formula, witness)?,
        })
    }
}

fn mentions_predicate(f: &Formula, name: &str) -> bool {
    match f {
        Formula::Bottom => false,
        Formula::Atom(p, _) => p == name,
        Formula::Conj(a, b) | Formula::Disj(a, b) | Formula::Impl(a, b) => {
            mentions_predicate(a, name) || mentions_predicate(b, name)
        }
        Formula::Forall(_, a) | Formula::Exists(_, a) => mentions_predicate(a, name),
    }
}

/// `A ↦ A*` for `K` and `K1`–`K8` under the default configuration.
/// Panics on `T1`–`T5`.
pub fn inner_translate(id: &TranslationId, formula: &Formula) -> Formula {
    Translator::default().inner_translate(id, formula)
}

/// `A ↦ ~~A*` for `K` and `K1`–`K8` under the default configuration.
/// Panics on `T1`–`T5`.
pub fn translate(id: &TranslationId, formula: &Formula) -> Formula {
    Translator::default().translate(id, formula)
}

/// `T1`–`T4` under the default configuration.
pub fn leivant_translate(id: LeivantId, formula: &Formula) -> Formula {
    Translator::default().leivant_translate(id, formula)
}

/// `T5` with an explicit closed witness, under the default configuration.
pub fn shoenfield_translate(formula: &Formula, witness: &Formula) -> Result<Formula, TranslateError> {
    Translator::default().shoenfield_translate(formula, witness)
}

/// Full dispatch under the default configuration.
pub fn apply(id: &TranslationId, formula: &Formula) -> Result<Formula, TranslateError> {
    Translator::default().apply(id, formula)
}
