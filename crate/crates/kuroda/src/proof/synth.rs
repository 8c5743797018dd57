//! Proof synthesizers: machine-assembled minimal-logic derivations of the
//! equivalences connecting each auxiliary translation with its matching
//! negative-translation variant, plus the absurdity-absorption proofs the
//! transformers splice in where an ex-falso step used to be.

use super::lemmas::{
    bots_equiv, cong_conj, cong_disj, cong_dneg, cong_exists, cong_forall, cong_impl, cong_neg,
    conj_orbot, conj_via_negdisj, disj_orbot, dn_cong_conj, dn_cong_disj, dn_cong_exists,
    exists_orbot, imp_dn_contra, imp_dn_negconj, impl_orbot, neg_or_elim, neg_orbot,
    not_exists_not, orbot_forall_dn, refl, sym, ti_bot_equiv, tneg_equiv, trans, Builder, Equiv,
};
use super::{app, gen, hyp, inl, inr, lam, pair, wit, ProofTerm};
use crate::syntax::{bot, dneg, disj, exists, imp, neg, substitute, Formula, Term};
use crate::translate::{self, LeivantId, TranslateError, TranslationId};

/// Selects which of the two purely negative implication clauses to relate
/// back to the double-negation clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativeVariant {
    K7,
    K8,
}

impl NegativeVariant {
    pub const ALL: [NegativeVariant; 2] = [NegativeVariant::K7, NegativeVariant::K8];

    pub fn translation_id(self) -> TranslationId {
        match self {
            NegativeVariant::K7 => TranslationId::K7,
            NegativeVariant::K8 => TranslationId::K8,
        }
    }
}

impl std::fmt::Display for NegativeVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NegativeVariant::K7 => "k7",
            NegativeVariant::K8 => "k8",
        })
    }
}

// ---------------------------------------------------------------------------
// Absurdity absorption.
// ---------------------------------------------------------------------------

/// A minimal-logic proof of `false -> T target` for the auxiliary
/// translation `T` named by `i`: every translated formula absorbs
/// absurdity, which is what lets the transformers drop ex falso.
pub fn synthesize_absorption(i: LeivantId, target: &Formula) -> ProofTerm {
    let mut builder = Builder::new();
    builder.note_formula(target);
    absorption_with(&mut builder, i, target)
}

/// As [`synthesize_absorption`], but drawing eigenvariables from a caller
/// supplied [`Builder`] so the proof can be spliced into a larger one
/// without violating freshness side conditions.
pub(crate) fn absorption_with(builder: &mut Builder, i: LeivantId, target: &Formula) -> ProofTerm {
    match target {
        Formula::Atom(..) => match i {
            LeivantId::T1 | LeivantId::T4 => lam("b", bot(), inr(target.clone(), hyp("b"))),
            LeivantId::T2 => lam("b", bot(), lam("k", neg(target.clone()), hyp("b"))),
            LeivantId::T3 => lam(
                "b",
                bot(),
                lam("f", imp(bot(), target.clone()), app(hyp("f"), hyp("b"))),
            ),
        },
        Formula::Bottom => match i {
            LeivantId::T1 | LeivantId::T4 => lam("b", bot(), inr(bot(), hyp("b"))),
            LeivantId::T2 | LeivantId::T3 => lam("b", bot(), lam("k", neg(bot()), hyp("b"))),
        },
        Formula::Conj(l, r) => lam(
            "b",
            bot(),
            pair(
                app(absorption_with(builder, i, l), hyp("b")),
                app(absorption_with(builder, i, r), hyp("b")),
            ),
        ),
        Formula::Disj(l, r) => lam(
            "b",
            bot(),
            inl(
                app(absorption_with(builder, i, l), hyp("b")),
                translate::leivant_translate(i, r),
            ),
        ),
        Formula::Impl(l, r) => {
            let dom = translate::leivant_translate(i, l);
            if i == LeivantId::T4 {
                lam(
                    "b",
                    bot(),
                    lam("x", dom, inr(translate::leivant_translate(i, r), hyp("b"))),
                )
            } else {
                lam(
                    "b",
                    bot(),
                    lam("x", dom, app(absorption_with(builder, i, r), hyp("b"))),
                )
            }
        }
        Formula::Forall(x, c) => {
            let z = builder.fresh_var();
            let instance = substitute(c, x, &Term::var(&z));
            lam(
                "b",
                bot(),
                gen(&z, app(absorption_with(builder, i, &instance), hyp("b"))),
            )
        }
        Formula::Exists(x, c) => lam(
            "b",
            bot(),
            wit(
                Term::var(x),
                app(absorption_with(builder, i, c), hyp("b")),
                translate::leivant_translate(i, target),
            ),
        ),
    }
}

// ---------------------------------------------------------------------------
// Auxiliary translations vs. the matching negative-translation variants.
// ---------------------------------------------------------------------------

/// `(false | false) | false <-> false`: the fully padded absurdity produced
/// by the fourth auxiliary translation on a negation.
fn padded_bot_equiv() -> Equiv {
    trans(&cong_disj(&bots_equiv(), &refl(&bot())), &bots_equiv())
}

/// A checked minimal-logic equivalence between `Tᵢ(K A)` (first translate
/// by `K`, then by the `i`-th auxiliary translation) and `Kᵢ A`.
pub fn synthesize_equiv_leivant(i: LeivantId, formula: &Formula) -> Equiv {
    let mut builder = Builder::new();
    builder.note_formula(formula);
    equiv_leivant_with(&mut builder, i, formula)
}

pub(crate) fn equiv_leivant_with(builder: &mut Builder, i: LeivantId, formula: &Formula) -> Equiv {
    let ki = i.kuroda_id();
    let full = if i == LeivantId::T4 {
        let inner = padded_inner_equiv(builder, formula);
        let pb = padded_bot_equiv();
        let collapsed = trans(
            &cong_impl(&inner, &pb),
            &neg_orbot(&translate::inner_translate(&ki, formula)),
        );
        cong_impl(&collapsed, &pb)
    } else {
        let inner = plain_inner_equiv(builder, i, formula);
        let tb = ti_bot_equiv(i);
        cong_impl(&cong_impl(&inner, &tb), &tb)
    };
    assert_eq!(
        full.lhs,
        translate::leivant_translate(i, &translate::translate(&TranslationId::K, formula))
    );
    assert_eq!(full.rhs, translate::translate(&ki, formula));
    full
}

/// For `T1`–`T3`: `Tᵢ(A*) <-> A*ᵢ` on the inner (un-negated) translations.
/// The two sides are syntactically identical except below universal
/// quantifiers, where the inserted `~~` mentions `Tᵢ false` on the left and
/// plain `false` on the right.
fn plain_inner_equiv(builder: &mut Builder, i: LeivantId, formula: &Formula) -> Equiv {
    let ki = i.kuroda_id();
    match formula {
        Formula::Atom(..) | Formula::Bottom => {
            let lhs = translate::leivant_translate(
                i,
                &translate::inner_translate(&TranslationId::K, formula),
            );
            assert_eq!(lhs, translate::inner_translate(&ki, formula));
            refl(&lhs)
        }
        Formula::Conj(a, b) => cong_conj(
            &plain_inner_equiv(builder, i, a),
            &plain_inner_equiv(builder, i, b),
        ),
        Formula::Disj(a, b) => cong_disj(
            &plain_inner_equiv(builder, i, a),
            &plain_inner_equiv(builder, i, b),
        ),
        Formula::Impl(a, b) => cong_impl(
            &plain_inner_equiv(builder, i, a),
            &plain_inner_equiv(builder, i, b),
        ),
        Formula::Exists(x, body) => {
            let z = builder.fresh_var();
            let instance = substitute(body, x, &Term::var(&z));
            let inner = plain_inner_equiv(builder, i, &instance);
            cong_exists(
                x,
                &translate::leivant_translate(
                    i,
                    &translate::inner_translate(&TranslationId::K, body),
                ),
                &translate::inner_translate(&ki, body),
                &z,
                &inner,
            )
        }
        Formula::Forall(x, body) => {
            let z = builder.fresh_var();
            let instance = substitute(body, x, &Term::var(&z));
            let inner = plain_inner_equiv(builder, i, &instance);
            let tb = ti_bot_equiv(i);
            let step = cong_impl(&cong_impl(&inner, &tb), &tb);
            cong_forall(
                x,
                &translate::leivant_translate(
                    i,
                    &dneg(translate::inner_translate(&TranslationId::K, body)),
                ),
                &dneg(translate::inner_translate(&ki, body)),
                &z,
                &step,
            )
        }
    }
}

/// For `T4`: `T4(A*) <-> A*₄ | false` on the inner translations.  The
/// padding cannot be dropped pointwise in minimal logic, so the induction
/// carries it along and the caller absorbs it into the outer `~~`.
fn padded_inner_equiv(builder: &mut Builder, formula: &Formula) -> Equiv {
    let i = LeivantId::T4;
    let k4 = TranslationId::K4;
    match formula {
        Formula::Atom(..) | Formula::Bottom => {
            let lhs = translate::leivant_translate(
                i,
                &translate::inner_translate(&TranslationId::K, formula),
            );
            assert_eq!(lhs, disj(translate::inner_translate(&k4, formula), bot()));
            refl(&lhs)
        }
        Formula::Conj(a, b) => trans(
            &cong_conj(
                &padded_inner_equiv(builder, a),
                &padded_inner_equiv(builder, b),
            ),
            &conj_orbot(
                &translate::inner_translate(&k4, a),
                &translate::inner_translate(&k4, b),
            ),
        ),
        Formula::Disj(a, b) => trans(
            &cong_disj(
                &padded_inner_equiv(builder, a),
                &padded_inner_equiv(builder, b),
            ),
            &disj_orbot(
                &translate::inner_translate(&k4, a),
                &translate::inner_translate(&k4, b),
            ),
        ),
        Formula::Impl(a, b) => {
            let ea = padded_inner_equiv(builder, a);
            let eb = padded_inner_equiv(builder, b);
            let padded_cod = cong_disj(&eb, &refl(&bot()));
            trans(
                &cong_impl(&ea, &padded_cod),
                &impl_orbot(
                    &translate::inner_translate(&k4, a),
                    &translate::inner_translate(&k4, b),
                ),
            )
        }
        Formula::Exists(x, body) => {
            let z = builder.fresh_var();
            let instance = substitute(body, x, &Term::var(&z));
            let inner = padded_inner_equiv(builder, &instance);
            let commuted = cong_exists(
                x,
                &translate::leivant_translate(
                    i,
                    &translate::inner_translate(&TranslationId::K, body),
                ),
                &disj(translate::inner_translate(&k4, body), bot()),
                &z,
                &inner,
            );
            let z2 = builder.fresh_var();
            trans(
                &commuted,
                &exists_orbot(x, &translate::inner_translate(&k4, body), &z2),
            )
        }
        Formula::Forall(x, body) => {
            let z = builder.fresh_var();
            let instance = substitute(body, x, &Term::var(&z));
            let inner = padded_inner_equiv(builder, &instance);
            let k4_body_z = translate::inner_translate(&k4, &substitute(body, x, &Term::var(&z)));
            let pb = padded_bot_equiv();
            let collapsed = trans(&cong_impl(&inner, &pb), &neg_orbot(&k4_body_z));
            let step = cong_impl(&collapsed, &pb);
            let commuted = cong_forall(
                x,
                &translate::leivant_translate(
                    i,
                    &dneg(translate::inner_translate(&TranslationId::K, body)),
                ),
                &dneg(translate::inner_translate(&k4, body)),
                &z,
                &step,
            );
            let z2 = builder.fresh_var();
            trans(
                &commuted,
                &orbot_forall_dn(x, &translate::inner_translate(&k4, body), &z2),
            )
        }
    }
}

// ---------------------------------------------------------------------------
// The classical-fragment translation vs. the disjunctive variant.
// ---------------------------------------------------------------------------

/// A checked minimal-logic equivalence between `K(T₅ A)` — which is just
/// `~~T₅ A`, since `K` is the identity on the classical fragment — and
/// `K₅ A`.  Fails exactly when the translation itself rejects the witness.
pub fn synthesize_equiv_shoenfield(
    formula: &Formula,
    witness: &Formula,
) -> Result<Equiv, TranslateError> {
    let translated = translate::shoenfield_translate(formula, witness)?;
    let mut builder = Builder::new();
    builder.note_formula(formula);
    builder.note_formula(witness);
    let equiv = shoenfield_equiv(&mut builder, formula, witness);
    assert_eq!(equiv.lhs, translate::translate(&TranslationId::K, &translated));
    assert_eq!(equiv.rhs, translate::translate(&TranslationId::K5, formula));
    Ok(equiv)
}

/// `~~T₅A <-> ~~A*₅`, by induction with double negations kept on both
/// sides: congruence under `->` is not available in minimal logic, but
/// under `~~` every connective the two translations disagree on is.
fn shoenfield_equiv(builder: &mut Builder, formula: &Formula, witness: &Formula) -> Equiv {
    let t5 = |f: &Formula| {
        translate::shoenfield_translate(f, witness)
            .expect("subformulas of a translatable formula are translatable")
    };
    let k5 = |f: &Formula| translate::inner_translate(&TranslationId::K5, f);
    match formula {
        Formula::Atom(..) => refl(&dneg(formula.clone())),
        Formula::Bottom => cong_dneg(&neg_or_elim(witness)),
        Formula::Conj(a, b) => {
            let negdisj = disj(neg(t5(a)), neg(t5(b)));
            let collapse = sym(&tneg_equiv(&negdisj));
            let regroup = conj_via_negdisj(&t5(a), &t5(b));
            let congruence = dn_cong_conj(
                &shoenfield_equiv(builder, a, witness),
                &shoenfield_equiv(builder, b, witness),
            );
            trans(&trans(&collapse, &regroup), &congruence)
        }
        Formula::Disj(a, b) => dn_cong_disj(
            &shoenfield_equiv(builder, a, witness),
            &shoenfield_equiv(builder, b, witness),
        ),
        Formula::Impl(a, b) => dn_cong_disj(
            &cong_neg(&shoenfield_equiv(builder, a, witness)),
            &shoenfield_equiv(builder, b, witness),
        ),
        Formula::Exists(x, body) => {
            let z = builder.fresh_var();
            let instance = substitute(body, x, &Term::var(&z));
            dn_cong_exists(
                x,
                &t5(body),
                &k5(body),
                &z,
                &shoenfield_equiv(builder, &instance, witness),
            )
        }
        Formula::Forall(x, body) => {
            let z = builder.fresh_var();
            let instance = substitute(body, x, &Term::var(&z));
            let pointwise = shoenfield_equiv(builder, &instance, witness);
            let commuted = cong_dneg(&cong_forall(
                x,
                &dneg(t5(body)),
                &dneg(k5(body)),
                &z,
                &pointwise,
            ));
            let collapse = sym(&tneg_equiv(&exists(x.as_str(), neg(t5(body)))));
            let z2 = builder.fresh_var();
            let swap = not_exists_not(x, &t5(body), &z2);
            trans(&trans(&collapse, &swap), &commuted)
        }
    }
}

// ---------------------------------------------------------------------------
// The double-negation implication clause vs. the purely negative ones.
// ---------------------------------------------------------------------------

/// A checked minimal-logic equivalence between `K₆ A` and `K₇ A` or
/// `K₈ A`: the three implication clauses are interchangeable pointwise.
pub fn synthesize_equiv_k678(variant: NegativeVariant, formula: &Formula) -> Equiv {
    let mut builder = Builder::new();
    builder.note_formula(formula);
    let full = cong_dneg(&k678_inner(&mut builder, variant, formula));
    assert_eq!(full.lhs, translate::translate(&TranslationId::K6, formula));
    assert_eq!(full.rhs, translate::translate(&variant.translation_id(), formula));
    full
}

fn k678_inner(builder: &mut Builder, variant: NegativeVariant, formula: &Formula) -> Equiv {
    let kv = variant.translation_id();
    match formula {
        Formula::Atom(..) | Formula::Bottom => refl(formula),
        Formula::Conj(a, b) => cong_conj(
            &k678_inner(builder, variant, a),
            &k678_inner(builder, variant, b),
        ),
        Formula::Disj(a, b) => cong_disj(
            &k678_inner(builder, variant, a),
            &k678_inner(builder, variant, b),
        ),
        Formula::Impl(a, b) => {
            let ea = k678_inner(builder, variant, a);
            let eb = k678_inner(builder, variant, b);
            let base = cong_impl(&ea, &cong_dneg(&eb));
            let va = translate::inner_translate(&kv, a);
            let vb = translate::inner_translate(&kv, b);
            let reclause = match variant {
                NegativeVariant::K7 => imp_dn_contra(&va, &vb),
                NegativeVariant::K8 => imp_dn_negconj(&va, &vb),
            };
            trans(&base, &reclause)
        }
        Formula::Exists(x, body) => {
            let z = builder.fresh_var();
            let instance = substitute(body, x, &Term::var(&z));
            cong_exists(
                x,
                &translate::inner_translate(&TranslationId::K6, body),
                &translate::inner_translate(&kv, body),
                &z,
                &k678_inner(builder, variant, &instance),
            )
        }
        Formula::Forall(x, body) => {
            let z = builder.fresh_var();
            let instance = substitute(body, x, &Term::var(&z));
            cong_forall(
                x,
                &dneg(translate::inner_translate(&TranslationId::K6, body)),
                &dneg(translate::inner_translate(&kv, body)),
                &z,
                &cong_dneg(&k678_inner(builder, variant, &instance)),
            )
        }
    }
}
