//! Constructive proof transformers: rewrite a checked derivation into a
//! derivation of the translated sequent in the weaker logic, node by node.
//!
//! [`kuroda_transform`] eliminates classical reasoning: a classical proof of
//! `Γ ⊢ A` becomes an intuitionistic proof of `KΓ ⊢ KA`.  Double-negation
//! elimination disappears because `K A` is itself doubly negated;
//! abstraction is the one node whose glue (`il_impl_intro`) spends an
//! ex-falso step.  [`leivant_transform`] then eliminates ex falso: an
//! intuitionistic proof becomes a minimal-logic proof of the `Tᵢ`-translated
//! sequent, with each ex-falso node replaced by an absurdity-absorption
//! proof.  [`soundness_pipeline`] composes the two and rewrites the
//! endpoints along the synthesized equivalences `Tᵢ(K A) <-> Kᵢ A`, landing
//! on the variant translations themselves.

use super::check::{check_proof, CheckResult, Rejection};
use super::lemmas::{dn_apply, dn_fst, dn_inl, dn_inr, dn_pair, dn_snd, dni, il_impl_intro, Builder};
use super::synth::{absorption_with, equiv_leivant_with};
use super::{
    app, case, gen, hyp, inl, inr, inst, lam, pair, subst_hyp, unpack, wit, ProofTerm,
};
use crate::syntax::{bot, dneg, exists, neg, substitute, Formula, LogicId, Sequent, Term};
use crate::translate::{self, LeivantId, TranslationId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    #[error("source proof does not check under {logic}: {rejection}")]
    InvalidSource { logic: LogicId, rejection: Rejection },
}

fn checked(proof: &ProofTerm, sequent: &Sequent, logic: LogicId) -> Result<(), TransformError> {
    match check_proof(proof, sequent, logic) {
        CheckResult::Accepted => Ok(()),
        CheckResult::Rejected(rejection) => Err(TransformError::InvalidSource { logic, rejection }),
    }
}

// ---------------------------------------------------------------------------
// Classical to intuitionistic.
// ---------------------------------------------------------------------------

/// Transform a classical derivation of `Γ ⊢ A` into an intuitionistic
/// derivation of `KΓ ⊢ KA`, reusing the hypothesis labels of `Γ`.  The
/// result is returned together with its sequent and always checks under
/// intuitionistic logic.
pub fn kuroda_transform(
    proof: &ProofTerm,
    sequent: &Sequent,
) -> Result<(Sequent, ProofTerm), TransformError> {
    checked(proof, sequent, LogicId::Cl)?;
    let mut builder = Builder::new();
    builder.note_sequent(sequent);
    builder.note_proof(proof);
    let mut env = sequent.hypotheses.clone();
    let (term, _) = kuroda_node(&mut builder, &mut env, proof);
    let translated = Sequent {
        hypotheses: sequent
            .hypotheses
            .iter()
            .map(|(l, g)| (l.clone(), translate::translate(&TranslationId::K, g)))
            .collect(),
        conclusion: translate::translate(&TranslationId::K, &sequent.conclusion),
    };
    Ok((translated, term))
}

fn k_inner(f: &Formula) -> Formula {
    translate::inner_translate(&TranslationId::K, f)
}

/// One node of the classical-to-intuitionistic rewrite.  Takes a subproof
/// of some source formula `A` (under source hypotheses `env`) and returns
/// an intuitionistic proof of `~~A*` under the `K`-translated hypotheses,
/// together with `A` itself so the caller can compute translated types.
fn kuroda_node(
    builder: &mut Builder,
    env: &mut Vec<(String, Formula)>,
    proof: &ProofTerm,
) -> (ProofTerm, Formula) {
    match proof {
        ProofTerm::Hyp(l) => {
            let source = env
                .iter()
                .rev()
                .find(|(label, _)| label == l)
                .expect("checked proof uses only known hypotheses")
                .1
                .clone();
            (hyp(l.clone()), source)
        }
        ProofTerm::Abst(l, dom, body) => {
            env.push((l.clone(), dom.clone()));
            let (body_t, cod) = kuroda_node(builder, env, body);
            env.pop();
            let term = app(
                il_impl_intro(&k_inner(dom), &k_inner(&cod)),
                lam(l.clone(), dneg(k_inner(dom)), body_t),
            );
            (term, crate::syntax::imp(dom.clone(), cod))
        }
        ProofTerm::Apply(f, a) => {
            let (f_t, f_src) = kuroda_node(builder, env, f);
            let (a_t, _) = kuroda_node(builder, env, a);
            let (dom, cod) = match f_src {
                Formula::Impl(d, c) => (*d, *c),
                _ => unreachable!("checked application has an implication on the left"),
            };
            let term = app(app(dn_apply(&k_inner(&dom), &k_inner(&cod)), f_t), a_t);
            (term, cod)
        }
        ProofTerm::Pair(l, r) => {
            let (l_t, l_src) = kuroda_node(builder, env, l);
            let (r_t, r_src) = kuroda_node(builder, env, r);
            let term = app(app(dn_pair(&k_inner(&l_src), &k_inner(&r_src)), l_t), r_t);
            (term, crate::syntax::conj(l_src, r_src))
        }
        ProofTerm::ProjL(t) => {
            let (t_t, src) = kuroda_node(builder, env, t);
            let (a, b) = match src {
                Formula::Conj(a, b) => (*a, *b),
                _ => unreachable!("checked projection has a conjunction below"),
            };
            (app(dn_fst(&k_inner(&a), &k_inner(&b)), t_t), a)
        }
        ProofTerm::ProjR(t) => {
            let (t_t, src) = kuroda_node(builder, env, t);
            let (a, b) = match src {
                Formula::Conj(a, b) => (*a, *b),
                _ => unreachable!("checked projection has a conjunction below"),
            };
            (app(dn_snd(&k_inner(&a), &k_inner(&b)), t_t), b)
        }
        ProofTerm::InjL(t, right) => {
            let (t_t, src) = kuroda_node(builder, env, t);
            let term = app(dn_inl(&k_inner(&src), &k_inner(right)), t_t);
            (term, crate::syntax::disj(src, right.clone()))
        }
        ProofTerm::InjR(left, t) => {
            let (t_t, src) = kuroda_node(builder, env, t);
            let term = app(dn_inr(&k_inner(left), &k_inner(&src)), t_t);
            (term, crate::syntax::disj(left.clone(), src))
        }
        ProofTerm::Case(s, ll, bl, lr, br) => {
            let (s_t, s_src) = kuroda_node(builder, env, s);
            let (a, b) = match s_src {
                Formula::Disj(a, b) => (*a, *b),
                _ => unreachable!("checked case split has a disjunction below"),
            };
            env.push((ll.clone(), a.clone()));
            let (bl_t, concl) = kuroda_node(builder, env, bl);
            env.pop();
            env.push((lr.clone(), b.clone()));
            let (br_t, _) = kuroda_node(builder, env, br);
            env.pop();
            let k = builder.fresh_label();
            let d = builder.fresh_label();
            // Each arm receives the plain disjunct but the rewritten body
            // expects its double negation, so rebind the label through `dni`.
            let lift_arm = |label: &str, disjunct: &Formula, body: ProofTerm| {
                app(
                    app(
                        lam(label, dneg(k_inner(disjunct)), body),
                        app(dni(&k_inner(disjunct)), hyp(label)),
                    ),
                    hyp(&k),
                )
            };
            let term = lam(
                &k,
                neg(k_inner(&concl)),
                app(
                    s_t,
                    lam(
                        &d,
                        crate::syntax::disj(k_inner(&a), k_inner(&b)),
                        case(
                            hyp(&d),
                            ll.clone(),
                            lift_arm(ll, &a, bl_t),
                            lr.clone(),
                            lift_arm(lr, &b, br_t),
                        ),
                    ),
                ),
            );
            (term, concl)
        }
        ProofTerm::Gen(x, t) => {
            let (t_t, src) = kuroda_node(builder, env, t);
            let goal = crate::syntax::forall(x.clone(), src.clone());
            let k = builder.fresh_label();
            let term = lam(
                &k,
                neg(k_inner(&goal)),
                app(hyp(&k), gen(x.clone(), t_t)),
            );
            (term, goal)
        }
        ProofTerm::Inst(t, instance) => {
            let (t_t, src) = kuroda_node(builder, env, t);
            let (x, body) = match src {
                Formula::Forall(x, body) => (x, *body),
                _ => unreachable!("checked instantiation has a universal below"),
            };
            let result = substitute(&body, &x, instance);
            let k = builder.fresh_label();
            let g = builder.fresh_label();
            let term = lam(
                &k,
                neg(k_inner(&result)),
                app(
                    t_t,
                    lam(
                        &g,
                        crate::syntax::forall(x.clone(), dneg(k_inner(&body))),
                        app(inst(hyp(&g), instance.clone()), hyp(&k)),
                    ),
                ),
            );
            (term, result)
        }
        ProofTerm::Witness(instance, t, target) => {
            let (t_t, _) = kuroda_node(builder, env, t);
            let (x, body) = match target {
                Formula::Exists(x, body) => (x.clone(), (**body).clone()),
                _ => unreachable!("checked witness has an existential target"),
            };
            let instance_f = substitute(&body, &x, instance);
            let translated_target = exists(x, k_inner(&body));
            let k = builder.fresh_label();
            let a = builder.fresh_label();
            let term = lam(
                &k,
                neg(translated_target.clone()),
                app(
                    t_t,
                    lam(
                        &a,
                        k_inner(&instance_f),
                        app(
                            hyp(&k),
                            wit(instance.clone(), hyp(&a), translated_target.clone()),
                        ),
                    ),
                ),
            );
            (term, target.clone())
        }
        ProofTerm::Unpack(s, x, l, body) => {
            let (s_t, s_src) = kuroda_node(builder, env, s);
            let (y, inner) = match &s_src {
                Formula::Exists(y, inner) => (y.clone(), (**inner).clone()),
                _ => unreachable!("checked unpack has an existential below"),
            };
            let opened = substitute(&inner, &y, &Term::var(x.clone()));
            env.push((l.clone(), opened.clone()));
            let (body_t, concl) = kuroda_node(builder, env, body);
            env.pop();
            let k = builder.fresh_label();
            let e = builder.fresh_label();
            let u = builder.fresh_label();
            let term = lam(
                &k,
                neg(k_inner(&concl)),
                app(
                    s_t,
                    lam(
                        &e,
                        exists(y.clone(), k_inner(&inner)),
                        unpack(
                            hyp(&e),
                            x.clone(),
                            &u,
                            app(
                                app(
                                    lam(l.clone(), dneg(k_inner(&opened)), body_t),
                                    app(dni(&k_inner(&opened)), hyp(&u)),
                                ),
                                hyp(&k),
                            ),
                        ),
                    ),
                ),
            );
            (term, concl)
        }
        ProofTerm::ExFalso(t, target) => {
            let (t_t, _) = kuroda_node(builder, env, t);
            let k = builder.fresh_label();
            let b = builder.fresh_label();
            // `~~false -> ~~A*` needs no ex falso: feed the identity on
            // `false` to the doubly negated absurdity.
            let term = lam(
                &k,
                neg(k_inner(target)),
                app(t_t, lam(&b, bot(), hyp(&b))),
            );
            (term, target.clone())
        }
        ProofTerm::DoubleNegElim(t) => {
            let (t_t, src) = kuroda_node(builder, env, t);
            let stripped = match &src {
                Formula::Impl(n, bottom)
                    if matches!(**bottom, Formula::Bottom) =>
                {
                    match &**n {
                        Formula::Impl(a, inner_bottom)
                            if matches!(**inner_bottom, Formula::Bottom) =>
                        {
                            (**a).clone()
                        }
                        _ => unreachable!("checked DNE has a double negation below"),
                    }
                }
                _ => unreachable!("checked DNE has a double negation below"),
            };
            let k = builder.fresh_label();
            let l = builder.fresh_label();
            let term = lam(
                &k,
                neg(k_inner(&stripped)),
                app(
                    t_t,
                    lam(&l, dneg(k_inner(&stripped)), app(hyp(&l), hyp(&k))),
                ),
            );
            (term, stripped)
        }
    }
}

// ---------------------------------------------------------------------------
// Intuitionistic to minimal.
// ---------------------------------------------------------------------------

/// Transform an intuitionistic derivation of `Γ ⊢ A` into a minimal-logic
/// derivation of `TᵢΓ ⊢ TᵢA`.  Ex-falso nodes are replaced by synthesized
/// absorption proofs; everything else is structural (plus, for `T4`, the
/// padding bookkeeping at implications).
pub fn leivant_transform(
    i: LeivantId,
    proof: &ProofTerm,
    sequent: &Sequent,
) -> Result<(Sequent, ProofTerm), TransformError> {
    checked(proof, sequent, LogicId::Il)?;
    let mut builder = Builder::new();
    builder.note_sequent(sequent);
    builder.note_proof(proof);
    let mut env = sequent.hypotheses.clone();
    let (term, _) = leivant_node(&mut builder, i, &mut env, proof);
    let translated = Sequent {
        hypotheses: sequent
            .hypotheses
            .iter()
            .map(|(l, g)| (l.clone(), translate::leivant_translate(i, g)))
            .collect(),
        conclusion: translate::leivant_translate(i, &sequent.conclusion),
    };
    Ok((translated, term))
}

fn leivant_node(
    builder: &mut Builder,
    i: LeivantId,
    env: &mut Vec<(String, Formula)>,
    proof: &ProofTerm,
) -> (ProofTerm, Formula) {
    let tr = |f: &Formula| translate::leivant_translate(i, f);
    match proof {
        ProofTerm::Hyp(l) => {
            let source = env
                .iter()
                .rev()
                .find(|(label, _)| label == l)
                .expect("checked proof uses only known hypotheses")
                .1
                .clone();
            (hyp(l.clone()), source)
        }
        ProofTerm::Abst(l, dom, body) => {
            env.push((l.clone(), dom.clone()));
            let (body_t, cod) = leivant_node(builder, i, env, body);
            env.pop();
            let body_t = if i == LeivantId::T4 {
                inl(body_t, bot())
            } else {
                body_t
            };
            let term = lam(l.clone(), tr(dom), body_t);
            (term, crate::syntax::imp(dom.clone(), cod))
        }
        ProofTerm::Apply(f, a) => {
            let (f_t, f_src) = leivant_node(builder, i, env, f);
            let (a_t, _) = leivant_node(builder, i, env, a);
            let cod = match f_src {
                Formula::Impl(_, c) => *c,
                _ => unreachable!("checked application has an implication on the left"),
            };
            let applied = app(f_t, a_t);
            let term = if i == LeivantId::T4 {
                // `T4` implications land in `T4 B | false`; collapse the
                // padding with an absorption proof in the right arm.
                let v = builder.fresh_label();
                let u = builder.fresh_label();
                case(
                    applied,
                    &v,
                    hyp(&v),
                    &u,
                    app(absorption_with(builder, i, &cod), hyp(&u)),
                )
            } else {
                applied
            };
            (term, cod)
        }
        ProofTerm::Pair(l, r) => {
            let (l_t, l_src) = leivant_node(builder, i, env, l);
            let (r_t, r_src) = leivant_node(builder, i, env, r);
            (pair(l_t, r_t), crate::syntax::conj(l_src, r_src))
        }
        ProofTerm::ProjL(t) => {
            let (t_t, src) = leivant_node(builder, i, env, t);
            let a = match src {
                Formula::Conj(a, _) => *a,
                _ => unreachable!("checked projection has a conjunction below"),
            };
            (super::fst(t_t), a)
        }
        ProofTerm::ProjR(t) => {
            let (t_t, src) = leivant_node(builder, i, env, t);
            let b = match src {
                Formula::Conj(_, b) => *b,
                _ => unreachable!("checked projection has a conjunction below"),
            };
            (super::snd(t_t), b)
        }
        ProofTerm::InjL(t, right) => {
            let (t_t, src) = leivant_node(builder, i, env, t);
            (
                inl(t_t, tr(right)),
                crate::syntax::disj(src, right.clone()),
            )
        }
        ProofTerm::InjR(left, t) => {
            let (t_t, src) = leivant_node(builder, i, env, t);
            (
                inr(tr(left), t_t),
                crate::syntax::disj(left.clone(), src),
            )
        }
        ProofTerm::Case(s, ll, bl, lr, br) => {
            let (s_t, s_src) = leivant_node(builder, i, env, s);
            let (a, b) = match s_src {
                Formula::Disj(a, b) => (*a, *b),
                _ => unreachable!("checked case split has a disjunction below"),
            };
            env.push((ll.clone(), a));
            let (bl_t, concl) = leivant_node(builder, i, env, bl);
            env.pop();
            env.push((lr.clone(), b));
            let (br_t, _) = leivant_node(builder, i, env, br);
            env.pop();
            (case(s_t, ll.clone(), bl_t, lr.clone(), br_t), concl)
        }
        ProofTerm::Gen(x, t) => {
            let (t_t, src) = leivant_node(builder, i, env, t);
            (gen(x.clone(), t_t), crate::syntax::forall(x.clone(), src))
        }
        ProofTerm::Inst(t, instance) => {
            let (t_t, src) = leivant_node(builder, i, env, t);
            let (x, body) = match src {
                Formula::Forall(x, body) => (x, *body),
                _ => unreachable!("checked instantiation has a universal below"),
            };
            (
                inst(t_t, instance.clone()),
                substitute(&body, &x, instance),
            )
        }
        ProofTerm::Witness(instance, t, target) => {
            let (t_t, _) = leivant_node(builder, i, env, t);
            let (x, body) = match target {
                Formula::Exists(x, body) => (x.clone(), (**body).clone()),
                _ => unreachable!("checked witness has an existential target"),
            };
            (
                wit(instance.clone(), t_t, exists(x, tr(&body))),
                target.clone(),
            )
        }
        ProofTerm::Unpack(s, x, l, body) => {
            let (s_t, s_src) = leivant_node(builder, i, env, s);
            let (y, inner) = match &s_src {
                Formula::Exists(y, inner) => (y.clone(), (**inner).clone()),
                _ => unreachable!("checked unpack has an existential below"),
            };
            let opened = substitute(&inner, &y, &Term::var(x.clone()));
            env.push((l.clone(), opened));
            let (body_t, concl) = leivant_node(builder, i, env, body);
            env.pop();
            (unpack(s_t, x.clone(), l.clone(), body_t), concl)
        }
        ProofTerm::ExFalso(t, target) => {
            let (t_t, _) = leivant_node(builder, i, env, t);
            let collapsed = app(super::lemmas::ti_bot_collapse(i), t_t);
            let term = app(absorption_with(builder, i, target), collapsed);
            (term, target.clone())
        }
        ProofTerm::DoubleNegElim(_) => {
            unreachable!("double-negation elimination cannot appear in a checked intuitionistic proof")
        }
    }
}

// ---------------------------------------------------------------------------
// End to end.
// ---------------------------------------------------------------------------

/// Compose the two transformers and rewrite the endpoints along the
/// synthesized equivalences: a classical proof of `Γ ⊢ A` becomes a
/// minimal-logic proof of `KᵢΓ ⊢ KᵢA`, where `Kᵢ` is the negative variant
/// matching the chosen auxiliary translation.
pub fn soundness_pipeline(
    i: LeivantId,
    proof: &ProofTerm,
    sequent: &Sequent,
) -> Result<(Sequent, ProofTerm), TransformError> {
    let (il_sequent, il_proof) = kuroda_transform(proof, sequent)?;
    let (ml_sequent, ml_proof) = leivant_transform(i, &il_proof, &il_sequent)?;
    let ki = i.kuroda_id();

    let mut builder = Builder::new();
    builder.note_sequent(&ml_sequent);
    builder.note_proof(&ml_proof);

    // Hypothesis uses expect `Tᵢ(K G)`; the final sequent provides `KᵢG`,
    // so convert each use backward along the equivalence...
    let mut term = ml_proof;
    for (label, source) in &sequent.hypotheses {
        let equiv = equiv_leivant_with(&mut builder, i, source);
        term = subst_hyp(&term, label, &app(equiv.backward, hyp(label.clone())));
    }
    // ...and the conclusion forward.
    let equiv = equiv_leivant_with(&mut builder, i, &sequent.conclusion);
    let term = app(equiv.forward, term);

    let translated = Sequent {
        hypotheses: sequent
            .hypotheses
            .iter()
            .map(|(l, g)| (l.clone(), translate::translate(&ki, g)))
            .collect(),
        conclusion: translate::translate(&ki, &sequent.conclusion),
    };
    Ok((translated, term))
}
