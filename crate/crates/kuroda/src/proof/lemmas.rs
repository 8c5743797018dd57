//! Hand-written proof terms for the minimal-logic lemmas that the proof
//! transformers and synthesizers splice into generated derivations, plus a
//! small calculus of checked equivalences for composing them.
//!
//! Every term constructed here is closed, so the fixed hypothesis labels
//! used inside one lemma can never capture labels of the proofs it is
//! applied to.  Quantifier lemmas take an explicit eigenvariable so callers
//! can supply one that is globally fresh for the proof being assembled.

use super::{app, case, fst, gen, hyp, inl, inr, inst, lam, pair, snd, unpack, wit, ProofTerm};
use crate::syntax::{
    bot, conj, disj, dneg, exists, forall, free_variables, imp, neg, substitute, Formula, Sequent,
    Term,
};
use crate::translate::LeivantId;
use std::collections::BTreeSet;

/// Dispenses hypothesis labels and variable names that are fresh with
/// respect to everything it has been shown.
#[derive(Debug, Default, Clone)]
pub struct Builder {
    labels: BTreeSet<String>,
    vars: BTreeSet<String>,
    next_label: usize,
    next_var: usize,
}

impl Builder {
    pub fn new() -> Builder {
        Builder::default()
    }

    pub fn note_formula(&mut self, f: &Formula) {
        f.all_variables(&mut self.vars);
    }

    pub fn note_sequent(&mut self, s: &Sequent) {
        for (label, f) in &s.hypotheses {
            self.labels.insert(label.clone());
            self.note_formula(f);
        }
        self.note_formula(&s.conclusion);
    }

    pub fn note_proof(&mut self, p: &ProofTerm) {
        p.labels(&mut self.labels);
        p.term_variables(&mut self.vars);
    }

    pub fn fresh_label(&mut self) -> String {
        loop {
            self.next_label += 1;
            let candidate = format!("h{}", self.next_label);
            if self.labels.insert(candidate.clone()) {
                return candidate;
            }
        }
    }

    pub fn fresh_var(&mut self) -> String {
        loop {
            self.next_var += 1;
            let candidate = format!("v{}", self.next_var);
            if self.vars.insert(candidate.clone()) {
                return candidate;
            }
        }
    }
}

/// A proved equivalence: `forward` derives `lhs -> rhs` and `backward`
/// derives `rhs -> lhs`, both in minimal logic (unless noted otherwise by
/// the producing function).
#[derive(Debug, Clone)]
pub struct Equiv {
    pub lhs: Formula,
    pub rhs: Formula,
    pub forward: ProofTerm,
    pub backward: ProofTerm,
}

impl Equiv {
    /// The equivalence stated as a single formula `(lhs -> rhs) & (rhs -> lhs)`.
    pub fn statement(&self) -> Formula {
        conj(
            imp(self.lhs.clone(), self.rhs.clone()),
            imp(self.rhs.clone(), self.lhs.clone()),
        )
    }

    /// One proof term deriving [`Equiv::statement`].
    pub fn proof(&self) -> ProofTerm {
        pair(self.forward.clone(), self.backward.clone())
    }
}

fn identity(f: &Formula) -> ProofTerm {
    lam("x", f.clone(), hyp("x"))
}

pub fn refl(f: &Formula) -> Equiv {
    Equiv { lhs: f.clone(), rhs: f.clone(), forward: identity(f), backward: identity(f) }
}

pub fn sym(e: &Equiv) -> Equiv {
    Equiv {
        lhs: e.rhs.clone(),
        rhs: e.lhs.clone(),
        forward: e.backward.clone(),
        backward: e.forward.clone(),
    }
}

pub fn trans(e1: &Equiv, e2: &Equiv) -> Equiv {
    assert!(
        e1.rhs == e2.lhs,
        "cannot chain equivalence ending at `{}` with one starting at `{}`",
        e1.rhs,
        e2.lhs
    );
    Equiv {
        lhs: e1.lhs.clone(),
        rhs: e2.rhs.clone(),
        forward: lam(
            "x",
            e1.lhs.clone(),
            app(e2.forward.clone(), app(e1.forward.clone(), hyp("x"))),
        ),
        backward: lam(
            "x",
            e2.rhs.clone(),
            app(e1.backward.clone(), app(e2.backward.clone(), hyp("x"))),
        ),
    }
}

pub fn cong_impl(e1: &Equiv, e2: &Equiv) -> Equiv {
    // From f : X -> Y build an X' -> Y' by transporting the argument back
    // along e1 and the result forward along e2 (and symmetrically).
    let direction = |dom: &Formula,
                     cod: &Formula,
                     new_dom: &Formula,
                     to_dom: &ProofTerm,
                     from_cod: &ProofTerm| {
        lam(
            "f",
            imp(dom.clone(), cod.clone()),
            lam(
                "a",
                new_dom.clone(),
                app(from_cod.clone(), app(hyp("f"), app(to_dom.clone(), hyp("a")))),
            ),
        )
    };
    Equiv {
        lhs: imp(e1.lhs.clone(), e2.lhs.clone()),
        rhs: imp(e1.rhs.clone(), e2.rhs.clone()),
        forward: direction(&e1.lhs, &e2.lhs, &e1.rhs, &e1.backward, &e2.forward),
        backward: direction(&e1.rhs, &e2.rhs, &e1.lhs, &e1.forward, &e2.backward),
    }
}

pub fn cong_conj(e1: &Equiv, e2: &Equiv) -> Equiv {
    let direction = |x: &Formula, y: &Formula, f1: &ProofTerm, f2: &ProofTerm| {
        lam(
            "p",
            conj(x.clone(), y.clone()),
            pair(app(f1.clone(), fst(hyp("p"))), app(f2.clone(), snd(hyp("p")))),
        )
    };
    Equiv {
        lhs: conj(e1.lhs.clone(), e2.lhs.clone()),
        rhs: conj(e1.rhs.clone(), e2.rhs.clone()),
        forward: direction(&e1.lhs, &e2.lhs, &e1.forward, &e2.forward),
        backward: direction(&e1.rhs, &e2.rhs, &e1.backward, &e2.backward),
    }
}

pub fn cong_disj(e1: &Equiv, e2: &Equiv) -> Equiv {
    let direction =
        |x: &Formula, y: &Formula, x2: &Formula, y2: &Formula, f1: &ProofTerm, f2: &ProofTerm| {
            lam(
                "d",
                disj(x.clone(), y.clone()),
                case(
                    hyp("d"),
                    "a",
                    inl(app(f1.clone(), hyp("a")), y2.clone()),
                    "b",
                    inr(x2.clone(), app(f2.clone(), hyp("b"))),
                ),
            )
        };
    Equiv {
        lhs: disj(e1.lhs.clone(), e2.lhs.clone()),
        rhs: disj(e1.rhs.clone(), e2.rhs.clone()),
        forward: direction(&e1.lhs, &e2.lhs, &e1.rhs, &e2.rhs, &e1.forward, &e2.forward),
        backward: direction(&e1.rhs, &e2.rhs, &e1.lhs, &e2.lhs, &e1.backward, &e2.backward),
    }
}

pub fn cong_neg(e: &Equiv) -> Equiv {
    cong_impl(e, &refl(&bot()))
}

pub fn cong_dneg(e: &Equiv) -> Equiv {
    cong_neg(&cong_neg(e))
}

/// Congruence under a universal quantifier.  `inner` must relate the two
/// bodies instantiated at the fresh variable `z`.
pub fn cong_forall(x: &str, lhs_body: &Formula, rhs_body: &Formula, z: &str, inner: &Equiv) -> Equiv {
    assert_fresh_for(z, x, lhs_body, rhs_body);
    assert!(inner.lhs == substitute(lhs_body, x, &Term::var(z)));
    assert!(inner.rhs == substitute(rhs_body, x, &Term::var(z)));
    let direction = |all: &Formula, step: &ProofTerm| {
        lam("u", all.clone(), gen(z, app(step.clone(), inst(hyp("u"), Term::var(z)))))
    };
    let lhs = forall(x, lhs_body.clone());
    let rhs = forall(x, rhs_body.clone());
    Equiv {
        forward: direction(&lhs, &inner.forward),
        backward: direction(&rhs, &inner.backward),
        lhs,
        rhs,
    }
}

/// Congruence under an existential quantifier, with `inner` as in
/// [`cong_forall`].
pub fn cong_exists(x: &str, lhs_body: &Formula, rhs_body: &Formula, z: &str, inner: &Equiv) -> Equiv {
    assert_fresh_for(z, x, lhs_body, rhs_body);
    assert!(inner.lhs == substitute(lhs_body, x, &Term::var(z)));
    assert!(inner.rhs == substitute(rhs_body, x, &Term::var(z)));
    let direction = |some: &Formula, target: &Formula, step: &ProofTerm| {
        lam(
            "u",
            some.clone(),
            unpack(hyp("u"), z, "i", wit(Term::var(z), app(step.clone(), hyp("i")), target.clone())),
        )
    };
    let lhs = exists(x, lhs_body.clone());
    let rhs = exists(x, rhs_body.clone());
    Equiv {
        forward: direction(&lhs, &rhs, &inner.forward),
        backward: direction(&rhs, &lhs, &inner.backward),
        lhs,
        rhs,
    }
}

fn assert_fresh_for(z: &str, x: &str, lhs_body: &Formula, rhs_body: &Formula) {
    if z == x {
        return;
    }
    assert!(
        !free_variables(lhs_body).contains(z) && !free_variables(rhs_body).contains(z),
        "eigenvariable `{z}` is not fresh for the quantifier bodies"
    );
}

// ---------------------------------------------------------------------------
// Plain lemmas: double-negation plumbing.
// ---------------------------------------------------------------------------

/// `D -> ~~D`
pub fn dni(d: &Formula) -> ProofTerm {
    lam("d", d.clone(), lam("k", neg(d.clone()), app(hyp("k"), hyp("d"))))
}

/// `(D -> E) -> (~~D -> ~~E)`
pub fn dn_mono(d: &Formula, e: &Formula) -> ProofTerm {
    lam(
        "f",
        imp(d.clone(), e.clone()),
        lam(
            "m",
            dneg(d.clone()),
            lam(
                "k",
                neg(e.clone()),
                app(hyp("m"), lam("d", d.clone(), app(hyp("k"), app(hyp("f"), hyp("d"))))),
            ),
        ),
    )
}

/// `~~(A -> B) -> (~~A -> ~~B)`
pub fn dn_apply(a: &Formula, b: &Formula) -> ProofTerm {
    lam(
        "m",
        dneg(imp(a.clone(), b.clone())),
        lam(
            "n",
            dneg(a.clone()),
            lam(
                "k",
                neg(b.clone()),
                app(
                    hyp("m"),
                    lam(
                        "g",
                        imp(a.clone(), b.clone()),
                        app(hyp("n"), lam("a", a.clone(), app(hyp("k"), app(hyp("g"), hyp("a"))))),
                    ),
                ),
            ),
        ),
    )
}

/// `~~A -> (~~B -> ~~(A & B))`
pub fn dn_pair(a: &Formula, b: &Formula) -> ProofTerm {
    lam(
        "m",
        dneg(a.clone()),
        lam(
            "n",
            dneg(b.clone()),
            lam(
                "k",
                neg(conj(a.clone(), b.clone())),
                app(
                    hyp("m"),
                    lam(
                        "a",
                        a.clone(),
                        app(hyp("n"), lam("b", b.clone(), app(hyp("k"), pair(hyp("a"), hyp("b"))))),
                    ),
                ),
            ),
        ),
    )
}

/// `~~(A & B) -> ~~A`
pub fn dn_fst(a: &Formula, b: &Formula) -> ProofTerm {
    lam(
        "m",
        dneg(conj(a.clone(), b.clone())),
        lam(
            "k",
            neg(a.clone()),
            app(hyp("m"), lam("p", conj(a.clone(), b.clone()), app(hyp("k"), fst(hyp("p"))))),
        ),
    )
}

/// `~~(A & B) -> ~~B`
pub fn dn_snd(a: &Formula, b: &Formula) -> ProofTerm {
    lam(
        "m",
        dneg(conj(a.clone(), b.clone())),
        lam(
            "k",
            neg(b.clone()),
            app(hyp("m"), lam("p", conj(a.clone(), b.clone()), app(hyp("k"), snd(hyp("p"))))),
        ),
    )
}

/// `~~A -> ~~(A | B)`
pub fn dn_inl(a: &Formula, b: &Formula) -> ProofTerm {
    lam(
        "m",
        dneg(a.clone()),
        lam(
            "k",
            neg(disj(a.clone(), b.clone())),
            app(hyp("m"), lam("a", a.clone(), app(hyp("k"), inl(hyp("a"), b.clone())))),
        ),
    )
}

/// `~~B -> ~~(A | B)`
pub fn dn_inr(a: &Formula, b: &Formula) -> ProofTerm {
    lam(
        "m",
        dneg(b.clone()),
        lam(
            "k",
            neg(disj(a.clone(), b.clone())),
            app(hyp("m"), lam("b", b.clone(), app(hyp("k"), inr(a.clone(), hyp("b"))))),
        ),
    )
}

/// `(~~A -> ~~B) -> ~~(A -> B)` — the one lemma here that needs ex falso,
/// so it checks in intuitionistic but not minimal logic.
pub fn il_impl_intro(a: &Formula, b: &Formula) -> ProofTerm {
    lam(
        "m",
        imp(dneg(a.clone()), dneg(b.clone())),
        lam(
            "k",
            neg(imp(a.clone(), b.clone())),
            app(
                hyp("k"),
                lam(
                    "x",
                    a.clone(),
                    super::efq(
                        app(
                            app(hyp("m"), lam("na", neg(a.clone()), app(hyp("na"), hyp("x")))),
                            lam("y", b.clone(), app(hyp("k"), lam("z", a.clone(), hyp("y")))),
                        ),
                        b.clone(),
                    ),
                ),
            ),
        ),
    )
}

/// `~~(D -> ~E) -> (D -> ~E)`
pub fn dn_stable_negimpl(d: &Formula, e: &Formula) -> ProofTerm {
    let negimpl = imp(d.clone(), neg(e.clone()));
    lam(
        "m",
        dneg(negimpl.clone()),
        lam(
            "d",
            d.clone(),
            lam(
                "e",
                e.clone(),
                app(hyp("m"), lam("g", negimpl, app(app(hyp("g"), hyp("d")), hyp("e")))),
            ),
        ),
    )
}

/// `(D | ~~E) -> ~~(D | E)`
pub fn disj_dn_intro(d: &Formula, e: &Formula) -> ProofTerm {
    lam(
        "v",
        disj(d.clone(), dneg(e.clone())),
        lam(
            "k",
            neg(disj(d.clone(), e.clone())),
            case(
                hyp("v"),
                "d",
                app(hyp("k"), inl(hyp("d"), e.clone())),
                "m",
                app(hyp("m"), lam("e", e.clone(), app(hyp("k"), inr(d.clone(), hyp("e"))))),
            ),
        ),
    )
}

/// `~false`
pub fn not_bot() -> ProofTerm {
    lam("b", bot(), hyp("b"))
}

// ---------------------------------------------------------------------------
// Equivalence lemmas.
// ---------------------------------------------------------------------------

/// `~X <-> ~~~X` — triple negations collapse already in minimal logic.
pub fn tneg_equiv(x: &Formula) -> Equiv {
    Equiv {
        lhs: neg(x.clone()),
        rhs: neg(dneg(x.clone())),
        forward: dni(&neg(x.clone())),
        backward: lam(
            "t",
            neg(dneg(x.clone())),
            lam(
                "x",
                x.clone(),
                app(hyp("t"), lam("n", neg(x.clone()), app(hyp("n"), hyp("x")))),
            ),
        ),
    }
}

/// `~(~C | C) <-> false`
pub fn neg_or_elim(c: &Formula) -> Equiv {
    let scrutinee = disj(neg(c.clone()), c.clone());
    Equiv {
        lhs: neg(scrutinee.clone()),
        rhs: bot(),
        forward: lam(
            "n",
            neg(scrutinee.clone()),
            app(
                hyp("n"),
                inl(
                    lam("c", c.clone(), app(hyp("n"), inr(neg(c.clone()), hyp("c")))),
                    c.clone(),
                ),
            ),
        ),
        backward: lam("b", bot(), lam("d", scrutinee, hyp("b"))),
    }
}

/// `~(~X | ~Y) <-> ~~(X & Y)`
pub fn conj_via_negdisj(x: &Formula, y: &Formula) -> Equiv {
    let negdisj = disj(neg(x.clone()), neg(y.clone()));
    let both = conj(x.clone(), y.clone());
    Equiv {
        lhs: neg(negdisj.clone()),
        rhs: dneg(both.clone()),
        forward: lam(
            "n",
            neg(negdisj.clone()),
            lam(
                "k",
                neg(both.clone()),
                app(
                    hyp("n"),
                    inl(
                        lam(
                            "a",
                            x.clone(),
                            app(
                                hyp("n"),
                                inr(
                                    neg(x.clone()),
                                    lam("b", y.clone(), app(hyp("k"), pair(hyp("a"), hyp("b")))),
                                ),
                            ),
                        ),
                        neg(y.clone()),
                    ),
                ),
            ),
        ),
        backward: lam(
            "m",
            dneg(both.clone()),
            lam(
                "d",
                negdisj,
                app(
                    hyp("m"),
                    lam(
                        "p",
                        both,
                        case(
                            hyp("d"),
                            "nx",
                            app(hyp("nx"), fst(hyp("p"))),
                            "ny",
                            app(hyp("ny"), snd(hyp("p"))),
                        ),
                    ),
                ),
            ),
        ),
    }
}

/// `~(exists x. ~X) <-> ~~(forall x. ~~X)`, with `z` a fresh eigenvariable.
pub fn not_exists_not(x: &str, body: &Formula, z: &str) -> Equiv {
    let ex = exists(x, neg(body.clone()));
    let fa = forall(x, dneg(body.clone()));
    let body_z = substitute(body, x, &Term::var(z));
    Equiv {
        lhs: neg(ex.clone()),
        rhs: dneg(fa.clone()),
        forward: lam(
            "n",
            neg(ex.clone()),
            lam(
                "k",
                neg(fa.clone()),
                app(
                    hyp("k"),
                    gen(
                        z,
                        lam(
                            "u",
                            neg(body_z),
                            app(hyp("n"), wit(Term::var(z), hyp("u"), ex.clone())),
                        ),
                    ),
                ),
            ),
        ),
        backward: lam(
            "m",
            dneg(fa.clone()),
            lam(
                "e",
                ex,
                app(
                    hyp("m"),
                    lam(
                        "g",
                        fa,
                        unpack(hyp("e"), z, "u", app(inst(hyp("g"), Term::var(z)), hyp("u"))),
                    ),
                ),
            ),
        ),
    }
}

/// From `~~X <-> ~~Y` derive `~X <-> ~Y`.
pub fn neg_shift(e: &Equiv) -> Equiv {
    let x = e.lhs.as_dneg().expect("negation shift needs a double negation on the left").clone();
    let y = e.rhs.as_dneg().expect("negation shift needs a double negation on the right").clone();
    trans(&trans(&tneg_equiv(&x), &cong_neg(e)), &sym(&tneg_equiv(&y)))
}

fn dneg_inner(f: &Formula) -> Formula {
    f.as_dneg().expect("expected a double negation").clone()
}

/// From `~~X <-> ~~X'` and `~~Y <-> ~~Y'` derive `~~(X & Y) <-> ~~(X' & Y')`.
pub fn dn_cong_conj(e1: &Equiv, e2: &Equiv) -> Equiv {
    let (x, x2) = (dneg_inner(&e1.lhs), dneg_inner(&e1.rhs));
    let (y, y2) = (dneg_inner(&e2.lhs), dneg_inner(&e2.rhs));
    let direction = |x: &Formula,
                     y: &Formula,
                     x2: &Formula,
                     y2: &Formula,
                     f1: &ProofTerm,
                     f2: &ProofTerm| {
        lam(
            "m",
            dneg(conj(x.clone(), y.clone())),
            lam(
                "k",
                neg(conj(x2.clone(), y2.clone())),
                app(
                    hyp("m"),
                    lam(
                        "p",
                        conj(x.clone(), y.clone()),
                        app(
                            app(
                                app(dn_pair(x2, y2), app(f1.clone(), app(dni(x), fst(hyp("p"))))),
                                app(f2.clone(), app(dni(y), snd(hyp("p")))),
                            ),
                            hyp("k"),
                        ),
                    ),
                ),
            ),
        )
    };
    Equiv {
        lhs: dneg(conj(x.clone(), y.clone())),
        rhs: dneg(conj(x2.clone(), y2.clone())),
        forward: direction(&x, &y, &x2, &y2, &e1.forward, &e2.forward),
        backward: direction(&x2, &y2, &x, &y, &e1.backward, &e2.backward),
    }
}

/// From `~~X <-> ~~X'` and `~~Y <-> ~~Y'` derive `~~(X | Y) <-> ~~(X' | Y')`.
pub fn dn_cong_disj(e1: &Equiv, e2: &Equiv) -> Equiv {
    let (x, x2) = (dneg_inner(&e1.lhs), dneg_inner(&e1.rhs));
    let (y, y2) = (dneg_inner(&e2.lhs), dneg_inner(&e2.rhs));
    let direction = |x: &Formula,
                     y: &Formula,
                     x2: &Formula,
                     y2: &Formula,
                     f1: &ProofTerm,
                     f2: &ProofTerm| {
        lam(
            "m",
            dneg(disj(x.clone(), y.clone())),
            lam(
                "k",
                neg(disj(x2.clone(), y2.clone())),
                app(
                    hyp("m"),
                    lam(
                        "d",
                        disj(x.clone(), y.clone()),
                        case(
                            hyp("d"),
                            "a",
                            app(
                                app(f1.clone(), app(dni(x), hyp("a"))),
                                lam("u", x2.clone(), app(hyp("k"), inl(hyp("u"), y2.clone()))),
                            ),
                            "b",
                            app(
                                app(f2.clone(), app(dni(y), hyp("b"))),
                                lam("v", y2.clone(), app(hyp("k"), inr(x2.clone(), hyp("v")))),
                            ),
                        ),
                    ),
                ),
            ),
        )
    };
    Equiv {
        lhs: dneg(disj(x.clone(), y.clone())),
        rhs: dneg(disj(x2.clone(), y2.clone())),
        forward: direction(&x, &y, &x2, &y2, &e1.forward, &e2.forward),
        backward: direction(&x2, &y2, &x, &y, &e1.backward, &e2.backward),
    }
}

/// From `~~L[z] <-> ~~R[z]` derive `~~(exists x. L) <-> ~~(exists x. R)`.
pub fn dn_cong_exists(x: &str, lhs_body: &Formula, rhs_body: &Formula, z: &str, inner: &Equiv) -> Equiv {
    assert_fresh_for(z, x, lhs_body, rhs_body);
    let lz = substitute(lhs_body, x, &Term::var(z));
    let rz = substitute(rhs_body, x, &Term::var(z));
    assert!(inner.lhs == dneg(lz.clone()) && inner.rhs == dneg(rz.clone()));
    let direction = |from: &Formula, to: &Formula, from_z: &Formula, to_z: &Formula, step: &ProofTerm| {
        lam(
            "m",
            dneg(exists(x, from.clone())),
            lam(
                "k",
                neg(exists(x, to.clone())),
                app(
                    hyp("m"),
                    lam(
                        "e",
                        exists(x, from.clone()),
                        unpack(
                            hyp("e"),
                            z,
                            "i",
                            app(
                                app(step.clone(), app(dni(from_z), hyp("i"))),
                                lam(
                                    "q",
                                    to_z.clone(),
                                    app(hyp("k"), wit(Term::var(z), hyp("q"), exists(x, to.clone()))),
                                ),
                            ),
                        ),
                    ),
                ),
            ),
        )
    };
    Equiv {
        lhs: dneg(exists(x, lhs_body.clone())),
        rhs: dneg(exists(x, rhs_body.clone())),
        forward: direction(lhs_body, rhs_body, &lz, &rz, &inner.forward),
        backward: direction(rhs_body, lhs_body, &rz, &lz, &inner.backward),
    }
}

/// `false | false <-> false`
pub fn bots_equiv() -> Equiv {
    Equiv {
        lhs: disj(bot(), bot()),
        rhs: bot(),
        forward: lam("v", disj(bot(), bot()), case(hyp("v"), "a", hyp("a"), "b", hyp("b"))),
        backward: lam("b", bot(), inr(bot(), hyp("b"))),
    }
}

/// `~(X | false) <-> ~X`
pub fn neg_orbot(x: &Formula) -> Equiv {
    let padded = disj(x.clone(), bot());
    Equiv {
        lhs: neg(padded.clone()),
        rhs: neg(x.clone()),
        forward: lam(
            "n",
            neg(padded.clone()),
            lam("a", x.clone(), app(hyp("n"), inl(hyp("a"), bot()))),
        ),
        backward: lam(
            "n",
            neg(x.clone()),
            lam(
                "v",
                padded,
                case(hyp("v"), "a", app(hyp("n"), hyp("a")), "b", hyp("b")),
            ),
        ),
    }
}

/// `(X | false) & (Y | false) <-> (X & Y) | false`
pub fn conj_orbot(x: &Formula, y: &Formula) -> Equiv {
    let lhs = conj(disj(x.clone(), bot()), disj(y.clone(), bot()));
    let both = conj(x.clone(), y.clone());
    let rhs = disj(both.clone(), bot());
    Equiv {
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        forward: lam(
            "p",
            lhs.clone(),
            case(
                fst(hyp("p")),
                "a",
                case(
                    snd(hyp("p")),
                    "b",
                    inl(pair(hyp("a"), hyp("b")), bot()),
                    "u",
                    inr(both.clone(), hyp("u")),
                ),
                "u",
                inr(both, hyp("u")),
            ),
        ),
        backward: lam(
            "v",
            rhs,
            case(
                hyp("v"),
                "p",
                pair(inl(fst(hyp("p")), bot()), inl(snd(hyp("p")), bot())),
                "u",
                pair(inr(x.clone(), hyp("u")), inr(y.clone(), hyp("u"))),
            ),
        ),
    }
}

/// `(X | false) | (Y | false) <-> (X | Y) | false`
pub fn disj_orbot(x: &Formula, y: &Formula) -> Equiv {
    let lhs = disj(disj(x.clone(), bot()), disj(y.clone(), bot()));
    let either = disj(x.clone(), y.clone());
    let rhs = disj(either.clone(), bot());
    Equiv {
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        forward: lam(
            "v",
            lhs,
            case(
                hyp("v"),
                "l",
                case(
                    hyp("l"),
                    "a",
                    inl(inl(hyp("a"), y.clone()), bot()),
                    "u",
                    inr(either.clone(), hyp("u")),
                ),
                "r",
                case(
                    hyp("r"),
                    "b",
                    inl(inr(x.clone(), hyp("b")), bot()),
                    "u",
                    inr(either.clone(), hyp("u")),
                ),
            ),
        ),
        backward: lam(
            "v",
            rhs,
            case(
                hyp("v"),
                "d",
                case(
                    hyp("d"),
                    "a",
                    inl(inl(hyp("a"), bot()), disj(y.clone(), bot())),
                    "b",
                    inr(disj(x.clone(), bot()), inl(hyp("b"), bot())),
                ),
                "u",
                inl(inr(x.clone(), hyp("u")), disj(y.clone(), bot())),
            ),
        ),
    }
}

/// `((X | false) -> ((Y | false) | false)) <-> ((X -> (Y | false)) | false)`
pub fn impl_orbot(x: &Formula, y: &Formula) -> Equiv {
    let yb = disj(y.clone(), bot());
    let lhs = imp(disj(x.clone(), bot()), disj(yb.clone(), bot()));
    let arrow = imp(x.clone(), yb.clone());
    let rhs = disj(arrow.clone(), bot());
    Equiv {
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        forward: lam(
            "f",
            lhs,
            inl(
                lam(
                    "a",
                    x.clone(),
                    case(
                        app(hyp("f"), inl(hyp("a"), bot())),
                        "v",
                        hyp("v"),
                        "u",
                        inr(y.clone(), hyp("u")),
                    ),
                ),
                bot(),
            ),
        ),
        backward: lam(
            "v",
            rhs,
            case(
                hyp("v"),
                "g",
                lam(
                    "w",
                    disj(x.clone(), bot()),
                    case(
                        hyp("w"),
                        "a",
                        inl(app(hyp("g"), hyp("a")), bot()),
                        "u",
                        inr(yb.clone(), hyp("u")),
                    ),
                ),
                "u",
                lam("w", disj(x.clone(), bot()), inr(yb.clone(), hyp("u"))),
            ),
        ),
    }
}

/// `exists x. (X | false) <-> (exists x. X) | false`, with fresh `z`.
pub fn exists_orbot(x: &str, body: &Formula, z: &str) -> Equiv {
    assert_fresh_for(z, x, body, body);
    let body_z = substitute(body, x, &Term::var(z));
    let lhs = exists(x, disj(body.clone(), bot()));
    let plain = exists(x, body.clone());
    let rhs = disj(plain.clone(), bot());
    Equiv {
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        forward: lam(
            "e",
            lhs.clone(),
            unpack(
                hyp("e"),
                z,
                "i",
                case(
                    hyp("i"),
                    "a",
                    inl(wit(Term::var(z), hyp("a"), plain.clone()), bot()),
                    "u",
                    inr(plain.clone(), hyp("u")),
                ),
            ),
        ),
        backward: lam(
            "v",
            rhs,
            case(
                hyp("v"),
                "e",
                unpack(hyp("e"), z, "i", wit(Term::var(z), inl(hyp("i"), bot()), lhs.clone())),
                "u",
                wit(Term::var(z), inr(body_z, hyp("u")), lhs),
            ),
        ),
    }
}

/// `forall x. ~~W <-> (forall x. ~~W) | false` — padding with `false` is
/// invertible here because the doubly negated body absorbs `false`.
pub fn orbot_forall_dn(x: &str, body: &Formula, z: &str) -> Equiv {
    assert_fresh_for(z, x, body, body);
    let fa = forall(x, dneg(body.clone()));
    let rhs = disj(fa.clone(), bot());
    Equiv {
        lhs: fa.clone(),
        rhs: rhs.clone(),
        forward: lam("g", fa.clone(), inl(hyp("g"), bot())),
        backward: lam(
            "v",
            rhs,
            case(
                hyp("v"),
                "g",
                hyp("g"),
                "u",
                gen(z, lam("k", neg(substitute(body, x, &Term::var(z))), hyp("u"))),
            ),
        ),
    }
}

/// `(X -> ~~Y) <-> (~Y -> ~X)`
pub fn imp_dn_contra(x: &Formula, y: &Formula) -> Equiv {
    let lhs = imp(x.clone(), dneg(y.clone()));
    let rhs = imp(neg(y.clone()), neg(x.clone()));
    Equiv {
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        forward: lam(
            "f",
            lhs.clone(),
            lam(
                "n",
                neg(y.clone()),
                lam("a", x.clone(), app(app(hyp("f"), hyp("a")), hyp("n"))),
            ),
        ),
        backward: lam(
            "g",
            rhs,
            lam(
                "a",
                x.clone(),
                lam("n", neg(y.clone()), app(app(hyp("g"), hyp("n")), hyp("a"))),
            ),
        ),
    }
}

/// `(X -> ~~Y) <-> ~(X & ~Y)`
pub fn imp_dn_negconj(x: &Formula, y: &Formula) -> Equiv {
    let lhs = imp(x.clone(), dneg(y.clone()));
    let guarded = conj(x.clone(), neg(y.clone()));
    let rhs = neg(guarded.clone());
    Equiv {
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        forward: lam(
            "f",
            lhs.clone(),
            lam("p", guarded, app(app(hyp("f"), fst(hyp("p"))), snd(hyp("p")))),
        ),
        backward: lam(
            "n",
            rhs,
            lam(
                "a",
                x.clone(),
                lam("k", neg(y.clone()), app(hyp("n"), pair(hyp("a"), hyp("k")))),
            ),
        ),
    }
}

/// A proof of `T false -> false` for each auxiliary translation `T`: the
/// translated absurdity still implies the plain one in minimal logic.
pub fn ti_bot_collapse(i: LeivantId) -> ProofTerm {
    match i {
        LeivantId::T1 | LeivantId::T4 => lam(
            "v",
            disj(bot(), bot()),
            case(hyp("v"), "a", hyp("a"), "b", hyp("b")),
        ),
        LeivantId::T2 | LeivantId::T3 => {
            lam("m", dneg(bot()), app(hyp("m"), lam("b", bot(), hyp("b"))))
        }
    }
}

/// `T false <-> false` for each auxiliary translation `T`.
pub fn ti_bot_equiv(i: LeivantId) -> Equiv {
    let lhs = crate::translate::leivant_translate(i, &bot());
    let backward = match i {
        LeivantId::T1 | LeivantId::T4 => lam("b", bot(), inr(bot(), hyp("b"))),
        LeivantId::T2 | LeivantId::T3 => lam("b", bot(), lam("k", neg(bot()), hyp("b"))),
    };
    Equiv { lhs, rhs: bot(), forward: ti_bot_collapse(i), backward }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::{check_proof, CheckResult};
    use crate::prover::{decide_formula, Decision};
    use crate::syntax::{atom, parse, pred, LogicId};

    fn assert_ml(term: &ProofTerm, formula: &Formula) {
        let sequent = Sequent::entails(formula.clone());
        match check_proof(term, &sequent, LogicId::Ml) {
            CheckResult::Accepted => {}
            CheckResult::Rejected(r) => panic!("`{formula}` failed to check: {r}"),
        }
    }

    fn assert_equiv_ml(e: &Equiv) {
        assert_ml(&e.proof(), &e.statement());
    }

    fn p() -> Formula {
        atom("P")
    }

    fn q() -> Formula {
        atom("Q")
    }

    fn px() -> Formula {
        pred("P", vec![Term::var("x")])
    }

    #[test]
    fn double_negation_library_checks_in_minimal_logic() {
        assert_ml(&dni(&p()), &parse("P -> ~~P").unwrap());
        assert_ml(&dn_mono(&p(), &q()), &parse("(P -> Q) -> (~~P -> ~~Q)").unwrap());
        assert_ml(&dn_apply(&p(), &q()), &parse("~~(P -> Q) -> (~~P -> ~~Q)").unwrap());
        assert_ml(&dn_pair(&p(), &q()), &parse("~~P -> (~~Q -> ~~(P & Q))").unwrap());
        assert_ml(&dn_fst(&p(), &q()), &parse("~~(P & Q) -> ~~P").unwrap());
        assert_ml(&dn_snd(&p(), &q()), &parse("~~(P & Q) -> ~~Q").unwrap());
        assert_ml(&dn_inl(&p(), &q()), &parse("~~P -> ~~(P | Q)").unwrap());
        assert_ml(&dn_inr(&p(), &q()), &parse("~~Q -> ~~(P | Q)").unwrap());
        assert_ml(&dn_stable_negimpl(&p(), &q()), &parse("~~(P -> ~Q) -> (P -> ~Q)").unwrap());
        assert_ml(&disj_dn_intro(&p(), &q()), &parse("(P | ~~Q) -> ~~(P | Q)").unwrap());
        assert_ml(&not_bot(), &parse("~false").unwrap());
    }

    #[test]
    fn implication_lifting_needs_ex_falso() {
        let formula = parse("(~~P -> ~~Q) -> ~~(P -> Q)").unwrap();
        let term = il_impl_intro(&p(), &q());
        let sequent = Sequent::entails(formula.clone());
        assert!(check_proof(&term, &sequent, LogicId::Il).is_accepted());
        assert!(!check_proof(&term, &sequent, LogicId::Ml).is_accepted());
        // Not an artifact of this particular term: the formula itself is
        // independent of minimal logic.
        assert_eq!(decide_formula(LogicId::Ml, &formula).unwrap(), Decision::Unprovable);
        assert_eq!(decide_formula(LogicId::Il, &formula).unwrap(), Decision::Provable);
    }

    #[test]
    fn equivalence_lemmas_check_in_minimal_logic() {
        assert_equiv_ml(&tneg_equiv(&p()));
        assert_equiv_ml(&neg_or_elim(&atom("C0")));
        assert_equiv_ml(&conj_via_negdisj(&p(), &q()));
        assert_equiv_ml(&not_exists_not("x", &px(), "z"));
        assert_equiv_ml(&bots_equiv());
        assert_equiv_ml(&neg_orbot(&p()));
        assert_equiv_ml(&conj_orbot(&p(), &q()));
        assert_equiv_ml(&disj_orbot(&p(), &q()));
        assert_equiv_ml(&impl_orbot(&p(), &q()));
        assert_equiv_ml(&exists_orbot("x", &px(), "z"));
        assert_equiv_ml(&orbot_forall_dn("x", &px(), "z"));
        assert_equiv_ml(&imp_dn_contra(&p(), &q()));
        assert_equiv_ml(&imp_dn_negconj(&p(), &q()));
        for i in LeivantId::ALL {
            assert_ml(
                &ti_bot_collapse(i),
                &imp(crate::translate::leivant_translate(i, &bot()), bot()),
            );
            assert_equiv_ml(&ti_bot_equiv(i));
        }
    }

    #[test]
    fn combinators_compose_checked_equivalences() {
        let e1 = neg_orbot(&p());
        let e2 = tneg_equiv(&q());
        assert_equiv_ml(&refl(&p()));
        assert_equiv_ml(&sym(&e1));
        assert_equiv_ml(&cong_impl(&e1, &e2));
        assert_equiv_ml(&cong_conj(&e1, &e2));
        assert_equiv_ml(&cong_disj(&e1, &e2));
        assert_equiv_ml(&cong_neg(&e1));
        assert_equiv_ml(&cong_dneg(&e1));
        // A transitive chain: ~(P | false) <-> ~P <-> ~~~P.
        let chained = trans(&neg_orbot(&p()), &tneg_equiv(&p()));
        assert_eq!(chained.lhs, parse("~(P | false)").unwrap());
        assert_eq!(chained.rhs, parse("~~(~P)").unwrap());
        assert_equiv_ml(&chained);
    }

    #[test]
    fn quantifier_congruences_use_the_supplied_eigenvariable() {
        let body_lhs = disj(px(), bot());
        let body_rhs = px();
        // Pointwise at z: P(z) | false <-> P(z).
        let inner = Equiv {
            lhs: disj(pred("P", vec![Term::var("z")]), bot()),
            rhs: pred("P", vec![Term::var("z")]),
            forward: lam(
                "v",
                disj(pred("P", vec![Term::var("z")]), bot()),
                case(hyp("v"), "a", hyp("a"), "u", super::super::efq(hyp("u"), pred("P", vec![Term::var("z")]))),
            ),
            backward: lam("a", pred("P", vec![Term::var("z")]), inl(hyp("a"), bot())),
        };
        // The inner proof needs ex falso, so check the composites in
        // intuitionistic logic; the shape of the composition is what is
        // under test here.
        let fa = cong_forall("x", &body_lhs, &body_rhs, "z", &inner);
        let ex = cong_exists("x", &body_lhs, &body_rhs, "z", &inner);
        for e in [&fa, &ex] {
            let sequent = Sequent::entails(e.statement());
            assert!(check_proof(&e.proof(), &sequent, LogicId::Il).is_accepted());
        }
        assert_eq!(fa.lhs, parse("forall x. (P(x) | false)").unwrap());
        assert_eq!(ex.rhs, parse("exists x. P(x)").unwrap());
    }

    #[test]
    fn dn_congruences_relate_doubly_negated_shapes() {
        // ~~(P | false) <-> ~~P, then lifted under & and |.
        let e = cong_neg(&neg_orbot(&p()));
        let f = cong_dneg(&refl(&q()));
        assert_equiv_ml(&dn_cong_conj(&e, &f));
        assert_equiv_ml(&dn_cong_disj(&e, &f));
        let ez = cong_neg(&neg_orbot(&pred("P", vec![Term::var("z")])));
        assert_equiv_ml(&dn_cong_exists("x", &disj(px(), bot()), &px(), "z", &ez));
    }

    #[test]
    fn neg_shift_lowers_a_double_negation_equivalence() {
        // ~~(P | false) <-> ~~P, shifted down to ~(P | false) <-> ~P.
        let e = cong_neg(&neg_orbot(&p()));
        let shifted = neg_shift(&e);
        assert_eq!(shifted.lhs, neg(disj(p(), bot())));
        assert_eq!(shifted.rhs, neg(p()));
        assert_equiv_ml(&shifted);
    }

    #[test]
    fn builder_dispenses_fresh_names() {
        let mut b = Builder::new();
        b.note_sequent(&Sequent::new(
            vec![("h1".into(), parse("P(v1)").unwrap())],
            parse("forall v2. P(v2)").unwrap(),
        ));
        b.note_proof(&hyp("h3"));
        assert_eq!(b.fresh_label(), "h2");
        assert_eq!(b.fresh_label(), "h4");
        assert_eq!(b.fresh_var(), "v3");
        assert_eq!(b.fresh_var(), "v4");
    }
}
