//! Proptest strategies shared by the in-module property tests.

use crate::syntax::*;
use proptest::prelude::*;

pub fn term_strategy() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::var("x")),
        Just(Term::var("y")),
        Just(Term::var("z")),
        Just(Term::app("c", vec![])),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| inner.prop_map(|t| Term::app("f", vec![t])))
}

/// Arbitrary first-order formulas.  Predicate names are segregated by arity
/// (`P`, `Q`, `R` nullary; `S` unary; `T` binary) so every generated formula
/// passes the parser's arity check, and the reserved witness atom `C0` never
/// occurs.
pub fn formula_strategy() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(bot()),
        Just(atom("P")),
        Just(atom("Q")),
        Just(atom("R")),
        term_strategy().prop_map(|t| pred("S", vec![t])),
        (term_strategy(), term_strategy()).prop_map(|(s, t)| pred("T", vec![s, t])),
    ];
    leaf.prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| conj(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| disj(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| imp(a, b)),
            inner.clone().prop_map(neg),
            ("[xyz]", inner.clone()).prop_map(|(x, a)| forall(x, a)),
            ("[xyz]", inner).prop_map(|(x, a)| exists(x, a)),
        ]
    })
}

/// Quantifier-free formulas over nullary atoms, the shape consumed by the
/// propositional decision procedures.
pub fn propositional_strategy() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(bot()),
        Just(atom("P")),
        Just(atom("Q")),
        Just(atom("R")),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| conj(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| disj(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| imp(a, b)),
            inner.prop_map(neg),
        ]
    })
}
