//! Truth-table decision procedure for classical propositional logic.

use super::{collect_atom_names, compile, Compiled, Decision, ProverError};
use crate::syntax::{Formula, Sequent};
use std::collections::HashMap;

/// Beyond this many distinct atoms the table has more than 2^20 rows and we
/// refuse rather than stall.
const MAX_ATOMS: usize = 20;

fn eval(c: &Compiled, assignment: u32) -> bool {
    match c {
        Compiled::Bot => false,
        Compiled::Var(i) => assignment >> i & 1 == 1,
        Compiled::And(a, b) => eval(a, assignment) && eval(b, assignment),
        Compiled::Or(a, b) => eval(a, assignment) || eval(b, assignment),
        Compiled::Imp(a, b) => !eval(a, assignment) || eval(b, assignment),
    }
}

fn shared_index(formulas: &[&Formula]) -> Result<HashMap<String, usize>, ProverError> {
    let mut names = std::collections::BTreeSet::new();
    for f in formulas {
        names.extend(collect_atom_names(f));
    }
    if names.len() > MAX_ATOMS {
        return Err(ProverError::TooManyAtoms { limit: MAX_ATOMS, found: names.len() });
    }
    Ok(names.into_iter().enumerate().map(|(i, a)| (a, i)).collect())
}

/// Truth-table validity with `false` always false.
pub fn classical_valid(formula: &Formula) -> Result<bool, ProverError> {
    if !formula.is_quantifier_free() {
        return Err(ProverError::QuantifierPresent { formula: formula.to_string() });
    }
    let index = shared_index(&[formula])?;
    let compiled = compile(formula, &index, None);
    let rows = 1u32 << index.len();
    Ok((0..rows).all(|m| eval(&compiled, m)))
}

/// A sequent is classically provable when every row satisfying all
/// hypotheses satisfies the conclusion.
pub fn decide_cl(sequent: &Sequent) -> Result<Decision, ProverError> {
    let mut parts: Vec<&Formula> = sequent.hypotheses.iter().map(|(_, f)| f).collect();
    parts.push(&sequent.conclusion);
    let index = shared_index(&parts)?;
    let hyps: Vec<Compiled> =
        sequent.hypotheses.iter().map(|(_, f)| compile(f, &index, None)).collect();
    let concl = compile(&sequent.conclusion, &index, None);
    let rows = 1u32 << index.len();
    let provable =
        (0..rows).all(|m| !hyps.iter().all(|h| eval(h, m)) || eval(&concl, m));
    Ok(if provable { Decision::Provable } else { Decision::Unprovable })
}
