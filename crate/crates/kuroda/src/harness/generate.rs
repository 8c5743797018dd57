//! Deterministic formula sampling for the verification suites.
//!
//! `random_formula(config, index)` derives an independent ChaCha stream from
//! `(config.seed, index)`, so the `index`-th sample can be regenerated
//! without replaying the samples before it, and the same `(config, index)`
//! pair always yields the same formula — which is what makes the replay
//! command lines in failure reports work.

use super::HarnessError;
use crate::syntax::{atom, bot, conj, disj, exists, forall, imp, neg, pred, Formula, Term};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Relative weights of the connectives chosen at interior nodes.  A zero
/// weight disables the connective; the quantifier weights are ignored when
/// sampling quantifier-free formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectiveWeights {
    pub conj: u32,
    pub disj: u32,
    #[serde(rename = "impl")]
    pub impl_: u32,
    pub neg: u32,
    pub forall: u32,
    pub exists: u32,
}

impl Default for ConnectiveWeights {
    fn default() -> Self {
        ConnectiveWeights { conj: 2, disj: 2, impl_: 3, neg: 2, forall: 1, exists: 1 }
    }
}

/// Parameters of the formula sampler.  `seed` fully determines the sample
/// sequence; `samples` is how many formulas a suite draws.
///
/// Depth counts nodes along the longest path, so a lone atom has depth 1 and
/// `~P` (sugar for `P -> false`) has depth 2.  `include_bottom` governs the
/// `false` *leaf* only: a nonzero negation weight still produces `-> false`
/// nodes.  When quantifiers are enabled,
/// leaves under a binder may be unary predicates applied to a bound
/// variable; their names are the configured atom names with `1` appended, so
/// an atom never appears with two different arities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub max_depth: u32,
    pub atoms: Vec<String>,
    pub include_bottom: bool,
    pub connective_weights: ConnectiveWeights,
    pub quantifier_free: bool,
    pub seed: u64,
    pub samples: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            max_depth: Self::DEFAULT_MAX_DEPTH,
            atoms: vec!["P".into(), "Q".into(), "R".into()],
            include_bottom: true,
            connective_weights: ConnectiveWeights::default(),
            quantifier_free: true,
            seed: Self::DEFAULT_SEED,
            samples: Self::DEFAULT_SAMPLES,
        }
    }
}

impl GeneratorConfig {
    pub const DEFAULT_MAX_DEPTH: u32 = 5;
    pub const DEFAULT_SEED: u64 = 1729;
    pub const DEFAULT_SAMPLES: usize = 200;

    /// Reject configurations the sampler cannot honour: a zero depth, an
    /// empty leaf pool, unusable atom names, or a weight table that leaves
    /// nothing to choose at interior nodes.
    pub fn validate(&self) -> Result<(), HarnessError> {
        let invalid = |message: String| Err(HarnessError::InvalidConfig(message));
        if self.max_depth == 0 {
            return invalid("max_depth must be at least 1".into());
        }
        if self.atoms.is_empty() && !self.include_bottom {
            return invalid(
                "the atom pool is empty and `false` is excluded; no leaf can be generated".into(),
            );
        }
        for name in &self.atoms {
            if !is_atom_name(name) {
                return invalid(format!(
                    "`{name}` is not a usable atom name (letter first, then letters, \
                     digits or `_`, and not `false`, `forall`, or `exists`)"
                ));
            }
        }
        let mut seen = BTreeSet::new();
        for name in &self.atoms {
            if !seen.insert(name.as_str()) {
                return invalid(format!("atom `{name}` is listed twice"));
            }
        }
        if !self.quantifier_free {
            for name in &self.atoms {
                let unary = format!("{name}1");
                if self.atoms.iter().any(|other| *other == unary) {
                    return invalid(format!(
                        "the atom pool contains both `{name}` and `{unary}`; the latter \
                         collides with the unary predicate derived from the former"
                    ));
                }
            }
        }
        let w = &self.connective_weights;
        let propositional =
            u64::from(w.conj) + u64::from(w.disj) + u64::from(w.impl_) + u64::from(w.neg);
        let quantified = u64::from(w.forall) + u64::from(w.exists);
        if propositional == 0 && (self.quantifier_free || quantified == 0) {
            return invalid("every usable connective weight is zero".into());
        }
        Ok(())
    }
}

fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
    let tail_ok = chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    head_ok && tail_ok && !matches!(name, "false" | "forall" | "exists")
}

/// The `index`-th sample of the sequence determined by `config`.
pub fn random_formula(config: &GeneratorConfig, index: usize) -> Result<Formula, HarnessError> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let mut scope = Vec::new();
    Ok(gen_formula(&mut rng, config, config.max_depth, &mut scope))
}

/// Weight of the leaf entry at interior nodes; leaves compete with the
/// configured connectives so sampled formulas vary in depth.
const LEAF_WEIGHT: u32 = 2;

#[derive(Clone, Copy)]
enum Node {
    Leaf,
    Conj,
    Disj,
    Impl,
    Neg,
    Forall,
    Exists,
}

fn gen_formula(
    rng: &mut ChaCha8Rng,
    config: &GeneratorConfig,
    depth: u32,
    scope: &mut Vec<String>,
) -> Formula {
    let w = &config.connective_weights;
    let mut table: Vec<(Node, u32)> = vec![(Node::Leaf, LEAF_WEIGHT)];
    if depth >= 2 {
        table.push((Node::Conj, w.conj));
        table.push((Node::Disj, w.disj));
        table.push((Node::Impl, w.impl_));
        table.push((Node::Neg, w.neg));
        if !config.quantifier_free {
            table.push((Node::Forall, w.forall));
            table.push((Node::Exists, w.exists));
        }
    }
    match pick(rng, &table) {
        Node::Leaf => leaf(rng, config, scope),
        Node::Conj => {
            let left = gen_formula(rng, config, depth - 1, scope);
            conj(left, gen_formula(rng, config, depth - 1, scope))
        }
        Node::Disj => {
            let left = gen_formula(rng, config, depth - 1, scope);
            disj(left, gen_formula(rng, config, depth - 1, scope))
        }
        Node::Impl => {
            let left = gen_formula(rng, config, depth - 1, scope);
            imp(left, gen_formula(rng, config, depth - 1, scope))
        }
        Node::Neg => neg(gen_formula(rng, config, depth - 1, scope)),
        Node::Forall => {
            let x = binder_name(scope);
            scope.push(x.clone());
            let body = gen_formula(rng, config, depth - 1, scope);
            scope.pop();
            forall(x, body)
        }
        Node::Exists => {
            let x = binder_name(scope);
            scope.push(x.clone());
            let body = gen_formula(rng, config, depth - 1, scope);
            scope.pop();
            exists(x, body)
        }
    }
}

fn pick(rng: &mut ChaCha8Rng, table: &[(Node, u32)]) -> Node {
    let total: u64 = table.iter().map(|(_, w)| u64::from(*w)).sum();
    let mut roll = rng.gen_range(0..total);
    for (node, weight) in table {
        if roll < u64::from(*weight) {
            return *node;
        }
        roll -= u64::from(*weight);
    }
    unreachable!("the leaf entry keeps the weight total positive")
}

/// A leaf: a nullary atom (weight 2 each), `false` (weight 1, if enabled),
/// or — under a binder — a unary predicate applied to a bound variable
/// (weight 2 per derived name).
fn leaf(rng: &mut ChaCha8Rng, config: &GeneratorConfig, scope: &[String]) -> Formula {
    let nullary = config.atoms.len() as u64 * 2;
    let bottom = u64::from(config.include_bottom);
    let unary = if scope.is_empty() { 0 } else { config.atoms.len() as u64 * 2 };
    let mut roll = rng.gen_range(0..nullary + bottom + unary);
    if roll < nullary {
        return atom(config.atoms[(roll / 2) as usize].clone());
    }
    roll -= nullary;
    if roll < bottom {
        return bot();
    }
    roll -= bottom;
    let name = format!("{}1", config.atoms[(roll / 2) as usize]);
    let var = &scope[rng.gen_range(0..scope.len())];
    pred(name, vec![Term::var(var)])
}

/// The first of `x`, `y`, `z`, `x3`, `x4`, … not already bound, so nested
/// binders never shadow each other.
fn binder_name(scope: &[String]) -> String {
    for name in ["x", "y", "z"] {
        if !scope.iter().any(|bound| bound == name) {
            return name.to_string();
        }
    }
    let mut n = 3;
    loop {
        let name = format!("x{n}");
        if !scope.iter().any(|bound| *bound == name) {
            return name;
        }
        n += 1;
    }
}
