//! Finite Kripke models: an independent refutation oracle for the sequent
//! provers.
//!
//! Countermodel search enumerates rooted partial orders up to isomorphism
//! (the root is world `w0`) and, per order, every persistent valuation of
//! the atoms occurring in the formula.  Persistence holds by construction:
//! each atom is assigned an upward-closed set of worlds.  In minimal-logic
//! mode `false` is just another atom and gets a forcing set of its own; in
//! intuitionistic mode it is forced nowhere.  A model refutes a formula when
//! the root does not force it.

use super::{collect_atom_names, compile, force_mask, Compiled, ProverError, BOTTOM_MARKER};
use crate::syntax::{Formula, LogicId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A finite Kripke model in exchange format: world names, the full
/// (reflexive-transitive) order relation as pairs, and per-world atom sets.
/// The pseudo-atom `false` marks worlds forcing `⊥` (minimal-logic models
/// only).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KripkeModel {
    pub worlds: Vec<String>,
    pub order: Vec<(String, String)>,
    pub valuation: BTreeMap<String, BTreeSet<String>>,
}

impl KripkeModel {
    /// Check the structural invariants: the order is reflexive, transitive,
    /// and antisymmetric over known worlds, valuations mention only known
    /// worlds, and forcing is persistent along the order.
    pub fn validate(&self) -> Result<(), String> {
        let index: HashMap<&str, usize> =
            self.worlds.iter().enumerate().map(|(i, w)| (w.as_str(), i)).collect();
        if index.len() != self.worlds.len() {
            return Err("duplicate world names".into());
        }
        let mut leq = vec![vec![false; self.worlds.len()]; self.worlds.len()];
        for (u, v) in &self.order {
            let (i, j) = match (index.get(u.as_str()), index.get(v.as_str())) {
                (Some(&i), Some(&j)) => (i, j),
                _ => return Err(format!("order mentions unknown world in ({u}, {v})")),
            };
            leq[i][j] = true;
        }
        for i in 0..self.worlds.len() {
            if !leq[i][i] {
                return Err(format!("order is not reflexive at {}", self.worlds[i]));
            }
            for j in 0..self.worlds.len() {
                if leq[i][j] && leq[j][i] && i != j {
                    return Err(format!(
                        "order is not antisymmetric on ({}, {})",
                        self.worlds[i], self.worlds[j]
                    ));
                }
                for k in 0..self.worlds.len() {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(format!(
                            "order is not transitive through {}",
                            self.worlds[j]
                        ));
                    }
                }
            }
        }
        let empty = BTreeSet::new();
        for (w, atoms) in &self.valuation {
            if !index.contains_key(w.as_str()) {
                return Err(format!("valuation mentions unknown world {w}"));
            }
            let i = index[w.as_str()];
            for (v, j) in index.iter() {
                if leq[i][*j] {
                    let above = self.valuation.get(*v).unwrap_or(&empty);
                    if !atoms.is_subset(above) {
                        return Err(format!(
                            "valuation is not persistent from {w} to {v}"
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Evaluate the forcing relation `world ⊩ formula`.  `false` is forced
/// exactly where the valuation contains the `false` marker, so the same
/// evaluation serves minimal-logic models (which may contain it) and
/// intuitionistic ones (which never do).
pub fn eval_model(
    model: &KripkeModel,
    world: &str,
    formula: &Formula,
) -> Result<bool, ProverError> {
    if !formula.is_quantifier_free() {
        return Err(ProverError::QuantifierPresent { formula: formula.to_string() });
    }
    let n = model.worlds.len();
    let index: HashMap<&str, usize> =
        model.worlds.iter().enumerate().map(|(i, w)| (w.as_str(), i)).collect();
    let Some(&w) = index.get(world) else {
        return Err(ProverError::UnknownWorld(world.to_string()));
    };
    let mut up = vec![0u32; n];
    for i in 0..n {
        up[i] |= 1 << i;
    }
    for (u, v) in &model.order {
        if let (Some(&i), Some(&j)) = (index.get(u.as_str()), index.get(v.as_str())) {
            up[i] |= 1 << j;
        }
    }
    let mask_of = |name: &str| -> u32 {
        let mut m = 0;
        for (i, w) in model.worlds.iter().enumerate() {
            if model.valuation.get(w).is_some_and(|atoms| atoms.contains(name)) {
                m |= 1 << i;
            }
        }
        m
    };
    let mut names: Vec<String> = collect_atom_names(formula).into_iter().collect();
    names.push(BOTTOM_MARKER.to_string());
    let atom_index: HashMap<String, usize> =
        names.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
    let masks: Vec<u32> = names.iter().map(|a| mask_of(a)).collect();
    let compiled = compile(formula, &atom_index, Some(atom_index[BOTTOM_MARKER]));
    Ok(force_mask(&compiled, &masks, &up) >> w & 1 == 1)
}

/// Search for a model with at most `max_worlds` worlds whose root refutes
/// the formula.  `Ok(None)` means no model within the bound, which does not
/// by itself assert provability.
pub fn countermodel(
    logic: LogicId,
    formula: &Formula,
    max_worlds: usize,
) -> Result<Option<KripkeModel>, ProverError> {
    if logic == LogicId::Cl {
        return Err(ProverError::UnsupportedLogic);
    }
    if max_worlds == 0 {
        return Err(ProverError::InvalidMaxWorlds);
    }
    if !formula.is_quantifier_free() {
        return Err(ProverError::QuantifierPresent { formula: formula.to_string() });
    }
    let ml_mode = logic == LogicId::Ml;
    let mut names: Vec<String> = collect_atom_names(formula).into_iter().collect();
    if ml_mode {
        names.push(BOTTOM_MARKER.to_string());
        names.sort();
        names.dedup();
    }
    let atom_index: HashMap<String, usize> =
        names.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();
    let bottom = ml_mode.then(|| atom_index[BOTTOM_MARKER]);
    let compiled = compile(formula, &atom_index, bottom);
    for n in 1..=max_worlds {
        for up in rooted_orders(n) {
            let upsets = upward_closed_sets(&up);
            if let Some(masks) = refuting_valuation(&compiled, names.len(), &up, &upsets) {
                return Ok(Some(build_model(&up, &names, &masks)));
            }
        }
    }
    Ok(None)
}

/// Try every assignment of upward-closed forcing sets to the atoms, in
/// lexicographic order (first atom most significant), returning the first
/// one under which the root fails to force the compiled formula.
fn refuting_valuation(
    compiled: &Compiled,
    num_atoms: usize,
    up: &[u32],
    upsets: &[u32],
) -> Option<Vec<u32>> {
    let mut digits = vec![0usize; num_atoms];
    loop {
        let masks: Vec<u32> = digits.iter().map(|&d| upsets[d]).collect();
        if force_mask(compiled, &masks, up) & 1 == 0 {
            return Some(masks);
        }
        // Odometer increment, last digit fastest.
        let mut pos = num_atoms;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < upsets.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// All partial orders on `{0, …, n-1}` with `0` below everything, one
/// canonical representative per isomorphism class, sorted.  `up[i]` is the
/// bitmask of worlds `j` with `i ≤ j` (reflexive and transitively closed).
fn rooted_orders(n: usize) -> Vec<Vec<u32>> {
    let mut pairs = Vec::new();
    for i in 1..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    let perms = permutations_fixing_root(n);
    let mut canonical = BTreeSet::new();
    for bits in 0u32..(1 << pairs.len()) {
        let mut up = vec![0u32; n];
        for (i, row) in up.iter_mut().enumerate() {
            *row |= 1 << i;
        }
        for j in 1..n {
            up[0] |= 1 << j;
        }
        for (k, (i, j)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                up[*i] |= 1 << j;
            }
        }
        // Every finite poset numbers its elements along a linear extension,
        // so edges pointing up the numeric order lose no isomorphism class.
        for k in 0..n {
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut permuted = vec![0u32; n];
                for i in 0..n {
                    for j in 0..n {
                        if up[i] >> j & 1 == 1 {
                            permuted[p[i]] |= 1 << p[j];
                        }
                    }
                }
                permuted
            })
            .min()
            .expect("at least the identity permutation");
        canonical.insert(canon);
    }
    canonical.into_iter().collect()
}

fn permutations_fixing_root(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &[usize]) -> Vec<Vec<usize>> {
        if rest.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (i, &x) in rest.iter().enumerate() {
            let mut remaining = rest.to_vec();
            remaining.remove(i);
            for mut tail in rec(&remaining) {
                tail.insert(0, x);
                out.push(tail);
            }
        }
        out
    }
    rec(&(1..n).collect::<Vec<_>>())
        .into_iter()
        .map(|tail| {
            let mut p = vec![0];
            p.extend(tail);
            p
        })
        .collect()
}

fn upward_closed_sets(up: &[u32]) -> Vec<u32> {
    let n = up.len();
    (0u32..(1 << n))
        .filter(|m| (0..n).all(|i| m >> i & 1 == 0 || up[i] & !m == 0))
        .collect()
}

fn build_model(up: &[u32], names: &[String], masks: &[u32]) -> KripkeModel {
    let n = up.len();
    let worlds: Vec<String> = (0..n).map(|i| format!("w{i}")).collect();
    let mut order = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if up[i] >> j & 1 == 1 {
                order.push((worlds[i].clone(), worlds[j].clone()));
            }
        }
    }
    let mut valuation: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for (i, w) in worlds.iter().enumerate() {
        let forced: BTreeSet<String> = names
            .iter()
            .zip(masks)
            .filter(|(_, &m)| m >> i & 1 == 1)
            .map(|(a, _)| a.clone())
            .collect();
        valuation.insert(w.clone(), forced);
    }
    KripkeModel { worlds, order, valuation }
}
