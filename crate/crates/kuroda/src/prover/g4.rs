//! Contraction-free sequent search for propositional intuitionistic and
//! minimal logic.
//!
//! One engine decides both logics.  In intuitionistic mode the two
//! bottom-specific left rules are active: `Γ, ⊥ ⇒ G` closes immediately, and
//! a hypothesis `⊥ -> B` may be discarded.  In minimal mode both are
//! disabled, which makes `⊥` an inert atom: it can close `Γ, ⊥ ⇒ ⊥` through
//! the ordinary axiom rule and trigger the atom-implication rule, and
//! nothing else.
//!
//! Left rules on implications dispatch on the antecedent so no contraction
//! is needed and search terminates without loop checking:
//!
//! - `p -> B` with atomic `p` fires only when `p` is in the context;
//! - `(A & B) -> C` becomes `A -> (B -> C)`;
//! - `(A | B) -> C` becomes `A -> C` and `B -> C`;
//! - `(A -> B) -> C` is the one backtracking point: prove `A -> B` under
//!   `B -> C`, then continue with `C`.
//!
//! Formulas are interned into integer ids up front (structurally equal
//! subformulas share an id), contexts are sorted id slices, and memoization
//! keys are id slices too, so branching clones machine words rather than
//! trees and the memo stays compact on large inputs.  Each id also carries a
//! small classical truth table; a subgoal refuted by it is discarded without
//! search, which prunes the backtracking rules hard and is sound because
//! both logics prove only classical validities under the matching reading
//! of `⊥` (constant false intuitionistically, one more atom minimally).

use crate::syntax::{bot, conj, disj, imp, render, Formula, RenderStyle, Sequent};
use std::collections::HashMap;

/// Derivation log produced on request.  Each step records the rule applied
/// and the sequent it was applied to, indented by search depth; `memo` steps
/// mark subgoals answered from the cache.
#[derive(Debug, Default, Clone)]
pub struct Transcript {
    pub steps: Vec<String>,
}

impl std::fmt::Display for Transcript {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

type Id = u32;

/// A formula with its top connective exposed and subformulas replaced by
/// their interned ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Atom,
    Bottom,
    Conj(Id, Id),
    Disj(Id, Id),
    Impl(Id, Id),
}

/// Interning key: atoms by their rendered form (ground arguments included,
/// matching the atom identity the other decision procedures use), compounds
/// by the ids of their parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Key {
    Atom(String),
    Bottom,
    Conj(Id, Id),
    Disj(Id, Id),
    Impl(Id, Id),
}

/// How many distinct atoms the per-id truth-table bitmasks can track.  Six
/// atoms index the 64 rows of a `u64`; beyond that the semantic pruning is
/// switched off and the search runs purely syntactically.
const MASK_COLUMNS: u32 = 6;

/// Rows of the 64-row table where atom column `c` is true.
fn column_pattern(c: u32) -> u64 {
    let mut mask = 0u64;
    for row in 0..64u64 {
        if (row >> c) & 1 == 1 {
            mask |= 1 << row;
        }
    }
    mask
}

struct Table {
    shapes: Vec<Shape>,
    ids: HashMap<Key, Id>,
    /// Original formulas of the atom ids, kept to rebuild sequents for the
    /// transcript.
    atoms: HashMap<Id, Formula>,
    /// Truth table of each id over the rows of `column_pattern`, used to
    /// discard subgoals that already fail classically.  In intuitionistic
    /// mode `⊥` is constant false; in minimal mode it is one more atom,
    /// which is the classical reading of a logic with no `⊥` rules.
    masks: Vec<u64>,
    columns: u32,
    sem_ok: bool,
    il_mode: bool,
}

impl Table {
    fn new(il_mode: bool) -> Self {
        Table {
            shapes: Vec::new(),
            ids: HashMap::new(),
            atoms: HashMap::new(),
            masks: Vec::new(),
            columns: 0,
            sem_ok: true,
            il_mode,
        }
    }

    fn atom_mask(&mut self) -> u64 {
        if self.columns == MASK_COLUMNS {
            self.sem_ok = false;
            return 0;
        }
        let mask = column_pattern(self.columns);
        self.columns += 1;
        mask
    }

    fn intern(&mut self, key: Key, shape: Shape) -> Id {
        if let Some(&id) = self.ids.get(&key) {
            return id;
        }
        let mask = match shape {
            Shape::Atom => self.atom_mask(),
            Shape::Bottom => {
                if self.il_mode {
                    0
                } else {
                    self.atom_mask()
                }
            }
            Shape::Conj(a, b) => self.masks[a as usize] & self.masks[b as usize],
            Shape::Disj(a, b) => self.masks[a as usize] | self.masks[b as usize],
            Shape::Impl(a, b) => !self.masks[a as usize] | self.masks[b as usize],
        };
        let id = self.shapes.len() as Id;
        self.shapes.push(shape);
        self.masks.push(mask);
        self.ids.insert(key, id);
        id
    }

    /// Is there a table row satisfying every hypothesis but not the goal?
    /// Only meaningful while `sem_ok` holds.
    fn refutable(&self, gamma: &[Id], goal: Id) -> bool {
        let mut rows = !self.masks[goal as usize];
        for &h in gamma {
            rows &= self.masks[h as usize];
            if rows == 0 {
                return false;
            }
        }
        rows != 0
    }

    fn intern_formula(&mut self, f: &Formula) -> Id {
        match f {
            Formula::Bottom => self.intern(Key::Bottom, Shape::Bottom),
            Formula::Atom(..) => {
                let name = render(f, RenderStyle::Ascii);
                let id = self.intern(Key::Atom(name), Shape::Atom);
                self.atoms.entry(id).or_insert_with(|| f.clone());
                id
            }
            Formula::Conj(a, b) => {
                let (x, y) = (self.intern_formula(a), self.intern_formula(b));
                self.intern(Key::Conj(x, y), Shape::Conj(x, y))
            }
            Formula::Disj(a, b) => {
                let (x, y) = (self.intern_formula(a), self.intern_formula(b));
                self.intern(Key::Disj(x, y), Shape::Disj(x, y))
            }
            Formula::Impl(a, b) => {
                let (x, y) = (self.intern_formula(a), self.intern_formula(b));
                self.intern(Key::Impl(x, y), Shape::Impl(x, y))
            }
            Formula::Forall(..) | Formula::Exists(..) => {
                unreachable!("the search is only ever handed quantifier-free sequents")
            }
        }
    }

    fn mk_impl(&mut self, a: Id, b: Id) -> Id {
        self.intern(Key::Impl(a, b), Shape::Impl(a, b))
    }

    fn shape(&self, id: Id) -> Shape {
        self.shapes[id as usize]
    }

    /// Rebuild the formula behind an id (transcript rendering only).
    fn formula(&self, id: Id) -> Formula {
        match self.shape(id) {
            Shape::Atom => self.atoms[&id].clone(),
            Shape::Bottom => bot(),
            Shape::Conj(a, b) => conj(self.formula(a), self.formula(b)),
            Shape::Disj(a, b) => disj(self.formula(a), self.formula(b)),
            Shape::Impl(a, b) => imp(self.formula(a), self.formula(b)),
        }
    }

    fn sequent_line(&self, gamma: &[Id], goal: Id) -> String {
        let mut hyps: Vec<String> = gamma
            .iter()
            .map(|&h| render(&self.formula(h), RenderStyle::Ascii))
            .collect();
        hyps.sort();
        format!("{} |- {}", hyps.join(", "), render(&self.formula(goal), RenderStyle::Ascii))
    }
}

/// Insert into a sorted id set, keeping it sorted and duplicate-free.
fn insert(gamma: &mut Vec<Id>, id: Id) {
    if let Err(pos) = gamma.binary_search(&id) {
        gamma.insert(pos, id);
    }
}

fn contains(gamma: &[Id], id: Id) -> bool {
    gamma.binary_search(&id).is_ok()
}

fn remove(gamma: &mut Vec<Id>, id: Id) {
    if let Ok(pos) = gamma.binary_search(&id) {
        gamma.remove(pos);
    }
}

pub(crate) struct Search<'t> {
    il_mode: bool,
    table: Table,
    memo: HashMap<(Box<[Id]>, Id), bool>,
    trace: Option<&'t mut Transcript>,
    depth: usize,
    bottom: Id,
}

impl<'t> Search<'t> {
    pub fn new(il_mode: bool, trace: Option<&'t mut Transcript>) -> Self {
        let mut table = Table::new(il_mode);
        let bottom = table.intern(Key::Bottom, Shape::Bottom);
        Search { il_mode, table, memo: HashMap::new(), trace, depth: 0, bottom }
    }

    pub fn prove_sequent(&mut self, sequent: &Sequent) -> bool {
        let mut gamma = Vec::new();
        for (_, f) in &sequent.hypotheses {
            let id = self.table.intern_formula(f);
            insert(&mut gamma, id);
        }
        let goal = self.table.intern_formula(&sequent.conclusion);
        self.prove(gamma, goal)
    }

    fn log(&mut self, rule: &str, gamma: &[Id], goal: Id) {
        if self.trace.is_some() {
            let line = format!(
                "{}{rule}: {}",
                "  ".repeat(self.depth),
                self.table.sequent_line(gamma, goal)
            );
            self.trace.as_mut().unwrap().steps.push(line);
        }
    }

    fn sub(&mut self, mut gamma: Vec<Id>, drop: Option<Id>, add: &[Id], goal: Id) -> bool {
        if let Some(id) = drop {
            remove(&mut gamma, id);
        }
        for &id in add {
            insert(&mut gamma, id);
        }
        self.depth += 1;
        let r = self.prove(gamma, goal);
        self.depth -= 1;
        r
    }

    fn prove(&mut self, gamma: Vec<Id>, goal: Id) -> bool {
        // Invertible right rules.
        match self.table.shape(goal) {
            Shape::Impl(a, b) => {
                self.log("R->", &gamma, goal);
                return self.sub(gamma, None, &[a], b);
            }
            Shape::Conj(a, b) => {
                self.log("R&", &gamma, goal);
                return self.sub(gamma.clone(), None, &[], a) && self.sub(gamma, None, &[], b);
            }
            _ => {}
        }
        let key = (gamma.clone().into_boxed_slice(), goal);
        if let Some(&hit) = self.memo.get(&key) {
            if self.trace.is_some() {
                let line = format!(
                    "{}memo[{hit}]: {}",
                    "  ".repeat(self.depth),
                    self.table.sequent_line(&gamma, goal)
                );
                self.trace.as_mut().unwrap().steps.push(line);
            }
            return hit;
        }
        let result = self.search(gamma, goal);
        self.memo.insert(key, result);
        result
    }

    /// Goal is atomic or a disjunction here.
    fn search(&mut self, gamma: Vec<Id>, goal: Id) -> bool {
        // A subgoal that fails classically fails constructively, so a truth
        // table can cut an unprovable branch before the rules expand it.
        if self.table.sem_ok && self.table.refutable(&gamma, goal) {
            self.log("prune", &gamma, goal);
            return false;
        }
        if self.il_mode && contains(&gamma, self.bottom) {
            self.log("L-bot", &gamma, goal);
            return true;
        }
        if contains(&gamma, goal) {
            self.log("axiom", &gamma, goal);
            return true;
        }
        // Invertible left rules: commit to the first applicable one.
        for pos in 0..gamma.len() {
            let h = gamma[pos];
            match self.table.shape(h) {
                Shape::Conj(a, b) => {
                    self.log("L&", &gamma, goal);
                    return self.sub(gamma, Some(h), &[a, b], goal);
                }
                Shape::Disj(a, b) => {
                    self.log("L|", &gamma, goal);
                    return self.sub(gamma.clone(), Some(h), &[a], goal)
                        && self.sub(gamma, Some(h), &[b], goal);
                }
                Shape::Impl(ant, b) => match self.table.shape(ant) {
                    Shape::Atom | Shape::Bottom if contains(&gamma, ant) => {
                        self.log("L0->", &gamma, goal);
                        return self.sub(gamma, Some(h), &[b], goal);
                    }
                    Shape::Bottom if self.il_mode => {
                        self.log("Lbot->", &gamma, goal);
                        return self.sub(gamma, Some(h), &[], goal);
                    }
                    Shape::Conj(a1, a2) => {
                        self.log("L&->", &gamma, goal);
                        let inner = self.table.mk_impl(a2, b);
                        let curried = self.table.mk_impl(a1, inner);
                        return self.sub(gamma, Some(h), &[curried], goal);
                    }
                    Shape::Disj(a1, a2) => {
                        self.log("L|->", &gamma, goal);
                        let f1 = self.table.mk_impl(a1, b);
                        let f2 = self.table.mk_impl(a2, b);
                        return self.sub(gamma, Some(h), &[f1, f2], goal);
                    }
                    _ => {}
                },
                _ => {}
            }
        }
        // Backtracking points: disjunction goal, then nested implications.
        if let Shape::Disj(a, b) = self.table.shape(goal) {
            self.log("R|", &gamma, goal);
            if self.sub(gamma.clone(), None, &[], a) {
                return true;
            }
            if self.sub(gamma.clone(), None, &[], b) {
                return true;
            }
        }
        for pos in 0..gamma.len() {
            let h = gamma[pos];
            if let Shape::Impl(ant, b) = self.table.shape(h) {
                if let Shape::Impl(c, d) = self.table.shape(ant) {
                    self.log("L->->", &gamma, goal);
                    let premise = self.table.mk_impl(d, b);
                    let target = self.table.mk_impl(c, d);
                    if self.sub(gamma.clone(), Some(h), &[premise], target)
                        && self.sub(gamma.clone(), Some(h), &[b], goal)
                    {
                        return true;
                    }
                }
            }
        }
        self.log("fail", &gamma, goal);
        false
    }
}
