//! Negative translations of classical first-order logic into minimal logic.
//!
//! The crate centres on the double-negation translation that prefixes `~~`
//! at the outside and below each universal quantifier, together with eight
//! variants that differ in how atoms or implications are rewritten, all of
//! which land in minimal logic rather than intuitionistic logic.  Around the
//! translations sit:
//!
//! - [`syntax`]: first-order formulas, parsing, and printing;
//! - [`translate`]: the translation functions themselves;
//! - [`prover`]: decision procedures for the propositional fragments of
//!   minimal, intuitionistic, and classical logic, plus a Kripke
//!   countermodel search;
//! - [`proof`]: natural-deduction proof terms, a proof checker, proof
//!   transformers that turn classical derivations into minimal-logic
//!   derivations of translated sequents, and synthesized equivalence proofs
//!   connecting the variants;
//! - [`harness`]: randomized end-to-end verification suites with
//!   machine-readable reports;
//! - [`cli`]: the command-line interface.

pub mod cli;
pub mod harness;
pub mod proof;
pub mod prover;
pub mod syntax;
pub mod translate;

#[cfg(test)]
pub(crate) mod testutil;
