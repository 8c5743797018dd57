//! Randomised verification of the translations, transformers, and provers.
//!
//! Eight suites each check one family of claims over generated formulas.
//! Per sample `A` (drawn by [`random_formula`] from a [`GeneratorConfig`]):
//!
//! - `soundness-derivability` — `decide(cl, A) == decide(ml, i(A))` for each
//!   selected variant `i` among `k1`–`k8`.
//! - `characterisation` — `A <-> i(A)` is classically valid, for `k` and
//!   each variant.
//! - `leivant-equivalence` — `decide(ml, tᵢ(K A) <-> kᵢ(A)) = provable` for
//!   `i = 1..4`.
//! - `shoenfield-equivalence` — `decide(ml, K(t5 A) <-> k5(A)) = provable`.
//! - `k678-equivalence` — the inner `k6` translation is provably equivalent
//!   in minimal logic to the inner `k7` and `k8` translations.
//! - `k6-lemmas` — the three minimal-logic lemmas behind the `k6`
//!   implication clause, instantiated with independently drawn `D`, `E`.
//! - `pipeline` — every curated classical proof survives
//!   [`soundness_pipeline`](crate::proof::soundness_pipeline) into each
//!   auxiliary translation, and the synthesized equivalence and absorption
//!   proofs check in minimal logic (the one suite that accepts quantified
//!   samples; its first failures, indexed by corpus position, name the
//!   curated entry in the formula field).
//! - `prover-cross` — Glivenko's bridge, the minimal-to-intuitionistic
//!   reduction by an inert fresh atom, and refutation soundness of
//!   countermodel search, across the independent decision procedures.
//!
//! All suites except `pipeline` decide formulas with the propositional
//! procedures and therefore require `quantifier_free` sampling.  A
//! [`SuiteReport`] serializes to JSON with the keys `suite`, `variants`,
//! `samples`, `seed`, `failures` (each with `index`, `formula`, `expected`,
//! `actual`, and a `replay` command line), and `elapsed_ms`; a suite passes
//! exactly when `failures` is empty, and rerunning with the same config
//! reproduces the same failures.

mod generate;
mod suites;

pub use generate::{random_formula, ConnectiveWeights, GeneratorConfig};

use crate::prover::ProverError;
use crate::translate::{
    default_witness, Mutation, TranslateError, TranslationId, Translator,
};
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Why a suite could not run.  Claim violations are never errors — they are
/// collected as [`Failure`]s in the report.
#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error(
        "suite `{suite}` decides formulas with the propositional procedures; \
         it needs a quantifier-free generator config"
    )]
    QuantifiersNotSupported { suite: SuiteId },
    #[error(transparent)]
    Translate(#[from] TranslateError),
    #[error(transparent)]
    Prover(#[from] ProverError),
}

/// The eight verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteId {
    SoundnessDerivability,
    Characterisation,
    LeivantEquivalence,
    ShoenfieldEquivalence,
    K678Equivalence,
    K6Lemmas,
    Pipeline,
    ProverCross,
}

impl SuiteId {
    pub const ALL: [SuiteId; 8] = [
        SuiteId::SoundnessDerivability,
        SuiteId::Characterisation,
        SuiteId::LeivantEquivalence,
        SuiteId::ShoenfieldEquivalence,
        SuiteId::K678Equivalence,
        SuiteId::K6Lemmas,
        SuiteId::Pipeline,
        SuiteId::ProverCross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::SoundnessDerivability => "soundness-derivability",
            SuiteId::Characterisation => "characterisation",
            SuiteId::LeivantEquivalence => "leivant-equivalence",
            SuiteId::ShoenfieldEquivalence => "shoenfield-equivalence",
            SuiteId::K678Equivalence => "k678-equivalence",
            SuiteId::K6Lemmas => "k6-lemmas",
            SuiteId::Pipeline => "pipeline",
            SuiteId::ProverCross => "prover-cross",
        }
    }

    /// Every suite except `pipeline` decides formulas with the propositional
    /// procedures, so its samples must be quantifier-free.
    pub fn requires_quantifier_free(self) -> bool {
        self != SuiteId::Pipeline
    }
}

impl std::fmt::Display for SuiteId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SuiteId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteId::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = SuiteId::ALL.iter().map(|suite| suite.name()).collect();
                format!("unknown suite `{s}` (expected one of: {})", names.join(", "))
            })
    }
}

/// One claim violation: which sample, on what formula, what should have held
/// and what was observed instead, plus a command line that regenerates the
/// failing sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub index: usize,
    pub formula: String,
    pub expected: String,
    pub actual: String,
    pub replay: String,
}

/// The outcome of one suite run.  `(suite, seed, samples)` plus the
/// generator defaults reproduce it exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub variants: Vec<String>,
    pub samples: usize,
    pub seed: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    /// A suite passes exactly when it recorded no failures.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One human-readable line: suite, verdict, and the headline numbers.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} samples, variants [{}], {} failures, {} ms)",
            self.suite,
            if self.passed() { "pass" } else { "fail" },
            self.samples,
            self.variants.join(" "),
            self.failures.len(),
            self.elapsed_ms,
        )
    }
}

/// Run one suite with the shipped translations.
pub fn run_suite(
    suite: SuiteId,
    config: &GeneratorConfig,
    selection: &[TranslationId],
) -> Result<SuiteReport, HarnessError> {
    run_suite_with(&Translator::default(), suite, config, selection)
}

/// Run every suite in [`SuiteId::ALL`] order.
pub fn run_all(
    config: &GeneratorConfig,
    selection: &[TranslationId],
) -> Result<Vec<SuiteReport>, HarnessError> {
    SuiteId::ALL
        .into_iter()
        .map(|suite| run_suite(suite, config, selection))
        .collect()
}

/// Run one suite through an explicit [`Translator`], the hook by which a
/// deliberately wrong clause ([`Mutation`]) or the fixed-`false` reading
/// (`bottom_atomic = false`) is injected.  `selection` narrows the variants
/// of the suites that iterate over `k`/`k1`–`k8`; the other suites have
/// fixed coverage and ignore it.
pub fn run_suite_with(
    translator: &Translator,
    suite: SuiteId,
    config: &GeneratorConfig,
    selection: &[TranslationId],
) -> Result<SuiteReport, HarnessError> {
    config.validate()?;
    if suite.requires_quantifier_free() && !config.quantifier_free {
        return Err(HarnessError::QuantifiersNotSupported { suite });
    }
    let variants = covered_variants(suite, selection)?;
    let start = Instant::now();
    let mut failures = Vec::new();
    match suite {
        SuiteId::SoundnessDerivability => {
            suites::soundness(translator, config, &variants, &mut failures)?
        }
        SuiteId::Characterisation => {
            suites::characterisation(translator, config, &variants, &mut failures)?
        }
        SuiteId::LeivantEquivalence => {
            suites::leivant_equivalence(translator, config, &mut failures)?
        }
        SuiteId::ShoenfieldEquivalence => {
            suites::shoenfield_equivalence(translator, config, &mut failures)?
        }
        SuiteId::K678Equivalence => {
            suites::k678_equivalence(translator, config, &mut failures)?
        }
        SuiteId::K6Lemmas => suites::k6_lemmas(config, &mut failures)?,
        SuiteId::Pipeline => suites::pipeline(config, &mut failures)?,
        SuiteId::ProverCross => suites::prover_cross(config, &mut failures)?,
    }
    failures.sort_by_key(|failure| failure.index);
    Ok(SuiteReport {
        suite,
        variants: variants.iter().map(|id| id.name().to_string()).collect(),
        samples: config.samples,
        seed: config.seed,
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// The translations a suite covers, in canonical order.  For the two suites
/// with a variant loop a non-empty `selection` narrows the loop; selecting
/// only inapplicable translations is an error.
fn covered_variants(
    suite: SuiteId,
    selection: &[TranslationId],
) -> Result<Vec<TranslationId>, HarnessError> {
    use TranslationId::{K6, K7, K8, T1, T2, T3, T4};
    let narrowed = |applicable: Vec<TranslationId>| {
        if selection.is_empty() {
            return Ok(applicable);
        }
        let picked: Vec<TranslationId> = applicable
            .iter()
            .filter(|id| selection.contains(id))
            .cloned()
            .collect();
        if picked.is_empty() {
            return Err(HarnessError::InvalidConfig(format!(
                "suite `{suite}` covers {}; none of the selected variants apply",
                applicable
                    .iter()
                    .map(TranslationId::name)
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        Ok(picked)
    };
    match suite {
        SuiteId::SoundnessDerivability => narrowed(TranslationId::kuroda_variants()),
        SuiteId::Characterisation => narrowed(TranslationId::kuroda_family()),
        SuiteId::LeivantEquivalence | SuiteId::Pipeline => Ok(vec![T1, T2, T3, T4]),
        SuiteId::ShoenfieldEquivalence => Ok(vec![TranslationId::T5(default_witness())]),
        SuiteId::K678Equivalence => Ok(vec![K7, K8]),
        SuiteId::K6Lemmas => Ok(vec![K6]),
        SuiteId::ProverCross => Ok(vec![]),
    }
}

/// The suites that consult the [`Translator`] hook and can therefore catch
/// an injected mutation; the remaining three exercise the shipped
/// transformers and provers directly.
pub const TRANSLATION_SUITES: [SuiteId; 5] = [
    SuiteId::SoundnessDerivability,
    SuiteId::Characterisation,
    SuiteId::LeivantEquivalence,
    SuiteId::ShoenfieldEquivalence,
    SuiteId::K678Equivalence,
];

/// The suites consulted to confirm a deliberately wrong clause is caught,
/// most likely detector first.
pub fn detection_order(mutation: Mutation) -> Vec<SuiteId> {
    let first = match mutation {
        Mutation::KImplSwap => SuiteId::Characterisation,
        Mutation::K1AtomPlain
        | Mutation::K2AtomPlain
        | Mutation::K3AtomDropConsequent
        | Mutation::K4ImplPlain
        | Mutation::K5ImplDropNeg
        | Mutation::K6ImplPlain => SuiteId::SoundnessDerivability,
        Mutation::K7ImplNoSwap | Mutation::K8DropInnerNeg => SuiteId::K678Equivalence,
        Mutation::T1AtomPlain | Mutation::T2AtomPlain | Mutation::T3AtomDropConsequent => {
            SuiteId::LeivantEquivalence
        }
        Mutation::T5ImplDropNeg => SuiteId::ShoenfieldEquivalence,
    };
    let mut order = vec![first];
    order.extend(TRANSLATION_SUITES.iter().copied().filter(|suite| *suite != first));
    order
}

/// The command line that reruns a suite far enough to regenerate the sample
/// at `samples_needed - 1` (or, with `samples_needed = 0`, only the suite's
/// fixed prologue).
fn replay_line(
    suite: SuiteId,
    config: &GeneratorConfig,
    variant: Option<&TranslationId>,
    samples_needed: usize,
) -> String {
    let mut line = format!(
        "kuroda verify --suite {suite} --seed {} --samples {samples_needed}",
        config.seed
    );
    if config.max_depth != GeneratorConfig::default().max_depth {
        line.push_str(&format!(" --max-depth {}", config.max_depth));
    }
    if let Some(id) = variant {
        line.push_str(&format!(" --variants {}", id.name()));
    }
    line
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(samples: usize) -> GeneratorConfig {
        GeneratorConfig { samples, ..GeneratorConfig::default() }
    }

    #[test]
    fn every_suite_passes_at_the_default_settings() {
        for suite in SuiteId::ALL {
            let samples = match suite {
                SuiteId::Pipeline => 12,
                SuiteId::ProverCross => 60,
                _ => 40,
            };
            let report = run_suite(suite, &small(samples), &[]).unwrap();
            assert!(report.passed(), "{}: {:#?}", suite, report.failures);
            assert_eq!(report.suite, suite);
            assert_eq!(report.samples, samples);
            assert_eq!(report.seed, 1729);
            assert!(report.summary().contains("pass"));
        }
    }

    #[test]
    fn only_the_pipeline_suite_accepts_quantified_samples() {
        let quantified = GeneratorConfig {
            quantifier_free: false,
            samples: 8,
            ..GeneratorConfig::default()
        };
        let report = run_suite(SuiteId::Pipeline, &quantified, &[]).unwrap();
        assert!(report.passed(), "{:#?}", report.failures);
        for suite in SuiteId::ALL.into_iter().filter(|s| *s != SuiteId::Pipeline) {
            let error = run_suite(suite, &quantified, &[]).unwrap_err();
            assert!(
                matches!(error, HarnessError::QuantifiersNotSupported { suite: s } if s == suite),
                "unexpected error for {suite}: {error}"
            );
        }
    }

    #[test]
    fn failure_lists_are_reproducible_and_sorted() {
        let translator = Translator::with_mutation(Mutation::K2AtomPlain);
        let config = small(60);
        let selection = [TranslationId::K2];
        let first =
            run_suite_with(&translator, SuiteId::SoundnessDerivability, &config, &selection)
                .unwrap();
        let second =
            run_suite_with(&translator, SuiteId::SoundnessDerivability, &config, &selection)
                .unwrap();
        assert!(!first.passed(), "the broken atom clause should be caught");
        assert_eq!(first.failures, second.failures);
        assert!(first
            .failures
            .windows(2)
            .all(|pair| pair[0].index <= pair[1].index));
        let failure = &first.failures[0];
        assert!(!failure.formula.is_empty());
        assert!(failure.replay.contains("verify --suite soundness-derivability"));
        assert!(failure.replay.contains("--seed 1729"));
        assert!(failure.replay.contains("--variants k2"));
        assert!(failure.expected.contains("decide"));
    }

    #[test]
    fn every_shipped_mutation_trips_a_suite() {
        let config = small(60);
        for mutation in Mutation::ALL {
            let translator = Translator::with_mutation(mutation);
            let caught = detection_order(mutation).into_iter().any(|suite| {
                !run_suite_with(&translator, suite, &config, &[])
                    .unwrap()
                    .passed()
            });
            assert!(caught, "mutation {mutation} slipped past every suite");
        }
    }

    #[test]
    fn the_fixed_false_reading_is_also_sound() {
        let fixed = Translator { bottom_atomic: false, mutation: None };
        for suite in [SuiteId::SoundnessDerivability, SuiteId::Characterisation] {
            let report = run_suite_with(&fixed, suite, &small(40), &[]).unwrap();
            assert!(report.passed(), "{}: {:#?}", suite, report.failures);
        }
    }

    #[test]
    fn selection_narrows_the_variant_loops() {
        let report =
            run_suite(SuiteId::SoundnessDerivability, &small(10), &[TranslationId::K3]).unwrap();
        assert_eq!(report.variants, vec!["k3"]);
        let report =
            run_suite(SuiteId::Characterisation, &small(10), &[TranslationId::K]).unwrap();
        assert_eq!(report.variants, vec!["k"]);
        let error = run_suite(SuiteId::SoundnessDerivability, &small(10), &[TranslationId::T1])
            .unwrap_err();
        assert!(error.to_string().contains("soundness-derivability"));
        let report =
            run_suite(SuiteId::LeivantEquivalence, &small(5), &[TranslationId::K3]).unwrap();
        assert_eq!(report.variants, vec!["t1", "t2", "t3", "t4"], "fixed coverage");
    }

    #[test]
    fn reports_serialize_with_the_documented_keys() {
        let report = run_suite(SuiteId::K6Lemmas, &small(5), &[]).unwrap();
        let value = serde_json::to_value(&report).unwrap();
        assert_eq!(value["suite"], "k6-lemmas");
        assert_eq!(value["variants"], serde_json::json!(["k6"]));
        assert_eq!(value["samples"], 5);
        assert_eq!(value["seed"], 1729);
        assert_eq!(value["failures"], serde_json::json!([]));
        assert!(value["elapsed_ms"].is_u64());

        let failure = Failure {
            index: 3,
            formula: "P | ~P".into(),
            expected: "provable".into(),
            actual: "unprovable".into(),
            replay: "kuroda verify --suite k6-lemmas --seed 1 --samples 4".into(),
        };
        let value = serde_json::to_value(&failure).unwrap();
        for key in ["index", "formula", "expected", "actual", "replay"] {
            assert!(value.get(key).is_some(), "missing key `{key}`");
        }
        let back: Failure = serde_json::from_value(value).unwrap();
        assert_eq!(back, failure);
    }

    #[test]
    fn suite_ids_round_trip_through_names_and_serde() {
        for suite in SuiteId::ALL {
            assert_eq!(suite.name().parse::<SuiteId>().unwrap(), suite);
            assert_eq!(
                serde_json::to_value(suite).unwrap(),
                serde_json::Value::String(suite.name().into())
            );
        }
        let error = "nonsense".parse::<SuiteId>().unwrap_err();
        assert!(error.contains("soundness-derivability"));
        assert!(error.contains("prover-cross"));
    }

    #[test]
    fn run_all_covers_every_suite_in_order() {
        let reports = run_all(&small(4), &[]).unwrap();
        let suites: Vec<SuiteId> = reports.iter().map(|report| report.suite).collect();
        assert_eq!(suites, SuiteId::ALL);
        for report in &reports {
            assert!(report.passed(), "{}: {:#?}", report.suite, report.failures);
        }
    }

    #[test]
    fn replay_lines_mention_nondefault_depth() {
        let config = GeneratorConfig { max_depth: 4, samples: 9, ..GeneratorConfig::default() };
        let line = replay_line(SuiteId::K6Lemmas, &config, None, 7);
        assert_eq!(line, "kuroda verify --suite k6-lemmas --seed 1729 --samples 7 --max-depth 4");
        let line = replay_line(
            SuiteId::SoundnessDerivability,
            &GeneratorConfig::default(),
            Some(&TranslationId::K5),
            1,
        );
        assert_eq!(
            line,
            "kuroda verify --suite soundness-derivability --seed 1729 --samples 1 --variants k5"
        );
    }
}
