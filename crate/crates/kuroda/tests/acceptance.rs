//! The shipped guarantees, checked end to end.  Each numbered criterion
//! prints a single `ACCEPTANCE n ...: PASS/FAIL` line with its headline
//! numbers, so a run reads as a checklist; the test fails if any line does.

use kuroda::harness::{
    detection_order, random_formula, run_suite, run_suite_with, GeneratorConfig, SuiteId,
};
use kuroda::proof::corpus;
use kuroda::syntax::{parse, render, RenderStyle};
use kuroda::translate::{Mutation, Translator};

struct Outcome {
    number: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn outcome(number: u32, title: &'static str, pass: bool, detail: String) -> Outcome {
    Outcome { number, title, pass, detail }
}

/// The three minimal-logic lemmas hold on 100 random instance pairs of
/// depth at most 4, in under ten seconds.
fn quoted_lemmas() -> Outcome {
    let config = GeneratorConfig { max_depth: 4, samples: 100, ..GeneratorConfig::default() };
    let report = run_suite(SuiteId::K6Lemmas, &config, &[]).expect("suite runs");
    outcome(
        1,
        "minimal-logic lemma instances",
        report.failures.is_empty() && report.elapsed_ms < 10_000,
        format!("{} failures over {} samples in {} ms (limit 10000)",
            report.failures.len(), report.samples, report.elapsed_ms),
    )
}

/// Classical provability coincides with minimal provability of the
/// translation, for each of the eight variants, over the default 200
/// samples of depth at most 5 on atoms {P, Q, R, false}; under a minute.
fn soundness() -> Outcome {
    let config = GeneratorConfig::default();
    let report = run_suite(SuiteId::SoundnessDerivability, &config, &[]).expect("suite runs");
    outcome(
        2,
        "soundness and derivability for k1..k8",
        report.failures.is_empty()
            && report.variants.len() == 8
            && report.elapsed_ms < 60_000,
        format!("{} failures over {} samples x {} variants in {} ms (limit 60000)",
            report.failures.len(), report.samples, report.variants.len(), report.elapsed_ms),
    )
}

/// Every translation in the k-family is classically equivalent to the
/// identity, over the same default sampling.
fn characterisation() -> Outcome {
    let config = GeneratorConfig::default();
    let report = run_suite(SuiteId::Characterisation, &config, &[]).expect("suite runs");
    outcome(
        3,
        "classical characterisation for k, k1..k8",
        report.failures.is_empty() && report.variants.len() == 9,
        format!("{} failures over {} samples x {} variants",
            report.failures.len(), report.samples, report.variants.len()),
    )
}

/// The commuting translations factor through k, the classical-fragment
/// translation matches k5, and the k6/k7/k8 bodies agree — each provably in
/// minimal logic, 200 samples per suite.
fn equivalences() -> Outcome {
    let config = GeneratorConfig::default();
    let mut failures = 0;
    let mut samples = 0;
    for suite in [
        SuiteId::LeivantEquivalence,
        SuiteId::ShoenfieldEquivalence,
        SuiteId::K678Equivalence,
    ] {
        let report = run_suite(suite, &config, &[]).expect("suite runs");
        failures += report.failures.len();
        samples += report.samples;
    }
    outcome(
        4,
        "equivalence suites at 200 samples each",
        failures == 0 && samples == 600,
        format!("{failures} failures over {samples} samples across three suites"),
    )
}

/// The proof corpus is big enough and varied enough, and the whole pipeline
/// suite passes on it: every corpus proof survives translation to a checked
/// minimal-logic proof for each of k1..k4, and the synthesized equivalence
/// and absorption proofs check on 100 random (possibly quantified) samples.
fn pipeline() -> Outcome {
    let entries = corpus::entries();
    let names: Vec<&str> = entries.iter().map(|e| e.name).collect();
    let first_order = entries.iter().filter(|e| !e.sequent.is_quantifier_free()).count();
    let required = ["peirce", "dne_law", "excluded_middle", "demorgan_conj"];
    let corpus_ok = entries.len() >= 20
        && first_order >= 3
        && required.iter().all(|name| names.contains(name));
    let config =
        GeneratorConfig { quantifier_free: false, samples: 100, ..GeneratorConfig::default() };
    let report = run_suite(SuiteId::Pipeline, &config, &[]).expect("suite runs");
    outcome(
        5,
        "proof pipeline over the corpus and synthesized proofs",
        corpus_ok && report.failures.is_empty(),
        format!(
            "{} corpus entries ({} first-order), {} failures over {} random samples",
            entries.len(), first_order, report.failures.len(), report.samples),
    )
}

/// The provers agree with one another and with the countermodel search on
/// 1000 samples, in under two minutes.
fn prover_cross() -> Outcome {
    let config = GeneratorConfig { samples: 1000, ..GeneratorConfig::default() };
    let report = run_suite(SuiteId::ProverCross, &config, &[]).expect("suite runs");
    outcome(
        6,
        "prover cross-validation at 1000 samples",
        report.failures.is_empty() && report.elapsed_ms < 120_000,
        format!("{} failures over {} samples in {} ms (limit 120000)",
            report.failures.len(), report.samples, report.elapsed_ms),
    )
}

/// Every shipped wrong-clause mutation is caught by at least one suite at
/// the default configuration.
fn mutations_are_caught() -> Outcome {
    let config = GeneratorConfig::default();
    let mut undetected = Vec::new();
    for mutation in Mutation::ALL {
        let translator = Translator::with_mutation(mutation);
        let caught = detection_order(mutation).into_iter().any(|suite| {
            run_suite_with(&translator, suite, &config, &[])
                .map(|report| !report.failures.is_empty())
                .unwrap_or(false)
        });
        if !caught {
            undetected.push(mutation.name());
        }
    }
    outcome(
        7,
        "every mutation trips a suite",
        undetected.is_empty(),
        if undetected.is_empty() {
            format!("{} mutations, each detected", Mutation::ALL.len())
        } else {
            format!("undetected: {}", undetected.join(", "))
        },
    )
}

/// Rendering and parsing are mutually inverse on 1000 generated formulas,
/// quantifiers included, in both output styles.
fn parse_render_identity() -> Outcome {
    let config = GeneratorConfig { quantifier_free: false, ..GeneratorConfig::default() };
    let mut failures = 0;
    for index in 0..1000 {
        let formula = random_formula(&config, index).expect("generator runs");
        for style in [RenderStyle::Ascii, RenderStyle::Unicode] {
            if parse(&render(&formula, style)).ok() != Some(formula.clone()) {
                failures += 1;
            }
        }
    }
    outcome(
        8,
        "parse after render is the identity",
        failures == 0,
        format!("{failures} failures over 1000 formulas x 2 styles"),
    )
}

#[test]
fn acceptance_checklist() {
    let outcomes = [
        quoted_lemmas(),
        soundness(),
        characterisation(),
        equivalences(),
        pipeline(),
        prover_cross(),
        mutations_are_caught(),
        parse_render_identity(),
    ];
    let mut failed = Vec::new();
    for o in &outcomes {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("ACCEPTANCE {} {}: {verdict} ({})", o.number, o.title, o.detail);
        if !o.pass {
            failed.push(o.number);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
