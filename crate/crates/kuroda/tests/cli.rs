//! End-to-end checks of the `kuroda` binary: exit codes, the artifact on
//! stdout, diagnostics on stderr, and the JSON shapes.

use kuroda::proof::{corpus, write_proof_file, ProofFile};
use kuroda::syntax::LogicId;
use std::process::{Command, Output};

fn kuroda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kuroda"))
        .args(args)
        .env_remove("KF_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn translate_prints_the_formula_and_exits_zero() {
    let out = kuroda(&["translate", "--variant", "k2", "P"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "~~(~~P)\n");
}

#[test]
fn translate_renders_unicode_and_json_on_request() {
    let out = kuroda(&["translate", "--variant", "k2", "--format", "unicode", "P"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "¬¬(¬¬P)\n");

    let out = kuroda(&["translate", "--variant", "k1", "--inner", "--format", "json", "P | Q"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json artifact");
    assert_eq!(report["variant"], "k1");
    assert_eq!(report["inner"], true);
    assert_eq!(report["formula"], "(P | false) | (Q | false)");
}

#[test]
fn translate_rejects_misuse_with_exit_two() {
    let inner_on_t = kuroda(&["translate", "--variant", "t1", "--inner", "P"]);
    assert_eq!(code(&inner_on_t), 2);
    assert!(stderr(&inner_on_t).contains("no inner translation"));

    let witness_on_k = kuroda(&["translate", "--variant", "k2", "--witness", "Q", "P"]);
    assert_eq!(code(&witness_on_k), 2);
    assert!(stderr(&witness_on_k).contains("--witness only applies to t5"));

    let open_witness = kuroda(&["translate", "--variant", "t5", "--witness", "Q(x)", "P"]);
    assert_eq!(code(&open_witness), 2);

    let bad_formula = kuroda(&["translate", "--variant", "k", "P &"]);
    assert_eq!(code(&bad_formula), 2);

    let bad_variant = kuroda(&["translate", "--variant", "k9", "P"]);
    assert_eq!(code(&bad_variant), 2);
    assert!(stderr(&bad_variant).contains("unknown translation"));
}

#[test]
fn translate_accepts_a_custom_witness_for_t5() {
    let out = kuroda(&["translate", "--variant", "t5", "--witness", "Q & R", "false"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "~(~(Q & R) | (Q & R))\n");
}

#[test]
fn prove_reports_the_verdict_in_the_exit_code() {
    let unprovable = kuroda(&["prove", "--logic", "ml", "false -> P"]);
    assert_eq!(code(&unprovable), 1);
    assert_eq!(stdout(&unprovable), "unprovable\n");

    let provable = kuroda(&["prove", "--logic", "il", "false -> P"]);
    assert_eq!(code(&provable), 0);
    assert_eq!(stdout(&provable), "provable\n");
}

#[test]
fn prove_takes_sequents_and_emits_traces_on_request() {
    let out = kuroda(&["prove", "--logic", "ml", "--trace", "h: P & Q |- P"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "provable\n");
    assert!(stderr(&out).contains("L&"), "trace goes to stderr: {}", stderr(&out));

    let json = kuroda(&["prove", "--logic", "cl", "--format", "json", "P | ~P"]);
    assert_eq!(code(&json), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&json)).expect("json artifact");
    assert_eq!(report["decision"], "provable");
    assert_eq!(report["logic"], "cl");
}

#[test]
fn prove_rejects_quantifiers_and_garbage_with_exit_two() {
    let quantified = kuroda(&["prove", "--logic", "ml", "forall x. P(x)"]);
    assert_eq!(code(&quantified), 2);

    let garbage = kuroda(&["prove", "--logic", "ml", "P ->"]);
    assert_eq!(code(&garbage), 2);

    let bad_logic = kuroda(&["prove", "--logic", "zl", "P"]);
    assert_eq!(code(&bad_logic), 2);
    assert!(stderr(&bad_logic).contains("unknown logic"));
}

#[test]
fn check_proof_accepts_a_corpus_proof() {
    let entry = corpus::find("peirce").expect("corpus entry exists");
    let text = write_proof_file(&ProofFile {
        sequent: entry.sequent,
        logic: entry.logic,
        term: entry.proof,
    });
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("peirce.proof");
    std::fs::write(&path, text).expect("write proof file");

    let out = kuroda(&["check-proof", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "accepted\n");
}

#[test]
fn check_proof_rejects_a_classical_proof_under_minimal_logic() {
    let entry = corpus::find("dne_law").expect("corpus entry exists");
    assert_eq!(entry.logic, LogicId::Cl);
    let text = write_proof_file(&ProofFile {
        sequent: entry.sequent,
        logic: LogicId::Ml,
        term: entry.proof,
    });
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("dne-under-ml.proof");
    std::fs::write(&path, text).expect("write proof file");

    let out = kuroda(&["check-proof", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("rejected: rule-not-in-logic"));
}

#[test]
fn check_proof_reports_parse_positions_with_exit_two() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("broken.proof");
    std::fs::write(&path, "(sequent (hyp h \"~~P\" \"P\" cl)\n(dne (hyp h))\n").unwrap();

    let out = kuroda(&["check-proof", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("broken.proof:"), "stderr: {}", stderr(&out));

    let missing = kuroda(&["check-proof", dir.path().join("absent.proof").to_str().unwrap()]);
    assert_eq!(code(&missing), 2);
    assert!(stderr(&missing).contains("cannot read"));
}

#[test]
fn countermodel_prints_a_model_or_exits_one() {
    let found = kuroda(&["countermodel", "--logic", "il", "~~P -> P"]);
    assert_eq!(code(&found), 0);
    let model: serde_json::Value = serde_json::from_str(&stdout(&found)).expect("json artifact");
    assert!(!model["worlds"].as_array().unwrap().is_empty());
    assert!(model["order"].is_array());
    assert!(model["valuation"].is_object());

    let none = kuroda(&["countermodel", "--logic", "il", "P -> P"]);
    assert_eq!(code(&none), 1);
    assert_eq!(stdout(&none), "");
    assert!(stderr(&none).contains("no countermodel within 4 worlds"));
}

#[test]
fn countermodel_has_a_readable_rendering() {
    let out = kuroda(&["countermodel", "--logic", "ml", "--format", "ascii", "false -> P"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("worlds: w0"), "got: {text}");
    assert!(text.contains("forces:"));
}

#[test]
fn countermodel_rejects_classical_logic_with_exit_two() {
    let out = kuroda(&["countermodel", "--logic", "cl", "P"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_all_suites_is_clean_at_the_pinned_example() {
    let out = kuroda(&["verify", "--suite", "all", "--samples", "50", "--seed", "7"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json artifact");
    let reports = reports.as_array().expect("array of suite reports");
    assert_eq!(reports.len(), 8);
    for report in reports {
        assert_eq!(report["failures"].as_array().unwrap().len(), 0);
        assert_eq!(report["seed"], 7);
        assert_eq!(report["samples"], 50);
    }
    let summaries = stderr(&out);
    assert_eq!(summaries.lines().count(), 8, "one summary line per suite");
}

#[test]
fn verify_writes_the_report_file_when_asked() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("report.json");
    let out = kuroda(&[
        "verify",
        "--suite",
        "k6-lemmas",
        "--samples",
        "5",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let on_disk = std::fs::read_to_string(&path).expect("report file written");
    assert_eq!(on_disk, stdout(&out));
    let reports: serde_json::Value = serde_json::from_str(&on_disk).unwrap();
    assert_eq!(reports[0]["suite"], "k6-lemmas");
    assert_eq!(reports[0]["seed"], 1729, "default seed");
}

#[test]
fn verify_reads_the_seed_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_kuroda"))
        .args(["verify", "--suite", "k6-lemmas", "--samples", "3"])
        .env("KF_SEED", "99")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 0);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports[0]["seed"], 99);

    let flag_wins = Command::new(env!("CARGO_BIN_EXE_kuroda"))
        .args(["verify", "--suite", "k6-lemmas", "--samples", "3", "--seed", "5"])
        .env("KF_SEED", "99")
        .output()
        .expect("binary runs");
    let reports: serde_json::Value = serde_json::from_str(&stdout(&flag_wins)).unwrap();
    assert_eq!(reports[0]["seed"], 5);

    let unusable = Command::new(env!("CARGO_BIN_EXE_kuroda"))
        .args(["verify", "--suite", "k6-lemmas", "--samples", "3"])
        .env("KF_SEED", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(code(&unusable), 2);
}

#[test]
fn verify_narrows_variants_and_rejects_bad_selections() {
    let out = kuroda(&[
        "verify",
        "--suite",
        "soundness-derivability",
        "--samples",
        "5",
        "--variants",
        "k1..k2,k7",
    ]);
    assert_eq!(code(&out), 0);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports[0]["variants"], serde_json::json!(["k1", "k2", "k7"]));

    let bad = kuroda(&["verify", "--suite", "soundness-derivability", "--variants", "k9"]);
    assert_eq!(code(&bad), 2);

    let bogus_suite = kuroda(&["verify", "--suite", "bogus", "--samples", "5"]);
    assert_eq!(code(&bogus_suite), 2);
    assert!(stderr(&bogus_suite).contains("unknown suite"));
}

#[test]
fn usage_errors_and_help_use_the_documented_exit_codes() {
    let help = kuroda(&["--help"]);
    assert_eq!(code(&help), 0);

    let unknown = kuroda(&["frobnicate"]);
    assert_eq!(code(&unknown), 2);

    let missing_flag = kuroda(&["translate", "P"]);
    assert_eq!(code(&missing_flag), 2);
}
