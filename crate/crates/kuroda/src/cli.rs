//! Command-line interface.
//!
//! Exit codes are uniform across subcommands: `0` for a positive outcome
//! (translation printed, provable, proof accepted, countermodel found, all
//! suites passed), `1` for a negative one (unprovable, proof rejected, no
//! countermodel within the bound, suite failures), and `2` for usage or
//! parse errors.  The artifact — formula, verdict, model, or report — goes
//! to stdout; diagnostics, traces, and suite summaries go to stderr.

use crate::harness::{run_all, run_suite, GeneratorConfig, SuiteId, SuiteReport};
use crate::proof::{check_proof, parse_proof_file, CheckResult};
use crate::prover::{countermodel, decide_with_transcript, Decision, Transcript};
use crate::syntax::{parse, parse_sequent, render, LogicId, RenderStyle, Sequent};
use crate::translate::{TranslationId, Translator};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Unicode,
    Json,
}

impl Format {
    fn style(self) -> RenderStyle {
        match self {
            Format::Unicode => RenderStyle::Unicode,
            _ => RenderStyle::Ascii,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "kuroda",
    version,
    about = "Negative translations into minimal logic, with provers, proof \
             checking, countermodels, and a randomized verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Translate a formula (k, k1..k8: double-negation translations;
    /// t1..t4: commuting translations; t5: classical-fragment translation).
    Translate {
        /// Translation id: k, k1..k8, t1..t5.
        #[arg(long)]
        variant: String,
        /// Print the inner (starred) translation, without the outer `~~`.
        /// Only the k-family has one.
        #[arg(long)]
        inner: bool,
        /// Closed witness formula for t5 (defaults to the atom `C0`).
        #[arg(long)]
        witness: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Formula, e.g. "P -> forall x. Q(x)".
        formula: String,
    },
    /// Decide a quantifier-free formula or sequent.
    Prove {
        /// Logic: ml (minimal), il (intuitionistic), or cl (classical).
        #[arg(long)]
        logic: String,
        /// Print the rules applied during search to stderr.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Formula, or sequent with labeled hypotheses: "h: P & Q |- P".
        input: String,
    },
    /// Check a proof file (the file names its sequent and logic).
    CheckProof {
        /// Path to the proof file.
        file: PathBuf,
    },
    /// Search for a finite Kripke countermodel to a quantifier-free formula.
    Countermodel {
        /// Logic: ml or il (classical logic has no Kripke countermodels).
        #[arg(long, default_value = "ml")]
        logic: String,
        /// Largest number of worlds to try.
        #[arg(long, default_value_t = 4)]
        max_worlds: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Formula to refute.
        formula: String,
    },
    /// Run the randomized verification suites and print a JSON report.
    Verify {
        /// Suite id (e.g. soundness-derivability) or `all`.
        #[arg(long)]
        suite: String,
        /// Restrict the translation variants, e.g. `k2` or `k1..k4,k7`.
        #[arg(long)]
        variants: Option<String>,
        /// Samples per suite.
        #[arg(long, default_value_t = GeneratorConfig::DEFAULT_SAMPLES)]
        samples: usize,
        /// Generator seed; defaults to the KF_SEED environment variable,
        /// then to the built-in seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Largest formula depth to generate.
        #[arg(long, default_value_t = GeneratorConfig::DEFAULT_MAX_DEPTH)]
        max_depth: u32,
        /// Also write the JSON report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Translate { variant, inner, witness, format, formula } => {
            cmd_translate(&variant, inner, witness.as_deref(), format, &formula)
        }
        Command::Prove { logic, trace, format, input } => {
            cmd_prove(&logic, trace, format, &input)
        }
        Command::CheckProof { file } => cmd_check_proof(&file),
        Command::Countermodel { logic, max_worlds, format, formula } => {
            cmd_countermodel(&logic, max_worlds, format, &formula)
        }
        Command::Verify { suite, variants, samples, seed, max_depth, json } => {
            cmd_verify(&suite, variants.as_deref(), samples, seed, max_depth, json.as_deref())
        }
    };
    ExitCode::from(code.unwrap_or_else(|message| {
        eprintln!("error: {message}");
        EXIT_USAGE
    }))
}

fn cmd_translate(
    variant: &str,
    inner: bool,
    witness: Option<&str>,
    format: Format,
    formula: &str,
) -> Result<u8, String> {
    let mut id = TranslationId::from_str(variant)?;
    if let Some(text) = witness {
        if !matches!(id, TranslationId::T5(_)) {
            return Err(format!("--witness only applies to t5, not {id}"));
        }
        id = TranslationId::T5(parse(text).map_err(|e| format!("in witness: {e}"))?);
    }
    if inner && !id.is_kuroda_family() {
        return Err(format!("{id} has no inner translation (--inner needs k or k1..k8)"));
    }
    let input = parse(formula).map_err(|e| e.to_string())?;
    let translator = Translator::default();
    let output = if inner {
        translator.inner_translate(&id, &input)
    } else {
        translator.apply(&id, &input).map_err(|e| e.to_string())?
    };
    match format {
        Format::Json => print_json(&serde_json::json!({
            "variant": id.name(),
            "inner": inner,
            "formula": render(&output, RenderStyle::Ascii),
        })),
        _ => println!("{}", render(&output, format.style())),
    }
    Ok(EXIT_OK)
}

fn parse_prove_input(input: &str) -> Result<Sequent, String> {
    if input.contains("|-") || input.contains('⊢') {
        parse_sequent(input).map_err(|e| e.to_string())
    } else {
        Ok(Sequent::entails(parse(input).map_err(|e| e.to_string())?))
    }
}

fn cmd_prove(logic: &str, trace: bool, format: Format, input: &str) -> Result<u8, String> {
    let logic = LogicId::parse(logic).ok_or_else(|| format!("unknown logic `{logic}` (expected ml, il, or cl)"))?;
    let sequent = parse_prove_input(input)?;
    let mut transcript = Transcript::default();
    let decision =
        decide_with_transcript(logic, &sequent, &mut transcript).map_err(|e| e.to_string())?;
    if trace {
        eprint!("{transcript}");
    }
    let verdict = match decision {
        Decision::Provable => "provable",
        Decision::Unprovable => "unprovable",
    };
    match format {
        Format::Json => print_json(&serde_json::json!({
            "logic": logic.to_string(),
            "sequent": sequent.to_string(),
            "decision": verdict,
        })),
        _ => println!("{verdict}"),
    }
    Ok(if decision == Decision::Provable { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_check_proof(path: &std::path::Path) -> Result<u8, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file = parse_proof_file(&text).map_err(|e| format!("{}:{e}", path.display()))?;
    match check_proof(&file.term, &file.sequent, file.logic) {
        CheckResult::Accepted => {
            println!("accepted");
            Ok(EXIT_OK)
        }
        CheckResult::Rejected(rejection) => {
            println!("rejected: {rejection}");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_countermodel(
    logic: &str,
    max_worlds: usize,
    format: Format,
    formula: &str,
) -> Result<u8, String> {
    let logic = LogicId::parse(logic).ok_or_else(|| format!("unknown logic `{logic}` (expected ml or il)"))?;
    let input = parse(formula).map_err(|e| e.to_string())?;
    let model = countermodel(logic, &input, max_worlds).map_err(|e| e.to_string())?;
    match model {
        Some(model) => {
            match format {
                Format::Json => print_json(&model),
                _ => {
                    println!("worlds: {}", model.worlds.join(" "));
                    let order: Vec<String> = model
                        .order
                        .iter()
                        .filter(|(u, v)| u != v)
                        .map(|(u, v)| format!("{u}<={v}"))
                        .collect();
                    println!("order: {}", order.join(" "));
                    for world in &model.worlds {
                        let atoms: Vec<&str> = model
                            .valuation
                            .get(world)
                            .map(|set| set.iter().map(String::as_str).collect())
                            .unwrap_or_default();
                        println!("{world} forces: {}", atoms.join(" "));
                    }
                }
            }
            Ok(EXIT_OK)
        }
        None => {
            eprintln!("no countermodel within {max_worlds} worlds");
            Ok(EXIT_NEGATIVE)
        }
    }
}

/// `k2` or `k1..k4,k7` (comma list; `..` ranges over the numbered k-ids).
fn parse_selection(text: &str) -> Result<Vec<TranslationId>, String> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((lo, hi)) = item.split_once("..") {
            let bound = |s: &str| -> Result<u32, String> {
                s.strip_prefix('k')
                    .or_else(|| s.strip_prefix('K'))
                    .and_then(|n| n.parse().ok())
                    .filter(|n| (1..=8).contains(n))
                    .ok_or_else(|| format!("bad range endpoint `{s}` in `{item}` (use k1..k8)"))
            };
            let (lo, hi) = (bound(lo)?, bound(hi)?);
            if lo > hi {
                return Err(format!("empty range `{item}`"));
            }
            for n in lo..=hi {
                out.push(TranslationId::from_str(&format!("k{n}"))?);
            }
        } else {
            out.push(TranslationId::from_str(item)?);
        }
    }
    if out.is_empty() {
        return Err("--variants given but names no translation".into());
    }
    Ok(out)
}

fn cmd_verify(
    suite: &str,
    variants: Option<&str>,
    samples: usize,
    seed: Option<u64>,
    max_depth: u32,
    json_path: Option<&std::path::Path>,
) -> Result<u8, String> {
    let selection = match variants {
        Some(text) => parse_selection(text)?,
        None => Vec::new(),
    };
    let seed = match seed {
        Some(seed) => seed,
        None => match std::env::var("KF_SEED") {
            Ok(text) => text
                .parse()
                .map_err(|_| format!("KF_SEED must be an integer seed, got `{text}`"))?,
            Err(_) => GeneratorConfig::default().seed,
        },
    };
    let config = GeneratorConfig { samples, seed, max_depth, ..GeneratorConfig::default() };
    let reports: Vec<SuiteReport> = if suite == "all" {
        run_all(&config, &selection).map_err(|e| e.to_string())?
    } else {
        let suite = SuiteId::from_str(suite)?;
        vec![run_suite(suite, &config, &selection).map_err(|e| e.to_string())?]
    };
    for report in &reports {
        eprintln!("{}", report.summary());
    }
    let rendered = serde_json::to_string_pretty(&reports).expect("reports serialize");
    if let Some(path) = json_path {
        std::fs::write(path, format!("{rendered}\n"))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    println!("{rendered}");
    Ok(if reports.iter().all(SuiteReport::passed) { EXIT_OK } else { EXIT_NEGATIVE })
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("value serializes"));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selections_accept_lists_and_ranges() {
        use TranslationId::*;
        assert_eq!(parse_selection("k2").unwrap(), vec![K2]);
        assert_eq!(parse_selection("k1..k3,k7").unwrap(), vec![K1, K2, K3, K7]);
        assert_eq!(parse_selection("t1, t5").unwrap().len(), 2);
        assert!(parse_selection("k3..k1").unwrap_err().contains("empty range"));
        assert!(parse_selection("k0..k8").unwrap_err().contains("endpoint"));
        assert!(parse_selection(" , ").unwrap_err().contains("names no translation"));
    }

    #[test]
    fn prove_inputs_accept_formulas_and_sequents() {
        assert_eq!(parse_prove_input("P -> P").unwrap().hypotheses.len(), 0);
        let sequent = parse_prove_input("h: P & Q |- P").unwrap();
        assert_eq!(sequent.hypotheses.len(), 1);
        assert!(parse_prove_input("|- P").unwrap().hypotheses.is_empty());
    }
}
