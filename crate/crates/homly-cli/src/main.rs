//! Command-line front end: parse algebra files, dispatch checkers,
//! constructors and the miner, and emit deterministic text or JSON
//! reports.
//!
//! Exit codes: 0 — all requested checks pass / command succeeded;
//! 1 — at least one identity violation (or zero mining hits);
//! 2 — input or structural error.

use clap::{Parser, Subcommand, ValueEnum};
use homly_core::catalog::{self, CatalogError};
use homly_core::constructions::{
    check_prop21, hom_lya_from_hom_malcev, verify_thm11, yau_twist, yau_twist_lya, ConstructError,
    Thm11Outcome,
};
use homly_core::format::{AlgebraFile, Bundle, EndoFile, FormatError};
use homly_core::identities::{
    check_anticommutative, check_eq4, check_eq8, check_hly, check_hom_malcev,
    check_jacobian_zero, check_ly, check_malcev, check_multiplicative_binary,
    check_multiplicative_ternary, check_ternary_skew, CheckError,
};
use homly_core::report::{AxiomId, CheckReport, Witness};
use homly_core::scalar::parse_scalar;
use homly_core::search::{mine, GeneratorConfig, HitSource, MiningGoal, SearchError};
use serde::Serialize;
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "homly",
    about = "Verification and construction workbench for Hom-Malcev and Hom-Lie-Yamaguti algebras given by exact rational structure constants",
    version
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities on an algebra file (all applicable ones by default).
    Check {
        file: PathBuf,
        /// Identity to check (repeatable): anticomm, mult-bin, mult-ter,
        /// ternary-skew, malcev, hom-malcev, eq4, eq8, hly, hly1..hly8,
        /// ly, ly1..ly6, prop21, j-zero.
        #[arg(long = "identity")]
        identities: Vec<String>,
    },
    /// Equip a Hom-Malcev algebra with its induced ternary operation and
    /// write the resulting bundle (preconditions and the HLY suite are
    /// checked and reported).
    Construct {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Verify the ternary-expresses-through-binary hypothesis on a
    /// binary-ternary bundle and report the Hom-Malcev conclusion.
    VerifyThm11 { file: PathBuf },
    /// Twist a classical algebra (or binary-ternary bundle) by an
    /// endomorphism and write the twisted Hom-bundle.
    Twist {
        file: PathBuf,
        /// JSON file {"dimension": n, "map": [[...], ...]} with rational
        /// string entries, row-major.
        #[arg(long)]
        endo: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Mine seeded random candidates for bundles that pass and fail the
    /// given identities.
    Search {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Comma-separated identities that must pass
        /// (anticomm, mult-bin, malcev, hom-malcev, eq4, eq8, j-zero).
        #[arg(long, value_delimiter = ',')]
        pass: Vec<String>,
        /// Comma-separated identities that must fail.
        #[arg(long, value_delimiter = ',')]
        fail: Vec<String>,
        /// Comma-separated rational coefficients to draw structure
        /// constants from (default -2,-1,0,1,2).
        #[arg(long, value_delimiter = ',')]
        coeffs: Vec<String>,
    },
    /// List the self-validating catalog, or export one entry.
    Catalog {
        #[arg(long)]
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("unknown identity {0:?} (see --help for the list)")]
    UnknownIdentity(String),
    #[error("identity {0} needs a ternary operation, but the file has none")]
    NeedsTernary(String),
    #[error("no catalog entry named {0:?}")]
    NoSuchEntry(String),
    #[error("the twist command expects a classical bundle; {0:?} already carries a non-identity twist")]
    AlreadyTwisted(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(violations) => {
            if violations {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether any requested check failed (exit code 1).
fn run(cli: Cli) -> Result<bool, CliError> {
    let mut out = String::new();
    let violations = match &cli.command {
        Command::Check { file, identities } => cmd_check(&mut out, cli.format, file, identities)?,
        Command::Construct { file, output } => cmd_construct(&mut out, cli.format, file, output)?,
        Command::VerifyThm11 { file } => cmd_verify_thm11(&mut out, cli.format, file)?,
        Command::Twist { file, endo, output } => {
            cmd_twist(&mut out, cli.format, file, endo, output)?
        }
        Command::Search {
            dim,
            seed,
            samples,
            pass,
            fail,
            coeffs,
        } => cmd_search(&mut out, cli.format, *dim, *seed, *samples, pass, fail, coeffs)?,
        Command::Catalog { name, output } => {
            cmd_catalog(&mut out, cli.format, name.as_deref(), output.as_deref())?
        }
    };
    print!("{out}");
    Ok(violations)
}

fn load_bundle(path: &Path) -> Result<Bundle, CliError> {
    let text = homly_core::format::read_to_string(path)?;
    Ok(AlgebraFile::from_json(&text)?.build()?)
}

/// One requested check, resolved from a CLI selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Selector {
    Single(AxiomId),
    HlyAll,
    LyAll,
    Prop21,
}

fn parse_selector(token: &str) -> Result<Selector, CliError> {
    let upper = token.to_ascii_uppercase();
    let selector = match upper.as_str() {
        "ANTICOMM" => Selector::Single(AxiomId::Anticomm),
        "MULT-BIN" => Selector::Single(AxiomId::MultBin),
        "MULT-TER" => Selector::Single(AxiomId::MultTer),
        "TERNARY-SKEW" => Selector::Single(AxiomId::TernarySkew),
        "MALCEV" | "MALCEV-1" => Selector::Single(AxiomId::Malcev1),
        "HOM-MALCEV" | "HOM-MALCEV-2" => Selector::Single(AxiomId::HomMalcev2),
        "EQ4" | "EQ-4" => Selector::Single(AxiomId::Eq4),
        "EQ8" | "EQ-8" => Selector::Single(AxiomId::Eq8),
        "J-ZERO" | "JZERO" => Selector::Single(AxiomId::JacobianZero),
        "HLY" => Selector::HlyAll,
        "LY" => Selector::LyAll,
        "PROP21" => Selector::Prop21,
        _ => {
            if let Some(id) = AxiomId::from_str_exact(&upper) {
                Selector::Single(id)
            } else {
                return Err(CliError::UnknownIdentity(token.to_owned()));
            }
        }
    };
    Ok(selector)
}

fn require_ternary<'b>(
    bundle: &'b Bundle,
    what: &str,
) -> Result<&'b homly_core::HomTriple, CliError> {
    bundle
        .triple()
        .ok_or_else(|| CliError::NeedsTernary(what.to_owned()))
}

fn run_selector(bundle: &Bundle, selector: Selector) -> Result<Vec<CheckReport>, CliError> {
    let hom = bundle.hom_algebra();
    let reports = match selector {
        Selector::Single(AxiomId::Anticomm) => vec![check_anticommutative(&hom.base)?],
        Selector::Single(AxiomId::MultBin) => vec![check_multiplicative_binary(&hom)?],
        Selector::Single(AxiomId::Malcev1) => vec![check_malcev(&hom.base)?],
        Selector::Single(AxiomId::HomMalcev2) => vec![check_hom_malcev(&hom)?],
        Selector::Single(AxiomId::Eq4) => vec![check_eq4(&hom)?],
        Selector::Single(AxiomId::Eq8) => vec![check_eq8(&hom)?],
        Selector::Single(AxiomId::JacobianZero) => vec![check_jacobian_zero(&hom)?],
        Selector::Single(AxiomId::MultTer) => {
            vec![check_multiplicative_ternary(require_ternary(bundle, "mult-ter")?)?]
        }
        Selector::Single(AxiomId::TernarySkew) => {
            vec![check_ternary_skew(require_ternary(bundle, "ternary-skew")?)?]
        }
        Selector::Single(id) if id.as_str().starts_with("HLY") => {
            let triple = require_ternary(bundle, id.as_str())?;
            check_hly(triple)?
                .into_iter()
                .filter(|r| r.axiom == id)
                .collect()
        }
        Selector::Single(id) if id.as_str().starts_with("LY") => {
            let triple = require_ternary(bundle, id.as_str())?;
            check_ly(triple)?
                .into_iter()
                .filter(|r| r.axiom == id)
                .collect()
        }
        Selector::Single(id) => return Err(CliError::UnknownIdentity(id.as_str().to_owned())),
        Selector::HlyAll => check_hly(require_ternary(bundle, "hly")?)?,
        Selector::LyAll => check_ly(require_ternary(bundle, "ly")?)?,
        Selector::Prop21 => vec![check_prop21(&hom)?],
    };
    Ok(reports)
}

#[derive(Serialize)]
struct CheckDocument<'a> {
    file: String,
    name: &'a str,
    reports: &'a [CheckReport],
}

fn render_reports(out: &mut String, reports: &[CheckReport]) {
    for report in reports {
        out.push_str(&report.to_string());
        out.push('\n');
    }
}

fn any_failure(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| !r.passed())
}

fn cmd_check(
    out: &mut String,
    format: Format,
    file: &Path,
    identities: &[String],
) -> Result<bool, CliError> {
    let bundle = load_bundle(file)?;
    let reports = if identities.is_empty() {
        catalog::standard_suite(&bundle)?
    } else {
        let mut reports = Vec::new();
        for token in identities {
            reports.extend(run_selector(&bundle, parse_selector(token)?)?);
        }
        reports
    };
    match format {
        Format::Text => render_reports(out, &reports),
        Format::Json => {
            let doc = CheckDocument {
                file: file.display().to_string(),
                name: bundle.name(),
                reports: &reports,
            };
            out.push_str(&to_pretty_json(&doc));
        }
    }
    Ok(any_failure(&reports))
}

#[derive(Serialize)]
struct ConstructDocument<'a> {
    file: String,
    name: &'a str,
    preconditions: &'a [CheckReport],
    hly: &'a [CheckReport],
    output: String,
}

fn cmd_construct(
    out: &mut String,
    format: Format,
    file: &Path,
    output: &Path,
) -> Result<bool, CliError> {
    let bundle = load_bundle(file)?;
    let hom = bundle.hom_algebra();
    let constructed = hom_lya_from_hom_malcev(&hom)?;
    let mut exported = Bundle::Triple(constructed.triple.clone());
    if let Bundle::Triple(t) = &mut exported {
        t.base.name = format!("{}_hly", hom.base.name);
    }
    let out_file = AlgebraFile::from_bundle(&exported);
    homly_core::format::write_string(output, &out_file.to_json_pretty())?;

    match format {
        Format::Text => {
            out.push_str("preconditions:\n");
            render_reports(out, &constructed.preconditions);
            out.push_str("constructed bundle:\n");
            render_reports(out, &constructed.hly);
            out.push_str(&format!("wrote {}\n", output.display()));
        }
        Format::Json => {
            let doc = ConstructDocument {
                file: file.display().to_string(),
                name: bundle.name(),
                preconditions: &constructed.preconditions,
                hly: &constructed.hly,
                output: output.display().to_string(),
            };
            out.push_str(&to_pretty_json(&doc));
        }
    }
    Ok(any_failure(&constructed.preconditions) || any_failure(&constructed.hly))
}

#[derive(Serialize)]
struct Thm11Document<'a> {
    file: String,
    name: &'a str,
    hly: &'a [CheckReport],
    ternary_is_induced: bool,
    mismatch: &'a Option<Witness>,
    conclusion: &'a CheckReport,
}

fn cmd_verify_thm11(out: &mut String, format: Format, file: &Path) -> Result<bool, CliError> {
    let bundle = load_bundle(file)?;
    let triple = require_ternary(&bundle, "verify-thm11")?;
    let outcome: Thm11Outcome = verify_thm11(triple)?;
    match format {
        Format::Text => {
            out.push_str("hypothesis (Hom-LYA axioms):\n");
            render_reports(out, &outcome.hly);
            if outcome.ternary_is_induced {
                out.push_str("ternary operation: matches the induced one\n");
            } else {
                let mismatch = outcome
                    .mismatch
                    .as_ref()
                    .expect("mismatch present when not induced");
                out.push_str(&format!(
                    "ternary operation: differs from the induced one ({mismatch})\n"
                ));
            }
            out.push_str("conclusion: ");
            out.push_str(&outcome.conclusion.to_string());
            out.push('\n');
        }
        Format::Json => {
            let doc = Thm11Document {
                file: file.display().to_string(),
                name: bundle.name(),
                hly: &outcome.hly,
                ternary_is_induced: outcome.ternary_is_induced,
                mismatch: &outcome.mismatch,
                conclusion: &outcome.conclusion,
            };
            out.push_str(&to_pretty_json(&doc));
        }
    }
    Ok(!outcome.passed())
}

#[derive(Serialize)]
struct TwistDocument<'a> {
    file: String,
    name: &'a str,
    reports: &'a [CheckReport],
    output: String,
}

fn cmd_twist(
    out: &mut String,
    format: Format,
    file: &Path,
    endo: &Path,
    output: &Path,
) -> Result<bool, CliError> {
    let bundle = load_bundle(file)?;
    if !bundle.twist().is_identity() {
        return Err(CliError::AlreadyTwisted(bundle.name().to_owned()));
    }
    let endo_text = homly_core::format::read_to_string(endo)?;
    let map = EndoFile::from_json(&endo_text)?.build()?;

    let (twisted, reports) = match &bundle {
        Bundle::Hom(h) => {
            let outcome = yau_twist(&h.base, &map)?;
            (Bundle::Hom(outcome.bundle), outcome.reports)
        }
        Bundle::Triple(t) => {
            let outcome = yau_twist_lya(t, &map)?;
            (Bundle::Triple(outcome.bundle), outcome.reports)
        }
    };
    let out_file = AlgebraFile::from_bundle(&twisted);
    homly_core::format::write_string(output, &out_file.to_json_pretty())?;

    match format {
        Format::Text => {
            render_reports(out, &reports);
            out.push_str(&format!("wrote {}\n", output.display()));
        }
        Format::Json => {
            let doc = TwistDocument {
                file: file.display().to_string(),
                name: bundle.name(),
                reports: &reports,
                output: output.display().to_string(),
            };
            out.push_str(&to_pretty_json(&doc));
        }
    }
    Ok(any_failure(&reports))
}

#[derive(Serialize)]
struct HitDocument {
    index: usize,
    source: HitSource,
    name: String,
    algebra: AlgebraFile,
    reports: Vec<CheckReport>,
}

#[derive(Serialize)]
struct SearchDocument {
    dim: usize,
    seed: u64,
    samples: usize,
    pass: Vec<String>,
    fail: Vec<String>,
    hits: Vec<HitDocument>,
}

fn parse_goal_axioms(tokens: &[String]) -> Result<BTreeSet<AxiomId>, CliError> {
    let mut out = BTreeSet::new();
    for token in tokens.iter().filter(|t| !t.is_empty()) {
        match parse_selector(token)? {
            Selector::Single(id) => {
                out.insert(id);
            }
            _ => return Err(CliError::UnknownIdentity(token.clone())),
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    out: &mut String,
    format: Format,
    dim: usize,
    seed: u64,
    samples: usize,
    pass: &[String],
    fail: &[String],
    coeffs: &[String],
) -> Result<bool, CliError> {
    let mut cfg = GeneratorConfig::new(dim, seed, samples);
    if !coeffs.is_empty() {
        cfg.coefficients = coeffs
            .iter()
            .map(|c| parse_scalar(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| FormatError::Invalid(vec![e.to_string()]))?;
    }
    let goal = MiningGoal {
        must_pass: parse_goal_axioms(pass)?,
        must_fail: parse_goal_axioms(fail)?,
    };
    let hits = mine(&cfg, &goal)?;

    match format {
        Format::Text => {
            for hit in &hits {
                let source = match hit.source {
                    HitSource::Catalog => "catalog",
                    HitSource::Generated => "generated",
                };
                out.push_str(&format!(
                    "hit {}: {} ({source}, dim {})\n",
                    hit.index, hit.bundle.base.name, dim
                ));
                for report in &hit.reports {
                    out.push_str(&format!("  {report}\n"));
                }
            }
            out.push_str(&format!("hits: {} of {} candidates\n", hits.len(), samples));
        }
        Format::Json => {
            let doc = SearchDocument {
                dim,
                seed,
                samples,
                pass: goal.must_pass.iter().map(|a| a.to_string()).collect(),
                fail: goal.must_fail.iter().map(|a| a.to_string()).collect(),
                hits: hits
                    .iter()
                    .map(|hit| HitDocument {
                        index: hit.index,
                        source: hit.source.clone(),
                        name: hit.bundle.base.name.clone(),
                        algebra: AlgebraFile::from_bundle(&Bundle::Hom(hit.bundle.clone())),
                        reports: hit.reports.clone(),
                    })
                    .collect(),
            };
            out.push_str(&to_pretty_json(&doc));
        }
    }
    Ok(hits.is_empty())
}

#[derive(Serialize)]
struct CatalogRow {
    name: String,
    dimension: usize,
    expect: std::collections::BTreeMap<String, String>,
}

fn cmd_catalog(
    out: &mut String,
    format: Format,
    name: Option<&str>,
    output: Option<&Path>,
) -> Result<bool, CliError> {
    let entries = catalog::validated()?;
    match name {
        None => match format {
            Format::Text => {
                for entry in &entries {
                    out.push_str(&format!(
                        "{} (dim {})\n",
                        entry.name(),
                        entry.bundle.dim()
                    ));
                }
            }
            Format::Json => {
                let rows: Vec<CatalogRow> = entries
                    .iter()
                    .map(|entry| CatalogRow {
                        name: entry.name().to_owned(),
                        dimension: entry.bundle.dim(),
                        expect: entry
                            .expect
                            .iter()
                            .map(|(axiom, &pass)| {
                                (
                                    axiom.to_string(),
                                    if pass { "pass" } else { "fail" }.to_owned(),
                                )
                            })
                            .collect(),
                    })
                    .collect();
                out.push_str(&to_pretty_json(&rows));
            }
        },
        Some(wanted) => {
            let entry = entries
                .iter()
                .find(|e| e.name() == wanted)
                .ok_or_else(|| CliError::NoSuchEntry(wanted.to_owned()))?;
            let text = entry.file.to_json_pretty();
            match output {
                Some(path) => {
                    homly_core::format::write_string(path, &text)?;
                    match format {
                        Format::Text => out.push_str(&format!("wrote {}\n", path.display())),
                        Format::Json => out.push_str(&to_pretty_json(&serde_json::json!({
                            "name": wanted,
                            "output": path.display().to_string(),
                        }))),
                    }
                }
                None => out.push_str(&text),
            }
        }
    }
    Ok(false)
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types are serializable");
    text.push('\n');
    text
}
