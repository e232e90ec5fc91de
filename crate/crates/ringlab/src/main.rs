//! Command-line front end. Exit codes: 0 success / all checks pass,
//! 1 check failure or a false `--assert`, 2 input error, 3 capacity.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ringlab::classify::{self, Certificate, DecompKind, DecomposeResult, RingProperty};
use ringlab::construct::BuildConfig;
use ringlab::harness::{self, Catalog};
use ringlab::{cayley, expr, par, RingError};

#[derive(Parser)]
#[command(name = "ringlab", version, about = "finite-ring laboratory: construction, classification, theorem checks")]
struct Cli {
    /// carrier size cap for constructions
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// exhaustive axiom validation up to this size, sampled above it
    #[arg(long, global = true)]
    validate_bound: Option<usize>,
    /// worker threads for the parallel scans (0 = default)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// RNG seed for sampled validation
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Md,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a ring from an expression, validate it, optionally save its tables
    Build {
        expr: String,
        /// write the Cayley tables as JSON
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Classify a ring: structural property verdicts with certificates
    Classify {
        /// ring expression (omit when using --load)
        expr: Option<String>,
        /// load Cayley tables from JSON instead of an expression
        #[arg(long, conflicts_with = "expr")]
        load: Option<PathBuf>,
        /// comma-separated property list (default: all)
        #[arg(long, value_delimiter = ',')]
        props: Option<Vec<String>>,
        /// exit 1 unless this property holds
        #[arg(long = "assert")]
        assertion: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decompose one element as idempotent + unit/nilpotent, or refute
    Decompose {
        expr: String,
        /// element carrier index
        #[arg(long)]
        element: usize,
        /// clean | nil_clean | strongly_nil_clean
        #[arg(long)]
        kind: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the theorem-check suite over a ring catalog
    Suite {
        /// file with one ring expression per line (default: built-in catalog)
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// comma-separated check ids, e.g. C1,C12
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// GNC verdict and trichotomy branch for Z_1 .. Z_max
    ScanZn {
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    command: String,
    format: &'static str,
    payload: T,
}

fn report_json<T: Serialize>(payload: T) -> Result<(), RingError> {
    let report = Report {
        command: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
        format: "json",
        payload,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn verdict_note(v: &classify::Verdict) -> String {
    match &v.certificate {
        None => String::new(),
        Some(Certificate::FailingElement { element, .. }) => {
            format!(" (witness {} = {})", element.index, element.decoded)
        }
        Some(Certificate::WitnessElements { elements }) => {
            let parts: Vec<String> = elements.iter().map(|e| e.index.to_string()).collect();
            format!(" (witness {})", parts.join(", "))
        }
        Some(Certificate::SubsetListing { elements }) => {
            format!(" ({} elements listed)", elements.len())
        }
    }
}

fn run(cli: Cli) -> Result<u8, RingError> {
    par::configure_jobs(cli.jobs);
    let mut cfg = BuildConfig::default();
    if let Some(cap) = cli.cap {
        cfg.carrier_cap = cap;
    }
    if let Some(b) = cli.validate_bound {
        cfg.validate_bound = b;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }

    match cli.command {
        Command::Build { expr: text, save } => {
            let ring = expr::build_from_text(&text, &cfg)?;
            let report = ring.validate(cfg.validate_bound, cfg.seed);
            if let Some(v) = &report.violation {
                return Err(RingError::Validation {
                    label: ring.label().to_string(),
                    law: v.law,
                    witness: v.witness,
                });
            }
            let mode = if report.is_exhaustive() { "exhaustive" } else { "sampled" };
            println!("built {}: size {} ({} validation passed)", ring.label(), ring.size(), mode);
            if let Some(path) = save {
                cayley::save(&ring, &path)?;
                println!("saved {}", path.display());
            }
            Ok(0)
        }
        Command::Classify { expr: text, load, props, assertion, format } => {
            let ring = match (&text, &load) {
                (Some(t), None) => expr::build_validated(t, &cfg)?,
                (None, Some(path)) => cayley::load(path, cfg.validate_bound, cfg.seed)?,
                _ => return Err(RingError::input("classify needs an expression or --load FILE")),
            };
            let props = match props {
                None => None,
                Some(names) => Some(
                    names
                        .iter()
                        .map(|n| RingProperty::from_str(n))
                        .collect::<Result<Vec<_>, _>>()?,
                ),
            };
            let profile = classify::profile_ring(&ring, props.as_deref());
            match format {
                Format::Json => report_json(&profile)?,
                Format::Md => {
                    println!("{} (size {})", profile.label, profile.size);
                    for pv in &profile.verdicts {
                        println!(
                            "  {}: {}{}",
                            pv.property.name(),
                            pv.verdict.holds,
                            verdict_note(&pv.verdict)
                        );
                    }
                }
            }
            if let Some(name) = assertion {
                let p = RingProperty::from_str(&name)?;
                let holds = profile
                    .verdicts
                    .iter()
                    .find(|v| v.property == p)
                    .map(|v| v.verdict.holds)
                    .unwrap_or_else(|| classify::ring_predicate(&ring, p).holds);
                if !holds {
                    eprintln!("assertion failed: {} is not {}", ring.label(), p.name());
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Decompose { expr: text, element, kind, format } => {
            let ring = expr::build_validated(&text, &cfg)?;
            let kind = DecompKind::from_str(&kind)?;
            let result = classify::decompose(&ring, element, kind)?;
            match format {
                Format::Json => report_json(&result)?,
                Format::Md => match &result {
                    DecomposeResult::Witness(d) => {
                        println!(
                            "{} = {} + {} in {} ({:?}, commuting: {})",
                            d.element.decoded,
                            d.idempotent_part.decoded,
                            d.other_part.decoded,
                            ring.label(),
                            kind,
                            d.commuting
                        );
                    }
                    DecomposeResult::Refutation { element, rows, .. } => {
                        println!(
                            "no decomposition of {} (index {}) in {}; {} idempotents refuted:",
                            element.decoded,
                            element.index,
                            ring.label(),
                            rows.len()
                        );
                        for row in rows {
                            println!("  e = {}: {}", row.idempotent.decoded, row.reason);
                        }
                    }
                },
            }
            Ok(0)
        }
        Command::Suite { catalog, only, format } => {
            let catalog = match catalog {
                None => Catalog::default_catalog(&cfg)?,
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    let lines: Vec<&str> = text
                        .lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .collect();
                    Catalog::from_exprs(&lines, &cfg)?
                }
            };
            for entry in &catalog.entries {
                if let Err(reason) = &entry.built {
                    eprintln!("skipping {}: {}", entry.text, reason);
                }
            }
            let report = harness::run_all(&catalog, &cfg, only.as_deref())?;
            match format {
                Format::Json => report_json(&report)?,
                Format::Md => print!("{}", harness::render_markdown(&report)),
            }
            Ok(if report.summary.fail > 0 { 1 } else { 0 })
        }
        Command::ScanZn { max, format } => {
            let rows = harness::scan_zn(max, &cfg)?;
            match format {
                Format::Json => report_json(&rows)?,
                Format::Md => {
                    println!("| n | gnc | branch | prime power |\n|---|---|---|---|");
                    for row in &rows {
                        println!(
                            "| {} | {} | {} | {} |",
                            row.n, row.gnc, row.branch, row.prime_power
                        );
                    }
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                RingError::Capacity { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
