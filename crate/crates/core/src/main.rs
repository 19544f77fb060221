use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sameorder::catalog::{self, CatalogEntry};
use sameorder::classify;
use sameorder::error::GroupError;
use sameorder::group::Bounds;
use sameorder::groupspec::{self, GroupSpec};
use sameorder::structure;
use sameorder::verify::{self, CheckId};
use sameorder::{spectra, Result};

/// Finite-group spectra, same-order types, classification, and sweeps.
#[derive(Parser)]
#[command(name = "sameorder", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BoundArgs {
    /// Hard cap on group order for construction and spectra.
    #[arg(long, default_value_t = 20_000)]
    max_elements: usize,
    /// Hard cap on group order for subgroup-lattice enumeration.
    #[arg(long, default_value_t = 2_000)]
    max_lattice_order: usize,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds {
            max_elements: self.max_elements,
            max_lattice_order: self.max_lattice_order,
        }
    }
}

#[derive(Args)]
struct GroupInput {
    /// Group definition file (`perm` or `table` format).
    file: Option<PathBuf>,
    /// Named family shorthand, e.g. `quaternion:8` or `semidirect:5,4`.
    #[arg(long)]
    name: Option<String>,
}

impl GroupInput {
    fn resolve(&self) -> Result<(String, GroupSpec)> {
        match (&self.file, &self.name) {
            (Some(path), None) => Ok((
                path.display().to_string(),
                groupspec::parse_group_file(path)?,
            )),
            (None, Some(name)) => Ok((name.clone(), GroupSpec::parse_shorthand(name)?)),
            _ => Err(GroupError::Parse {
                line: 0,
                message: "give exactly one of a group file or --name".to_string(),
            }),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print order, primes, spectrum, order classes, alpha type, exponent.
    Analyze {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Full classification report (JSON), including witnesses.
    Classify {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Subgroup lattice summary: counts by order.
    Subgroups {
        #[command(flatten)]
        input: GroupInput,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Run checks over a catalog of groups.
    Sweep {
        /// `builtin` or a path to a JSON catalog manifest.
        #[arg(long, default_value = "builtin")]
        catalog: String,
        /// Only sweep groups of order at most this.
        #[arg(long, default_value_t = 200)]
        max_order: usize,
        /// Comma-separated check ids
        /// (lemma21,cor22,thm23,shen,thm31,frobenius_divisibility,totient_divides).
        #[arg(long, required = true)]
        check: String,
        /// Write the full JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: SAMEORDER_JOBS or hardware concurrency).
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Catalog inspection.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List catalog entries as `id order tags`.
    List {
        /// `builtin` or a path to a JSON catalog manifest.
        #[arg(long, default_value = "builtin")]
        catalog: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
}

fn load_entries(source: &str, bounds: &Bounds) -> Result<Vec<CatalogEntry>> {
    if source == "builtin" {
        Ok(catalog::builtin_catalog())
    } else {
        catalog::load_catalog(Path::new(source), bounds)
    }
}

fn fmt_set<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn cmd_analyze(input: &GroupInput, bounds: &Bounds) -> Result<()> {
    let (id, spec) = input.resolve()?;
    let g = spec.build(bounds)?;
    let ocm = spectra::order_class_map(&g);
    println!("group: {id}");
    println!("order: {}", g.size());
    println!("pi: {}", fmt_set(structure::prime_divisors(&g)));
    println!("pi_e: {}", fmt_set(ocm.spectrum()));
    println!(
        "order_classes: {}",
        fmt_set(ocm.entries().iter().map(|(k, v)| format!("{k}: {v}")))
    );
    println!("alpha: {}", fmt_set(ocm.alpha().sizes().iter()));
    println!("exponent: {}", ocm.exponent());
    Ok(())
}

fn cmd_classify(input: &GroupInput, bounds: &Bounds) -> Result<()> {
    let (id, spec) = input.resolve()?;
    let g = spec.build(bounds)?;
    let report = classify::classify(&g, &id, bounds, true)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn cmd_subgroups(input: &GroupInput, bounds: &Bounds) -> Result<()> {
    let (id, spec) = input.resolve()?;
    let g = spec.build(bounds)?;
    let lattice = structure::all_subgroups(&g, bounds)?;
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for h in lattice.subgroups() {
        *by_order.entry(h.len()).or_insert(0) += 1;
    }
    println!("group: {id}");
    println!("order: {}", g.size());
    println!("subgroups: {}", lattice.len());
    for (order, count) in by_order {
        println!("  order {order}: {count}");
    }
    Ok(())
}

fn parse_checks(text: &str) -> Result<Vec<CheckId>> {
    let mut checks = Vec::new();
    for tok in text.split(',') {
        let check = CheckId::parse(tok.trim())?;
        if !checks.contains(&check) {
            checks.push(check);
        }
    }
    Ok(checks)
}

fn cmd_sweep(
    source: &str,
    max_order: usize,
    check: &str,
    out: Option<&Path>,
    jobs: Option<usize>,
    bounds: &Bounds,
) -> Result<i32> {
    let checks = parse_checks(check)?;
    let entries = load_entries(source, bounds)?;

    let jobs = jobs
        .or_else(|| {
            std::env::var("SAMEORDER_JOBS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0); // 0 = rayon's default (hardware concurrency)
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool construction");
    let report = pool.install(|| verify::sweep(&entries, &checks, bounds, max_order));

    let summary = &report.summary;
    println!("groups examined: {}", summary.groups_examined);
    for (check, tally) in &summary.tallies {
        println!(
            "check {check}: passed {} failed {} skipped {}",
            tally.passed, tally.failed, tally.skipped
        );
    }
    if !summary.minimal_non_y2_witnesses.is_empty() {
        println!(
            "minimal non-Y2 witnesses: {}",
            summary.minimal_non_y2_witnesses.join(" ")
        );
    }
    for failure in &summary.construction_errors {
        println!("construction error: {}: {}", failure.group_id, failure.error);
    }
    for finding in &summary.findings {
        println!(
            "FINDING: check {} failed on {}: {}",
            finding.check_id.name(),
            finding.group_id,
            finding.detail
        );
    }

    if let Some(path) = out {
        std::fs::write(path, serde_json::to_string_pretty(&report)?)?;
    }
    Ok(if summary.has_failures() { 2 } else { 0 })
}

fn cmd_catalog_list(source: &str, bounds: &Bounds) -> Result<()> {
    let entries = load_entries(source, bounds)?;
    for e in &entries {
        let tags: Vec<&str> = e.tags.iter().map(|t| t.as_str()).collect();
        println!("{} {} {}", e.id, e.expected_order, tags.join(","));
    }
    println!("total: {}", entries.len());
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Analyze { input, bounds } => {
            cmd_analyze(&input, &bounds.bounds())?;
            Ok(0)
        }
        Command::Classify { input, bounds } => {
            cmd_classify(&input, &bounds.bounds())?;
            Ok(0)
        }
        Command::Subgroups { input, bounds } => {
            cmd_subgroups(&input, &bounds.bounds())?;
            Ok(0)
        }
        Command::Sweep {
            catalog,
            max_order,
            check,
            out,
            jobs,
            bounds,
        } => cmd_sweep(
            &catalog,
            max_order,
            &check,
            out.as_deref(),
            jobs,
            &bounds.bounds(),
        ),
        Command::Catalog { command } => match command {
            CatalogCommand::List { catalog, bounds } => {
                cmd_catalog_list(&catalog, &bounds.bounds())?;
                Ok(0)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are success, anything else is usage error
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
