//! Command-line surface over the zhualg library.
//!
//! Exit codes: 0 on success, 1 when a mathematical verification fails,
//! 2 on invalid input. CI can therefore gate on the verify subcommands.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

use zhualg::error::Error;
use zhualg::lattice::{self, lattice_report, validate_gram, GramFile};
use zhualg::poly::{poly_from_json, Poly};
use zhualg::rat::rat_to_string;
use zhualg::rbar::{g_k, rbar_report};
use zhualg::smith::SmithAlgebra;
use zhualg::zhu;

#[derive(Parser)]
#[command(
    name = "zhualg",
    about = "Exact computations with Smith-type algebras and lattice algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on the algebra R(g) for a chosen polynomial g
    Smith {
        #[command(subcommand)]
        action: SmithAction,
    },
    /// The semisimple quotient of R(g_k)
    Rbar {
        #[command(subcommand)]
        action: RbarAction,
    },
    /// Even-lattice pipeline: discriminant group, modules, algebra span
    Lattice {
        #[command(subcommand)]
        action: LatticeAction,
    },
    /// Polynomial identity suites and the cross-pipeline check
    Identities {
        #[command(subcommand)]
        action: IdentitiesAction,
    },
}

#[derive(Args)]
struct GArgs {
    /// Polynomial g as a JSON array of rationals, low degree first,
    /// e.g. "[0,2]" for 2x
    #[arg(long, conflicts_with = "g_k")]
    g: Option<String>,
    /// Use the built-in family member g_k
    #[arg(long = "g-k", value_parser = clap::value_parser!(u32).range(1..))]
    g_k: Option<u32>,
}

impl GArgs {
    fn resolve(&self) -> Result<Poly, Error> {
        match (&self.g, self.g_k) {
            (Some(s), None) => poly_from_json(s),
            (None, Some(k)) => Ok(g_k(k as usize)),
            _ => Err(Error::Parse("provide exactly one of --g or --g-k".into())),
        }
    }
}

#[derive(Subcommand)]
enum SmithAction {
    /// List simple modules by dimension, with non-rational weight counts
    Classify {
        #[command(flatten)]
        g: GArgs,
        /// Largest dimension to classify
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_dim: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check the h_j squarefree/coprimality hypotheses
    CheckSemisimple {
        #[command(flatten)]
        g: GArgs,
        #[arg(long, default_value_t = 40)]
        max_j: u32,
        #[arg(long)]
        json: bool,
    },
    /// Verify centrality of Omega and its product factorization
    Casimir {
        #[command(flatten)]
        g: GArgs,
        #[arg(long, default_value_t = 3)]
        max_r: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RbarAction {
    /// Irreducible table, algebra dimension, semisimplicity verdict
    Info {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum LatticeAction {
    /// Discriminant group, module table, algebra dimension
    Analyze {
        /// Gram matrix JSON file: {"gram": [[2,-1],[-1,2]]}
        #[arg(long)]
        gram: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Analyze, then verify the defining relations and semisimplicity
    Verify {
        #[arg(long)]
        gram: PathBuf,
        #[arg(long)]
        json: bool,
        /// Also print one line per verified relation family
        #[arg(short, long)]
        verbose: bool,
    },
}

#[derive(Subcommand)]
enum IdentitiesAction {
    /// Run identity families over their desk ranges
    Verify {
        /// all | vandermonde | ef | pal | schur
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_k: u32,
        #[arg(long, default_value_t = 12)]
        max_nm: u32,
        #[arg(long, default_value_t = 12)]
        max_r: u32,
        #[arg(long)]
        json: bool,
    },
    /// Compare the quotient and lattice pipelines on rank-one lattices
    Crosscheck {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        max_k: u32,
        #[arg(long)]
        json: bool,
    },
}

fn exit_for(e: &Error) -> ExitCode {
    match e {
        Error::InternalCheck(_) | Error::NotClosed => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    exit_for(&e)
}

fn load_gram(path: &PathBuf) -> Result<lattice::GramLattice, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|io| Error::Parse(format!("cannot read {}: {io}", path.display())))?;
    let file: GramFile = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("gram JSON: {e}")))?;
    validate_gram(file.gram)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Smith { action } => run_smith(action),
        Command::Rbar { action } => run_rbar(action),
        Command::Lattice { action } => run_lattice(action),
        Command::Identities { action } => run_identities(action),
    }
}

fn run_smith(action: SmithAction) -> ExitCode {
    match action {
        SmithAction::Classify { g, max_dim, json } => {
            let g = match g.resolve() {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let alg = SmithAlgebra::new(g);
            let mut rows = Vec::new();
            for j in 1..=max_dim as usize {
                match alg.classify_simples(j) {
                    Ok(c) => rows.push(c),
                    Err(e) => return fail(e),
                }
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                println!("{:<5} {:<40} {}", "dim", "rational weights", "non-rational roots");
                for c in &rows {
                    let weights: Vec<String> =
                        c.rational_weights.iter().map(rat_to_string).collect();
                    println!(
                        "{:<5} {:<40} {}",
                        c.dim,
                        if weights.is_empty() { "-".to_string() } else { weights.join(", ") },
                        c.nonrational_count
                    );
                }
            }
            ExitCode::SUCCESS
        }
        SmithAction::CheckSemisimple { g, max_j, json } => {
            let g = match g.resolve() {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let alg = SmithAlgebra::new(g);
            let report = match alg.semisimplicity_criterion(max_j as usize) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                let (sq, co) = report.failures();
                println!(
                    "squarefree checks: {} (failures: {})",
                    report.squarefree.len(),
                    if sq.is_empty() { "none".to_string() } else { format!("{sq:?}") }
                );
                println!(
                    "coprimality checks: {} (failures: {})",
                    report.coprime.len(),
                    if co.is_empty() { "none".to_string() } else { format!("{co:?}") }
                );
                println!("overall: {}", if report.all_pass { "pass" } else { "FAIL" });
            }
            if report.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        SmithAction::Casimir { g, max_r, json } => {
            let g = match g.resolve() {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let alg = SmithAlgebra::new(g);
            let central = alg.is_central(&alg.omega());
            let per_r: Vec<(usize, bool)> = (0..=max_r as usize)
                .map(|r| (r, alg.casimir_factorization_check(r)))
                .collect();
            let all = central && per_r.iter().all(|(_, ok)| *ok);
            if json {
                let obj = serde_json::json!({
                    "omega_central": central,
                    "factorization": per_r.iter().map(|(r, ok)| {
                        serde_json::json!({"r": r, "pass": ok})
                    }).collect::<Vec<_>>(),
                    "all_pass": all,
                });
                println!("{}", serde_json::to_string_pretty(&obj).unwrap());
            } else {
                println!("omega central: {}", if central { "pass" } else { "FAIL" });
                for (r, ok) in &per_r {
                    println!("factorization r = {r}: {}", if *ok { "pass" } else { "FAIL" });
                }
            }
            if all { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
    }
}

fn run_rbar(action: RbarAction) -> ExitCode {
    match action {
        RbarAction::Info { k, json } => {
            let report = match rbar_report(k as usize) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("k = {}", report.k);
                println!("{:<12} {}", "weight", "dim");
                for ir in &report.irreducibles {
                    println!("{:<12} {}", ir.weight, ir.dim);
                }
                println!("algebra dimension: {}", report.algebra_dim);
                println!("semisimple: {}", report.semisimple);
            }
            if report.semisimple { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
    }
}

fn run_lattice(action: LatticeAction) -> ExitCode {
    let (path, verify, json, verbose) = match action {
        LatticeAction::Analyze { gram, json } => (gram, false, json, false),
        LatticeAction::Verify { gram, json, verbose } => (gram, true, json, verbose),
    };
    let lat = match load_gram(&path) {
        Ok(l) => l,
        Err(e) => return fail(e),
    };
    let report = match lattice_report(&lat, verify) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("det: {}", report.det);
        println!("invariant factors: {:?}", report.invariant_factors);
        println!("{:<24} {:<5} {}", "lambda", "dim", "min norm");
        for m in &report.modules {
            println!("{:<24} {:<5} {}", m.lambda.join(", "), m.dim, m.min_norm);
        }
        println!("algebra dimension: {}", report.algebra_dim);
        if let Some(ss) = report.semisimple {
            println!("semisimple: {ss}");
        }
        if verbose {
            match lattice::verify_relations(&lat) {
                Ok(rel) => {
                    for v in &rel.relations {
                        println!(
                            "  {:<55} {:>6} checks: {}",
                            v.name,
                            v.checked,
                            if v.pass { "pass" } else { "FAIL" }
                        );
                        if let Some(ce) = &v.counterexample {
                            println!("    first failure: {ce}");
                        }
                    }
                }
                Err(e) => return fail(e),
            }
        }
        if let Some(rel) = report.relations_verified {
            println!("relations verified: {rel}");
        }
    }
    let verified_ok =
        report.semisimple.unwrap_or(true) && report.relations_verified.unwrap_or(true);
    if verified_ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
}

fn run_identities(action: IdentitiesAction) -> ExitCode {
    match action {
        IdentitiesAction::Verify { suite, max_k, max_nm, max_r, json } => {
            let max_k = max_k as usize;
            let max_nm = max_nm as usize;
            let max_r = max_r as usize;
            let mut reports = Vec::new();
            let run = |reports: &mut Vec<zhualg::IdentityReport>| -> Result<(), Error> {
                match suite.as_str() {
                    "all" => reports.extend(zhu::identity_suite(max_nm, max_k, max_r)?),
                    "vandermonde" => {
                        for n in 0..=max_nm {
                            for m in n..=max_nm {
                                reports.push(zhu::identity_vandermonde(n, m)?);
                            }
                        }
                    }
                    "ef" => reports.extend((1..=max_k).map(zhu::identity_ef)),
                    "pal" => reports.extend((1..=max_k).map(zhu::identity_pal)),
                    "schur" => reports.extend((0..=max_r).map(zhu::identity_schur)),
                    other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
                }
                Ok(())
            };
            if let Err(e) = run(&mut reports) {
                return fail(e);
            }
            let all = reports.iter().all(|r| r.pass);
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            } else {
                for r in &reports {
                    println!(
                        "{:<24} {:?}: {}",
                        r.name,
                        r.parameters,
                        if r.pass { "pass" } else { "FAIL" }
                    );
                }
                println!(
                    "{} identities checked, {}",
                    reports.len(),
                    if all { "all pass" } else { "FAILURES present" }
                );
            }
            if all { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        IdentitiesAction::Crosscheck { max_k, json } => {
            let mut reports = Vec::new();
            for k in 1..=max_k as usize {
                match zhu::rank_one_crosscheck(k) {
                    Ok(r) => reports.push(r),
                    Err(e) => return fail(e),
                }
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            } else {
                for r in &reports {
                    println!(
                        "k = {}: {} irreducibles, dims {:?}, algebra dim {}",
                        r.k, r.irreducible_count, r.dims, r.algebra_dim
                    );
                }
                println!("both pipelines agree for k <= {max_k}");
            }
            ExitCode::SUCCESS
        }
    }
}
