use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chowlab::io::{max_n_from_env, MatroidSpec};
use chowlab::{chern, chow, cmfs, cone, corpus, json, moments, verify, Error, Matroid};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::Value;

/// Exact Chow polynomials, moment bounds and Chern numbers of matroids.
///
/// A matroid is given as `uniform:r,n`, `boolean:n`, `pg:d,q` or the path of a
/// JSON file `{"n": .., "bases": [[..], ..]}`. `CHOWLAB_MAX_N` caps the ground
/// set size (default 18).
#[derive(Parser)]
#[command(name = "chowlab", version)]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ground set, rank and flat counts.
    Info { matroid: String },
    /// The flag counts N_J for every J ⊆ [d].
    Flags {
        matroid: String,
        /// Emit CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Chow polynomial (flag formula cross-checked against the recursion) and
    /// its γ-vector.
    Chow { matroid: String },
    /// Central and factorial moments with the bound envelope.
    Moments {
        matroid: String,
        /// Highest moment order.
        #[arg(long, default_value_t = 8)]
        kmax: u32,
    },
    /// Exhaustive check of the Boolean moment inequality.
    Sweep {
        #[arg(long, default_value_t = 40)]
        dmax: usize,
        #[arg(long, default_value_t = 25)]
        tmax: u32,
    },
    /// Build the CMFS polynomials up to an even order.
    Cmfs {
        #[arg(long, default_value_t = 6)]
        order: u32,
    },
    /// Chern numbers, the Chern inequality and α-expansions.
    Chern {
        matroid: String,
        /// Highest k for the α rows (defaults to d).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Intersection numbers of the permutahedral variety.
    Perm {
        #[arg(long)]
        d: usize,
    },
    /// Exact LP certificate for the flag inequality. Exit code 3 means
    /// infeasible, 4 means d exceeds the cap.
    Cone {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = cone::DEFAULT_MAX_D)]
        max_d: usize,
    },
    /// Run every exact check; exit code 1 if any fails.
    VerifyAll {
        matroids: Vec<String>,
        /// Also run the built-in corpus.
        #[arg(long)]
        corpus: bool,
    },
}

enum Failure {
    Input(Error),
    Runtime(Error),
    Checks,
    ConeInfeasible,
    ConeCap,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Runtime(_) | Failure::Checks => 1,
            Failure::Input(_) => 2,
            Failure::ConeInfeasible => 3,
            Failure::ConeCap => 4,
        }
    }
}

fn load(spec: &str) -> Result<Matroid, Failure> {
    let max_n = max_n_from_env();
    spec.parse::<MatroidSpec>()
        .and_then(|s| s.load(max_n))
        .map_err(Failure::Input)
}

fn run(command: Command) -> (Option<String>, Result<(), Failure>) {
    let report = |v: Value| Some(serde_json::to_string_pretty(&v).expect("values serialize"));
    let result = (|| -> Result<String, (Option<String>, Failure)> {
        let plain = |f: Failure| (None, f);
        let out = match command {
            Command::Info { matroid } => {
                let m = load(&matroid).map_err(plain)?;
                report(json::matroid_info(&matroid, &m))
            }
            Command::Flags { matroid, csv } => {
                let m = load(&matroid).map_err(plain)?;
                let table = chowlab::FlagTable::of_matroid(&m);
                if csv {
                    Some(json::flag_table_csv(&table))
                } else {
                    report(json::flag_table(&table))
                }
            }
            Command::Chow { matroid } => {
                let m = load(&matroid).map_err(plain)?;
                let p = chow::chow(&m).map_err(|e| plain(Failure::Runtime(e)))?;
                let g = chow::gamma_vector(&p, m.d()).map_err(|e| plain(Failure::Runtime(e)))?;
                report(json::chow(&matroid, m.d(), &p, &g))
            }
            Command::Moments { matroid, kmax } => {
                let m = load(&matroid).map_err(plain)?;
                let r = moments::verify_bounds(&m, kmax);
                let text = report(json::moment_report(&r));
                if !r.all_hold() {
                    return Err((text, Failure::Checks));
                }
                text
            }
            Command::Sweep { dmax, tmax } => {
                let s = moments::boolean_sweep(dmax, tmax);
                let text = report(json::sweep(dmax, tmax, &s));
                if !s.violations.is_empty() {
                    return Err((text, Failure::Checks));
                }
                text
            }
            Command::Cmfs { order } => {
                let state = cmfs::build_cmfs(order).map_err(|e| plain(Failure::Input(e)))?;
                report(json::cmfs(&state))
            }
            Command::Chern { matroid, k } => {
                let m = load(&matroid).map_err(plain)?;
                let r = chern::chern_report(&m, k.unwrap_or(m.d()));
                report(json::chern_report(&r))
            }
            Command::Perm { d } => {
                if d == 0 {
                    return Err(plain(Failure::Input(Error::InvalidParameters("perm needs d >= 1".into()))));
                }
                report(json::permutahedron(d))
            }
            Command::Cone { d, max_d } => match cone::certify_capped(d, max_d) {
                Ok(outcome) => {
                    let (verified, infeasible) = match &outcome {
                        cone::ConeOutcome::Certified(c) => (cone::verify_certificate(c), false),
                        cone::ConeOutcome::Infeasible { .. } => (true, true),
                    };
                    let text = report(json::cone_outcome(&outcome, verified));
                    if infeasible {
                        return Err((text, Failure::ConeInfeasible));
                    }
                    if !verified {
                        return Err((text, Failure::Checks));
                    }
                    text
                }
                Err(e @ Error::DimensionTooLarge { .. }) => {
                    eprintln!("error: {e}");
                    return Err(plain(Failure::ConeCap));
                }
                Err(e) => return Err(plain(Failure::Input(e))),
            },
            Command::VerifyAll { matroids, corpus } => {
                let mut entries = Vec::new();
                for spec in &matroids {
                    entries.push((spec.clone(), load(spec).map_err(plain)?));
                }
                if corpus {
                    entries.extend(corpus::full_corpus().into_iter().map(|e| (e.name, e.matroid)));
                }
                if entries.is_empty() {
                    return Err(plain(Failure::Input(Error::InvalidParameters(
                        "give at least one matroid or --corpus".into(),
                    ))));
                }
                let reports: Vec<_> = entries.par_iter().map(|(name, m)| verify::verify_all(name, m)).collect();
                let passed = reports.iter().all(|r| r.passed());
                let text = report(serde_json::json!({
                    "passed": passed,
                    "reports": reports.iter().map(json::verify_report).collect::<Vec<_>>(),
                }));
                if !passed {
                    return Err((text, Failure::Checks));
                }
                text
            }
        };
        Ok(out.unwrap_or_default())
    })();
    match result {
        Ok(text) => (Some(text), Ok(())),
        Err((text, failure)) => (text, Err(failure)),
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> std::io::Result<()> {
    let mut text = text.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match output {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, result) = run(cli.command);
    if let Some(text) = text {
        if let Err(e) = emit(&text, cli.output.as_ref()) {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(1);
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Input(e) | Failure::Runtime(e) => eprintln!("error: {e}"),
                Failure::Checks => eprintln!("error: some checks failed"),
                Failure::ConeInfeasible => eprintln!("error: no cone certificate exists"),
                Failure::ConeCap => {}
            }
            ExitCode::from(failure.code())
        }
    }
}
