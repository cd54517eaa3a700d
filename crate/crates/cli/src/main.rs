use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use corel::interface::{compose_doc, enumerate, EngineSpec, Kind};
use corel::verify::{default_jobs, run_jobs, Job, Plan, DEFAULT_SEED};
use corel::Error;

#[derive(Parser)]
#[command(
    name = "corel",
    version,
    about = "Compose and check corelations and relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a diagram file and print its canonical form.
    Compose {
        file: PathBuf,
        /// Engine to use; overrides the file's `engine` field.
        #[arg(long)]
        engine: Option<EngineSpec>,
    },
    /// List the canonical (co)relations n -> m.
    Enumerate {
        #[arg(long)]
        engine: EngineSpec,
        n: usize,
        m: usize,
        #[arg(long, default_value = "corel")]
        kind: Kind,
    },
    /// Run verification suites by name, or `all`.
    Verify {
        #[arg(required = true)]
        suites: Vec<String>,
        #[arg(long, default_value = "finset")]
        engine: EngineSpec,
        /// Subcategory A for finset: Inj or F.
        #[arg(long)]
        subcat: Option<String>,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Record wall-clock time per suite (output is no longer reproducible).
        #[arg(long)]
        timings: bool,
        /// chain2, diamond, coproduct, or a JSON file.
        #[arg(long)]
        lattice: Option<String>,
    },
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Compose { file, engine } => {
            print_json(&compose_doc(&read(&file)?, engine)?);
            Ok(true)
        }
        Command::Enumerate { engine, n, m, kind } => {
            print_json(&enumerate(engine, kind, n, m)?);
            Ok(true)
        }
        Command::Verify {
            suites,
            engine,
            subcat,
            bound,
            seed,
            json,
            timings,
            lattice,
        } => {
            let spec = match &subcat {
                Some(s) => engine.with_subcat(s)?,
                None => engine,
            };
            let lattice: Option<&'static str> = match lattice {
                Some(l) if Path::new(&l).is_file() => Some(read(Path::new(&l))?.leak()),
                Some(l) => Some(l.leak()),
                None => None,
            };
            let jobs: Vec<Job> = if suites.iter().any(|s| s == "all") {
                let mut jobs = default_jobs(seed);
                if let Some(b) = bound {
                    jobs.iter_mut().for_each(|j| j.plan.bound = b);
                }
                jobs
            } else {
                let plan = Plan::new(bound.unwrap_or(spec.default_bound())).with_seed(seed);
                suites
                    .iter()
                    .map(|s| {
                        let suite = corel::verify::SUITES
                            .iter()
                            .find(|k| **k == s.as_str())
                            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))?;
                        Ok(Job {
                            suite,
                            spec,
                            plan,
                            lattice,
                        })
                    })
                    .collect::<Result<_, Error>>()?
            };
            let report = run_jobs(&jobs, timings)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(report.ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
