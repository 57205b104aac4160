use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hecke_center::chebyshev;
use hecke_center::expr;
use hecke_center::suite::{self, Config, Report, Status, TMode};
use hecke_center::Algebra;

#[derive(Parser)]
#[command(
    name = "hecke-verify",
    version,
    about = "Exact checks for twisted graded Hecke algebras of (Z/lZ)^(n-1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite for one (n, l).
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = suite::DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
        /// Write the JSON report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the PBW normal form of an expression in H.
    Normalize {
        #[command(flatten)]
        algebra: AlgebraArgs,
        expr: String,
    },
    /// Print the image under Theta of an expression in H.
    Theta {
        #[command(flatten)]
        algebra: AlgebraArgs,
        expr: String,
    },
    /// Print nu_0, ..., nu_(floor(l/2)).
    Nu {
        #[arg(long)]
        ell: u32,
    },
    /// Run the default grid {3,4,5} x {2,3,4} and print a combined JSON report.
    Grid {
        #[arg(long, default_value_t = suite::DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
        /// Write the JSON report to this file instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct AlgebraArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    ell: u32,
    /// `sym` for formal parameters, or n comma-separated values in Q(zeta).
    #[arg(long, default_value = "sym")]
    t: String,
}

impl AlgebraArgs {
    fn config(&self, degree_bound: u32, seed: u64) -> Config {
        let t_mode = if self.t == "sym" {
            TMode::Symbolic
        } else {
            TMode::Specialized(self.t.split(',').map(|s| s.trim().to_string()).collect())
        };
        Config {
            n: self.n,
            ell: self.ell,
            t_mode,
            degree_bound,
            seed,
        }
    }

    fn algebra(&self) -> Result<Algebra> {
        Ok(self
            .config(suite::DEFAULT_DEGREE_BOUND, suite::DEFAULT_SEED)
            .algebra()?)
    }
}

fn print_report(report: &Report) {
    for c in &report.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        match &c.witness {
            Some(w) => println!("{tag} {} ({} ms): {w}", c.name, c.ms),
            None => println!("{tag} {} ({} ms)", c.name, c.ms),
        }
    }
    let s = &report.summary;
    println!(
        "{} passed, {} failed, {} skipped",
        s.passed, s.failed, s.skipped
    );
}

fn write_json(path: &PathBuf, text: String) -> Result<()> {
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify {
            algebra,
            degree_bound,
            seed,
            json,
        } => {
            let report = suite::run_suite(&algebra.config(degree_bound, seed))?;
            print_report(&report);
            if let Some(path) = json {
                write_json(&path, serde_json::to_string_pretty(&report)?)?;
            }
            Ok(report.ok())
        }
        Command::Normalize {
            algebra,
            expr: input,
        } => {
            let alg = algebra.algebra()?;
            println!("{}", expr::parse_hecke(&alg, &input)?);
            Ok(true)
        }
        Command::Theta {
            algebra,
            expr: input,
        } => {
            let alg = algebra.algebra()?;
            println!("{}", alg.theta(&expr::parse_hecke(&alg, &input)?));
            Ok(true)
        }
        Command::Nu { ell } => {
            if ell < 1 {
                bail!("ell must be at least 1");
            }
            let values = chebyshev::nu_list(ell)?;
            let text: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            println!("{}", text.join(", "));
            Ok(true)
        }
        Command::Grid {
            degree_bound,
            seed,
            json,
        } => {
            let grid = suite::run_grid(&suite::default_grid(degree_bound, seed))?;
            match json {
                Some(path) => {
                    write_json(&path, serde_json::to_string_pretty(&grid)?)?;
                    for r in &grid.reports {
                        let s = &r.summary;
                        println!(
                            "n={} ell={}: {} passed, {} failed, {} skipped",
                            r.config.n, r.config.ell, s.passed, s.failed, s.skipped
                        );
                    }
                }
                None => println!("{}", serde_json::to_string_pretty(&grid)?),
            }
            Ok(grid.summary.ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
