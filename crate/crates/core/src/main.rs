use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use toric_whitney::cli::problem::parse_problem;
use toric_whitney::cli::report::render_text;
use toric_whitney::cli::{run, verify_report, Command, RunOptions};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Dual,
    Hilbert,
    Faces,
    Nondeg,
    Tame,
    Analyze,
    Family,
    Stratify,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Structured,
}

/// Newton-polyhedron analysis of polynomials and families on affine toric varieties.
#[derive(Parser, Debug)]
#[command(version)]
struct Args {
    command: Option<Cmd>,
    /// problem file
    #[arg(long)]
    input: Option<PathBuf>,
    /// write the structured report here
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    budget: Option<usize>,
    /// cross-check against brute-force computations
    #[arg(long)]
    oracle: bool,
    /// replay every witness in a structured report and exit
    #[arg(long, value_name = "REPORT")]
    verify_witness: Option<PathBuf>,
}

fn command(c: Cmd) -> Command {
    match c {
        Cmd::Dual => Command::Dual,
        Cmd::Hilbert => Command::Hilbert,
        Cmd::Faces => Command::Faces,
        Cmd::Nondeg => Command::Nondeg,
        Cmd::Tame => Command::Tame,
        Cmd::Analyze => Command::Analyze,
        Cmd::Family => Command::Family,
        Cmd::Stratify => Command::Stratify,
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };

    if let Some(path) = &args.verify_witness {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return fail(format!("{}: {e}", path.display())),
        };
        return match verify_report(&text) {
            Ok((n, failures)) if failures.is_empty() => {
                println!("{n} witnesses replayed exactly");
                ExitCode::SUCCESS
            }
            Ok((n, failures)) => {
                for f in &failures {
                    println!("replay failed: {f}");
                }
                println!("{} of {n} witnesses failed to replay", failures.len());
                ExitCode::from(2)
            }
            Err(e) => fail(e),
        };
    }

    let Some(cmd) = args.command else {
        return fail("a command is required (dual, hilbert, faces, nondeg, tame, analyze, family, stratify)");
    };
    let Some(input) = &args.input else {
        return fail("--input is required");
    };
    let problem = match parse_problem(input) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let opts = RunOptions { seed: args.seed, budget: args.budget, oracle: args.oracle };
    let report = match run(command(cmd), &problem, &opts) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let json = report.to_json();
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, &json) {
            return fail(format!("{}: {e}", path.display()));
        }
    }
    match args.format {
        Format::Text => print!("{}", render_text(&report)),
        Format::Structured => print!("{json}"),
    }
    ExitCode::from(report.exit_code() as u8)
}
