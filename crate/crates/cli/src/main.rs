use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use hopfcyc_cli::{builtins, run, Job, RunOptions, EXIT_INPUT};

/// Verifies Hopf-cyclic structures described by a JSON job file.
#[derive(Parser, Debug)]
#[command(name = "hopfcyc", version)]
struct Args {
    /// JobSpec file.
    #[arg(long, required_unless_present = "list_builtins")]
    input: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Upper bound on cosimplicial levels and cohomology degrees.
    #[arg(long)]
    max_level: Option<usize>,
    /// Random monomials per sampled check.
    #[arg(long)]
    probe_budget: Option<usize>,
    /// Print the builtin presentations and their parameters.
    #[arg(long)]
    list_builtins: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_builtins {
        print!("{}", builtins::listing());
        return ExitCode::SUCCESS;
    }
    match execute(&args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}

fn execute(args: &Args) -> anyhow::Result<i32> {
    let path = args.input.as_ref().expect("clap requires --input");
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let job = match Job::load(&text) {
        Ok(j) => j,
        Err(e) => {
            match &e {
                hopfcyc_cli::InputError::Json { line, column, .. } => eprintln!("{}:{line}:{column}: {e}", path.display()),
                _ => eprintln!("{}: {e}", path.display()),
            }
            return Ok(EXIT_INPUT);
        }
    };
    let report = run(&job, RunOptions { seed: args.seed, max_level: args.max_level, probe_budget: args.probe_budget });
    println!("{report}");
    if let Some(out) = &args.json {
        std::fs::write(out, report.to_json()).with_context(|| format!("writing {}", out.display()))?;
    }
    Ok(report.exit_code())
}
