//! `qsg`: reduce expressions, run the verification suites, and read or write
//! presentation files.

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qsg_supergroup::presentations::{self, Presentation, BUILT_INS};
use qsg_supergroup::{file, report, suites, Error};

#[derive(Parser)]
#[command(name = "qsg", version, about = "Exact rewriting engine for the h-deformed supergroup GL_h(1|1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Reduce {
        expr: String,
        /// Built-in presentation name, or a path to a presentation file.
        #[arg(long, short, default_value = "glh")]
        presentation: String,
        /// Print Greek labels instead of ASCII names.
        #[arg(long)]
        unicode: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, short)]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// List, export or load presentations.
    Presentations {
        #[command(subcommand)]
        action: Option<PresentationAction>,
    },
}

#[derive(Subcommand)]
enum PresentationAction {
    /// Built-in presentations with their descriptions.
    List,
    /// Write a built-in presentation in the file format to stdout.
    Export { name: String },
    /// Validate a presentation file and summarize it.
    Load { file: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exit status for input errors; verification failures exit with 1.
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = apply_step_budget() {
        eprintln!("error: {e}");
        return ExitCode::from(USAGE);
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}

fn apply_step_budget() -> Result<(), String> {
    match std::env::var("QSG_STEP_BUDGET") {
        Ok(v) => {
            let n: u64 = v
                .trim()
                .parse()
                .map_err(|_| format!("QSG_STEP_BUDGET must be a positive integer, got `{v}`"))?;
            if n == 0 {
                return Err("QSG_STEP_BUDGET must be positive".into());
            }
            qsg_core::rewrite::set_default_step_budget(n);
            Ok(())
        }
        Err(_) => Ok(()),
    }
}

fn open(name: &str) -> Result<Presentation, Error> {
    if BUILT_INS.contains(&name) {
        return presentations::build(name);
    }
    if Path::new(name).is_file() {
        let src = std::fs::read_to_string(name).map_err(|e| Error::Other(format!("{name}: {e}")))?;
        return file::from_toml(&src);
    }
    Err(Error::Other(format!(
        "unknown presentation `{name}`: not a built-in ({}) or a readable file",
        BUILT_INS.join(", ")
    )))
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Reduce { expr, presentation, unicode } => {
            let p = open(&presentation)?;
            let nf = p.normalize(&p.parse(&expr)?)?;
            println!("{}", nf.render(!unicode));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, format, jobs } => {
            let checks = suites::checks(&suite)?;
            let ctx = suites::Context::new();
            let rep = report::run(&suite, &checks, &ctx, jobs)?;
            match format {
                Format::Text => print!("{}", rep.to_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&rep).expect("report serializes")),
            }
            Ok(if rep.ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Presentations { action } => {
            match action.unwrap_or(PresentationAction::List) {
                PresentationAction::List => {
                    for name in BUILT_INS {
                        let p = presentations::build(name)?;
                        println!("{name:<12} {}", p.description());
                    }
                }
                PresentationAction::Export { name } => {
                    let p = presentations::build(&name)?;
                    print!("{}", file::to_toml(&p));
                }
                PresentationAction::Load { file: path } => {
                    let src = std::fs::read_to_string(&path).map_err(|e| Error::Other(format!("{path}: {e}")))?;
                    let p = file::from_toml(&src)?;
                    println!(
                        "{}: {} generators, {} rules, {} composites",
                        p.name(),
                        p.table().len(),
                        p.rules().len(),
                        p.composite_names().len()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
