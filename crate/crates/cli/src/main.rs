use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use pgindex::indices::Family;
use pgindex_cli::{run, AnalysisRequest, Command, Format, Options};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CommandArg {
    Analyze,
    Mcv,
    Potential,
    Merge,
    Average,
    Axioms,
    Embed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Machine,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Mcc,
    Rgc,
}

/// Public Good indices and values for simple, TU and (j,k) simple games.
#[derive(Debug, Parser)]
#[command(name = "pgindex", version)]
struct Cli {
    /// What to compute.
    #[arg(value_enum)]
    command: CommandArg,
    /// Game files (JSON); `merge` takes two, `axioms` one or two.
    #[arg(required = true, num_args = 1..=2)]
    inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    /// Coalition family for the TU Public Good value.
    #[arg(long, value_enum, default_value = "mcc")]
    family: FamilyArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Cross-check against the brute-force oracles.
    #[arg(long)]
    oracle: bool,
    /// Maximum number of table entries to enumerate.
    #[arg(long, default_value_t = pgindex::DEFAULT_CAP)]
    cap: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        CommandArg::Analyze => Command::Analyze,
        CommandArg::Mcv => Command::Mcv,
        CommandArg::Potential => Command::Potential,
        CommandArg::Merge => Command::Merge,
        CommandArg::Average => Command::Average,
        CommandArg::Axioms => Command::Axioms,
        CommandArg::Embed => Command::Embed,
    };
    let options = Options {
        format: match cli.format {
            FormatArg::Table => Format::Table,
            FormatArg::Machine => Format::Machine,
        },
        family: match cli.family {
            FamilyArg::Mcc => Family::Mcc,
            FamilyArg::Rgc => Family::Rgc,
        },
        output: cli.output,
        oracle: cli.oracle,
        cap: cli.cap,
    };
    let result = AnalysisRequest::new(command, cli.inputs, options).and_then(|request| {
        let outcome = run(&request)?;
        match &request.options.output {
            Some(path) => {
                std::fs::write(path, &outcome.text).map_err(|err| pgindex_cli::CliError::Io {
                    path: path.clone(),
                    message: err.to_string(),
                })?
            }
            None => print!("{}", outcome.text),
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            for failure in &outcome.failures {
                eprintln!("error: {failure}");
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
