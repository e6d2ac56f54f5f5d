use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use scramble_cli::presets::{self, PRESETS};
use scramble_cli::{run_file, validate_file, CliError, RunOptions};

#[derive(Parser)]
#[command(name = "scramble", version, about = "Scrambling and entropy-production experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment config and write <output>.csv and <output>.json.
    Run {
        config: PathBuf,
        /// Output prefix, overriding the config's `output`.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Worker threads (takes precedence over SCRAMBLE_WORKERS and the config).
        #[arg(long)]
        workers: Option<usize>,
        /// Number of SYK disorder realizations.
        #[arg(long)]
        realizations: Option<usize>,
    },
    /// Parse and check a config without running it.
    Validate { config: PathBuf },
    /// Shipped experiment configs.
    Presets {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Subcommand)]
enum PresetAction {
    /// Print every shipped config.
    List,
    /// Print one shipped config.
    Show { name: String },
    /// Write every shipped config into a directory as <name>.json.
    Write { dir: PathBuf },
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            config,
            output,
            workers,
            realizations,
        } => {
            let opts = RunOptions {
                output,
                workers,
                realizations,
            };
            match run_file(&config, &opts) {
                Err(e) => fail(&e),
                Ok(outcome) => {
                    println!("wrote {}", outcome.csv_path.display());
                    println!("wrote {}", outcome.summary_path.display());
                    match outcome.check() {
                        Ok(()) => ExitCode::SUCCESS,
                        Err(e) => fail(&e),
                    }
                }
            }
        }
        Command::Validate { config } => match validate_file(&config) {
            Ok(v) => {
                println!(
                    "ok: kind {}, {} time samples, partition {}|{}",
                    v.config.kind_name(),
                    v.times.len(),
                    v.partition.n_a,
                    v.partition.n_b
                );
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
        Command::Presets { action } => match action {
            PresetAction::List => {
                for p in PRESETS {
                    println!("# {}: {}", p.name, p.description);
                    println!("{}", p.json.trim_end());
                }
                ExitCode::SUCCESS
            }
            PresetAction::Show { name } => match presets::find(&name) {
                Some(p) => {
                    println!("{}", p.json.trim_end());
                    ExitCode::SUCCESS
                }
                None => {
                    let names: Vec<&str> = PRESETS.iter().map(|p| p.name).collect();
                    fail(&CliError::Config(format!(
                        "unknown preset '{name}' (available: {})",
                        names.join(", ")
                    )))
                }
            },
            PresetAction::Write { dir } => {
                if let Err(e) = std::fs::create_dir_all(&dir) {
                    return fail(&CliError::from(e));
                }
                for p in PRESETS {
                    let path = dir.join(format!("{}.json", p.name));
                    if let Err(e) = std::fs::write(&path, p.json) {
                        return fail(&CliError::from(e));
                    }
                    println!("wrote {}", path.display());
                }
                ExitCode::SUCCESS
            }
        },
    }
}
