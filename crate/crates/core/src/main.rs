use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use credence::kb::{evaluate, parse_kb, render, KnowledgeBaseDoc, OutputFormat, RenderOptions};

const EXIT_SEMANTIC: u8 = 1;
const EXIT_PARSE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "credence",
    version,
    about = "Credibility-discounted possibilistic reasoning over knowledge-base files"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a knowledge base without answering queries.
    Check { file: PathBuf },
    /// Evaluate every query in a knowledge base.
    Run {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Decimal places for every printed number.
        #[arg(long, default_value_t = credence::kb::DEFAULT_PRECISION as u8,
              value_parser = clap::value_parser!(u8).range(0..=17))]
        precision: u8,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn load(file: &PathBuf) -> Result<KnowledgeBaseDoc, ExitCode> {
    let text = fs::read_to_string(file).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", file.display());
        ExitCode::from(EXIT_SEMANTIC)
    })?;
    parse_kb(&text).map_err(|e| {
        eprintln!("error: {}: {e}", file.display());
        ExitCode::from(EXIT_PARSE)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { file } => match load(&file) {
            Ok(doc) => {
                println!(
                    "ok: {} universe(s), {} set(s), {} linguistic value(s), {} proposition(s), {} belief(s), {} quer{}",
                    doc.universes.len(),
                    doc.sets.len(),
                    doc.granules.len(),
                    doc.propositions.len(),
                    doc.beliefs.len(),
                    doc.queries.len(),
                    if doc.queries.len() == 1 { "y" } else { "ies" },
                );
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
        Command::Run {
            file,
            format,
            precision,
        } => {
            let doc = match load(&file) {
                Ok(doc) => doc,
                Err(code) => return code,
            };
            match evaluate(&doc) {
                Ok(results) => {
                    let options = RenderOptions {
                        format: match format {
                            Format::Text => OutputFormat::Text,
                            Format::Json => OutputFormat::Json,
                        },
                        precision: usize::from(precision),
                    };
                    print!("{}", render(&results, &options));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {}: {e}", file.display());
                    ExitCode::from(EXIT_SEMANTIC)
                }
            }
        }
    }
}
