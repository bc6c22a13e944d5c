use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ftw_core::workbench::{emit_dot, parse_document, run_analyze, run_iso, AnalyzeOptions, Document};
use ftw_core::{Config, Error};

/// Finite formal topology workbench.
#[derive(Parser)]
#[command(name = "ftw", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a space and report on its frame, laws, points and derivations.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        laws: bool,
        #[arg(long)]
        points: bool,
        /// List every element of the frame.
        #[arg(long)]
        frame: bool,
        #[arg(long)]
        presentation: bool,
        #[arg(long)]
        booleanize: bool,
        #[arg(long)]
        beta: bool,
        /// Closed subspace of the given subset, e.g. `h,1` or `{h,1}`.
        #[arg(long, value_name = "SUBSET")]
        closed: Option<String>,
        #[arg(long)]
        adjoin_top: bool,
        /// Use the MacNeille cover of a poset document.
        #[arg(long)]
        complete: bool,
        #[arg(long, value_name = "N")]
        max_base: Option<usize>,
    },
    /// Decide whether two spaces have isomorphic frames.
    Iso {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, value_name = "N")]
        max_base: Option<usize>,
    },
    /// Print the Hasse diagram of a document's order or frame as DOT.
    Dot {
        file: PathBuf,
        #[arg(long)]
        frame: bool,
        #[arg(long, value_name = "N")]
        max_base: Option<usize>,
    },
}

fn load(path: &Path) -> Result<Document, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_document(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_subset(text: &str) -> Vec<String> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

fn config(max_base: Option<usize>) -> Config {
    max_base.map_or_else(Config::default, |n| Config::default().with_max_base(n))
}

fn run(cli: Cli) -> Result<String, (u8, String)> {
    let input = |e: String| (1, e);
    let core = |e: Error| (e.exit_code() as u8, e.to_string());
    match cli.command {
        Command::Analyze {
            file,
            laws,
            points,
            frame,
            presentation,
            booleanize,
            beta,
            closed,
            adjoin_top,
            complete,
            max_base,
        } => {
            let doc = load(&file).map_err(input)?;
            let opts = AnalyzeOptions {
                laws,
                points,
                frame,
                presentation,
                booleanize,
                beta,
                closed: closed.as_deref().map(parse_subset),
                adjoin_top,
                complete,
                max_base,
            };
            run_analyze(&doc, &opts).map_err(core)
        }
        Command::Iso {
            file1,
            file2,
            max_base,
        } => {
            let a = load(&file1).map_err(input)?;
            let b = load(&file2).map_err(input)?;
            run_iso(&a, &b, config(max_base)).map_err(core)
        }
        Command::Dot {
            file,
            frame,
            max_base,
        } => {
            let doc = load(&file).map_err(input)?;
            emit_dot(&doc, frame, config(max_base)).map_err(core)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((code, message)) => {
            eprintln!("ftw: {message}");
            ExitCode::from(code)
        }
    }
}
