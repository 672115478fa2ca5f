//! Command-line front end: input parsing, corpus generation, dispatch and reports.

mod commands;
pub mod corpus;
pub mod example5;
pub mod spec;
pub mod verify;

pub use commands::{run, Command, Flags, Report, SideArg};
pub use corpus::{builtin_corpus, corpus, CorpusItem};
pub use example5::{report_example5, Example5Report};
pub use spec::{parse, ArrangementSpec};

use clap::Parser;
use std::io::Write;

#[derive(Debug, Parser)]
#[command(name = "logarr", version, about = "Logarithmic modules of hyperplane multiarrangements")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// JSON input: {"dim": l, "hyperplanes": [[..]], "multiplicities": [..], "labels": [..]}
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
    /// A corpus name instead of a file, e.g. EX10, G3*m, RAND(3,5)
    #[arg(long)]
    pub name: Option<String>,
    /// 1-based hyperplane index
    #[arg(long)]
    pub hyperplane: Option<usize>,
    /// 1-based index of the hyperplane to delete
    #[arg(long)]
    pub delete: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long, value_enum, default_value = "d")]
    pub side: SideArg,
    /// Degree bound for degreewise checks (default |m| + 3)
    #[arg(long)]
    pub dmax: Option<i64>,
    #[arg(long, conflicts_with = "table")]
    pub json: bool,
    #[arg(long)]
    pub table: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Parse arguments, run, print; returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let spec = match load(&cli) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return e.exit_code();
        }
    };
    let flags = Flags {
        hyperplane: cli.hyperplane,
        delete: cli.delete,
        p: cli.p,
        side: cli.side.into(),
        dmax: cli.dmax,
        seed: cli.seed,
        name: cli.name.clone(),
    };
    match run(cli.command, spec.as_ref(), &flags) {
        Ok(report) => {
            let text = if cli.table {
                report.table()
            } else {
                report.to_json() + "\n"
            };
            // a closed pipe is not an error of the computation
            let _ = std::io::stdout().write_all(text.as_bytes());
            report.exit_code()
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn load(cli: &Cli) -> crate::Result<Option<ArrangementSpec>> {
    if let Some(path) = &cli.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| crate::Error::Input(format!("cannot read {}: {e}", path.display())))?;
        return parse(&text).map(Some);
    }
    if let Some(name) = &cli.name {
        if cli.command != Command::Corpus {
            let item = corpus(name, cli.seed)?.remove(0);
            return Ok(Some(item.spec));
        }
    }
    Ok(None)
}
