//! The `starpack` command line.
//!
//! Every command prints a [`report`] to stdout and exits with
//! 0 (success), 1 (bad input), 2 (proven absent) or 3 (budget exceeded).

mod commands;
pub mod input;
mod pipeline;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use starpack_core::SearchBudget;

use report::{Outcome, Report};

#[derive(Debug, Parser)]
#[command(name = "starpack", version, about = "Star packings and star transformations of fullerene graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// planar_code file, or fixture:c20 / fixture:c80
    pub input: String,
    /// Which graph of a multi-graph file to use (1-based)
    #[arg(long, default_value_t = 1)]
    pub graph: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the fullerene axioms
    Verify {
        #[command(flatten)]
        input: Input,
    },
    /// Face census
    Faces {
        #[command(flatten)]
        input: Input,
    },
    /// Search for perfect star packings
    PackStars {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        limit: usize,
        /// <seconds>,<nodes>
        #[arg(long, value_parser = input::parse_budget)]
        budget: Option<SearchBudget>,
        /// Only centers whose three faces are hexagons
        #[arg(long)]
        p0: bool,
        /// Write the first packing found
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a packing (P0, balance, hexagon histogram)
    Classify {
        #[command(flatten)]
        input: Input,
        packing: PathBuf,
    },
    /// Apply a transformation
    Transform {
        kind: TransformKind,
        #[command(flatten)]
        input: Input,
        /// Packing to transform with; searched for when omitted
        #[arg(long)]
        packing: Option<PathBuf>,
        #[arg(long, value_parser = input::parse_budget)]
        budget: Option<SearchBudget>,
        /// Output graph (planar_code)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output provenance record (star and semistar)
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Find a {C5, C6}-factor
    Factor56 {
        #[command(flatten)]
        input: Input,
        /// Cycle-factor file or star-transformation provenance
        #[arg(long)]
        hint: Option<PathBuf>,
        #[arg(long, value_parser = input::parse_budget)]
        budget: Option<SearchBudget>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a perfect pseudo matching with a given number of stars
    Pseudo {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        stars: usize,
        #[arg(long, value_parser = input::parse_budget)]
        budget: Option<SearchBudget>,
    },
    /// Find a Hamiltonian cycle, optionally cut into paths of K vertices
    Hamilton {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        split: Option<usize>,
        #[arg(long, value_parser = input::parse_budget)]
        budget: Option<SearchBudget>,
    },
    /// Export a drawing or planar_code
    Export {
        format: ExportFormat,
        #[command(flatten)]
        input: Input,
        /// Highlight the centers and edges of this packing
        #[arg(long)]
        packing: Option<PathBuf>,
        /// Output file; stdout when omitted (the report then goes to stderr)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a whole chain of constructions and searches
    Pipeline {
        name: PipelineName,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, value_parser = input::parse_budget)]
        budget: Option<SearchBudget>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    Star,
    Semistar,
    Chamfer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Svg,
    Planarcode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PipelineName {
    C80,
}

/// What a finished command hands back to `main`.
pub struct Run {
    pub outcome: Outcome,
    pub report: String,
    /// Artifact for stdout (export without `--out`).
    pub stdout: Option<Vec<u8>>,
}

pub fn run(cli: Cli) -> Run {
    let name = command_name(&cli.command);
    let mut report = Report::new(name);
    let mut stdout = None;
    let outcome = match commands::dispatch(cli.command, &mut report, &mut stdout) {
        Ok(o) => o,
        Err(e) => {
            report.set("error", format!("{e:#}").replace('\n', " "));
            Outcome::InputError
        }
    };
    Run {
        outcome,
        report: report.render(outcome),
        stdout,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Faces { .. } => "faces",
        Command::PackStars { .. } => "pack-stars",
        Command::Classify { .. } => "classify",
        Command::Transform { .. } => "transform",
        Command::Factor56 { .. } => "factor56",
        Command::Pseudo { .. } => "pseudo",
        Command::Hamilton { .. } => "hamilton",
        Command::Export { .. } => "export",
        Command::Pipeline { .. } => "pipeline",
    }
}
