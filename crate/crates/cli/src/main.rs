//! `qtk`: presentations, charts and cuts of toric quasifold triples, and
//! Penrose substitution patches.

mod commands;
mod outcome;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "qtk", version, about = "Exact toric quasifold presentations and Penrose substitution tilings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where the triple comes from: a JSON file or a built-in example.
#[derive(Args, Clone)]
pub struct Source {
    /// Triple document; `-` reads standard input.
    pub input: Option<PathBuf>,
    /// Built-in example instead of a file.
    #[arg(long, conflicts_with = "input")]
    pub example: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum TilingType {
    P2,
    P3,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SeedKind {
    Acute,
    Obtuse,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check that a document parses and its triple is valid.
    Validate {
        #[command(flatten)]
        source: Source,
    },
    /// Level equations and cutting group of a triple.
    Present {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write the presentation JSON here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// One chart per vertex.
    Charts {
        #[command(flatten)]
        source: Source,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rational/simple flags and the local type of the quotient.
    Classify {
        #[command(flatten)]
        source: Source,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cut along a hyperplane `<x, normal> = lambda` and present both halves.
    Cut {
        #[command(flatten)]
        source: Source,
        /// Comma-separated field elements, e.g. `1,1/2+1/2√5` or `phi`.
        #[arg(long, allow_hyphen_values = true, requires = "lambda")]
        normal: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Cut an example along its recorded symmetry axis.
        #[arg(long, conflicts_with_all = ["normal", "input"])]
        axis_of: Option<String>,
        /// Directory for the two triples and their presentations.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Deflate a seed half-tile and write the patch JSON.
    Tile {
        #[arg(long = "type", value_enum)]
        kind: TilingType,
        #[arg(long, default_value_t = 0)]
        steps: usize,
        #[arg(long, value_enum, default_value = "acute")]
        seed: SeedKind,
        /// Start from the whole tile (both mirror halves).
        #[arg(long)]
        whole: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Patch JSON to SVG.
    Render {
        /// Patch document; `-` or nothing reads standard input.
        input: Option<PathBuf>,
        /// Merge mirror halves into whole tiles.
        #[arg(long)]
        pair: bool,
        /// Collapse this many substitution levels first.
        #[arg(long, default_value_t = 0)]
        inflate: usize,
        /// Draw the five fifth roots of unity instead of a patch.
        #[arg(long, conflicts_with = "input")]
        star: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Presentation and charts together.
    Report {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print a shipped example document, or list them.
    Example {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    outcome::finish(commands::run(cli.command))
}
