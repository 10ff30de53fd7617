use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bredon", version, about = "Bredon homology of the 17 wallpaper groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute H_0, H_1 and H_2 of a built-in group or of a complex file
    Compute(ComputeArgs),
    /// Compare computed results with the reference tables
    Verify(VerifyArgs),
    /// Print built-in complexes or character tables as JSON
    Dump(DumpArgs),
    /// Smith normal form of an integer matrix given as a JSON list of rows
    Snf(SnfArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["group", "all", "from_file"])))]
pub struct ComputeArgs {
    /// Wallpaper group name, p1 to p6m
    pub group: Option<String>,
    /// Every built-in group, in standard order
    #[arg(long)]
    pub all: bool,
    /// Complex in the JSON complex format
    #[arg(long, value_name = "PATH")]
    pub from_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Print the differential matrices with generator labels (text format)
    #[arg(long)]
    pub show_differentials: bool,
    /// Print the invariant factors of the differentials (text format)
    #[arg(long)]
    pub show_snf: bool,
}

/// With no flag all three checks run.
#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Induced characters on stabilizers
    #[arg(long)]
    pub table3: bool,
    /// Isomorphism types of H_2, H_1, H_0
    #[arg(long)]
    pub table4: bool,
    /// Reference bases of H_1 and H_0
    #[arg(long)]
    pub bases: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").required(true).args(["dump_complex", "dump_tables", "from_file"])))]
pub struct DumpArgs {
    /// Built-in complex of the named group
    #[arg(long, value_name = "NAME")]
    pub dump_complex: Option<String>,
    /// The nine stabilizer character tables
    #[arg(long)]
    pub dump_tables: bool,
    /// Validate a complex file and print its homology report
    #[arg(long, value_name = "PATH")]
    pub from_file: Option<PathBuf>,
    /// Output format of the --from-file report
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SnfArgs {
    /// File with the matrix, or - for standard input
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
