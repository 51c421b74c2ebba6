use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use grover_kit::OracleStyle;
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(
    name = "grover-kit",
    version,
    about = "Grover search simulator and analysis toolkit"
)]
pub struct Cli {
    /// Decimal places for printed probabilities, angles and amplitudes
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u8).range(0..=15))]
    pub precision: u8,
    /// Bit order of bitstrings on input and output (`lsb` reverses, as Qiskit prints them)
    #[arg(long, global = true, value_enum, default_value_t = BitOrder::Msb)]
    pub bit_order: BitOrder,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Simulate a search and report the final marked probabilities
    Run(RunArgs),
    /// Same as `run --trace`
    Trace(IteratedArgs),
    /// Simulate k = 0..=kmax rounds next to the closed form
    Sweep(SweepArgs),
    /// Closed-form success probability, no simulation
    Predict(PredictArgs),
    /// Draw measurement shots from the final state
    Sample(SampleArgs),
    /// Print the compiled circuit in the text format
    #[command(alias = "compile")]
    Dump(IteratedArgs),
    /// Parse a circuit file (or `-` for stdin), run it on |0...0> and report probabilities
    Load(LoadArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ProblemArgs {
    /// Number of data qubits
    #[arg(long)]
    pub n: usize,
    /// Marked bitstrings; repeat the flag or separate with commas
    #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
    pub marked: Vec<String>,
    #[arg(long, value_enum, default_value_t = StyleArg::Mcz)]
    pub style: StyleArg,
}

#[derive(Args, Debug, Clone)]
pub struct IteratedArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Grover rounds; defaults to the optimal count
    #[arg(long)]
    pub iterations: Option<usize>,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[command(flatten)]
    pub search: IteratedArgs,
    /// Include the state after every labelled step
    #[arg(long)]
    pub trace: bool,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Last round count to report
    #[arg(long)]
    pub kmax: usize,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("count").required(true).args(["iterations", "optimal"])))]
pub struct PredictArgs {
    #[arg(long)]
    pub n: usize,
    /// Number of marked states
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub iterations: Option<usize>,
    /// Report the best round count instead
    #[arg(long)]
    pub optimal: bool,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[command(flatten)]
    pub search: IteratedArgs,
    #[arg(long, default_value_t = 1024, value_parser = clap::value_parser!(u64).range(1..))]
    pub shots: u64,
    #[arg(long, env = "GROVER_KIT_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct LoadArgs {
    pub path: PathBuf,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BitOrder {
    Msb,
    Lsb,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum StyleArg {
    /// Phase oracle built from multi-controlled Z, no ancilla
    #[value(alias = "mcz-direct")]
    Mcz,
    /// Multi-controlled X onto an ancilla prepared in |->
    McxAncilla,
}

impl From<StyleArg> for OracleStyle {
    fn from(s: StyleArg) -> Self {
        match s {
            StyleArg::Mcz => OracleStyle::MczDirect,
            StyleArg::McxAncilla => OracleStyle::McxAncilla,
        }
    }
}
