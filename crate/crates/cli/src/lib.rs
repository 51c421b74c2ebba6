//! Command-line front end for `grover-kit`: argument parsing, the report
//! document and its JSON/CSV/table renderings.

pub mod args;
pub mod commands;
pub mod render;
pub mod report;

pub use args::Cli;
pub use commands::execute;
pub use report::ReportDocument;

/// A failed command. Usage errors exit with 2, internal ones with 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<grover_kit::Error> for CliError {
    fn from(e: grover_kit::Error) -> Self {
        match e {
            grover_kit::Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Runs the parsed command and renders its report.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let doc = execute(cli)?;
    render::render(&doc, cli.format, cli.precision)
}
