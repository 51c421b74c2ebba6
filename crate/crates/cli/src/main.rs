use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use grover_kit_cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match grover_kit_cli::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
            {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
                eprintln!("grover-kit: writing output: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("grover-kit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
