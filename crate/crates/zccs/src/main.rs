use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use zccs::cli::{run, Cli};
use zccs::ToolError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            ToolError::EXIT_CODE
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
