use std::process::ExitCode;

use clap::Parser;
use mzent_cli::config::{Cli, RunConfig};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cfg = match RunConfig::resolve(cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    ExitCode::from(mzent_cli::execute(&cfg) as u8)
}
