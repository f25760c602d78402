use std::process::ExitCode;

use clap::Parser;
use operadlab_cli::{emit, run, Cli, BUDGET_MB_VAR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let memory = std::env::var(BUDGET_MB_VAR).ok();
    let mut warnings = Vec::new();
    let result = run(&cli, memory.as_deref(), &mut warnings);
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let code = match result.and_then(|(cfg, outcome)| emit(&cfg, &outcome).map(|_| outcome.exit_code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
