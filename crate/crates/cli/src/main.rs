use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use zetavals_cli::render::Format;
use zetavals_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let obj = serde_json::to_string(&serde_json::json!({ "error": e.to_object() }))
                .unwrap_or_else(|_| e.to_string());
            // JSON callers read errors from stdout; other formats keep stdout clean.
            if cli.format() == Format::Json {
                let _ = writeln!(out, "{obj}");
            }
            let _ = out.flush();
            eprintln!("error: {e}");
            if cli.format() != Format::Json {
                eprintln!("{obj}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
