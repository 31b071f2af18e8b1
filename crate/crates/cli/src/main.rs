use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fthresh_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let response = run(&cli);
    let text = serde_json::to_string_pretty(&response.document).expect("JSON values serialize");
    // A closed pipe is not worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if let Some(msg) = response.document["error"]["message"].as_str() {
        eprintln!("error: {msg}");
    }
    ExitCode::from(response.exit_code as u8)
}
