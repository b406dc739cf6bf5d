use std::io::Write;

use clap::Parser;
use starpack_cli::{run, Cli};

fn main() {
    let done = run(Cli::parse());
    let mut stdout = std::io::stdout().lock();
    // an artifact on stdout pushes the report to stderr
    match &done.stdout {
        Some(bytes) => {
            let _ = stdout.write_all(bytes);
            eprint!("{}", done.report);
        }
        None => {
            let _ = stdout.write_all(done.report.as_bytes());
        }
    }
    let _ = stdout.flush();
    std::process::exit(done.outcome.exit_code());
}
