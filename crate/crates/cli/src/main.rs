use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use surfinv::{run, Cli};

fn main() -> ExitCode {
    // usage errors exit with status 2 inside parse()
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            match writeln!(out, "{}", report.render(cli.json)) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                    eprintln!("error: Io: {e}");
                    ExitCode::from(1)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
