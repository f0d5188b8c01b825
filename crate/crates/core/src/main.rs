use std::process::ExitCode;

use clap::Parser;

use qfodc::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let outcome = run(&cli);
    if outcome.diagnostic {
        eprint!("{}", outcome.text);
    } else if let Some(path) = &outcome.out {
        if let Err(e) = std::fs::write(path, &outcome.text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(3);
        }
    } else {
        print!("{}", outcome.text);
    }
    ExitCode::from(outcome.code as u8)
}
