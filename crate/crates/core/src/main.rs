use clap::Parser;

use su2_dortho::cli::{run, Outcome, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let outcome = run(&config);
    match &outcome {
        Outcome::Success(e) => {
            if let Some(p) = &e.path {
                eprintln!("wrote {}", p.display());
            }
        }
        Outcome::InvariantFailure { emitted, first_failure } => {
            if let Some(p) = &emitted.path {
                eprintln!("wrote {}", p.display());
            }
            eprintln!("invariant failure: {first_failure}");
        }
        Outcome::InvalidConfig(msg) => eprintln!("invalid configuration: {msg}"),
    }
    std::process::exit(outcome.code());
}
