use clap::Parser;
use hyperlines::cli::{dispatch, RunConfig, EXIT_OK, EXIT_VALIDATION};

fn main() {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK });
        }
    };
    std::process::exit(dispatch(&config));
}
