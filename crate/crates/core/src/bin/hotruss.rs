use clap::Parser;
use hotruss::cli::{run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    if let Err(err) = run(&config) {
        eprintln!("hotruss: {err}");
        std::process::exit(err.exit_code());
    }
}
