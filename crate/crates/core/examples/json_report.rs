//! Drive the command-line layer in-process and print its JSON report.
//!
//! cargo run --example json_report

use clap::Parser;
use sprel::cli::{run, Cli};

fn main() {
    let cli = Cli::parse_from(["sprel", "--seed", "7", "groebner", "--group", "sp4", "--no-cache"]);
    let outcome = run(&cli);
    println!("{}", outcome.report.to_json());
    println!("exit code {}", outcome.exit_code());
}
