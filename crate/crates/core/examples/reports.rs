//! Running a named check suite and rendering the report.

use crlie::suites::{run, DEFAULT_SEED};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "thm1".into());
    let report = run(&name, DEFAULT_SEED)?;
    print!("{}", report.to_text());
    std::process::exit(report.exit_code());
}
