//! Runs every verification suite and prints the report table.
//!
//! ```text
//! cargo run --example verify_report
//! ```

use ckforms::verify;

pub fn run() -> verify::VerificationReport {
    verify::run_all(verify::DEFAULT_SEED)
}

#[allow(dead_code)]
fn main() {
    let report = run();
    print!("{}", report.to_text());
    if !report.passed() {
        std::process::exit(1);
    }
}
