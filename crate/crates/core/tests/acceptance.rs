//! Runs every verification suite at its default size and prints one line
//! per suite. Exits nonzero if any suite fails.

use std::process::ExitCode;

use dectab::checks::{run_by_id, CheckConfig, SUITES};

fn main() -> ExitCode {
    let config = CheckConfig::default();
    let mut failed = 0;
    for id in 1..=SUITES.len() {
        let out = run_by_id(id, &config);
        let status = if out.passed { "PASS" } else { "FAIL" };
        println!(
            "[{status}] {:>2} {:<17} {} cases",
            out.id, out.name, out.cases
        );
        for f in &out.failures {
            println!("       {f}");
        }
        if !out.passed {
            failed += 1;
        }
    }
    println!("{}/{} criteria passed", SUITES.len() - failed, SUITES.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
