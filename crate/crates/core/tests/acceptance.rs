//! Acceptance criteria, one PASS/FAIL line each. Every comparison is exact;
//! the only tolerances are the wall-clock limits on criteria 1 and 7.

use std::process::ExitCode;

use hsalg_core::verify::{run_criterion, Profile, CRITERIA};

const SEED: u64 = 2024;

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for id in 1..=CRITERIA {
        let r = run_criterion(id, Profile::Full, SEED);
        let status = if r.check.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {id:>2} {} ({:.2}s): {}",
            r.check.name,
            r.seconds.unwrap_or_default(),
            r.check.detail
        );
        if let Some(c) = &r.check.counterexample {
            println!("     counterexample: {c}");
        }
        if !r.check.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {CRITERIA} criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
