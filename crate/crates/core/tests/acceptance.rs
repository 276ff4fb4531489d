//! Acceptance suite: one pass/fail line per criterion. Runs without the
//! libtest harness so the lines are always printed.
//!
//! A criterion that fails only on an entry of `KNOWN_DISCREPANCIES` is
//! still printed as FAIL, but does not fail the run; any other failure, or a
//! known discrepancy that stops reproducing, does.

use std::process::ExitCode;
use std::time::Instant;

use shortloc::verify::{run_all, DEFAULT_SEED, KNOWN_DISCREPANCIES};

fn main() -> ExitCode {
    let start = Instant::now();
    let reports = run_all(DEFAULT_SEED);
    assert_eq!(reports.len(), 10);
    let mut unexpected = 0;
    for (k, r) in reports.iter().enumerate() {
        assert_eq!(r.id as usize, k + 1);
        println!("{}", r.line());
        for f in r.unexplained_failures() {
            println!("    unexpected failure: {f}");
            unexpected += 1;
        }
        for f in r.vanished_discrepancies() {
            println!("    known discrepancy no longer reproduces: {f}");
            unexpected += 1;
        }
    }
    for (id, label, why) in KNOWN_DISCREPANCIES {
        println!("known discrepancy in criterion {id}: `{label}`: {why}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!(
        "acceptance: {} passed, {} failed ({} unexpected) in {:.1}s",
        reports.len() - failed,
        failed,
        unexpected,
        start.elapsed().as_secs_f64()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
