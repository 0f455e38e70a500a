//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use coverideals::experiments::{ExperimentConfig, ExperimentId};

fn main() -> ExitCode {
    let cfg = ExperimentConfig::default();
    let mut failed = 0;
    for (k, id) in ExperimentId::ALL.into_iter().enumerate() {
        let start = Instant::now();
        match id.run(&cfg) {
            Ok(r) => {
                println!(
                    "{} criterion {}: {} ({} checks, {} mismatches, {:.2}s)",
                    if r.passed { "PASS" } else { "FAIL" },
                    k + 1,
                    r.id,
                    r.checks,
                    r.mismatch_count,
                    start.elapsed().as_secs_f64()
                );
                for note in &r.notes {
                    println!("    {note}");
                }
                for m in &r.mismatches {
                    println!("    mismatch: {m}");
                }
                if !r.passed {
                    failed += 1;
                }
            }
            Err(e) => {
                println!("FAIL criterion {}: {} (error: {e})", k + 1, id.name());
                failed += 1;
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
