//! One PASS/FAIL line per acceptance criterion, using the graph6 corpus
//! shipped under tests/data for the n = 8, 9 census.

use std::path::Path;
use std::process::ExitCode;

use digitop::verify::{run, CheckResult, Status, VerifyOptions};

/// Criterion number and the scorecard items it needs.
const CRITERIA: [(u32, &[&str]); 10] = [
    (1, &["1", "1b"]),
    (2, &["2"]),
    (3, &["3"]),
    (4, &["4"]),
    (5, &["5"]),
    (6, &["6"]),
    (7, &["7"]),
    (8, &["8"]),
    (9, &["9"]),
    (10, &["10"]),
];

fn main() -> ExitCode {
    let opts = VerifyOptions {
        corpus: Some(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")),
        ..Default::default()
    };
    let mut failed = 0;
    for (number, items) in CRITERIA {
        let results: Vec<CheckResult> = items.iter().map(|id| run(id, &opts)).collect();
        // a skipped item counts as a failure here: the corpus is shipped
        let ok = results.iter().all(|r| r.status == Status::Pass);
        let detail: Vec<String> = results
            .iter()
            .map(|r| match &r.status {
                Status::Pass => r.detail.clone(),
                Status::Fail(why) | Status::Skipped(why) => format!("{} ({why})", r.title),
            })
            .collect();
        println!(
            "{} criterion {number:>2}: {}",
            if ok { "PASS" } else { "FAIL" },
            detail.join("; ")
        );
        failed += usize::from(!ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
