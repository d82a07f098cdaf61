//! Runs every verification item and prints one line each. The shipped
//! graph6 corpus under tests/data covers the n = 8, 9 census.
//!
//! cargo run --release --example scorecard [seed]

use std::path::Path;
use std::time::Instant;

use digitop::verify::{run, VerifyOptions, DEFAULT_SEED, IDS};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    let opts = VerifyOptions {
        seed,
        corpus: Some(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")),
        ..Default::default()
    };
    let mut failed = false;
    for id in IDS {
        let start = Instant::now();
        let r = run(id, &opts);
        failed |= r.failed();
        println!("{r}  ({:.1?})", start.elapsed());
    }
    std::process::exit(i32::from(failed));
}
