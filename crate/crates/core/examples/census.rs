//! Counts connected images that are not strongly reducible (d) and not
//! reducible (c) for n = 1..=7, then for n = 8, 9 from the shipped corpus.
//!
//! cargo run --release --example census

use std::path::Path;
use std::time::Instant;

use digitop::catalog::{build_census, census_generated, ingest_graph6, CensusOptions, Provenance};
use digitop::homotopy::SearchConfig;

fn main() -> digitop::Result<()> {
    let search = SearchConfig {
        parallel: true,
        ..Default::default()
    };
    let opts = CensusOptions {
        reducible: true,
        search,
        ..Default::default()
    };
    println!("{:>2} {:>7} {:>6} {:>3}", "n", "total", "d", "c");
    for n in 1..=7 {
        let start = Instant::now();
        let row = census_generated(n, &opts)?.rows.remove(0);
        let c = row.c_exact().map_or("?".to_string(), |c| c.to_string());
        println!(
            "{:>2} {:>7} {:>6} {:>3}   ({:.2?})",
            n,
            row.total,
            row.d,
            c,
            start.elapsed()
        );
    }
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let ingest = CensusOptions {
        search,
        provenance: Provenance::Ingested,
        ..Default::default()
    };
    for n in [8, 9] {
        let start = Instant::now();
        let graphs = ingest_graph6(&data.join(format!("connected{n}.g6.gz")))?;
        let row = build_census(&graphs, &ingest).rows.remove(0);
        println!(
            "{:>2} {:>7} {:>6} {:>3}   ({:.2?})",
            n,
            row.total,
            row.d,
            "-",
            start.elapsed()
        );
    }
    Ok(())
}
