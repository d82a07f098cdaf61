//! Builds the catalog of connected six-point images that are not strongly
//! reducible, writes it as JSON lines, reads it back, and names each entry
//! after the gallery representative it is isomorphic to.
//!
//! cargo run --release --example catalog_io

use digitop::canon::is_isomorphic;
use digitop::catalog::{
    census_generated, read_catalog, write_catalog, write_census_csv, CensusOptions,
};
use digitop::gallery::small_strong_types;

fn main() -> digitop::Result<()> {
    let census = census_generated(
        6,
        &CensusOptions {
            reducible: true,
            ..Default::default()
        },
    )?;
    write_census_csv(&census.rows, std::io::stdout())?;

    let dir = std::env::temp_dir().join(format!("digitop-catalog-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("n6.jsonl");
    write_catalog(&census.entries, &path)?;
    let back = read_catalog(&path)?;
    println!(
        "round trip through {}: {}",
        path.display(),
        back == census.entries
    );

    let gallery = small_strong_types();
    for e in &back {
        let img = e.image()?;
        let name = gallery
            .iter()
            .find(|(_, g)| is_isomorphic(g, &img))
            .map_or("?", |(n, _)| *n);
        println!("{:<8} {:<14} reducible: {:?}", e.graph6, name, e.reducible);
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
