//! Enumerates every continuous selfmap of C_n, sorts them into rotations,
//! flips and the rest, and compares the induced maps on H_1 with the
//! predicted id, -id and 0.
//!
//! cargo run --release --example cycle_maps [n]

use std::collections::BTreeMap;

use digitop::cycles::{classify_cycle_selfmap, expected_induced, CycleClass};
use digitop::homology::{induced_homology_map_with, Homology};
use digitop::map::continuous_maps;
use digitop::{DigitalImage, VertexMap};

fn main() -> digitop::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let cn = DigitalImage::cycle(n)?;
    let h = Homology::new(&cn)?;
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    let mut disagreements = 0;
    let maps = continuous_maps(&cn, &cn);
    for values in &maps {
        let f = VertexMap::new(&cn, &cn, values.clone())?;
        let tag = match classify_cycle_selfmap(&f)? {
            CycleClass::Identity(_) => "rotation",
            CycleClass::Flip(_) => "flip",
            CycleClass::Constant => "null-homotopic",
        };
        *counts.entry(tag).or_default() += 1;
        let m = induced_homology_map_with(&f, 1, &h, &h)?;
        if !expected_induced(&f, 1)?.matches(&m) {
            disagreements += 1;
        }
    }
    println!("C_{n}: {} continuous selfmaps", maps.len());
    for (tag, c) in counts {
        println!("  {tag:<15} {c}");
    }
    println!("induced maps on H_1 disagreeing with the prediction: {disagreements}");
    Ok(())
}
