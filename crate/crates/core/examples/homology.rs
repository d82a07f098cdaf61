//! Homology of a few clique complexes, with explicit generators, and the
//! map induced by the flip of C_5.
//!
//! cargo run --example homology

use digitop::cycles::flip_map;
use digitop::gallery::small_strong_types;
use digitop::homology::{induced_homology_map, ChainComplex, Homology};
use digitop::DigitalImage;

fn show(name: &str, x: &DigitalImage) -> digitop::Result<()> {
    let h = Homology::new(x)?;
    let groups: Vec<String> = (0..=h.complex().top_dimension() + 1)
        .map(|q| {
            let g = h.group(q);
            let mut s = format!("Z^{}", g.betti);
            for d in &g.torsion {
                s.push_str(&format!(" + Z/{d}"));
            }
            s
        })
        .collect();
    println!("{name:<14} {}", groups.join(", "));
    Ok(())
}

fn main() -> digitop::Result<()> {
    for (name, x) in small_strong_types() {
        show(name, &x)?;
    }
    show("K5", &DigitalImage::complete(5)?)?;
    show("two points", &DigitalImage::discrete(2)?)?;

    let c5 = DigitalImage::cycle(5)?;
    let cc = ChainComplex::new(&c5);
    let h1 = Homology::new(&c5)?.group(1);
    let generator = h1.generators.column(0);
    let terms: Vec<String> = cc
        .basis(1)
        .iter()
        .zip(&generator)
        .filter(|(_, &c)| c != 0)
        .map(|(s, c)| format!("{c:+}<c{},c{}>", s[0], s[1]))
        .collect();
    println!("H_1(C_5) generator: {}", terms.join(" "));

    let flip = flip_map(&c5)?;
    for q in 0..=1 {
        println!(
            "flip_* on H_{q}(C_5): {:?}",
            induced_homology_map(&flip, q)?.matrix.to_rows()
        );
    }
    Ok(())
}
