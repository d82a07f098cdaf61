//! Ordinary versus strong homotopy on small cycles: C_4 is contractible but
//! not strongly, one-step strong homotopies become punctuated ones, and the
//! strong class of the identity on C_n is a single map.
//!
//! cargo run --release --example homotopy_search

use digitop::homotopy::{
    find_homotopy, homotopy_class, is_punctuated, is_valid_strong_homotopy, puncturate_one_step,
    SearchConfig, StepKind,
};
use digitop::{DigitalImage, VertexMap};

fn main() -> digitop::Result<()> {
    let cfg = SearchConfig::default();
    let c4 = DigitalImage::cycle(4)?;
    let id = VertexMap::identity(&c4);
    let c = VertexMap::constant(&c4, &c4, 0)?;

    let ordinary = find_homotopy(&id, &c, StepKind::Ordinary, &cfg)?;
    println!("id_C4 ~ const: {}", ordinary.verdict());
    if let Some(h) = ordinary.found() {
        for (t, s) in h.stages().iter().enumerate() {
            println!("  H(-, {t}) = {s:?}");
        }
    }
    println!(
        "id_C4 ~strong const: {}",
        find_homotopy(&id, &c, StepKind::Strong, &cfg)?.verdict()
    );

    // K_3: any two selfmaps are one step apart, strongly
    let k3 = DigitalImage::complete(3)?;
    let f = VertexMap::new(&k3, &k3, vec![0, 1, 2])?;
    let g = VertexMap::new(&k3, &k3, vec![1, 2, 0])?;
    let p = puncturate_one_step(&f, &g)?;
    println!(
        "punctuated version of {:?} -> {:?}: {} stages, punctuated {}, strong {}",
        f.values(),
        g.values(),
        p.k() + 1,
        is_punctuated(&p),
        is_valid_strong_homotopy(&p)
    );

    for n in 4..=7 {
        let cn = DigitalImage::cycle(n)?;
        let id = VertexMap::identity(&cn);
        let strong = homotopy_class(&id, StepKind::Strong, &cfg)?;
        let ordinary = homotopy_class(&id, StepKind::Ordinary, &cfg)?;
        let size =
            |o: digitop::homotopy::Outcome<Vec<Vec<usize>>>| o.found().map_or(0, |v| v.len());
        println!(
            "C_{n}: strong class of id has {} map(s), ordinary class {}",
            size(strong),
            size(ordinary)
        );
    }
    Ok(())
}
