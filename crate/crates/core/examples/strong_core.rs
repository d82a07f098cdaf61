//! Strong cores, contraction orderings and pointed contractibility,
//! including the eight-point image that is strongly contractible but not
//! when the point x_1 must stay fixed.
//!
//! cargo run --release --example strong_core

use digitop::gallery::pointed_counterexample;
use digitop::graph6::write_graph6;
use digitop::homology::Homology;
use digitop::homotopy::{
    is_strongly_reducible, pointed_strongly_contractible, strong_contraction_ordering, strong_core,
    SearchConfig,
};
use digitop::DigitalImage;

/// Betti numbers without trailing zeros.
fn betti(x: &DigitalImage) -> digitop::Result<Vec<usize>> {
    let mut b = Homology::new(x)?.betti_numbers();
    while b.last() == Some(&0) {
        b.pop();
    }
    Ok(b)
}

fn main() -> digitop::Result<()> {
    let cfg = SearchConfig::default();
    let images = [
        ("K5", DigitalImage::complete(5)?),
        ("C6", DigitalImage::cycle(6)?),
        ("I[0,4]", DigitalImage::interval(0, 4)?),
        (
            "3x3 grid",
            DigitalImage::product(
                &[DigitalImage::interval(0, 2)?, DigitalImage::interval(0, 2)?],
                1,
            )?,
        ),
        (
            "C6 x I[0,1]",
            DigitalImage::product(&[DigitalImage::cycle(6)?, DigitalImage::interval(0, 1)?], 1)?,
        ),
    ];
    for (name, x) in &images {
        let core = strong_core(x);
        let same = betti(x)? == betti(&core.image)?;
        println!(
            "{name:<12} {} -> {} points ({}), first witness {:?}, betti preserved {same}",
            x.len(),
            core.image.len(),
            write_graph6(&core.image),
            is_strongly_reducible(x),
        );
    }

    let x = pointed_counterexample();
    let ordering = strong_contraction_ordering(&x).expect("the example is strongly contractible");
    let names: Vec<String> = ordering.order.iter().map(|&v| x.label(v)).collect();
    println!("ordering: {}", names.join(", "));
    for (v, w) in ordering.order.iter().zip(&ordering.witnesses) {
        println!(
            "  N*({}) within the rest lies in N*({})",
            x.label(*v),
            x.label(*w)
        );
    }
    for b in x.vertices() {
        println!(
            "pointed at {}: {}",
            x.label(b),
            pointed_strongly_contractible(&x, b, &cfg)?
        );
    }
    Ok(())
}
