//! The prism operator for a one-step strong homotopy and the chain
//! homotopy identity it satisfies.
//!
//! cargo run --example prism

use digitop::homology::{prism_identity_sides, prism_operator};
use digitop::homotopy::one_step_strong_homotopic;
use digitop::{DigitalImage, VertexMap};

fn main() -> digitop::Result<()> {
    // a square with a center point; f folds onto the center's star, g is
    // the identity
    let x = DigitalImage::from_edges(
        5,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 0),
            (4, 1),
            (4, 2),
            (4, 3),
        ],
    )?;
    let f = VertexMap::new(&x, &x, vec![0, 4, 2, 4, 4])?;
    let g = VertexMap::identity(&x);
    println!("one-step strong: {}", one_step_strong_homotopic(&f, &g)?);
    for q in 0..=2 {
        let p = prism_operator(&f, &g, q)?;
        let (lhs, rhs) = prism_identity_sides(&f, &g, q)?;
        println!(
            "P_{q} is {}x{}; dP = g# - f# - Pd: {}",
            p.rows(),
            p.cols(),
            lhs == rhs
        );
    }

    let c4 = DigitalImage::cycle(4)?;
    let id = VertexMap::identity(&c4);
    let c = VertexMap::constant(&c4, &c4, 0)?;
    match prism_operator(&id, &c, 1) {
        Ok(_) => println!("unexpected: prism built for id_C4, const"),
        Err(e) => println!("id_C4, const: {e}"),
    }
    Ok(())
}
