//! Named example images.

use crate::image::DigitalImage;

/// Eight points `x_1..x_8` (indices 0..7): strongly contractible, but not
/// by a strong homotopy fixing `x_1`.
///
/// Drawn as an outer square `x_4 x_1 x_2 x_3`, an inner square
/// `x_7 x_8 x_5 x_6`, the diagonal `x_4 x_7 x_5 x_2`, and the edges
/// `x_3x_6, x_1x_8, x_4x_6, x_3x_5, x_2x_8, x_4x_8, x_1x_7`.
pub fn pointed_counterexample() -> DigitalImage {
    let edges = [
        (1, 4),
        (1, 2),
        (2, 3),
        (3, 4),
        (7, 8),
        (8, 5),
        (5, 6),
        (6, 7),
        (4, 7),
        (7, 5),
        (5, 2),
        (3, 6),
        (8, 1),
        (4, 6),
        (3, 5),
        (2, 8),
        (4, 8),
        (7, 1),
    ];
    DigitalImage::from_edges(8, edges.iter().map(|&(a, b)| (a - 1, b - 1)))
        .and_then(|img| img.with_labels((1..=8).map(|i| format!("x_{i}")).collect()))
        .expect("fixed example is well formed")
}

fn build(n: usize, edges: &[(usize, usize)]) -> DigitalImage {
    DigitalImage::from_edges(n, edges.iter().copied()).expect("fixed example is well formed")
}

/// One representative of each strong homotopy type of connected images on
/// at most six points, with a short name.
pub fn small_strong_types() -> Vec<(&'static str, DigitalImage)> {
    let c5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
    let with = |extra: &[(usize, usize)]| {
        let mut e = c5.to_vec();
        e.extend_from_slice(extra);
        build(6, &e)
    };
    vec![
        ("point", DigitalImage::point()),
        ("C4", DigitalImage::cycle(4).unwrap()),
        ("C5", DigitalImage::cycle(5).unwrap()),
        ("K2,3", DigitalImage::complete_bipartite(2, 3).unwrap()),
        ("C6", DigitalImage::cycle(6).unwrap()),
        // extra point joined to the two neighbors of one cycle point
        ("C5+fan2", with(&[(5, 1), (5, 4)])),
        // extra point joined to one cycle point and the opposite edge
        ("C5+fan3", with(&[(5, 0), (5, 2), (5, 3)])),
        ("K2,4", DigitalImage::complete_bipartite(2, 4).unwrap()),
        // square a b c d, p on ab, q on cd, p adjacent to q
        (
            "square+bridge",
            build(
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (4, 0),
                    (4, 1),
                    (5, 2),
                    (5, 3),
                    (4, 5),
                ],
            ),
        ),
        // square a b c d, z on a and c, m on b and z
        (
            "square+spoke",
            build(
                6,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (4, 0),
                    (4, 2),
                    (5, 1),
                    (5, 4),
                ],
            ),
        ),
        (
            "octahedron",
            build(
                6,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (1, 2),
                    (1, 4),
                    (1, 5),
                    (2, 3),
                    (2, 5),
                    (3, 4),
                    (3, 5),
                    (4, 5),
                ],
            ),
        ),
        (
            "ladder2x3",
            DigitalImage::product(
                &[
                    DigitalImage::interval(0, 1).unwrap(),
                    DigitalImage::interval(0, 2).unwrap(),
                ],
                1,
            )
            .unwrap(),
        ),
        ("K3,3", DigitalImage::complete_bipartite(3, 3).unwrap()),
    ]
}
