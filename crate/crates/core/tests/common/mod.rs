#![allow(dead_code)]

use std::collections::BTreeSet;

use digitop::canon::canonical_form;
use digitop::DigitalImage;
use proptest::prelude::*;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect()
}

pub fn from_mask(n: usize, mask: u64) -> DigitalImage {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p);
    DigitalImage::from_edges(n, edges).unwrap()
}

/// Canonical forms of all connected graphs on `n` points, by running
/// through every edge subset.
pub fn brute_force_connected(n: usize) -> BTreeSet<Vec<u8>> {
    let m = pairs(n).len();
    (0u64..1 << m)
        .map(|mask| from_mask(n, mask))
        .filter(|g| g.is_connected())
        .map(|g| canonical_form(&g))
        .collect()
}

/// Any simple graph on 1..=max points.
pub fn image(max: usize) -> impl Strategy<Value = DigitalImage> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges = pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(p, _)| p);
            DigitalImage::from_edges(n, edges).unwrap()
        })
    })
}
