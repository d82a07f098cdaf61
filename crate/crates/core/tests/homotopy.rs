mod common;

use digitop::catalog::generate_connected_graphs;
use digitop::homotopy::{
    concatenate, find_homotopy, homotopy_class, is_homotopy_via_product, is_reducible,
    is_strong_homotopy_via_product, is_valid_homotopy, is_valid_strong_homotopy,
    one_step_homotopic, one_step_strong_homotopic, puncturate_one_step, reverse,
    strongly_homotopic, Homotopy, Outcome, SearchConfig, StepKind, Verdict,
};
use digitop::map::continuous_maps;
use digitop::{DigitalImage, VertexMap};
use proptest::prelude::*;

/// An image, a continuous selfmap, and a random walk of strong or ordinary
/// one-step moves from it.
fn walk(strong: bool) -> impl Strategy<Value = (DigitalImage, Vec<Vec<usize>>)> {
    (common::image(5), any::<u64>(), 1..5usize).prop_map(move |(x, seed, k)| {
        let maps = continuous_maps(&x, &x);
        let mut cur = maps[seed as usize % maps.len()].clone();
        let mut stages = vec![cur.clone()];
        let mut s = seed;
        for _ in 0..k {
            let f = VertexMap::new(&x, &x, cur.clone()).unwrap();
            let next: Vec<&Vec<usize>> = maps
                .iter()
                .filter(|g| {
                    let g = VertexMap::new(&x, &x, (*g).clone()).unwrap();
                    if strong {
                        one_step_strong_homotopic(&f, &g).unwrap()
                    } else {
                        one_step_homotopic(&f, &g).unwrap()
                    }
                })
                .collect();
            s = s
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            cur = next[(s >> 33) as usize % next.len()].clone();
            stages.push(cur.clone());
        }
        (x, stages)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strong_homotopies_are_homotopies((x, stages) in walk(true)) {
        let h = Homotopy::new(&x, &x, stages).unwrap();
        prop_assert!(is_valid_strong_homotopy(&h));
        prop_assert!(is_valid_homotopy(&h, &h.start(), &h.end()));
        prop_assert!(is_strong_homotopy_via_product(&h));
        prop_assert!(is_homotopy_via_product(&h));
    }

    #[test]
    fn stagewise_and_product_checks_agree((x, stages) in walk(false)) {
        let h = Homotopy::new(&x, &x, stages).unwrap();
        prop_assert_eq!(is_valid_homotopy(&h, &h.start(), &h.end()), is_homotopy_via_product(&h));
        prop_assert_eq!(is_valid_strong_homotopy(&h), is_strong_homotopy_via_product(&h));
    }

    #[test]
    fn reverse_and_concatenate_preserve_validity((x, stages) in walk(true)) {
        let h = Homotopy::new(&x, &x, stages).unwrap();
        let r = reverse(&h);
        prop_assert!(is_valid_strong_homotopy(&r));
        prop_assert_eq!(r.start(), h.end());
        let loop_ = concatenate(&h, &r).unwrap();
        prop_assert!(is_valid_strong_homotopy(&loop_));
        prop_assert_eq!(loop_.k(), 2 * h.k() + 1);
        prop_assert_eq!(loop_.start(), loop_.end());
    }

    #[test]
    fn one_step_strong_is_symmetric_and_implies_ordinary(x in common::image(4), a in any::<usize>(), b in any::<usize>()) {
        let maps = continuous_maps(&x, &x);
        let f = VertexMap::new(&x, &x, maps[a % maps.len()].clone()).unwrap();
        let g = VertexMap::new(&x, &x, maps[b % maps.len()].clone()).unwrap();
        let s = one_step_strong_homotopic(&f, &g).unwrap();
        prop_assert_eq!(s, one_step_strong_homotopic(&g, &f).unwrap());
        if s {
            prop_assert!(one_step_homotopic(&f, &g).unwrap());
            let p = puncturate_one_step(&f, &g).unwrap();
            prop_assert_eq!(p.start(), f);
            prop_assert_eq!(p.end(), g);
            prop_assert!(is_valid_strong_homotopy(&p));
        }
    }
}

#[test]
fn strong_homotopy_is_an_equivalence_relation() {
    let cfg = SearchConfig::default();
    for n in 1..=3 {
        for x in (0u64..1 << (n * (n - 1) / 2)).map(|m| common::from_mask(n, m)) {
            let maps = continuous_maps(&x, &x);
            let rel = |a: &Vec<usize>, b: &Vec<usize>| {
                let f = VertexMap::new(&x, &x, a.clone()).unwrap();
                let g = VertexMap::new(&x, &x, b.clone()).unwrap();
                strongly_homotopic(&f, &g, &cfg).unwrap() == Verdict::Yes
            };
            for a in &maps {
                assert!(rel(a, a));
                for b in &maps {
                    assert_eq!(rel(a, b), rel(b, a));
                    if !rel(a, b) {
                        continue;
                    }
                    for c in &maps {
                        if rel(b, c) {
                            assert!(rel(a, c));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn found_homotopies_are_valid() {
    let cfg = SearchConfig::default();
    let c6 = DigitalImage::cycle(6).unwrap();
    let id = VertexMap::identity(&c6);
    let k = VertexMap::constant(&c6, &c6, 3).unwrap();
    let Outcome::Found(h) = find_homotopy(
        &k,
        &VertexMap::constant(&c6, &c6, 0).unwrap(),
        StepKind::Strong,
        &cfg,
    )
    .unwrap() else {
        panic!("constants on a connected image are strongly homotopic");
    };
    assert!(is_valid_strong_homotopy(&h));
    assert_eq!(h.k(), 3);
    assert_eq!(
        find_homotopy(&id, &k, StepKind::Ordinary, &cfg)
            .unwrap()
            .verdict(),
        Verdict::No
    );
}

/// Reducible means some map homotopic to the identity misses a point; the
/// oracle reads this off the full ordinary class of the identity.
#[test]
fn reducibility_agrees_with_class_search() {
    let cfg = SearchConfig::default();
    for n in 1..=5 {
        for x in generate_connected_graphs(n).unwrap() {
            let id = VertexMap::identity(&x);
            let Outcome::Found(class) = homotopy_class(&id, StepKind::Ordinary, &cfg).unwrap()
            else {
                panic!("class search ran out of budget");
            };
            let oracle = class.iter().any(|m| {
                let mut seen = m.clone();
                seen.sort_unstable();
                seen.dedup();
                seen.len() < n
            });
            assert_eq!(is_reducible(&x, &cfg), Verdict::from_bool(oracle), "{x:?}");
        }
    }
}
