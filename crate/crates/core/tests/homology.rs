mod common;

use digitop::homology::{
    exact_smith_normal_form, induced_chain_map, induced_homology_map, smith_normal_form,
    BigIntMatrix, ChainComplex, Homology, IntegerMatrix,
};
use digitop::map::continuous_maps;
use digitop::{compose, DigitalImage, VertexMap};
use num_bigint::BigInt;
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = IntegerMatrix> {
    (1..=7usize, 1..=7usize).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-4i64..=4, c), r)
            .prop_map(move |rows| IntegerMatrix::from_rows(c, &rows).unwrap())
    })
}

fn wide_matrix() -> impl Strategy<Value = IntegerMatrix> {
    (1..=8usize, 1..=8usize).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)
            .prop_map(move |rows| IntegerMatrix::from_rows(c, &rows).unwrap())
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn maps_between(x: &DigitalImage, y: &DigitalImage, a: usize) -> Vec<usize> {
    let maps = continuous_maps(x, y);
    maps[a % maps.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_form_properties(m in matrix()) {
        let s = smith_normal_form(&m).unwrap();
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert_eq!(s.u.determinant().unwrap().abs(), 1);
        prop_assert_eq!(s.v.determinant().unwrap().abs(), 1);
        prop_assert_eq!(s.u.mul(&s.u_inv).unwrap(), IntegerMatrix::identity(m.rows()));
        prop_assert_eq!(s.v_inv.mul(&s.v).unwrap(), IntegerMatrix::identity(m.cols()));
        let f = s.invariant_factors();
        prop_assert!(f.iter().all(|&d| d > 0));
        prop_assert!(f.windows(2).all(|w| w[1] % w[0] == 0));
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                prop_assert!(i == j || s.d.get(i, j) == 0);
            }
        }
        // the rank is the largest nonvanishing minor size; check against the transpose
        prop_assert_eq!(s.rank(), smith_normal_form(&m.transpose()).unwrap().rank());
    }

    #[test]
    fn exact_smith_form_properties(m in wide_matrix()) {
        let s = exact_smith_normal_form(&m);
        let big = BigIntMatrix::from_integer_matrix(&m);
        prop_assert_eq!(s.u.mul(&big).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert_eq!(s.u.mul(&s.u_inv).unwrap(), BigIntMatrix::identity_matrix(m.rows()));
        prop_assert_eq!(s.v_inv.mul(&s.v).unwrap(), BigIntMatrix::identity_matrix(m.cols()));
        prop_assert!(s.d.is_diagonal());
        let f = s.invariant_factors();
        prop_assert!(f.iter().all(|d| *d > BigInt::from(0)));
        prop_assert!(f.windows(2).all(|w| &w[1] % &w[0] == BigInt::from(0)));
        // first factor is the gcd of the entries; on square input the product is |det|
        let g = m.to_rows().into_iter().flatten().fold(0, gcd);
        prop_assert_eq!(f.first().cloned().unwrap_or_default(), BigInt::from(g));
        if m.rows() == m.cols() {
            let det = m.determinant().unwrap().abs();
            let prod: BigInt = if f.len() == m.rows() { f.iter().product() } else { BigInt::from(0) };
            prop_assert_eq!(prod, BigInt::from(det));
        }
        if let Ok(small) = smith_normal_form(&m) {
            prop_assert_eq!(s.d.to_integer_matrix().unwrap(), small.d);
        }
    }

    #[test]
    fn chain_maps_commute_with_boundaries(x in common::image(5), y in common::image(5), a in any::<usize>()) {
        let f = VertexMap::new(&x, &y, maps_between(&x, &y, a)).unwrap();
        let (cx, cy) = (ChainComplex::new(&x), ChainComplex::new(&y));
        for q in 1..=cx.top_dimension() + 1 {
            let lhs = cy.boundary(q).mul(&induced_chain_map(&f, q).unwrap()).unwrap();
            let rhs = induced_chain_map(&f, q - 1).unwrap().mul(&cx.boundary(q)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn induced_maps_are_functorial(x in common::image(4), y in common::image(4), z in common::image(4), a in any::<usize>(), b in any::<usize>()) {
        let f = VertexMap::new(&x, &y, maps_between(&x, &y, a)).unwrap();
        let g = VertexMap::new(&y, &z, maps_between(&y, &z, b)).unwrap();
        let gf = compose(&g, &f).unwrap();
        for q in 0..=2 {
            let lhs = induced_homology_map(&gf, q).unwrap();
            let rhs = induced_homology_map(&g, q).unwrap().after(&induced_homology_map(&f, q).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
        prop_assert!(induced_homology_map(&VertexMap::identity(&x), 1).unwrap().is_identity());
    }

    #[test]
    fn euler_characteristic_matches(x in common::image(7)) {
        let h = Homology::new(&x).unwrap();
        let c = h.complex();
        let by_cells: i64 = (0..=c.top_dimension()).map(|q| if q % 2 == 0 { c.rank(q) as i64 } else { -(c.rank(q) as i64) }).sum();
        let by_betti: i64 = h.betti_numbers().iter().enumerate().map(|(q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(by_cells, by_betti);
        prop_assert_eq!(h.group(0).betti, x.component_count());
    }
}
