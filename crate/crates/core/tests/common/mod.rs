#![allow(dead_code)]

use std::collections::HashSet;

use borderidx_core::{BoxShape, ExponentVector, OrderIdeal, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn ev(c: &[u32]) -> ExponentVector {
    ExponentVector::new(c.to_vec())
}

pub fn example_ideal() -> OrderIdeal {
    OrderIdeal::from_generators(2, [ev(&[2, 0]), ev(&[0, 2])]).unwrap()
}

/// Random order ideals: downward closures of up to three generators in a
/// small box, dimension 1–3.
pub fn order_ideal() -> impl Strategy<Value = OrderIdeal> {
    (1usize..=3).prop_flat_map(|dim| {
        let side: u32 = [0, 6, 4, 2][dim];
        prop::collection::vec(prop::collection::vec(0..=side, dim), 1..=3).prop_map(move |gens| {
            OrderIdeal::from_generators(dim, gens.into_iter().map(ExponentVector::new)).unwrap()
        })
    })
}

pub fn partition() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=6, 1..=6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=1000)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

/// Index straight from the definition: the least k such that t lies in the
/// union of the first k iterated borders.
pub fn index_by_layers(ideal: &OrderIdeal, t: &ExponentVector) -> u64 {
    let dim = ideal.dim();
    let mut closed: HashSet<ExponentVector> = ideal.iter().cloned().collect();
    let mut k = 0;
    while !closed.contains(t) {
        let layer: Vec<_> = closed
            .iter()
            .flat_map(|s| (0..dim).map(move |i| s.incremented(i)))
            .filter(|u| u.divides(t))
            .collect();
        closed.extend(layer);
        k += 1;
    }
    k
}

/// Minimal elements of the complement found by scanning a box that is
/// one larger than the bounding box.
pub fn brute_minimal_generators(ideal: &OrderIdeal) -> Vec<ExponentVector> {
    let corner = ideal.bounding_box().unwrap().corner.shifted(1);
    let outside: Vec<_> = BoxShape::new(corner)
        .points()
        .filter(|p| !ideal.contains(p))
        .collect();
    let mut minimal: Vec<_> = outside
        .iter()
        .filter(|p| !outside.iter().any(|q| q != *p && q.divides(p)))
        .cloned()
        .collect();
    minimal.sort();
    minimal
}
