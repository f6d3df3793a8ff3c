//! Random order ideals and partitions for randomized checks.

use rand::Rng;

use crate::lattice::{ExponentVector, OrderIdeal};

/// A random nonempty order ideal in dimension `dim` with at most
/// `max_elements` members, the downward closure of one to three random
/// generators. Generators are drawn from a box whose side shrinks with the
/// dimension so that closures stay small.
pub fn random_order_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    max_elements: usize,
) -> OrderIdeal {
    assert!(dim > 0 && max_elements > 0);
    let side = match dim {
        1 => 8,
        2 => 5,
        3 => 3,
        _ => 2,
    };
    loop {
        let count = rng.gen_range(1..=3);
        let gens: Vec<ExponentVector> = (0..count)
            .map(|_| ExponentVector::new((0..dim).map(|_| rng.gen_range(0..=side)).collect()))
            .collect();
        let ideal = OrderIdeal::from_generators(dim, gens).expect("generators match dimension");
        if ideal.len() <= max_elements {
            return ideal;
        }
    }
}

/// A random partition with at most `max_parts` parts, each at most
/// `max_part`.
pub fn random_partition<R: Rng + ?Sized>(rng: &mut R, max_parts: u32, max_part: u32) -> Vec<u32> {
    assert!(max_parts > 0 && max_part > 0);
    let parts = rng.gen_range(1..=max_parts);
    let mut lambda: Vec<u32> = (0..parts).map(|_| rng.gen_range(1..=max_part)).collect();
    lambda.sort_unstable_by(|a, b| b.cmp(a));
    lambda
}
