//! Fixtures shared by the benchmarks.

use borderidx_core::{ExponentVector, OrderIdeal};

/// The staircase `{α : |α| < size}` in `dim` variables.
pub fn simplex(dim: usize, size: u32) -> OrderIdeal {
    let corner = ExponentVector::new(vec![size - 1; dim]);
    let all = OrderIdeal::from_generators(dim, [corner]).expect("nonzero dimension");
    let keep: Vec<ExponentVector> = all
        .iter()
        .filter(|a| a.degree() < size as u64)
        .cloned()
        .collect();
    OrderIdeal::validate(dim, keep).expect("a simplex is division-closed")
}
