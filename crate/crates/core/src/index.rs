//! Borders, higher borders and the index function of an order ideal.
//!
//! The index `ind_O(t)` is the least `k` with `t` in the `k`-th closed
//! border. It is computed two ways: by minimizing `|t| − |s|` over divisors
//! `s ∈ O` of `t`, and by the recursion
//! `ind(t) = 1 + min_i ind(t / x_i)` for `t ∉ O` run as a dynamic program
//! over a box. Each route serves as the oracle for the other.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lattice::{BoxShape, ExponentVector, OrderIdeal};

/// `∂S = {s + e_i : s ∈ S} \ S` for an arbitrary finite set.
fn border_of(dim: usize, set: &HashSet<ExponentVector>) -> HashSet<ExponentVector> {
    set.iter()
        .flat_map(|s| (0..dim).map(move |axis| s.incremented(axis)))
        .filter(|t| !set.contains(t))
        .collect()
}

fn sorted(set: HashSet<ExponentVector>) -> Vec<ExponentVector> {
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort();
    v
}

/// The border `∂O`, in graded-lexicographic order.
pub fn border(ideal: &OrderIdeal) -> Result<Vec<ExponentVector>> {
    ideal.require_nonempty()?;
    let members: HashSet<_> = ideal.iter().cloned().collect();
    Ok(sorted(border_of(ideal.dim(), &members)))
}

/// The `k`-th border `∂^k O`, obtained by iterating the border of the
/// closed union of the previous layers. `∂^0 O = O`.
pub fn higher_border(ideal: &OrderIdeal, k: u32) -> Result<Vec<ExponentVector>> {
    ideal.require_nonempty()?;
    let dim = ideal.dim();
    let mut closed: HashSet<_> = ideal.iter().cloned().collect();
    let mut layer = closed.clone();
    for _ in 0..k {
        layer = border_of(dim, &closed);
        closed.extend(layer.iter().cloned());
    }
    let layer = sorted(layer);
    debug_assert_eq!(layer, higher_border_by_degree(ideal, k)?);
    Ok(layer)
}

/// `∂^k O` computed as `T_k · O \ T_{<k} · O`: the multiples of `O` by
/// monomials of degree exactly `k` that are not multiples by any monomial
/// of smaller degree.
pub fn higher_border_by_degree(ideal: &OrderIdeal, k: u32) -> Result<Vec<ExponentVector>> {
    ideal.require_nonempty()?;
    let dim = ideal.dim();
    let mut below: HashSet<ExponentVector> = HashSet::new();
    let mut current: HashSet<ExponentVector> = ideal.iter().cloned().collect();
    for _ in 0..k {
        let next = current
            .iter()
            .flat_map(|s| (0..dim).map(move |axis| s.incremented(axis)))
            .collect();
        below.extend(current);
        current = next;
    }
    Ok(sorted(
        current.into_iter().filter(|t| !below.contains(t)).collect(),
    ))
}

/// `ind_O(t) = min { |t| − |s| : s ∈ O, s | t }`.
pub fn index_by_divisor(ideal: &OrderIdeal, t: &ExponentVector) -> Result<u64> {
    ideal.require_nonempty()?;
    ideal.require_dim(t)?;
    let deg = t.degree();
    let best = ideal
        .iter()
        .filter(|s| s.divides(t))
        .map(|s| s.degree())
        .max()
        .expect("the origin lies in every nonempty order ideal");
    Ok(deg - best)
}

/// Dense table of `ind_O` over the box `{α : α ≤ bounds}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexTable {
    shape: BoxShape,
    values: Vec<u64>,
}

impl IndexTable {
    /// Builds a table from raw row-major values (last axis fastest).
    pub fn from_values(bounds: ExponentVector, values: Vec<u64>) -> Result<Self> {
        let shape = BoxShape::new(bounds);
        if shape.len() != values.len() {
            return Err(Error::Parse(format!(
                "index table over {} holds {} points, got {} values",
                shape.bounds(),
                shape.len(),
                values.len()
            )));
        }
        Ok(Self { shape, values })
    }

    pub fn bounds(&self) -> &ExponentVector {
        self.shape.bounds()
    }

    pub fn shape(&self) -> &BoxShape {
        &self.shape
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, alpha: &ExponentVector) -> Option<u64> {
        self.shape.offset(alpha).map(|o| self.values[o])
    }

    pub fn iter(&self) -> impl Iterator<Item = (ExponentVector, u64)> + '_ {
        self.shape.points().zip(self.values.iter().copied())
    }
}

/// Evaluates `ind_O` on every point of the box by the recursion
/// `ind(t) = 0` on `O`, else `1 + min { ind(t − e_i) : t_i > 0 }`.
///
/// Points are visited in offset order, in which every `t − e_i` precedes
/// `t`.
pub fn index_table(ideal: &OrderIdeal, bounds: &ExponentVector) -> Result<IndexTable> {
    ideal.require_nonempty()?;
    ideal.require_dim(bounds)?;
    let shape = BoxShape::new(bounds.clone());
    let mut values = vec![0u64; shape.len()];
    for offset in 0..shape.len() {
        let t = shape.point(offset);
        if ideal.contains(&t) {
            continue;
        }
        values[offset] = (0..shape.dim())
            .filter(|&axis| t[axis] > 0)
            .map(|axis| values[offset - shape.stride(axis)] + 1)
            .min()
            .expect("points outside the ideal are nonzero");
    }
    Ok(IndexTable { shape, values })
}
