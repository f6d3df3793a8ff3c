//! Exponent vectors, finite order ideals and their bounding boxes.
//!
//! A monomial `x^α` is identified with its exponent vector `α ∈ N^n`. An
//! order ideal is a finite set of exponent vectors closed under taking
//! divisors, i.e. under decrementing any positive coordinate.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of `N^n`, the exponent of the monomial `x^α`.
///
/// Vectors are ordered graded-lexicographically: first by total degree,
/// then lexicographically by coordinates. This is the canonical order used
/// for every serialized set and polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    /// The unit vector `e_i` (0-based axis).
    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut coords = vec![0; dim];
        coords[axis] = 1;
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    /// Total degree `|α|`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Componentwise `self ≤ other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `α + e_axis`.
    pub fn incremented(&self, axis: usize) -> Self {
        let mut coords = self.0.clone();
        coords[axis] += 1;
        Self(coords)
    }

    /// `α − e_axis`, or `None` when that coordinate is already zero.
    pub fn decremented(&self, axis: usize) -> Option<Self> {
        let mut coords = self.0.clone();
        coords[axis] = coords[axis].checked_sub(1)?;
        Some(Self(coords))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other`, or `None` unless `other` divides `self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Adds `k` to every coordinate.
    pub fn shifted(&self, k: u32) -> Self {
        Self(self.0.iter().map(|a| a + k).collect())
    }

    /// Axes with a nonzero coordinate.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            })
        }
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(coords: Vec<u32>) -> Self {
        Self(coords)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(coords: [u32; N]) -> Self {
        Self(coords.to_vec())
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, axis: usize) -> &u32 {
        &self.0[axis]
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// The extreme corner `(m_1,…,m_n)` of the smallest axis-parallel box
/// containing a nonempty order ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundingBox {
    pub corner: ExponentVector,
}

impl BoundingBox {
    pub fn dim(&self) -> usize {
        self.corner.dim()
    }

    /// Whether `α` lies in the box `α ≤ corner`.
    pub fn contains(&self, alpha: &ExponentVector) -> bool {
        alpha.divides(&self.corner)
    }

    /// Corner of the enlarged box `B⁺ = {u : u_i ≤ m_i + 1}`.
    pub fn enlarged_corner(&self) -> ExponentVector {
        self.corner.shifted(1)
    }
}

/// A finite, division-closed set of exponent vectors in a fixed dimension.
#[derive(Debug, Clone)]
pub struct OrderIdeal {
    dim: usize,
    members: HashSet<ExponentVector>,
    sorted: Vec<ExponentVector>,
}

impl PartialEq for OrderIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.members == other.members
    }
}

impl Eq for OrderIdeal {}

impl OrderIdeal {
    fn from_members(dim: usize, members: HashSet<ExponentVector>) -> Self {
        let mut sorted: Vec<_> = members.iter().cloned().collect();
        sorted.sort();
        Self {
            dim,
            members,
            sorted,
        }
    }

    pub fn empty(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Self::from_members(dim, HashSet::new()))
    }

    /// Smallest order ideal containing every generator.
    pub fn from_generators<I>(dim: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut members = HashSet::new();
        let mut stack = Vec::new();
        for g in gens {
            g.check_dim(dim)?;
            stack.push(g);
        }
        while let Some(alpha) = stack.pop() {
            if members.contains(&alpha) {
                continue;
            }
            for axis in 0..dim {
                if let Some(lower) = alpha.decremented(axis) {
                    if !members.contains(&lower) {
                        stack.push(lower);
                    }
                }
            }
            members.insert(alpha);
        }
        Ok(Self::from_members(dim, members))
    }

    /// Two-dimensional order ideal encoded by a partition: `(a, b)` is a
    /// member iff `a < m` and `b < λ_{a+1}`.
    pub fn from_partition(lambda: &[u32]) -> Result<Self> {
        validate_partition_shape(lambda)?;
        let members = lambda
            .iter()
            .enumerate()
            .flat_map(|(a, &height)| {
                (0..height).map(move |b| ExponentVector::new(vec![a as u32, b]))
            })
            .collect();
        Ok(Self::from_members(2, members))
    }

    /// Accepts `elements` only if the set is division-closed; otherwise the
    /// error names an element and the missing lower neighbour.
    pub fn validate<I>(dim: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut members = HashSet::new();
        for e in elements {
            e.check_dim(dim)?;
            members.insert(e);
        }
        let mut sorted: Vec<_> = members.iter().cloned().collect();
        sorted.sort();
        for alpha in &sorted {
            for axis in 0..dim {
                if let Some(lower) = alpha.decremented(axis) {
                    if !members.contains(&lower) {
                        return Err(Error::NotDivisionClosed {
                            element: alpha.clone(),
                            missing: lower,
                        });
                    }
                }
            }
        }
        Ok(Self {
            dim,
            members,
            sorted,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn contains(&self, alpha: &ExponentVector) -> bool {
        self.members.contains(alpha)
    }

    /// Members in graded-lexicographic order.
    pub fn iter(&self) -> std::slice::Iter<'_, ExponentVector> {
        self.sorted.iter()
    }

    pub fn elements(&self) -> &[ExponentVector] {
        &self.sorted
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyIdeal)
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_dim(&self, alpha: &ExponentVector) -> Result<()> {
        alpha.check_dim(self.dim)
    }

    pub fn bounding_box(&self) -> Result<BoundingBox> {
        let mut iter = self.sorted.iter();
        let first = iter.next().ok_or(Error::EmptyIdeal)?.clone();
        let corner = iter.fold(first, |acc, alpha| acc.join(alpha));
        Ok(BoundingBox { corner })
    }

    /// The minimal generators of the complement monoid ideal `N^n \ O`.
    ///
    /// Every minimal generator `g` is nonzero and has `g − e_i ∈ O` for all
    /// `i` in its support, so the candidates are taken from the border.
    pub fn minimal_generators_of_complement(&self) -> Result<Vec<ExponentVector>> {
        self.require_nonempty()?;
        let mut gens: Vec<_> = crate::index::border(self)?
            .into_iter()
            .filter(|g| {
                (0..self.dim).all(|axis| match g.decremented(axis) {
                    Some(lower) => self.contains(&lower),
                    None => true,
                })
            })
            .collect();
        gens.sort();
        Ok(gens)
    }

    /// Free directions of `u` in this (finite) set: the 0-based axes `i`
    /// with `u + e_i` outside the set.
    pub fn free_directions(&self, u: &ExponentVector) -> Result<BTreeSet<usize>> {
        self.require_dim(u)?;
        if !self.contains(u) {
            return Err(Error::NotAnElement(u.clone()));
        }
        Ok((0..self.dim)
            .filter(|&axis| !self.contains(&u.incremented(axis)))
            .collect())
    }

    /// Column heights `(λ_1,…,λ_m)` of a two-dimensional order ideal, the
    /// inverse of [`OrderIdeal::from_partition`]. `None` outside dimension 2
    /// or for the empty ideal.
    pub fn to_partition(&self) -> Option<Vec<u32>> {
        if self.dim != 2 || self.is_empty() {
            return None;
        }
        let mut heights: Vec<u32> = Vec::new();
        for alpha in &self.sorted {
            let col = alpha[0] as usize;
            if heights.len() <= col {
                heights.resize(col + 1, 0);
            }
            heights[col] += 1;
        }
        Some(heights)
    }
}

/// Checks that `lambda` is a nonempty, weakly decreasing sequence of
/// positive integers.
pub fn validate_partition_shape(lambda: &[u32]) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::InvalidPartition("partition is empty".into()));
    }
    if let Some(pos) = lambda.iter().position(|&p| p == 0) {
        return Err(Error::InvalidPartition(format!(
            "part {} is not positive",
            pos + 1
        )));
    }
    if let Some(pos) = lambda.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(format!(
            "parts {} and {} increase ({} < {})",
            pos + 1,
            pos + 2,
            lambda[pos],
            lambda[pos + 1]
        )));
    }
    Ok(())
}

/// Dense row-major indexing of the box `{α : α ≤ bounds}`; the last axis
/// varies fastest, so `α − e_i` always precedes `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxShape {
    bounds: ExponentVector,
    strides: Vec<usize>,
    len: usize,
}

impl BoxShape {
    pub fn new(bounds: ExponentVector) -> Self {
        let dim = bounds.dim();
        let mut strides = vec![0; dim];
        let mut len = 1usize;
        for axis in (0..dim).rev() {
            strides[axis] = len;
            len *= bounds[axis] as usize + 1;
        }
        Self {
            bounds,
            strides,
            len,
        }
    }

    pub fn bounds(&self) -> &ExponentVector {
        &self.bounds
    }

    pub fn dim(&self) -> usize {
        self.bounds.dim()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn stride(&self, axis: usize) -> usize {
        self.strides[axis]
    }

    pub fn contains(&self, alpha: &ExponentVector) -> bool {
        alpha.divides(&self.bounds)
    }

    pub fn offset(&self, alpha: &ExponentVector) -> Option<usize> {
        if !self.contains(alpha) {
            return None;
        }
        Some(
            alpha
                .coords()
                .iter()
                .zip(&self.strides)
                .map(|(&a, &s)| a as usize * s)
                .sum(),
        )
    }

    pub fn point(&self, mut offset: usize) -> ExponentVector {
        let coords = self
            .strides
            .iter()
            .map(|&s| {
                let c = offset / s;
                offset %= s;
                c as u32
            })
            .collect();
        ExponentVector::new(coords)
    }

    /// All points of the box in offset order.
    pub fn points(&self) -> impl Iterator<Item = ExponentVector> + '_ {
        (0..self.len).map(move |o| self.point(o))
    }
}
