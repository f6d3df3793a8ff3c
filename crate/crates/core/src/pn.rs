//! The cone sums `P_n(x; a; b) = Σ_{α ∈ N^n} (a·α + b) x^α`.
//!
//! [`pn_closed`] gives the rational closed form over `Π (1 − x_i)^2`. The
//! two oracles expand the same series independently: one evaluates the
//! linear weight pointwise, the other differentiates
//! `t^b Π (1 − t^{a_i} x_i)^{-1}` in `t` at `t = 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gf::{RationalGf, SeriesTable};
use crate::lattice::{BoxShape, ExponentVector};
use crate::poly::{format_rational, Polynomial, Rational};

/// The weight `α ↦ a_1 α_1 + … + a_n α_n + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearWeight {
    pub a: Vec<Rational>,
    pub b: Rational,
}

impl LinearWeight {
    pub fn new(a: Vec<Rational>, b: Rational) -> Self {
        Self { a, b }
    }

    /// `a = (1,…,1)` in `n` variables.
    pub fn unit(n: usize, b: Rational) -> Self {
        Self {
            a: vec![Rational::one(); n],
            b,
        }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn eval(&self, alpha: &ExponentVector) -> Rational {
        self.a
            .iter()
            .zip(alpha.coords())
            .fold(self.b.clone(), |acc, (a, &k)| {
                acc + a * Rational::from_integer(k.into())
            })
    }
}

/// `Π (1 − x_i)^{-2} Σ_{A ⊆ [n]} (−1)^{|A|} (b − Σ_{j∈A} a_j) Π_{j∈A} x_j`.
///
/// For `n = 0` this is the constant `b`. The result is left over the
/// denominator `(2,…,2)` without reduction.
pub fn pn_closed(w: &LinearWeight) -> RationalGf {
    let n = w.dim();
    let mut numerator = Polynomial::zero(n);
    for mask in 0u64..(1u64 << n) {
        let mut exp = vec![0u32; n];
        let mut c = w.b.clone();
        for (j, e) in exp.iter_mut().enumerate() {
            if mask & (1 << j) != 0 {
                *e = 1;
                c -= &w.a[j];
            }
        }
        if mask.count_ones() % 2 == 1 {
            c = -c;
        }
        numerator.add_term(ExponentVector::new(exp), c);
    }
    RationalGf::new(numerator, ExponentVector::new(vec![2; n])).expect("matching dimensions")
}

fn check_bounds(w: &LinearWeight, bounds: &ExponentVector) -> Result<()> {
    if w.dim() == bounds.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: w.dim(),
            found: bounds.dim(),
        })
    }
}

/// Direct evaluation of `a·α + b` at every `α ≤ bounds`.
pub fn pn_series_oracle(w: &LinearWeight, bounds: &ExponentVector) -> Result<SeriesTable> {
    check_bounds(w, bounds)?;
    Ok(SeriesTable::from_fn(bounds.clone(), |alpha| w.eval(alpha)))
}

fn nonnegative_integer(name: String, r: &Rational) -> Result<u64> {
    r.is_integer()
        .then(|| r.to_integer().to_u64())
        .flatten()
        .ok_or_else(|| Error::NotNonnegativeInteger {
            name,
            value: format_rational(r),
        })
}

/// Univariate polynomial in `t`, keyed by exponent.
type TPoly = BTreeMap<u64, BigInt>;

/// `∂/∂t ( t^b Π_i (1 − t^{a_i} x_i)^{-1} )` at `t = 1`, truncated to the
/// box. Every coefficient of the product is kept as a polynomial in `t`
/// until the final differentiation.
pub fn pn_derivative_oracle(w: &LinearWeight, bounds: &ExponentVector) -> Result<SeriesTable> {
    check_bounds(w, bounds)?;
    let steps: Vec<u64> =
        w.a.iter()
            .enumerate()
            .map(|(i, a)| nonnegative_integer(format!("a_{}", i + 1), a))
            .collect::<Result<_>>()?;
    let b = nonnegative_integer("b".into(), &w.b)?;

    let shape = BoxShape::new(bounds.clone());
    let mut table: Vec<TPoly> = vec![TPoly::new(); shape.len()];
    table[0].insert(b, BigInt::one());

    // multiply by the truncated geometric series Σ_k t^{a_i k} x_i^k
    for (axis, &step) in steps.iter().enumerate() {
        let stride = shape.stride(axis);
        let mut next = vec![TPoly::new(); shape.len()];
        for (offset, target) in next.iter_mut().enumerate() {
            let alpha = shape.point(offset);
            for k in 0..=alpha[axis] as usize {
                for (deg, c) in &table[offset - k * stride] {
                    *target
                        .entry(deg + step * k as u64)
                        .or_insert_with(BigInt::zero) += c;
                }
            }
        }
        table = next;
    }

    let coeffs = table
        .iter()
        .map(|tp| {
            let slope = tp
                .iter()
                .fold(BigInt::zero(), |acc, (deg, c)| acc + c * BigInt::from(*deg));
            Rational::from_integer(slope)
        })
        .collect();
    SeriesTable::from_values(bounds.clone(), coeffs)
}
