//! Rational generating functions with denominators `Π_i (1 − y_i)^{e_i}`,
//! and their truncated power series.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{BoxShape, ExponentVector};
use crate::poly::{format_rational, Polynomial, Rational};

/// `numerator / Π_i (1 − y_i)^{denominator_i}`.
///
/// Values need not be reduced; [`RationalGf::reduced`] cancels every
/// factor `(1 − y_i)` shared by numerator and denominator, and equality
/// compares reduced forms, so two values are equal iff they denote the same
/// rational function.
#[derive(Debug, Clone)]
pub struct RationalGf {
    numerator: Polynomial,
    denominator: ExponentVector,
}

impl RationalGf {
    pub fn new(numerator: Polynomial, denominator: ExponentVector) -> Result<Self> {
        if numerator.dim() != denominator.dim() {
            return Err(Error::DimensionMismatch {
                expected: numerator.dim(),
                found: denominator.dim(),
            });
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn polynomial(numerator: Polynomial) -> Self {
        let denominator = ExponentVector::zero(numerator.dim());
        Self {
            numerator,
            denominator,
        }
    }

    pub fn zero(dim: usize) -> Self {
        Self::polynomial(Polynomial::zero(dim))
    }

    pub fn dim(&self) -> usize {
        self.numerator.dim()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    /// Exponents `e` of the denominator `Π (1 − y_i)^{e_i}`.
    pub fn denominator(&self) -> &ExponentVector {
        &self.denominator
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: dim,
            })
        }
    }

    /// Canonical form: no `(1 − y_i)` with `e_i > 0` divides the numerator,
    /// and zero has the trivial denominator.
    pub fn reduced(&self) -> Self {
        if self.numerator.is_zero() {
            return Self::zero(self.dim());
        }
        let mut numerator = self.numerator.clone();
        let mut den = self.denominator.clone().into_coords();
        for (axis, e) in den.iter_mut().enumerate() {
            while *e > 0 {
                match numerator.div_one_minus(axis) {
                    Some(q) => {
                        numerator = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        Self {
            numerator,
            denominator: ExponentVector::new(den),
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced().denominator == self.denominator
    }

    /// Rewrites the value over the larger denominator `Π (1 − y_i)^{target_i}`.
    /// Requires `denominator ≤ target` componentwise.
    fn numerator_over(&self, target: &ExponentVector) -> Polynomial {
        let mut p = self.numerator.clone();
        for axis in 0..self.dim() {
            p = p.mul_one_minus(axis, target[axis] - self.denominator[axis]);
        }
        p
    }

    /// Exact sum over the common denominator `max(e_a, e_b)`, reduced.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.dim())?;
        Self::sum(self.dim(), [self, other])
    }

    /// Exact sum of many terms, brought over one common denominator and
    /// reduced once at the end. Terms are accumulated in iteration order.
    pub fn sum<'a, I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a RationalGf>,
    {
        let terms: Vec<&RationalGf> = terms.into_iter().collect();
        let mut common = ExponentVector::zero(dim);
        for t in &terms {
            t.check_dim(dim)?;
            common = common.join(&t.denominator);
        }
        let mut numerator = Polynomial::zero(dim);
        for t in &terms {
            numerator = &numerator + &t.numerator_over(&common);
        }
        Ok(Self {
            numerator,
            denominator: common,
        }
        .reduced())
    }

    /// `c · y^alpha · self`.
    pub fn scale_monomial(&self, alpha: &ExponentVector, c: &Rational) -> Result<Self> {
        self.check_dim(alpha.dim())?;
        Ok(Self {
            numerator: self.numerator.shift(alpha).scale(c),
            denominator: self.denominator.clone(),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    /// Re-embeds in `dim` variables, sending variable `k` to `axes[k]`.
    /// `axes` must be distinct.
    pub fn lift(&self, dim: usize, axes: &[usize]) -> Result<Self> {
        let numerator = self.numerator.lift(dim, axes)?;
        let mut den = vec![0u32; dim];
        for (k, &axis) in axes.iter().enumerate() {
            den[axis] += self.denominator[k];
        }
        Ok(Self {
            numerator,
            denominator: ExponentVector::new(den),
        })
    }

    /// Taylor coefficients at every `α ≤ bounds`.
    ///
    /// The numerator is laid out on the dense box and divided by each
    /// `(1 − y_i)` in turn; division by `(1 − y_i)` is a running sum along
    /// axis `i`, so `1/(1 − y_i)^2` contributes `Σ_k (k + 1) y_i^k`.
    pub fn expand(&self, bounds: &ExponentVector) -> Result<SeriesTable> {
        self.check_dim(bounds.dim())?;
        let shape = BoxShape::new(bounds.clone());
        let mut coeffs = vec![Rational::zero(); shape.len()];
        for (exp, c) in self.numerator.terms() {
            if let Some(o) = shape.offset(exp) {
                coeffs[o] = c.clone();
            }
        }
        for axis in 0..shape.dim() {
            let stride = shape.stride(axis);
            let extent = bounds[axis] as usize + 1;
            for _ in 0..self.denominator[axis] {
                for o in 0..coeffs.len() {
                    if !(o / stride).is_multiple_of(extent) {
                        let prev = coeffs[o - stride].clone();
                        coeffs[o] += prev;
                    }
                }
            }
        }
        Ok(SeriesTable { shape, coeffs })
    }

    /// Whether `self · Π (1 − y_i)^{e_i}` is a polynomial.
    pub fn clears_denominator(&self, e: &ExponentVector) -> bool {
        self.dim() == e.dim() && self.reduced().denominator.divides(e)
    }

    /// LaTeX rendering, `\frac{numerator}{(1-y_1)^{2}\cdots}`.
    pub fn to_latex(&self) -> String {
        let num = latex_polynomial(&self.numerator);
        let den: Vec<String> = self
            .denominator
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("(1-y_{{{}}})", i + 1)
                } else {
                    format!("(1-y_{{{}}})^{{{}}}", i + 1, e)
                }
            })
            .collect();
        if den.is_empty() {
            num
        } else {
            format!("\\frac{{{}}}{{{}}}", num, den.join(""))
        }
    }
}

impl PartialEq for RationalGf {
    fn eq(&self, other: &Self) -> bool {
        let a = self.reduced();
        let b = other.reduced();
        a.numerator == b.numerator && a.denominator == b.denominator
    }
}

impl Eq for RationalGf {}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den: Vec<String> = self
            .denominator
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("(1-y{})", i + 1)
                } else {
                    format!("(1-y{})^{}", i + 1, e)
                }
            })
            .collect();
        if den.is_empty() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, den.join("*"))
        }
    }
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn latex_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (exp, c)) in p.terms().enumerate() {
        let mag = c.abs();
        match (k == 0, c.is_negative()) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let mono: String = exp
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("y_{{{}}}", i + 1)
                } else {
                    format!("y_{{{}}}^{{{}}}", i + 1, a)
                }
            })
            .collect::<Vec<_>>()
            .join(" ");
        if mono.is_empty() {
            out.push_str(&latex_rational(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&latex_rational(&mag));
                out.push(' ');
            }
            out.push_str(&mono);
        }
    }
    out
}

/// Dense exact coefficients of a power series over `{α : α ≤ bounds}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    shape: BoxShape,
    coeffs: Vec<Rational>,
}

impl SeriesTable {
    /// Evaluates `f` at every point of the box.
    pub fn from_fn<F>(bounds: ExponentVector, mut f: F) -> Self
    where
        F: FnMut(&ExponentVector) -> Rational,
    {
        let shape = BoxShape::new(bounds);
        let coeffs = shape.points().map(|p| f(&p)).collect();
        Self { shape, coeffs }
    }

    /// Builds a table from raw coefficients in offset order (last axis
    /// fastest).
    pub fn from_values(bounds: ExponentVector, coeffs: Vec<Rational>) -> Result<Self> {
        let shape = BoxShape::new(bounds);
        if shape.len() != coeffs.len() {
            return Err(Error::Parse(format!(
                "series table over {} holds {} points, got {} coefficients",
                shape.bounds(),
                shape.len(),
                coeffs.len()
            )));
        }
        Ok(Self { shape, coeffs })
    }

    pub fn bounds(&self) -> &ExponentVector {
        self.shape.bounds()
    }

    pub fn shape(&self) -> &BoxShape {
        &self.shape
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn get(&self, alpha: &ExponentVector) -> Option<&Rational> {
        self.shape.offset(alpha).map(|o| &self.coeffs[o])
    }

    pub fn iter(&self) -> impl Iterator<Item = (ExponentVector, &Rational)> + '_ {
        self.shape.points().zip(self.coeffs.iter())
    }

    /// Coefficientwise sum of two tables over the same box.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape != other.shape {
            return Err(Error::DimensionMismatch {
                expected: self.shape.len(),
                found: other.shape.len(),
            });
        }
        Ok(Self {
            shape: self.shape.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// First point where the two tables differ.
    pub fn first_difference(&self, other: &Self) -> Option<ExponentVector> {
        if self.shape != other.shape {
            return Some(ExponentVector::zero(self.shape.dim()));
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
            .map(|o| self.shape.point(o))
    }
}

impl fmt::Display for SeriesTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (alpha, c) in self.iter() {
            writeln!(f, "{alpha} {}", format_rational(c))?;
        }
        Ok(())
    }
}
