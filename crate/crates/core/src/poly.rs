//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::ExponentVector;

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p/q`, or `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p` or `p/q` with arbitrary-precision integers.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// A polynomial in `y_1,…,y_dim`. Terms are kept in graded-lexicographic
/// order of exponents and no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::monomial(ExponentVector::zero(dim), c)
    }

    pub fn monomial(exp: ExponentVector, c: Rational) -> Self {
        let mut p = Self::zero(exp.dim());
        p.add_term(exp, c);
        p
    }

    /// Collects terms, merging repeated exponents and dropping zeros.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Self::zero(dim);
        for (exp, c) in terms {
            if exp.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: exp.dim(),
                });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, exp: ExponentVector, c: Rational) {
        debug_assert_eq!(exp.dim(), self.dim);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Self {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `y^exp`.
    pub fn shift(&self, exp: &ExponentVector) -> Self {
        Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.add(exp), v.clone()))
                .collect(),
        }
    }

    /// `self · (1 − y_axis)^power`.
    pub fn mul_one_minus(&self, axis: usize, power: u32) -> Self {
        let mut p = self.clone();
        for _ in 0..power {
            let mut next = p.clone();
            for (e, v) in p.terms.iter() {
                next.add_term(e.incremented(axis), -v.clone());
            }
            p = next;
        }
        p
    }

    /// Exact quotient by `(1 − y_axis)`, or `None` if it does not divide.
    ///
    /// Writing `self = Σ_k c_k y_axis^k` with coefficients in the other
    /// variables, the quotient has `q_k = Σ_{j ≤ k} c_j`, and divisibility
    /// is `Σ_k c_k = 0`.
    pub fn div_one_minus(&self, axis: usize) -> Option<Self> {
        let mut groups: BTreeMap<ExponentVector, BTreeMap<u32, &Rational>> = BTreeMap::new();
        for (e, v) in &self.terms {
            let mut key = e.clone().into_coords();
            let power = std::mem::replace(&mut key[axis], 0);
            groups
                .entry(ExponentVector::new(key))
                .or_default()
                .insert(power, v);
        }
        let mut quotient = Self::zero(self.dim);
        for (key, column) in groups {
            let (&lo, _) = column.first_key_value()?;
            let (&hi, _) = column.last_key_value()?;
            let mut running = Rational::zero();
            for k in lo..hi {
                if let Some(c) = column.get(&k) {
                    running += *c;
                }
                let mut exp = key.clone().into_coords();
                exp[axis] = k;
                quotient.add_term(ExponentVector::new(exp), running.clone());
            }
            running += column[&hi];
            if !running.is_zero() {
                return None;
            }
        }
        Some(quotient)
    }

    /// Re-embeds a polynomial in `dim` variables, sending variable `k` of
    /// `self` to variable `axes[k]`.
    pub fn lift(&self, dim: usize, axes: &[usize]) -> Result<Self> {
        if axes.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: axes.len(),
            });
        }
        if let Some(&bad) = axes.iter().find(|&&a| a >= dim) {
            return Err(Error::DirectionOutOfRange { index: bad, dim });
        }
        let mut p = Self::zero(dim);
        for (e, v) in &self.terms {
            let mut coords = vec![0u32; dim];
            for (k, &axis) in axes.iter().enumerate() {
                coords[axis] += e[k];
            }
            p.add_term(ExponentVector::new(coords), v.clone());
        }
        Ok(p)
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut p = self.clone();
        for (e, v) in &other.terms {
            p.add_term(e.clone(), v.clone());
        }
        Ok(p)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut p = Self::zero(self.dim);
        for (e1, v1) in &self.terms {
            for (e2, v2) in &other.terms {
                p.add_term(e1.add(e2), v1 * v2);
            }
        }
        Ok(p)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), -v.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs)
            .expect("polynomial dimension mismatch")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, exp: &ExponentVector) -> fmt::Result {
    let mut first = true;
    for (i, &a) in exp.coords().iter().enumerate() {
        if a == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "y{}", i + 1)?;
        if a > 1 {
            write!(f, "^{a}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if exp.is_zero() {
                write!(f, "{}", format_rational(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", format_rational(&mag))?;
                }
                write_monomial(f, exp)?;
            }
        }
        Ok(())
    }
}
