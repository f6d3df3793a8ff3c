//! Cone decompositions of the complement `I = N^n \ O` of an order ideal,
//! and the index generating function assembled from them.
//!
//! A cone `u + N^S` is the set `{u + β : supp(β) ⊆ S}`. A decomposition is
//! *admissible* for `O` when the index grows by exactly `|β|` along every
//! cone; each cone then contributes `y^u P_{|S|}(y_S; 1,…,1; ind_O(u))` to
//! `Ind_O = Σ_α ind_O(α) y^α`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::gf::RationalGf;
use crate::index::{index_by_divisor, index_table};
use crate::lattice::{validate_partition_shape, BoxShape, ExponentVector, OrderIdeal};
use crate::pn::{pn_closed, LinearWeight};
use crate::poly::{rational, Polynomial, Rational};

/// The translated coordinate cone `anchor + N^free`; `free` holds 0-based
/// axes and may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    pub anchor: ExponentVector,
    pub free: BTreeSet<usize>,
}

impl Cone {
    pub fn new(anchor: ExponentVector, free: impl IntoIterator<Item = usize>) -> Self {
        Self {
            anchor,
            free: free.into_iter().collect(),
        }
    }

    pub fn singleton(anchor: ExponentVector) -> Self {
        Self::new(anchor, [])
    }

    pub fn dim(&self) -> usize {
        self.anchor.dim()
    }

    pub fn contains(&self, alpha: &ExponentVector) -> bool {
        alpha.dim() == self.dim()
            && (0..self.dim()).all(|i| {
                if self.free.contains(&i) {
                    alpha[i] >= self.anchor[i]
                } else {
                    alpha[i] == self.anchor[i]
                }
            })
    }

    /// `y^u / Π_{i ∈ S} (1 − y_i)`, the generating function of the cone's
    /// lattice points.
    pub fn indicator_gf(&self) -> RationalGf {
        let den = (0..self.dim())
            .map(|i| u32::from(self.free.contains(&i)))
            .collect();
        RationalGf::new(
            Polynomial::monomial(self.anchor.clone(), Rational::one()),
            ExponentVector::new(den),
        )
        .expect("matching dimensions")
    }

    /// A common lattice point of both cones, if any.
    pub fn intersection_witness(&self, other: &Cone) -> Result<Option<ExponentVector>> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let mut point = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let (u, v) = (self.anchor[i], other.anchor[i]);
            let coord = match (self.free.contains(&i), other.free.contains(&i)) {
                (false, false) if u == v => u,
                (false, true) if u >= v => u,
                (true, false) if v >= u => v,
                (true, true) => u.max(v),
                _ => return Ok(None),
            };
            point.push(coord);
        }
        Ok(Some(ExponentVector::new(point)))
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free: Vec<String> = self.free.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{}+N^{{{}}}", self.anchor, free.join(","))
    }
}

/// Whether the two cones share no lattice point. Decided coordinatewise.
pub fn cone_disjoint(c1: &Cone, c2: &Cone) -> Result<bool> {
    Ok(c1.intersection_witness(c2)?.is_none())
}

/// A finite sequence of cones in a common dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyDecomposition {
    dim: usize,
    cones: Vec<Cone>,
}

impl StanleyDecomposition {
    pub fn new(dim: usize, cones: Vec<Cone>) -> Result<Self> {
        for cone in &cones {
            if cone.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: cone.dim(),
                });
            }
            if let Some(&bad) = cone.free.iter().find(|&&i| i >= dim) {
                return Err(Error::DirectionOutOfRange { index: bad, dim });
            }
        }
        Ok(Self { dim, cones })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    /// Number of cones containing `alpha`.
    pub fn multiplicity(&self, alpha: &ExponentVector) -> usize {
        self.cones.iter().filter(|c| c.contains(alpha)).count()
    }
}

/// Outcome of [`validate_partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionCheck {
    Valid,
    /// A cone's anchor lies in the order ideal.
    AnchorInIdeal {
        cone: usize,
        anchor: ExponentVector,
    },
    /// Two cones share the point `witness`.
    Overlap {
        first: usize,
        second: usize,
        witness: ExponentVector,
    },
    /// The cones cover `point` `multiplicity` times, but it should be
    /// covered once if it lies outside the ideal and never otherwise.
    Coverage {
        point: ExponentVector,
        multiplicity: usize,
        in_complement: bool,
    },
}

impl PartitionCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, Self::Valid)
    }
}

impl fmt::Display for PartitionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Valid => write!(f, "valid partition"),
            Self::AnchorInIdeal { cone, anchor } => {
                write!(f, "cone {cone} has anchor {anchor} inside the order ideal")
            }
            Self::Overlap {
                first,
                second,
                witness,
            } => write!(f, "cones {first} and {second} both contain {witness}"),
            Self::Coverage {
                point,
                multiplicity,
                in_complement,
            } => write!(
                f,
                "{point} is covered {multiplicity} time(s) but lies {}",
                if *in_complement {
                    "outside the order ideal"
                } else {
                    "inside the order ideal"
                }
            ),
        }
    }
}

fn check_dims(d: &StanleyDecomposition, ideal: &OrderIdeal) -> Result<()> {
    if d.dim() == ideal.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: ideal.dim(),
            found: d.dim(),
        })
    }
}

/// Decides whether `d` partitions `N^n \ O`: anchors outside `O`, cones
/// pairwise disjoint, and coverage as the exact identity
/// `Σ_j y^{u_j} / Π_{i∈S_j} (1 − y_i) = 1 / Π_i (1 − y_i) − Σ_{α∈O} y^α`.
pub fn validate_partition(d: &StanleyDecomposition, ideal: &OrderIdeal) -> Result<PartitionCheck> {
    check_dims(d, ideal)?;
    let dim = d.dim();
    for (j, cone) in d.cones().iter().enumerate() {
        if ideal.contains(&cone.anchor) {
            return Ok(PartitionCheck::AnchorInIdeal {
                cone: j,
                anchor: cone.anchor.clone(),
            });
        }
    }
    for (j, a) in d.cones().iter().enumerate() {
        for (k, b) in d.cones().iter().enumerate().skip(j + 1) {
            if let Some(witness) = a.intersection_witness(b)? {
                return Ok(PartitionCheck::Overlap {
                    first: j,
                    second: k,
                    witness,
                });
            }
        }
    }

    let indicators: Vec<RationalGf> = d.cones().iter().map(Cone::indicator_gf).collect();
    let covered = RationalGf::sum(dim, &indicators)?;
    let orthant = RationalGf::new(Polynomial::one(dim), ExponentVector::new(vec![1; dim]))?;
    let ideal_poly = Polynomial::from_terms(
        dim,
        ideal.iter().map(|alpha| (alpha.clone(), Rational::one())),
    )?;
    let complement = orthant.add(&RationalGf::polynomial(-&ideal_poly))?;
    if covered == complement {
        return Ok(PartitionCheck::Valid);
    }

    // Past every anchor and every element of O, cone membership and
    // membership in I no longer change along any axis, so a point with the
    // wrong multiplicity exists inside this box.
    let mut reach = ExponentVector::zero(dim);
    for cone in d.cones() {
        reach = reach.join(&cone.anchor);
    }
    if let Ok(bb) = ideal.bounding_box() {
        reach = reach.join(&bb.corner);
    }
    let shape = BoxShape::new(reach.shifted(1));
    for point in shape.points() {
        let multiplicity = d.multiplicity(&point);
        let in_complement = !ideal.contains(&point);
        if multiplicity != usize::from(in_complement) {
            return Ok(PartitionCheck::Coverage {
                point,
                multiplicity,
                in_complement,
            });
        }
    }
    unreachable!("generating functions differ but no point has the wrong multiplicity")
}

/// Outcome of [`check_admissible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    /// Every free axis of every cone lies strictly beyond the bounding box,
    /// where the index is known to grow linearly.
    Proved,
    /// `ind(anchor + beta) = actual` but `ind(anchor) + |beta| = expected`.
    Falsified {
        cone: usize,
        beta: ExponentVector,
        expected: u64,
        actual: u64,
    },
    /// No counterexample within the sampled box.
    SampledOk,
}

impl fmt::Display for Admissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Proved => write!(f, "proved"),
            Self::SampledOk => write!(f, "sampled_ok"),
            Self::Falsified {
                cone,
                beta,
                expected,
                actual,
            } => write!(
                f,
                "falsified: cone {cone}, beta {beta}: index {actual}, expected {expected}"
            ),
        }
    }
}

/// Exhaustively tests `ind(u_j + β) = ind(u_j) + |β|` for every cone and
/// every `β` supported on its free axes with `u_j + β ≤ bounds`.
pub fn sample_admissibility(
    d: &StanleyDecomposition,
    ideal: &OrderIdeal,
    bounds: &ExponentVector,
) -> Result<Admissibility> {
    check_dims(d, ideal)?;
    let table = index_table(ideal, bounds)?;
    for (j, cone) in d.cones().iter().enumerate() {
        let Some(base) = table.get(&cone.anchor) else {
            continue;
        };
        let reach = (0..d.dim())
            .map(|i| {
                if cone.free.contains(&i) {
                    bounds[i] - cone.anchor[i]
                } else {
                    0
                }
            })
            .collect();
        for beta in BoxShape::new(ExponentVector::new(reach)).points() {
            let actual = table
                .get(&cone.anchor.add(&beta))
                .expect("point inside sampled box");
            let expected = base + beta.degree();
            if actual != expected {
                return Ok(Admissibility::Falsified {
                    cone: j,
                    beta,
                    expected,
                    actual,
                });
            }
        }
    }
    Ok(Admissibility::SampledOk)
}

/// Three-tier admissibility verdict. Returns [`Admissibility::Proved`] when
/// each cone's free axes satisfy `u_i > m_i` for the extreme corner `m`,
/// and otherwise falls back to [`sample_admissibility`].
pub fn check_admissible(
    d: &StanleyDecomposition,
    ideal: &OrderIdeal,
    sample_bounds: &ExponentVector,
) -> Result<Admissibility> {
    check_dims(d, ideal)?;
    let corner = ideal.bounding_box()?.corner;
    let beyond_box = d
        .cones()
        .iter()
        .all(|c| c.free.iter().all(|&i| c.anchor[i] > corner[i]));
    if beyond_box {
        return Ok(Admissibility::Proved);
    }
    sample_admissibility(d, ideal, sample_bounds)
}

/// One cone per `u ∈ container \ ideal`, free along the axes that leave
/// `container`. Cones are listed in graded-lexicographic order of anchors.
pub fn free_direction_decomposition(
    container: &OrderIdeal,
    ideal: &OrderIdeal,
) -> Result<StanleyDecomposition> {
    if container.dim() != ideal.dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.dim(),
            found: container.dim(),
        });
    }
    let cones = container
        .iter()
        .filter(|u| !ideal.contains(u))
        .map(|u| Ok(Cone::new(u.clone(), container.free_directions(u)?)))
        .collect::<Result<_>>()?;
    StanleyDecomposition::new(ideal.dim(), cones)
}

/// The decomposition over the enlarged box `B⁺ = {u ≤ m + 1}`: a cone at
/// every `u ∈ B⁺ \ O`, free exactly along the axes where `u_i = m_i + 1`.
pub fn enlarged_box_decomposition(ideal: &OrderIdeal) -> Result<StanleyDecomposition> {
    let corner = ideal.bounding_box()?.enlarged_corner();
    let enlarged = OrderIdeal::from_generators(ideal.dim(), [corner])?;
    free_direction_decomposition(&enlarged, ideal)
}

/// How an [`IndGf`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfMethod {
    /// Assembled from the enlarged-box decomposition.
    EnlargedBox,
    /// The two-dimensional four-part sum over a partition.
    Partition2d,
    /// Assembled from a caller-supplied decomposition.
    Supplied,
}

impl fmt::Display for GfMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::EnlargedBox => "box",
            Self::Partition2d => "2d",
            Self::Supplied => "supplied",
        })
    }
}

/// The index generating function `Ind_O`, with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndGf {
    pub gf: RationalGf,
    pub method: GfMethod,
    /// Number of summands (cones) it was assembled from.
    pub terms: usize,
}

/// `y^u P_{|S|}(y_S; 1,…,1; b)` embedded in `dim` variables.
fn cone_term(dim: usize, anchor: &ExponentVector, free: &[usize], b: u64) -> Result<RationalGf> {
    let p = pn_closed(&LinearWeight::unit(free.len(), rational(b as i64)));
    p.lift(dim, free)?.scale_monomial(anchor, &Rational::one())
}

/// `Σ_j y^{u_j} P_{|S_j|}(y_{S_j}; 1,…,1; ind_O(u_j))`. Correct only when
/// `d` is an admissible partition; see [`verify_ind_gf`].
pub fn assemble_ind_gf(d: &StanleyDecomposition, ideal: &OrderIdeal) -> Result<IndGf> {
    check_dims(d, ideal)?;
    ideal.require_nonempty()?;
    let terms = d
        .cones()
        .iter()
        .map(|cone| {
            let free: Vec<usize> = cone.free.iter().copied().collect();
            cone_term(
                d.dim(),
                &cone.anchor,
                &free,
                index_by_divisor(ideal, &cone.anchor)?,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IndGf {
        gf: RationalGf::sum(d.dim(), &terms)?,
        method: GfMethod::Supplied,
        terms: terms.len(),
    })
}

/// `Ind_O` from the enlarged-box decomposition, reduced.
pub fn ind_gf(ideal: &OrderIdeal) -> Result<IndGf> {
    let d = enlarged_box_decomposition(ideal)?;
    Ok(IndGf {
        method: GfMethod::EnlargedBox,
        ..assemble_ind_gf(&d, ideal)?
    })
}

/// `Ind_O` for the two-dimensional ideal of a partition `(λ_1,…,λ_m)`:
///
/// ```text
///   y1^m y2^λ1 P_2(y1,y2; 1,1; ind(m,λ1))
/// + Σ_{j<m}  y1^j y2^λ1 P_1(y2; 1; ind(j,λ1))
/// + Σ_{j<λ1} y1^m y2^j  P_1(y1; 1; ind(m,j))
/// + Σ_{a ≤ (m−1,λ1−1), a ∉ O} ind(a) y^a
/// ```
///
/// Index values are read from the dynamic-programming table.
pub fn ind_gf_2d(lambda: &[u32]) -> Result<IndGf> {
    validate_partition_shape(lambda)?;
    let ideal = OrderIdeal::from_partition(lambda)?;
    let m = lambda.len() as u32;
    let top = lambda[0];
    let table = index_table(&ideal, &ExponentVector::new(vec![m, top]))?;
    let ind = |a: u32, b: u32| {
        table
            .get(&ExponentVector::new(vec![a, b]))
            .expect("inside enlarged box")
    };
    let at = |a: u32, b: u32| ExponentVector::new(vec![a, b]);

    let mut terms = vec![cone_term(2, &at(m, top), &[0, 1], ind(m, top))?];
    for j in 0..m {
        terms.push(cone_term(2, &at(j, top), &[1], ind(j, top))?);
    }
    for j in 0..top {
        terms.push(cone_term(2, &at(m, j), &[0], ind(m, j))?);
    }
    let mut inner = Polynomial::zero(2);
    let mut singletons = 0;
    for a in 0..m {
        for b in 0..top {
            if !ideal.contains(&at(a, b)) {
                inner.add_term(at(a, b), rational(ind(a, b) as i64));
                singletons += 1;
            }
        }
    }
    terms.push(RationalGf::polynomial(inner));
    Ok(IndGf {
        gf: RationalGf::sum(2, &terms)?,
        method: GfMethod::Partition2d,
        terms: terms.len() - 1 + singletons,
    })
}

/// Outcome of [`verify_ind_gf`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Agrees,
    /// First point (in offset order) where the series coefficient differs
    /// from the index.
    Mismatch {
        point: ExponentVector,
        index: u64,
        coefficient: Rational,
    },
}

impl Verification {
    pub fn agrees(&self) -> bool {
        matches!(self, Self::Agrees)
    }
}

/// Compares the Taylor coefficients of `g` with the index table of `O`
/// at every point of the box.
pub fn verify_ind_gf(
    g: &RationalGf,
    ideal: &OrderIdeal,
    bounds: &ExponentVector,
) -> Result<Verification> {
    let series = g.expand(bounds)?;
    let table = index_table(ideal, bounds)?;
    for ((point, coefficient), &index) in series.iter().zip(table.values()) {
        if *coefficient != rational(index as i64) {
            return Ok(Verification::Mismatch {
                point,
                index,
                coefficient: coefficient.clone(),
            });
        }
    }
    Ok(Verification::Agrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(c: &[u32]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    fn cone(anchor: &[u32], free: &[usize]) -> Cone {
        Cone::new(ev(anchor), free.iter().copied())
    }

    fn example_ideal() -> OrderIdeal {
        OrderIdeal::from_generators(2, [ev(&[2, 0]), ev(&[0, 2])]).unwrap()
    }

    /// The "economic" decomposition: x2^3 T{1,2}, x1x2^2 T{1}, x1x2,
    /// x1^2x2 T{1}, x1^3 T{1}.
    fn economic() -> StanleyDecomposition {
        StanleyDecomposition::new(
            2,
            vec![
                cone(&[0, 3], &[0, 1]),
                cone(&[1, 2], &[0]),
                cone(&[1, 1], &[]),
                cone(&[2, 1], &[0]),
                cone(&[3, 0], &[0]),
            ],
        )
        .unwrap()
    }

    /// x2^3 T{1,2}, x1x2^2 T{1}, x1x2 T{1}, x1^3 T{1}: a partition, but
    /// the index stalls along x1x2 T{1}.
    fn inadmissible() -> StanleyDecomposition {
        StanleyDecomposition::new(
            2,
            vec![
                cone(&[0, 3], &[0, 1]),
                cone(&[1, 2], &[0]),
                cone(&[1, 1], &[0]),
                cone(&[3, 0], &[0]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn disjointness_examples() {
        assert!(cone_disjoint(&cone(&[3, 0], &[0]), &cone(&[0, 3], &[1])).unwrap());
        let a = cone(&[3, 2], &[0, 1]);
        let b = cone(&[2, 3], &[0, 1]);
        assert!(!cone_disjoint(&a, &b).unwrap());
        assert_eq!(a.intersection_witness(&b).unwrap(), Some(ev(&[3, 3])));
        assert!(!cone_disjoint(&a, &a).unwrap());
        assert!(cone_disjoint(&a, &cone(&[1], &[0])).is_err());
    }

    #[test]
    fn economic_decomposition_is_partition() {
        assert_eq!(
            validate_partition(&economic(), &example_ideal()).unwrap(),
            PartitionCheck::Valid
        );
    }

    #[test]
    fn missing_singleton_is_uncovered() {
        let mut cones = economic().cones().to_vec();
        cones.retain(|c| c.anchor != ev(&[1, 1]));
        let d = StanleyDecomposition::new(2, cones).unwrap();
        assert_eq!(
            validate_partition(&d, &example_ideal()).unwrap(),
            PartitionCheck::Coverage {
                point: ev(&[1, 1]),
                multiplicity: 0,
                in_complement: true,
            }
        );
    }

    #[test]
    fn duplicate_cone_overlaps() {
        let mut cones = economic().cones().to_vec();
        cones.push(cones[1].clone());
        let d = StanleyDecomposition::new(2, cones).unwrap();
        assert!(matches!(
            validate_partition(&d, &example_ideal()).unwrap(),
            PartitionCheck::Overlap {
                first: 1,
                second: 5,
                ..
            }
        ));
    }

    #[test]
    fn anchor_inside_ideal_rejected() {
        let d = StanleyDecomposition::new(2, vec![cone(&[0, 1], &[])]).unwrap();
        assert_eq!(
            validate_partition(&d, &example_ideal()).unwrap(),
            PartitionCheck::AnchorInIdeal {
                cone: 0,
                anchor: ev(&[0, 1])
            }
        );
    }

    #[test]
    fn decomposition_construction_checks() {
        assert!(matches!(
            StanleyDecomposition::new(2, vec![cone(&[1, 1], &[2])]),
            Err(Error::DirectionOutOfRange { index: 2, dim: 2 })
        ));
        assert!(StanleyDecomposition::new(2, vec![cone(&[1], &[])]).is_err());
    }

    #[test]
    fn enlarged_box_for_example() {
        let d = enlarged_box_decomposition(&example_ideal()).unwrap();
        assert_eq!(d.len(), 11);
        let expected = [
            cone(&[3, 3], &[0, 1]),
            cone(&[3, 0], &[0]),
            cone(&[3, 1], &[0]),
            cone(&[3, 2], &[0]),
            cone(&[0, 3], &[1]),
            cone(&[1, 3], &[1]),
            cone(&[2, 3], &[1]),
            cone(&[1, 1], &[]),
            cone(&[2, 1], &[]),
            cone(&[1, 2], &[]),
            cone(&[2, 2], &[]),
        ];
        for c in &expected {
            assert!(d.cones().contains(c), "missing {c}");
        }
        assert!(validate_partition(&d, &example_ideal()).unwrap().is_valid());
    }

    #[test]
    fn enlarged_box_small_cases() {
        let origin = OrderIdeal::from_generators(2, [ev(&[0, 0])]).unwrap();
        let d = enlarged_box_decomposition(&origin).unwrap();
        assert_eq!(
            d.cones(),
            &[
                cone(&[0, 1], &[1]),
                cone(&[1, 0], &[0]),
                cone(&[1, 1], &[0, 1])
            ]
        );

        let line = OrderIdeal::from_generators(1, [ev(&[3])]).unwrap();
        assert_eq!(
            enlarged_box_decomposition(&line).unwrap().cones(),
            &[cone(&[4], &[0])]
        );

        assert_eq!(
            enlarged_box_decomposition(&OrderIdeal::empty(2).unwrap()),
            Err(Error::EmptyIdeal)
        );
    }

    #[test]
    fn admissibility_verdicts() {
        let o = example_ideal();
        let b = ev(&[8, 8]);
        let boxed = enlarged_box_decomposition(&o).unwrap();
        assert_eq!(
            check_admissible(&boxed, &o, &b).unwrap(),
            Admissibility::Proved
        );
        assert_eq!(
            sample_admissibility(&boxed, &o, &b).unwrap(),
            Admissibility::SampledOk
        );

        assert_eq!(
            check_admissible(&economic(), &o, &b).unwrap(),
            Admissibility::SampledOk
        );

        assert_eq!(
            check_admissible(&inadmissible(), &o, &b).unwrap(),
            Admissibility::Falsified {
                cone: 2,
                beta: ev(&[1, 0]),
                expected: 2,
                actual: 1,
            }
        );
    }

    #[test]
    fn singletons_are_vacuously_admissible() {
        let o = example_ideal();
        let d = StanleyDecomposition::new(
            2,
            vec![cone(&[1, 1], &[]), cone(&[2, 1], &[]), cone(&[3, 0], &[])],
        )
        .unwrap();
        // no cone has a free axis, so the sufficient condition holds trivially
        assert_eq!(
            check_admissible(&d, &o, &ev(&[4, 4])).unwrap(),
            Admissibility::Proved
        );
        assert_eq!(
            sample_admissibility(&d, &o, &ev(&[4, 4])).unwrap(),
            Admissibility::SampledOk
        );
    }

    #[test]
    fn line_ind_gf() {
        // ind(x^k) = k, so Ind = y / (1 − y)^2
        let o = OrderIdeal::from_generators(1, [ev(&[0])]).unwrap();
        let g = ind_gf(&o).unwrap();
        let expected =
            RationalGf::new(Polynomial::monomial(ev(&[1]), Rational::one()), ev(&[2])).unwrap();
        assert_eq!(g.gf, expected);
        assert_eq!(g.method, GfMethod::EnlargedBox);
    }

    #[test]
    fn origin_ind_gf_is_total_degree() {
        let o = OrderIdeal::from_generators(2, [ev(&[0, 0])]).unwrap();
        let g = ind_gf(&o).unwrap();
        assert_eq!(g.gf, pn_closed(&LinearWeight::unit(2, rational(0))));
        assert_eq!(g.terms, 3);
    }

    #[test]
    fn three_element_line() {
        let o = OrderIdeal::from_generators(1, [ev(&[2])]).unwrap();
        let g = ind_gf(&o).unwrap();
        let series = g.gf.expand(&ev(&[6])).unwrap();
        let expected: Vec<Rational> = [0, 0, 0, 1, 2, 3, 4].iter().map(|&k| rational(k)).collect();
        assert_eq!(series.coeffs(), &expected[..]);
    }

    #[test]
    fn two_dimensional_route_matches_box_route() {
        for lambda in [vec![3, 1, 1], vec![1], vec![2, 2], vec![4, 2, 2, 1]] {
            let o = OrderIdeal::from_partition(&lambda).unwrap();
            assert_eq!(
                ind_gf_2d(&lambda).unwrap().gf,
                ind_gf(&o).unwrap().gf,
                "{lambda:?}"
            );
        }
        assert!(ind_gf_2d(&[1, 3]).is_err());
    }

    #[test]
    fn verification_detects_perturbation() {
        let o = example_ideal();
        let g = ind_gf(&o).unwrap().gf;
        assert!(verify_ind_gf(&g, &o, &ev(&[7, 7])).unwrap().agrees());

        let (exp, c) = g
            .numerator()
            .terms()
            .next()
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut perturbed = g.numerator().clone();
        perturbed.add_term(exp, c / rational(7));
        let bad = RationalGf::new(perturbed, g.denominator().clone()).unwrap();
        assert!(matches!(
            verify_ind_gf(&bad, &o, &ev(&[7, 7])).unwrap(),
            Verification::Mismatch { .. }
        ));
    }

    #[test]
    fn closed_border_quadrants_double_count() {
        let o = example_ideal();
        let closed: Vec<ExponentVector> = o
            .iter()
            .cloned()
            .chain(crate::index::border(&o).unwrap())
            .collect();
        let closed = OrderIdeal::validate(2, closed).unwrap();
        let d = free_direction_decomposition(&closed, &o).unwrap();
        assert!(matches!(
            validate_partition(&d, &o).unwrap(),
            PartitionCheck::Overlap { .. }
        ));
    }
}
