//! Exact computation of borders, the index function and the index
//! generating function of finite monomial order ideals.
//!
//! For a finite order ideal `O ⊂ N^n`, the index `ind_O(α)` is the layer of
//! the iterated border containing `α`. Its generating function
//! `Ind_O(y) = Σ_α ind_O(α) y^α` is rational with denominator dividing
//! `Π (1 − y_i)^2`; [`ind_gf`] constructs it from an admissible cone
//! decomposition of the complement and [`verify_ind_gf`] checks it against
//! the index computed directly.
//!
//! All arithmetic is exact (arbitrary-precision rationals).

pub mod decomposition;
pub mod error;
pub mod gf;
pub mod index;
pub mod json;
pub mod lattice;
pub mod pn;
pub mod poly;
pub mod random;

pub use decomposition::{
    assemble_ind_gf, check_admissible, cone_disjoint, enlarged_box_decomposition,
    free_direction_decomposition, ind_gf, ind_gf_2d, sample_admissibility, validate_partition,
    verify_ind_gf, Admissibility, Cone, GfMethod, IndGf, PartitionCheck, StanleyDecomposition,
    Verification,
};
pub use error::{Error, Result};
pub use gf::{RationalGf, SeriesTable};
pub use index::{
    border, higher_border, higher_border_by_degree, index_by_divisor, index_table, IndexTable,
};
pub use lattice::{BoundingBox, BoxShape, ExponentVector, OrderIdeal};
pub use pn::{pn_closed, pn_derivative_oracle, pn_series_oracle, LinearWeight};
pub use poly::{format_rational, parse_rational, Polynomial, Rational};
