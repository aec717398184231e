//! Multi-index combinatorics and real polynomial algebra over the
//! probability simplex.
//!
//! Polynomials live in two forms. A [`Polynomial`] is a plain sparse sum
//! of monomials in the simplex coordinates. A [`SimplexPolynomial`] is
//! homogeneous of a fixed degree `r` over all `k` coordinates, with the
//! last coordinate playing the role of the affine slack `1 - sum of the
//! others`. Homogenization multiplies every term by the appropriate power
//! of the coordinate sum, which is identically one on the simplex, so the
//! two forms agree at every simplex point while the homogeneous one turns
//! nonnegativity certificates into a pure sign check on coefficients.

mod error;
mod multi_index;
mod parser;
mod point;
mod polynomial;

pub use error::PolyError;
pub use multi_index::{enumerate_multiindices, multiindex_count, MultiIndex};
pub use parser::parse_polynomial;
pub use point::SimplexPoint;
pub use polynomial::{Polynomial, SimplexPolynomial};
