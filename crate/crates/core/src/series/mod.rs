//! Exact truncated power series in `x` over sparse rational polynomials in
//! `p`, `q`, `v`, with builders for the generating functions of Motzkin
//! polyominoes and checks against enumeration.

pub mod brute;
pub mod gf;
pub mod poly;
pub mod trunc;

pub use brute::{brute_gf, brute_interior_gf, check_functional_equation, FunctionalEquation, ResidualReport};
pub use gf::SeriesName;
pub use poly::{Caps, Monomial, SparsePoly, Var};
pub use trunc::{SeriesJson, Subst, TruncSeries};
