//! Rigorous numerics for the factorial correction term.
//!
//! Everything here is exact: rationals are arbitrary precision and kept in
//! lowest terms, polynomials and rational functions are normalized, and real
//! constants are only ever handled as closed intervals with rational
//! endpoints that certifiably contain them. On top of that substrate the
//! crate verifies a family of algebraic identities, computes certified
//! enclosures of the correction term `theta(n)` defined by
//! `n! = sqrt(pi) (n/e)^n (8n^3 + 4n^2 + n + theta(n)/30)^(1/6)`,
//! checks inequalities, monotonicity and concavity over ranges, and produces
//! positivity certificates for integer polynomials by shifted synthetic
//! division.

pub mod certify;
pub mod constants;
pub mod identities;
pub mod interval;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod theta;




pub use certify::{Certificate, PositivityOutcome};
pub use constants::Precision;
pub use identities::{IdentityId, IdentityReport};
pub use interval::Interval;
pub use poly::Poly;
pub use rat::{BigRat, Round};
pub use ratfunc::RatFunc;
pub use theta::{Decision, SignDecision, ThetaRecord};
