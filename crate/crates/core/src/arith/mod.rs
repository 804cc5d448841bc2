//! Exact rational scalars, dense univariate polynomials over Q and over small
//! prime fields, resultants, and factorization over Q.

mod factor;
mod hensel;
pub mod modp;
mod poly;
mod resultant;
pub mod text;

pub use factor::{factor_over_q, is_irreducible, rational_roots, squarefree_decomposition, squarefree_part, Factorization};
pub use hensel::hensel_sqrt;
pub use modp::PrimePoly;
pub use poly::{poly_ext_gcd, poly_gcd, poly_inverse_mod, UniPoly};
pub use resultant::{interpolate, param_resultant, resultant};

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The nonnegative rational square root, when it exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    use num_traits::Signed;
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}
