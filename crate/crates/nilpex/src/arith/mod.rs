//! Exact scalar arithmetic: arbitrary-precision rationals, sparse
//! multivariate polynomials, and the fraction field built from them.
//!
//! Everything downstream (linear algebra, cohomology, Gröbner bases) works
//! over [`Scalar`], the field of rational functions in named parameters with
//! rational coefficients. A `Scalar` whose numerator and denominator are
//! constant behaves exactly like a [`Rational`].
//!
//! # Examples
//!
//! ```
//! use nilpex::arith::{parse_polynomial, parse_scalar};
//!
//! let p = parse_polynomial("3*l11^2*l21 - 2").unwrap();
//! assert_eq!(p.to_string(), "3*l11^2*l21 - 2");
//!
//! let s = parse_scalar("(l + 1)/(l - 1)").unwrap();
//! let back = &s * &parse_scalar("l - 1").unwrap();
//! assert_eq!(back.to_string(), "l + 1");
//! ```

mod monomial;
mod parse;
mod poly;
mod scalar;

pub use monomial::{Monomial, MonomialOrder};
pub use poly::{poly_divmod, Polynomial};
pub use scalar::Scalar;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational number. Always stored reduced with a
/// positive denominator (guaranteed by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Greatest common divisor of two rationals: the largest rational dividing
/// both with integer quotient. `gcd(a/b, c/d) = gcd(a,c)/lcm(b,d)` on
/// reduced fractions; zero arguments are absorbed.
pub(crate) fn rat_gcd(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rational::new(num, den)
}

/// Parses a rational literal such as `3`, `-3/4`, or `(1/2)`.
pub fn parse_rational(text: &str) -> crate::Result<Rational> {
    let s = parse::parse_scalar(text)?;
    s.as_rational()
        .ok_or_else(|| crate::Error::parse(format!("`{text}` is not a rational constant")))
}

/// Parses a scalar expression such as `3*l11^2*l21 - 2` or `(l+1)/(l-1)`.
pub fn parse_scalar(text: &str) -> crate::Result<Scalar> {
    parse::parse_scalar(text)
}

/// Parses a polynomial expression; rejects inputs with a nonconstant
/// denominator after normalization.
pub fn parse_polynomial(text: &str) -> crate::Result<Polynomial> {
    let s = parse::parse_scalar(text)?;
    s.into_polynomial()
        .ok_or_else(|| crate::Error::parse(format!("`{text}` is not polynomial")))
}
