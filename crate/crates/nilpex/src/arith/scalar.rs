//! The scalar field: rational functions in named parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::MonomialOrder;
use super::poly::{poly_divmod, Polynomial};
use super::Rational;
use crate::{Error, Result};

/// An element of the fraction field of multivariate polynomials over ℚ.
///
/// Invariants: the denominator is never the zero polynomial, and after
/// normalization it is monic under lex (so a constant denominator is
/// exactly `1`, and a `Scalar` with constant numerator behaves as a plain
/// rational). Reduction is lazy — common monomial factors, rational
/// content, and univariate gcds are divided out where cheap — while
/// equality is always decided by cross-multiplication, so it never depends
/// on how far a value happens to be reduced.
#[derive(Clone, Debug)]
pub struct Scalar {
    num: Polynomial,
    den: Polynomial,
}

impl Scalar {
    /// Builds `num/den`; fails when `den` is identically zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Scalar {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar {
                num,
                den: Polynomial::one(),
            };
        }
        let mut num = num;
        let mut den = den;
        if den.as_constant() != Some(Rational::one()) {
            // Common monomial factor.
            let g = num.monomial_content().gcd(&den.monomial_content());
            if !g.is_one() {
                num = num.div_monomial(&g).expect("common monomial factor");
                den = den.div_monomial(&g).expect("common monomial factor");
            }
            // Univariate gcd when everything lives in one variable.
            if !den.is_constant() {
                let mut vars = num.vars();
                vars.extend(den.vars());
                if vars.len() == 1 {
                    let g = univariate_gcd(&num, &den);
                    if g.degree() > 0 {
                        num = exact_div(&num, &g);
                        den = exact_div(&den, &g);
                    }
                }
            }
            // Make the denominator monic; a constant denominator becomes 1.
            let (_, lc) = den
                .leading(MonomialOrder::Lex)
                .expect("nonzero denominator");
            let inv = lc.clone().recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { num, den }
    }

    /// The zero scalar.
    #[must_use]
    pub fn zero() -> Scalar {
        Scalar {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    /// The unit scalar.
    #[must_use]
    pub fn one() -> Scalar {
        Scalar {
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }

    /// The integer scalar `n`.
    #[must_use]
    pub fn int(n: i64) -> Scalar {
        Scalar::from_rational(super::rat_int(n))
    }

    /// Embeds a rational constant.
    #[must_use]
    pub fn from_rational(c: Rational) -> Scalar {
        Scalar {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    /// Embeds a polynomial.
    #[must_use]
    pub fn from_poly(p: Polynomial) -> Scalar {
        Scalar {
            num: p,
            den: Polynomial::one(),
        }
    }

    /// The variable `name` as a scalar.
    #[must_use]
    pub fn var(name: &str) -> Scalar {
        Scalar::from_poly(Polynomial::var(name))
    }

    /// Numerator polynomial.
    #[must_use]
    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    /// Denominator polynomial (monic, never zero).
    #[must_use]
    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    /// True for the zero scalar.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when numerator and denominator are both constant.
    #[must_use]
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The rational value of a constant scalar, `None` otherwise.
    #[must_use]
    pub fn as_rational(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// The underlying polynomial when the denominator is 1.
    #[must_use]
    pub fn into_polynomial(self) -> Option<Polynomial> {
        if self.den.as_constant() == Some(Rational::one()) {
            Some(self.num)
        } else {
            None
        }
    }

    /// All variables in numerator or denominator.
    #[must_use]
    pub fn vars(&self) -> std::collections::BTreeSet<String> {
        let mut vs = self.num.vars();
        vs.extend(self.den.vars());
        vs
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    /// Field division; fails when `rhs` is zero.
    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inverse()?)
    }

    /// Integer power; negative exponents invert first (failing on zero).
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let e = u32::try_from(e).map_err(|_| Error::shape("exponent too large"))?;
        Ok(Scalar {
            num: self.num.pow(e),
            den: self.den.pow(e),
        })
    }

    /// Multiplies by a rational constant.
    #[must_use]
    pub fn scale(&self, c: &Rational) -> Scalar {
        Scalar::normalized(self.num.scale(c), self.den.clone())
    }

    /// Exact evaluation; fails when the denominator vanishes at the
    /// assignment (a case split) or a variable is unassigned.
    pub fn evaluate(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        let d = self.den.evaluate(assignment)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.evaluate(assignment)? / d)
    }

    /// Substitutes scalars for variables in both numerator and denominator;
    /// fails if the substituted denominator collapses to zero.
    pub fn substitute(&self, map: &BTreeMap<String, Scalar>) -> Result<Scalar> {
        let n = self.num.substitute(map)?;
        let d = self.den.substitute(map)?;
        n.div(&d)
    }
}

fn exact_div(p: &Polynomial, d: &Polynomial) -> Polynomial {
    let (q, r) =
        poly_divmod(p, std::slice::from_ref(d), MonomialOrder::Lex).expect("nonzero divisor");
    debug_assert!(r.is_zero(), "inexact division in scalar reduction");
    q.into_iter().next().unwrap()
}

fn univariate_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) =
            poly_divmod(&a, std::slice::from_ref(&b), MonomialOrder::Lex).expect("nonzero divisor");
        a = b;
        b = if r.is_zero() {
            r
        } else {
            r.monic(MonomialOrder::Lex)
        };
    }
    if a.is_zero() {
        a
    } else {
        a.monic(MonomialOrder::Lex)
    }
}

impl PartialEq for Scalar {
    /// Exact equality by cross-multiplication; independent of reduction.
    fn eq(&self, other: &Scalar) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        Scalar::normalized(num, &self.den * &rhs.den)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant() == Some(Rational::one()) {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.term_count() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        // `*` and `/` share precedence and associate left, so a denominator
        // containing a product must be parenthesized; `^` binds tighter and
        // is safe.
        let den = self.den.to_string();
        let den = if self.den.term_count() > 1 || den.contains('*') {
            format!("({den})")
        } else {
            den
        };
        write!(f, "{num}/{den}")
    }
}
