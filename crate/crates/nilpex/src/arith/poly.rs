//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::scalar::Scalar;
use super::{rat_gcd, Rational};
use crate::{Error, Result};

/// A polynomial stored as a map from monomial to nonzero coefficient.
///
/// The representation is canonical: equal polynomials compare equal with
/// `==`, and `a - a` is exactly the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    /// The zero polynomial.
    #[must_use]
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    #[must_use]
    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// A constant polynomial.
    #[must_use]
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    /// The variable `name` as a degree-one polynomial.
    #[must_use]
    pub fn var(name: &str) -> Self {
        Polynomial::from_terms([(Monomial::var(name), Rational::one())])
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in pairs {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// True for the zero polynomial.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial has no variables (including zero).
    #[must_use]
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// True for the constant polynomial `1`.
    #[must_use]
    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial, `None` otherwise.
    #[must_use]
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Number of stored terms.
    #[must_use]
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(monomial, coefficient)` pairs in ascending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Total degree (0 for the zero polynomial).
    #[must_use]
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// All variables appearing with nonzero exponent.
    #[must_use]
    pub fn vars(&self) -> BTreeSet<String> {
        let mut vs = BTreeSet::new();
        for m in self.terms.keys() {
            vs.extend(m.vars().map(str::to_string));
        }
        vs
    }

    /// Leading `(monomial, coefficient)` under `order`; `None` when zero.
    #[must_use]
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(ma, _), (mb, _)| order.cmp(ma, mb))
    }

    /// Coefficient of `m` (zero when absent).
    #[must_use]
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplies by a rational constant.
    #[must_use]
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by a single term `c*m`.
    #[must_use]
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    /// Raises to a nonnegative integer power by repeated squaring.
    #[must_use]
    pub fn pow(&self, e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Positive gcd of all coefficients (1 for the zero polynomial).
    #[must_use]
    pub fn content(&self) -> Rational {
        let mut g = Rational::zero();
        for c in self.terms.values() {
            g = rat_gcd(&g, c);
        }
        if g.is_zero() {
            Rational::one()
        } else {
            g
        }
    }

    /// The common monomial factor of all terms (1 for the zero polynomial).
    #[must_use]
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for m in it {
            g = g.gcd(m);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every term by a monomial that must divide all of them.
    pub fn div_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let mut terms = BTreeMap::new();
        for (mm, c) in &self.terms {
            let q = mm
                .try_div(m)
                .ok_or_else(|| Error::shape(format!("{m} does not divide term {mm}")))?;
            terms.insert(q, c.clone());
        }
        Ok(Polynomial { terms })
    }

    /// Divides by content and flips sign so the lex-leading coefficient is
    /// positive; canonical representative of the polynomial up to a nonzero
    /// rational factor.
    #[must_use]
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut c = self.content();
        let (_, lead) = self.leading(MonomialOrder::Lex).unwrap();
        if lead.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Divides by the leading coefficient under `order` (panics on zero).
    #[must_use]
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        let (_, c) = self.leading(order).expect("monic of zero polynomial");
        let inv = c.clone().recip();
        self.scale(&inv)
    }

    /// Exact evaluation at a full variable assignment.
    pub fn evaluate(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (var, e) in m.iter() {
                let x = assignment
                    .get(var)
                    .ok_or_else(|| Error::shape(format!("no value assigned to variable {var}")))?;
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitutes scalars for variables; unmapped variables stay symbolic.
    pub fn substitute(&self, map: &BTreeMap<String, Scalar>) -> Result<Scalar> {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = Scalar::from_rational(c.clone());
            for (var, e) in m.iter() {
                let x = match map.get(var) {
                    Some(s) => s.clone(),
                    None => Scalar::var(var),
                };
                v = &v * &x.pow(i64::from(e))?;
            }
            total = &total + &v;
        }
        Ok(total)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Terms print most significant first under lex.
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.reverse();
        for (idx, (m, c)) in terms.iter().enumerate() {
            let mag = c.abs();
            let body = if m.is_one() {
                format!("{mag}")
            } else if mag.is_one() {
                format!("{m}")
            } else {
                format!("{mag}*{m}")
            };
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else if c.is_negative() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// Multivariate division with remainder: `f = Σ qᵢ·dᵢ + r` where no monomial
/// of `r` is divisible by any divisor's leading monomial under `order`.
pub fn poly_divmod(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    if divisors.iter().any(Polynomial::is_zero) {
        return Err(Error::DivisionByZero);
    }
    let leads: Vec<(&Monomial, &Rational)> = divisors
        .iter()
        .map(|d| d.leading(order).expect("nonzero divisor"))
        .collect();
    let mut quotients = vec![Polynomial::zero(); divisors.len()];
    let mut remainder = Polynomial::zero();
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading(order) {
        let lm = lm.clone();
        let lc = lc.clone();
        let mut divided = false;
        for (i, (dm, dc)) in leads.iter().enumerate() {
            if let Some(q) = lm.try_div(dm) {
                let coef = &lc / *dc;
                quotients[i].add_term(q.clone(), coef.clone());
                p = &p - &divisors[i].mul_term(&q, &coef);
                divided = true;
                break;
            }
        }
        if !divided {
            remainder.add_term(lm.clone(), lc.clone());
            p.terms.remove(&lm);
        }
    }
    Ok((quotients, remainder))
}
