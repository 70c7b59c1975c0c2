//! Monomials over named variables, plus the two monomial orders used by the
//! division and Gröbner machinery.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A power product of named variables, e.g. `x^2*y`.
///
/// Exponents are strictly positive; a variable with exponent zero is simply
/// absent, and the empty product is the monomial `1`. Variable significance
/// is alphabetical: the alphabetically earliest name is the most significant
/// (so `x > y > z` in lex comparisons).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: BTreeMap<String, u32>,
}

impl Monomial {
    /// The monomial `1`.
    #[must_use]
    pub fn one() -> Self {
        Monomial {
            exps: BTreeMap::new(),
        }
    }

    /// A single variable to the first power.
    #[must_use]
    pub fn var(name: &str) -> Self {
        Monomial::from_exps([(name.to_string(), 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs; zero exponents
    /// are dropped.
    pub fn from_exps(pairs: impl IntoIterator<Item = (String, u32)>) -> Self {
        let exps = pairs.into_iter().filter(|(_, e)| *e > 0).collect();
        Monomial { exps }
    }

    /// True for the monomial `1`.
    #[must_use]
    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Total degree: the sum of all exponents.
    #[must_use]
    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    /// Exponent of `var` (zero when absent).
    #[must_use]
    pub fn exp(&self, var: &str) -> u32 {
        self.exps.get(var).copied().unwrap_or(0)
    }

    /// Variables with nonzero exponent, alphabetically ascending.
    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.exps.keys().map(String::as_str)
    }

    /// Iterates `(variable, exponent)` pairs, alphabetically ascending.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.exps.iter().map(|(v, e)| (v.as_str(), *e))
    }

    /// Product of two monomials (exponents add).
    #[must_use]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            *exps.entry(v.clone()).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// True when `self` divides `other` variable-wise.
    #[must_use]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, e)| other.exp(v) >= *e)
    }

    /// Exact quotient `self / other`, or `None` when not divisible.
    #[must_use]
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .map(|(v, e)| (v.clone(), e - other.exp(v)))
            .filter(|(_, e)| *e > 0)
            .collect();
        Some(Monomial { exps })
    }

    /// Least common multiple (variable-wise max of exponents).
    #[must_use]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            let slot = exps.entry(v.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        Monomial { exps }
    }

    /// True when the two monomials share no variable (the product-criterion
    /// test in Buchberger's algorithm).
    #[must_use]
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.keys().all(|v| !other.exps.contains_key(v))
    }

    /// Variable-wise minimum; the largest monomial dividing both.
    #[must_use]
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .filter_map(|(v, e)| {
                let m = (*e).min(other.exp(v));
                (m > 0).then(|| (v.clone(), m))
            })
            .collect();
        Monomial { exps }
    }
}

/// Orders Monomial by lexicographic comparison so monomials can key sorted
/// maps; ordered queries under a chosen [`MonomialOrder`] go through
/// [`MonomialOrder::cmp`].
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        MonomialOrder::Lex.cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Admissible monomial orders. `Lex` is used for triangular-looking output
/// and display; `Grevlex` is the default for Gröbner bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Pure lexicographic: compare exponents variable by variable, most
    /// significant (alphabetically earliest) first.
    Lex,
    /// Graded reverse lexicographic: total degree first; ties broken by the
    /// smaller exponent on the least significant variable winning.
    Grevlex,
}

impl MonomialOrder {
    /// Compares two monomials under this order.
    #[must_use]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::Grevlex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => revlex_tiebreak(a, b),
                ord => ord,
            },
        }
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let mut ia = a.exps.iter().peekable();
    let mut ib = b.exps.iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                // The alphabetically earlier variable is more significant; the
                // monomial that carries it at a positive power is larger.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(eb);
                    }
                    ia.next();
                    ib.next();
                }
            },
        }
    }
}

fn revlex_tiebreak(a: &Monomial, b: &Monomial) -> Ordering {
    // Walk variables from least significant (alphabetically last) upward;
    // at the first difference, the smaller exponent belongs to the larger
    // monomial.
    let mut ia = a.exps.iter().rev().peekable();
    let mut ib = b.exps.iter().rev().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => return Ordering::Equal,
            // `a` still has trailing (least significant) variables: a is smaller.
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                // The later name is less significant; whoever has it loses.
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(ea);
                    }
                    ia.next();
                    ib.next();
                }
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(&str, u32)]) -> Monomial {
        Monomial::from_exps(pairs.iter().map(|(v, e)| (v.to_string(), *e)))
    }

    #[test]
    fn construction_drops_zero_exponents() {
        assert!(m(&[("x", 0)]).is_one());
        assert_eq!(m(&[("x", 2), ("y", 0)]).degree(), 2);
    }

    #[test]
    fn mul_div_lcm() {
        let xy = m(&[("x", 1), ("y", 1)]);
        let x2 = m(&[("x", 2)]);
        assert_eq!(xy.mul(&x2), m(&[("x", 3), ("y", 1)]));
        assert_eq!(xy.mul(&x2).try_div(&xy), Some(x2.clone()));
        assert_eq!(x2.try_div(&xy), None);
        assert_eq!(x2.lcm(&xy), m(&[("x", 2), ("y", 1)]));
        assert!(m(&[("x", 1)]).coprime(&m(&[("y", 3)])));
    }

    #[test]
    fn lex_order_prefers_earlier_variables() {
        let x = m(&[("x", 1)]);
        let y2 = m(&[("y", 2)]);
        assert_eq!(MonomialOrder::Lex.cmp(&x, &y2), Ordering::Greater);
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[("x", 1), ("y", 1)]), &x),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_grades_then_breaks_ties() {
        let x2y = m(&[("x", 2), ("y", 1)]);
        let xy2 = m(&[("x", 1), ("y", 2)]);
        let z3 = m(&[("z", 3)]);
        assert_eq!(MonomialOrder::Grevlex.cmp(&x2y, &xy2), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&xy2, &z3), Ordering::Greater);
        assert_eq!(
            MonomialOrder::Grevlex.cmp(&m(&[("x", 1)]), &m(&[("y", 2)])),
            Ordering::Less
        );
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(m(&[("x", 2), ("y", 1)]).to_string(), "x^2*y");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
