//! Algebras presented by structure constants, and the operations the
//! classification pipeline needs from them: products of general elements,
//! identity checking, annihilators, and nilpotency.
//!
//! # Examples
//!
//! ```
//! use nilpex::algebra::Algebra;
//!
//! let a = Algebra::parse(
//!     "[algebra]\n\
//!      name = \"M3_01\"\n\
//!      dim = 3\n\
//!      \n\
//!      [product]\n\
//!      e1*e1 = e2\n\
//!      e1*e2 = e3\n\
//!      e2*e1 = e3\n",
//! )
//! .unwrap();
//!
//! let nil = a.is_nilpotent().unwrap();
//! assert!(nil.nilpotent);
//! assert_eq!(nil.index, Some(4));
//!
//! let (ann, _) = a.compute_annihilator();
//! assert_eq!(ann.dim(), 1); // Ann(A) = ⟨e3⟩
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::arith::{parse_scalar, Polynomial, Scalar};
use crate::identity::{expand_plain, index_tuples, Identity};
use crate::linalg::{Matrix, Subspace};
use crate::render::linear_combination;
use crate::{Error, Result};

/// A finite-dimensional algebra over the scalar field, given by structure
/// constants `c_{ij}^k` with `e_i · e_j = Σ_k c_{ij}^k e_k`.
///
/// Indices are 0-based throughout the API; the textual format and all
/// rendered output use the 1-based names `e1, e2, …`.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    /// Display name.
    pub name: String,
    /// Dimension `n`.
    pub dim: usize,
    /// Parameter names appearing in the structure constants.
    pub params: Vec<String>,
    sc: Vec<Scalar>,
}

impl Algebra {
    /// Builds an algebra from a full structure-constant vector of length
    /// `dim³`, indexed by `(i·dim + j)·dim + k`.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        params: Vec<String>,
        sc: Vec<Scalar>,
    ) -> Result<Algebra> {
        if dim == 0 {
            return Err(Error::shape("algebra dimension must be positive"));
        }
        if sc.len() != dim * dim * dim {
            return Err(Error::shape(format!(
                "expected {} structure constants, got {}",
                dim * dim * dim,
                sc.len()
            )));
        }
        let alg = Algebra {
            name: name.into(),
            dim,
            params,
            sc,
        };
        alg.validate_params()?;
        Ok(alg)
    }

    /// Builds an algebra from a sparse list of `(i, j, k, c)` entries;
    /// unlisted entries are zero.
    pub fn from_table(
        name: impl Into<String>,
        dim: usize,
        params: Vec<String>,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Algebra> {
        let mut sc = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::shape(format!(
                    "structure constant index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            sc[(i * dim + j) * dim + k] = c.clone();
        }
        Algebra::new(name, dim, params, sc)
    }

    fn validate_params(&self) -> Result<()> {
        for p in &self.params {
            if basis_index(p).is_some() {
                return Err(Error::parse(format!(
                    "parameter name `{p}` clashes with a basis vector name"
                )));
            }
        }
        for c in &self.sc {
            for v in c.vars() {
                if !self.params.contains(&v) {
                    return Err(Error::parse(format!(
                        "structure constants mention `{v}`, which is not a declared parameter"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The structure constant `c_{ij}^k` (0-based indices).
    #[must_use]
    pub fn sc(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// The product `e_i · e_j` as an element.
    #[must_use]
    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        let start = (i * self.dim + j) * self.dim;
        Element {
            coords: self.sc[start..start + self.dim].to_vec(),
        }
    }

    /// The basis element `e_i`.
    #[must_use]
    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    /// Bilinear product of two elements.
    pub fn product(&self, x: &Element, y: &Element) -> Result<Element> {
        if x.coords.len() != self.dim || y.coords.len() != self.dim {
            return Err(Error::shape("element dimension does not match algebra"));
        }
        let mut out = Element::zero(self.dim);
        for i in 0..self.dim {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y.coords[j].is_zero() {
                    continue;
                }
                let factor = &x.coords[i] * &y.coords[j];
                for k in 0..self.dim {
                    let c = self.sc(i, j, k);
                    if !c.is_zero() {
                        out.coords[k] = &out.coords[k] + &(&factor * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks a set of multilinear identities on every basis tuple.
    ///
    /// A nonzero residual that involves parameters is flagged as a generic
    /// failure (`parametric: true`): the identity fails for generic
    /// parameter values but may hold at special ones.
    pub fn check_identities(&self, ids: &[Identity]) -> Result<IdentityReport> {
        let mut failures = Vec::new();
        for (index, id) in ids.iter().enumerate() {
            for tuple in index_tuples(self.dim, id.arity()) {
                let residual = expand_plain(self, id, &tuple)?;
                if !residual.is_zero() {
                    let parametric = residual.coords.iter().any(|c| !c.vars().is_empty());
                    failures.push(IdentityFailure {
                        identity_index: index,
                        identity_name: id.name.clone(),
                        tuple,
                        residual,
                        parametric,
                    });
                }
            }
        }
        Ok(IdentityReport {
            holds: failures.is_empty(),
            failures,
        })
    }

    /// The annihilator `{x : x·A = A·x = 0}` as a nullspace, together with
    /// any parameter case splits met during elimination.
    #[must_use]
    pub fn compute_annihilator(&self) -> (Subspace, Vec<Polynomial>) {
        let n = self.dim;
        let mut rows = Vec::with_capacity(2 * n * n);
        // x · e_j = 0 : coordinate k of the product is Σ_i x_i c_{ij}^k.
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.sc(i, j, k).clone()).collect());
            }
        }
        // e_j · x = 0.
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.sc(j, i, k).clone()).collect());
            }
        }
        let m = Matrix::from_rows(rows).expect("rectangular by construction");
        m.nullspace_with_splits()
    }

    /// Decides nilpotency via the descending chain
    /// `A¹ = A`, `A^{s} = Σ_{i+j=s} Aⁱ·Aʲ`.
    ///
    /// The chain is descending, so it either reaches zero (nilpotent, the
    /// index is the first zero power) or stabilizes. A plateau alone proves
    /// nothing — the chain can stall and then drop — but `A^{2s} = A^s ≠ 0`
    /// forces `A^m = A^s` for every `m ≥ s`, which settles non-nilpotency.
    pub fn is_nilpotent(&self) -> Result<NilpotencyReport> {
        let mut powers: Vec<Subspace> = vec![Subspace::full(self.dim)];
        loop {
            let s = powers.len() + 1;
            let mut vectors = Vec::new();
            for i in 1..s {
                let j = s - i;
                for u in powers[i - 1].basis() {
                    let ue = Element { coords: u.clone() };
                    for w in powers[j - 1].basis() {
                        let we = Element { coords: w.clone() };
                        vectors.push(self.product(&ue, &we)?.coords);
                    }
                }
            }
            let power = Subspace::from_vectors(self.dim, vectors)?;
            if power.is_zero() {
                return Ok(NilpotencyReport {
                    nilpotent: true,
                    index: Some(s),
                });
            }
            powers.push(power);
            if s.is_multiple_of(2) && powers[s - 1].span_equal(&powers[s / 2 - 1]) {
                return Ok(NilpotencyReport {
                    nilpotent: false,
                    index: None,
                });
            }
        }
    }

    /// Parses the textual algebra format:
    ///
    /// ```text
    /// [algebra]
    /// name = "M3_01"
    /// dim = 3
    /// params = []
    ///
    /// [product]
    /// e1*e1 = e2
    /// e1*e2 = e3
    /// e2*e1 = e3
    /// ```
    ///
    /// Right-hand sides are linear combinations of basis vectors with
    /// scalar coefficients (`l*e3`, `(l + 1)*e2 - e1`, …); absent pairs are
    /// zero products. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Algebra> {
        let mut name: Option<String> = None;
        let mut dim: Option<usize> = None;
        let mut params: Vec<String> = Vec::new();
        let mut products: Vec<(usize, usize, String)> = Vec::new();
        let mut section = SectionState::None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = strip_comment(raw).trim().to_string();
            if line.is_empty() {
                continue;
            }
            let at = lineno + 1;
            if line == "[algebra]" {
                section = SectionState::Header;
                continue;
            }
            if line == "[product]" {
                section = SectionState::Product;
                continue;
            }
            if line.starts_with('[') {
                return Err(Error::parse(format!("line {at}: unknown section `{line}`")));
            }
            match section {
                SectionState::None => {
                    return Err(Error::parse(format!(
                        "line {at}: content before the [algebra] section"
                    )))
                }
                SectionState::Header => {
                    let (key, value) = split_kv(&line, at)?;
                    match key.as_str() {
                        "name" => name = Some(unquote(&value)),
                        "dim" => {
                            dim = Some(value.parse().map_err(|_| {
                                Error::parse(format!("line {at}: invalid dim `{value}`"))
                            })?)
                        }
                        "params" => params = parse_name_list(&value, at)?,
                        other => {
                            return Err(Error::parse(format!(
                                "line {at}: unknown key `{other}` in [algebra]"
                            )))
                        }
                    }
                }
                SectionState::Product => {
                    let (lhs, rhs) = split_eq(&line, at)?;
                    let (i, j) = parse_pair(&lhs, at)?;
                    products.push((i, j, rhs));
                }
            }
        }
        let name = name.ok_or_else(|| Error::parse("missing `name` in [algebra]"))?;
        let dim = dim.ok_or_else(|| Error::parse("missing `dim` in [algebra]"))?;
        if dim == 0 {
            return Err(Error::parse("dim must be positive"));
        }
        let mut sc = vec![Scalar::zero(); dim * dim * dim];
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, rhs) in products {
            if i >= dim || j >= dim {
                return Err(Error::parse(format!(
                    "product e{}*e{} out of range for dim {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::parse(format!(
                    "duplicate product line for e{}*e{}",
                    i + 1,
                    j + 1
                )));
            }
            let coords = parse_element_expr(&rhs, dim)?;
            for (k, c) in coords.into_iter().enumerate() {
                sc[(i * dim + j) * dim + k] = c;
            }
        }
        Algebra::new(name, dim, params, sc)
    }

    /// Canonical printer for the algebra format; `parse(print(a))`
    /// reproduces `a`.
    #[must_use]
    pub fn print(&self) -> String {
        let mut out = String::new();
        out.push_str("[algebra]\n");
        out.push_str(&format!("name = \"{}\"\n", self.name));
        out.push_str(&format!("dim = {}\n", self.dim));
        out.push_str(&format!("params = [{}]\n", self.params.join(", ")));
        out.push_str("\n[product]\n");
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.basis_product(i, j);
                if !p.is_zero() {
                    out.push_str(&format!("e{}*e{} = {}\n", i + 1, j + 1, p));
                }
            }
        }
        out
    }
}

enum SectionState {
    None,
    Header,
    Product,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn split_kv(line: &str, at: usize) -> Result<(String, String)> {
    let (k, v) = line
        .split_once('=')
        .ok_or_else(|| Error::parse(format!("line {at}: expected `key = value`")))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn split_eq(line: &str, at: usize) -> Result<(String, String)> {
    let (l, r) = line
        .split_once('=')
        .ok_or_else(|| Error::parse(format!("line {at}: expected `ei*ej = …`")))?;
    Ok((l.trim().to_string(), r.trim().to_string()))
}

fn unquote(v: &str) -> String {
    v.trim_matches('"').to_string()
}

fn parse_name_list(v: &str, at: usize) -> Result<Vec<String>> {
    let inner = v
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::parse(format!("line {at}: expected a [..] list")))?;
    let mut names = Vec::new();
    for part in inner.split(',') {
        let p = part.trim();
        if p.is_empty() {
            continue;
        }
        if !p.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            || !p.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(Error::parse(format!("line {at}: invalid name `{p}`")));
        }
        names.push(p.to_string());
    }
    Ok(names)
}

fn parse_pair(lhs: &str, at: usize) -> Result<(usize, usize)> {
    let (a, b) = lhs
        .split_once('*')
        .ok_or_else(|| Error::parse(format!("line {at}: expected `ei*ej` on the left")))?;
    let i = basis_index(a.trim())
        .ok_or_else(|| Error::parse(format!("line {at}: `{a}` is not a basis vector")))?;
    let j = basis_index(b.trim())
        .ok_or_else(|| Error::parse(format!("line {at}: `{b}` is not a basis vector")))?;
    Ok((i, j))
}

/// `e7` → 6; `None` for anything else.
pub(crate) fn basis_index(name: &str) -> Option<usize> {
    let rest = name.strip_prefix('e')?;
    if rest.is_empty() || rest.starts_with('0') || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse::<usize>().ok().map(|k| k - 1)
}

/// Parses a linear combination of basis vectors (`2*e1 - l*e3`) into a
/// coordinate vector of length `dim`.
pub(crate) fn parse_element_expr(text: &str, dim: usize) -> Result<Vec<Scalar>> {
    let value = parse_scalar(text)?;
    let mut coords = vec![Scalar::zero(); dim];
    let den = Scalar::from_poly(value.denom().clone());
    for (m, c) in value.numer().terms() {
        let mut basis: Option<usize> = None;
        let mut rest = Vec::new();
        for (v, e) in m.iter() {
            match basis_index(v) {
                Some(k) => {
                    if e != 1 || basis.is_some() {
                        return Err(Error::parse(format!(
                            "`{text}` is not linear in the basis vectors"
                        )));
                    }
                    if k >= dim {
                        return Err(Error::parse(format!(
                            "basis vector e{} out of range for dim {dim}",
                            k + 1
                        )));
                    }
                    basis = Some(k);
                }
                None => rest.push((v.to_string(), e)),
            }
        }
        let Some(k) = basis else {
            return Err(Error::parse(format!(
                "`{text}` has a term without a basis vector"
            )));
        };
        let param_part = crate::arith::Monomial::from_exps(rest);
        let coeff_poly = Polynomial::from_terms([(param_part, c.clone())]);
        let coeff = Scalar::from_poly(coeff_poly).div(&den)?;
        coords[k] = &coords[k] + &coeff;
    }
    Ok(coords)
}

/// An element of an algebra: a coordinate vector over the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    /// Coordinates with respect to `e1 … en`.
    pub coords: Vec<Scalar>,
}

impl Element {
    /// The zero element of an `n`-dimensional algebra.
    #[must_use]
    pub fn zero(n: usize) -> Element {
        Element {
            coords: vec![Scalar::zero(); n],
        }
    }

    /// The basis element `e_i` (0-based).
    #[must_use]
    pub fn basis(n: usize, i: usize) -> Element {
        let mut e = Element::zero(n);
        e.coords[i] = Scalar::one();
        e
    }

    /// Builds an element from coordinates.
    #[must_use]
    pub fn from_coords(coords: Vec<Scalar>) -> Element {
        Element { coords }
    }

    /// True when all coordinates vanish.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Scales by a scalar.
    #[must_use]
    pub fn scale(&self, c: &Scalar) -> Element {
        Element {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(
            self.coords.len(),
            rhs.coords.len(),
            "element dimension mismatch"
        );
        Element {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(
            self.coords.len(),
            rhs.coords.len(),
            "element dimension mismatch"
        );
        Element {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coords
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), format!("e{}", k + 1)));
        write!(f, "{}", linear_combination(terms))
    }
}

/// Outcome of [`Algebra::check_identities`].
#[derive(Clone, Debug)]
pub struct IdentityReport {
    /// True when every identity vanished on every basis tuple.
    pub holds: bool,
    /// All nonzero residuals.
    pub failures: Vec<IdentityFailure>,
}

/// A single nonzero residual from identity checking.
#[derive(Clone, Debug)]
pub struct IdentityFailure {
    /// Index of the identity in the checked list.
    pub identity_index: usize,
    /// Name of the identity.
    pub identity_name: String,
    /// Basis tuple (0-based) at which the identity failed.
    pub tuple: Vec<usize>,
    /// The nonzero residual element.
    pub residual: Element,
    /// True when the residual involves parameters: the identity fails
    /// generically but may hold at special parameter values.
    pub parametric: bool,
}

impl fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuple: Vec<String> = self.tuple.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(
            f,
            "{} at ({}): residual {}{}",
            self.identity_name,
            tuple.join(","),
            self.residual,
            if self.parametric { " [generic]" } else { "" }
        )
    }
}

/// Outcome of [`Algebra::is_nilpotent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NilpotencyReport {
    /// Whether the power chain reaches zero.
    pub nilpotent: bool,
    /// The least `s` with `A^s = 0`, when nilpotent.
    pub index: Option<usize>,
}

/// Evaluates a general element with fresh symbolic coordinates `x1 … xn`;
/// used by random-evaluation oracles in the test suite.
pub fn symbolic_element(n: usize, prefix: &str) -> Element {
    Element {
        coords: (0..n)
            .map(|i| Scalar::var(&format!("{prefix}{}", i + 1)))
            .collect(),
    }
}

/// Builds an element with the given rational coordinates.
pub fn rational_element(coords: &[crate::arith::Rational]) -> Element {
    Element {
        coords: coords.iter().cloned().map(Scalar::from_rational).collect(),
    }
}

/// Substitutes scalars for variables in every coordinate.
pub fn substitute_element(e: &Element, map: &BTreeMap<String, Scalar>) -> Result<Element> {
    Ok(Element {
        coords: e
            .coords
            .iter()
            .map(|c| c.substitute(map))
            .collect::<Result<Vec<_>>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    pub(crate) fn m3_01() -> Algebra {
        Algebra::parse(
            "[algebra]\nname = \"M3_01\"\ndim = 3\nparams = []\n\n[product]\ne1*e1 = e2\ne1*e2 = e3\ne2*e1 = e3\n",
        )
        .unwrap()
    }

    #[test]
    fn parse_and_products() {
        let a = m3_01();
        assert_eq!(a.dim, 3);
        let p = a.product(&a.basis_element(0), &a.basis_element(1)).unwrap();
        assert_eq!(p, Element::basis(3, 2));
        let z = a.product(&a.basis_element(2), &a.basis_element(2)).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn parametric_table() {
        let a = Algebra::parse(
            "[algebra]\nname = \"M3_05\"\ndim = 3\nparams = [l]\n\n[product]\ne1*e1 = l*e3\ne2*e1 = e3\ne2*e2 = e3\n",
        )
        .unwrap();
        let p = a.product(&a.basis_element(0), &a.basis_element(0)).unwrap();
        assert_eq!(p.coords[2], Scalar::var("l"));
        assert!(a.sc(0, 1, 2).is_zero());
    }

    #[test]
    fn print_parse_round_trip() {
        let a = m3_01();
        let reparsed = Algebra::parse(&a.print()).unwrap();
        assert_eq!(a, reparsed);
        let text = a.print();
        assert_eq!(Algebra::parse(&text).unwrap().print(), text);
    }

    #[test]
    fn bilinearity_spot_check() {
        let a = m3_01();
        let x = rational_element(&[rat_int(2), rat_int(1), rat_int(5)]);
        let y = rational_element(&[rat_int(1), rat_int(3), rat_int(0)]);
        let z = rational_element(&[rat_int(4), rat_int(0), rat_int(1)]);
        let left = a.product(&(&x + &y), &z).unwrap();
        let right = &a.product(&x, &z).unwrap() + &a.product(&y, &z).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn annihilator_of_m3_01() {
        let (ann, splits) = m3_01().compute_annihilator();
        assert!(splits.is_empty());
        assert_eq!(ann.dim(), 1);
        assert_eq!(ann.basis()[0], Element::basis(3, 2).coords);
    }

    #[test]
    fn annihilator_of_zero_algebra() {
        let z = Algebra::from_table("zero2", 2, vec![], &[]).unwrap();
        let (ann, _) = z.compute_annihilator();
        assert_eq!(ann.dim(), 2);
    }

    #[test]
    fn nilpotency_chain() {
        let a = m3_01();
        let rep = a.is_nilpotent().unwrap();
        assert_eq!(
            rep,
            NilpotencyReport {
                nilpotent: true,
                index: Some(4)
            }
        );

        let z = Algebra::from_table("zero1", 1, vec![], &[]).unwrap();
        assert_eq!(
            z.is_nilpotent().unwrap(),
            NilpotencyReport {
                nilpotent: true,
                index: Some(2)
            }
        );

        let idem = Algebra::from_table("idem", 1, vec![], &[(0, 0, 0, Scalar::one())]).unwrap();
        let rep = idem.is_nilpotent().unwrap();
        assert!(!rep.nilpotent);
    }

    #[test]
    fn nilpotency_survives_plateaus() {
        // aa = b, bb = c: the chain plateaus at A³ = A⁴ = ⟨c⟩ before
        // reaching zero at A⁵ — a naive plateau rule would misreport this.
        let a = Algebra::from_table(
            "plateau",
            3,
            vec![],
            &[(0, 0, 1, Scalar::one()), (1, 1, 2, Scalar::one())],
        )
        .unwrap();
        let rep = a.is_nilpotent().unwrap();
        assert_eq!(
            rep,
            NilpotencyReport {
                nilpotent: true,
                index: Some(5)
            }
        );
    }

    #[test]
    fn element_rendering() {
        let e = Element::from_coords(vec![Scalar::int(2), Scalar::zero(), -&Scalar::var("l")]);
        assert_eq!(e.to_string(), "2*e1 - l*e3");
        assert_eq!(Element::zero(2).to_string(), "0");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Algebra::parse("[product]\ne1*e1 = e2\n").is_err());
        assert!(
            Algebra::parse("[algebra]\nname = \"x\"\ndim = 2\n\n[product]\ne1*e1 = e3\n").is_err()
        );
        assert!(Algebra::parse(
            "[algebra]\nname = \"x\"\ndim = 2\n\n[product]\ne1*e1 = e2\ne1*e1 = e1\n"
        )
        .is_err());
        assert!(
            Algebra::parse("[algebra]\nname = \"x\"\ndim = 2\n\n[product]\ne1*e1 = l*e2\n")
                .is_err()
        );
    }
}
