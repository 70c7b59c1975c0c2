//! The multilinear identity DSL: product trees, parsing and validation,
//! identity files, and expansion over basis tuples — both plain evaluation
//! and the cocycle variant in which the root product of every monomial is
//! replaced by an unknown bilinear form.
//!
//! # Examples
//!
//! ```
//! use nilpex::identity::parse_identity;
//!
//! let id = parse_identity("(x*y)*z - x*(y*z) + (z*y)*x - z*(y*x)").unwrap();
//! assert_eq!(id.arity(), 3);
//! assert_eq!(id.variables, ["x", "y", "z"]);
//!
//! // Every variable must occur exactly once in every monomial.
//! assert!(parse_identity("(x*x)*y").is_err());
//! // Nested products need explicit parentheses.
//! assert!(parse_identity("x*y*z").is_err());
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Algebra, Element};
use crate::arith::{Rational, Scalar};
use crate::{Error, Result};

/// A fully parenthesized product of variables, e.g. `(x*y)*z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProductTree {
    /// A variable.
    Leaf(String),
    /// A binary product of two subtrees.
    Node(Box<ProductTree>, Box<ProductTree>),
}

impl ProductTree {
    /// Counts how often each variable occurs, and records first-appearance
    /// order in `order`.
    fn tally(&self, counts: &mut BTreeMap<String, usize>, order: &mut Vec<String>) {
        match self {
            ProductTree::Leaf(v) => {
                if !order.contains(v) {
                    order.push(v.clone());
                }
                *counts.entry(v.clone()).or_insert(0) += 1;
            }
            ProductTree::Node(l, r) => {
                l.tally(counts, order);
                r.tally(counts, order);
            }
        }
    }

    /// Evaluates the tree in `a`, reading variable values from `assign`.
    pub fn eval(&self, a: &Algebra, assign: &BTreeMap<String, Element>) -> Result<Element> {
        match self {
            ProductTree::Leaf(v) => assign
                .get(v)
                .cloned()
                .ok_or_else(|| Error::shape(format!("no value assigned to variable `{v}`"))),
            ProductTree::Node(l, r) => {
                let lv = l.eval(a, assign)?;
                let rv = r.eval(a, assign)?;
                a.product(&lv, &rv)
            }
        }
    }
}

impl fmt::Display for ProductTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductTree::Leaf(v) => write!(f, "{v}"),
            ProductTree::Node(l, r) => {
                let side = |t: &ProductTree| match t {
                    ProductTree::Leaf(v) => v.clone(),
                    node => format!("({node})"),
                };
                write!(f, "{}*{}", side(l), side(r))
            }
        }
    }
}

/// A multilinear identity: a signed sum of product trees in which every
/// monomial contains each variable of the identity exactly once.
#[derive(Clone, Debug, PartialEq)]
pub struct Identity {
    /// Display name (may be empty for anonymous identities).
    pub name: String,
    /// Variables in first-appearance order; the arity is their count.
    pub variables: Vec<String>,
    /// Monomials as (coefficient, tree) pairs; like trees are combined and
    /// zero coefficients dropped.
    pub monomials: Vec<(Rational, ProductTree)>,
}

impl Identity {
    /// Number of variables.
    #[must_use]
    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    /// Parses an expression and attaches a name.
    pub fn parse_named(name: impl Into<String>, expr: &str) -> Result<Identity> {
        let mut id = parse_identity(expr)?;
        id.name = name.into();
        Ok(id)
    }

    /// Maps the identity's variables to the basis elements named by
    /// `tuple` (0-based indices).
    fn assignment(&self, a: &Algebra, tuple: &[usize]) -> Result<BTreeMap<String, Element>> {
        if tuple.len() != self.arity() {
            return Err(Error::shape(format!(
                "identity `{}` has arity {}, got a tuple of length {}",
                self.name,
                self.arity(),
                tuple.len()
            )));
        }
        let mut assign = BTreeMap::new();
        for (v, &i) in self.variables.iter().zip(tuple) {
            if i >= a.dim {
                return Err(Error::shape(format!(
                    "basis index {} out of range for dim {}",
                    i + 1,
                    a.dim
                )));
            }
            assign.insert(v.clone(), Element::basis(a.dim, i));
        }
        Ok(assign)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.name.is_empty() {
            write!(f, "{} : ", self.name)?;
        }
        for (pos, (c, t)) in self.monomials.iter().enumerate() {
            let mag = c.abs();
            if pos == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let rendered = match t {
                ProductTree::Leaf(v) => v.clone(),
                node => format!("({node})"),
            };
            if mag.is_one() {
                write!(f, "{rendered}")?;
            } else {
                write!(f, "{mag}*{rendered}")?;
            }
        }
        Ok(())
    }
}

/// Parses a single identity expression such as
/// `(x*y)*z - x*(y*z) + (z*y)*x - z*(y*x)`.
///
/// Grammar: monomials are products of variables with parentheses mandatory
/// for nesting (`x*y*z` is rejected as ambiguous); optional rational
/// coefficients (`2*`, `1/2*`); `+`/`-` between monomials; sums inside
/// parentheses are distributed; an optional trailing `= 0` is ignored.
/// Multilinearity is validated: every monomial must contain each variable
/// of the identity exactly once.
pub fn parse_identity(text: &str) -> Result<Identity> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let raw = p.expr()?;
    if p.take(&Tok::Equals) {
        match p.next() {
            Some(Tok::Int(ref d)) if d == "0" => {}
            _ => {
                return Err(Error::parse(format!(
                    "byte {}: only `= 0` may follow the identity expression",
                    p.here()
                )))
            }
        }
    }
    if p.pos < p.tokens.len() {
        return Err(Error::parse(format!(
            "byte {}: unexpected trailing input",
            p.here()
        )));
    }

    // Record first-appearance order over the raw term list, then combine
    // like trees and drop cancellations.
    let mut counts_scratch = BTreeMap::new();
    let mut variables = Vec::new();
    for (_, t) in &raw {
        t.tally(&mut counts_scratch, &mut variables);
    }
    let mut monomials: Vec<(Rational, ProductTree)> = Vec::new();
    for (c, t) in raw {
        match monomials.iter_mut().find(|(_, u)| *u == t) {
            Some((acc, _)) => *acc += c,
            None => monomials.push((c, t)),
        }
    }
    monomials.retain(|(c, _)| !c.is_zero());
    if monomials.is_empty() {
        return Err(Error::parse(
            "identity has no monomials (all terms cancelled)",
        ));
    }

    for (_, t) in &monomials {
        let mut counts = BTreeMap::new();
        let mut order = Vec::new();
        t.tally(&mut counts, &mut order);
        for v in &variables {
            match counts.get(v).copied().unwrap_or(0) {
                1 => {}
                0 => {
                    return Err(Error::parse(format!(
                        "not multilinear: variable `{v}` is missing from monomial `{t}`"
                    )))
                }
                k => {
                    return Err(Error::parse(format!(
                        "not multilinear: variable `{v}` appears {k} times in monomial `{t}`"
                    )))
                }
            }
        }
    }

    Ok(Identity {
        name: String::new(),
        variables,
        monomials,
    })
}

/// Evaluates an identity at a basis tuple with every product taken in the
/// algebra; the result is the residual element (zero iff the identity
/// holds at that tuple).
pub fn expand_plain(a: &Algebra, id: &Identity, tuple: &[usize]) -> Result<Element> {
    let assign = id.assignment(a, tuple)?;
    let mut out = Element::zero(a.dim);
    for (c, t) in &id.monomials {
        let v = t.eval(a, &assign)?;
        out = &out + &v.scale(&Scalar::from_rational(c.clone()));
    }
    Ok(out)
}

/// Evaluates an identity at a basis tuple with the ROOT product of every
/// monomial replaced by an unknown bilinear form θ = Σ λ_{i,j} Δ_{i,j} and
/// all inner products taken in the algebra.
///
/// Returns the coefficient vector of the resulting linear form: entry
/// `i·n + j` (0-based) is the coefficient of λ_{i+1,j+1}. A monomial that
/// is a bare variable has no root product and contributes nothing.
pub fn expand_cocycle(a: &Algebra, id: &Identity, tuple: &[usize]) -> Result<Vec<Scalar>> {
    let assign = id.assignment(a, tuple)?;
    let n = a.dim;
    let mut out = vec![Scalar::zero(); n * n];
    for (c, t) in &id.monomials {
        let ProductTree::Node(l, r) = t else { continue };
        let lv = l.eval(a, &assign)?;
        let rv = r.eval(a, &assign)?;
        let cs = Scalar::from_rational(c.clone());
        for i in 0..n {
            if lv.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if rv.coords[j].is_zero() {
                    continue;
                }
                let term = &(&cs * &lv.coords[i]) * &rv.coords[j];
                out[i * n + j] = &out[i * n + j] + &term;
            }
        }
    }
    Ok(out)
}

/// All tuples in `{0,…,n−1}^k` in lexicographic order.
pub(crate) fn index_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(n.pow(u32::try_from(k).expect("small arity")));
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < n {
                break;
            }
            cur[pos] = 0;
        }
    }
}

/// An ordered collection of named identities, as read from an identity
/// file: one identity per line in the form `name : expr`, with `#`
/// starting a comment.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentitySet {
    /// The identities, in file order.
    pub identities: Vec<Identity>,
}

impl IdentitySet {
    /// Parses an identity file.
    pub fn parse(text: &str) -> Result<IdentitySet> {
        let mut identities: Vec<Identity> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let at = lineno + 1;
            let (name, expr) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(format!("line {at}: expected `name : expression`")))?;
            let name = name.trim();
            if name.is_empty()
                || !name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::parse(format!(
                    "line {at}: `{name}` is not a valid identity name"
                )));
            }
            if identities.iter().any(|i| i.name == name) {
                return Err(Error::parse(format!(
                    "line {at}: duplicate identity name `{name}`"
                )));
            }
            let id = Identity::parse_named(name, expr)
                .map_err(|e| Error::parse(format!("line {at}: {e}")))?;
            identities.push(id);
        }
        Ok(IdentitySet { identities })
    }

    /// Canonical printer; `parse(print(s))` reproduces `s`.
    #[must_use]
    pub fn print(&self) -> String {
        let mut out = String::new();
        for id in &self.identities {
            out.push_str(&id.to_string());
            out.push('\n');
        }
        out
    }
}

impl std::ops::Deref for IdentitySet {
    type Target = [Identity];
    fn deref(&self) -> &[Identity] {
        &self.identities
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Equals,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '=' => Tok::Equals,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].to_string()), start));
                continue;
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::parse(format!(
                    "byte {i}: unexpected character `{other}`"
                )))
            }
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

type Terms = Vec<(Rational, ProductTree)>;

impl Parser {
    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn take(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// `expr := ['+'|'-'] term (('+'|'-') term)*`
    fn expr(&mut self) -> Result<Terms> {
        let mut out = Vec::new();
        let mut negate = if self.take(&Tok::Minus) {
            true
        } else {
            self.take(&Tok::Plus);
            false
        };
        loop {
            let mut terms = self.term()?;
            if negate {
                for (c, _) in &mut terms {
                    *c = -c.clone();
                }
            }
            out.extend(terms);
            if self.take(&Tok::Plus) {
                negate = false;
            } else if self.take(&Tok::Minus) {
                negate = true;
            } else {
                return Ok(out);
            }
        }
    }

    /// `term := [rational '*'] product` — a leading integer is a
    /// coefficient and must be followed by `*`.
    fn term(&mut self) -> Result<Terms> {
        let mut coeff = Rational::one();
        if matches!(self.peek(), Some(Tok::Int(_))) {
            let num = self.int()?;
            let den = if self.take(&Tok::Slash) {
                let at = self.here();
                let d = self.int()?;
                if d.is_zero() {
                    return Err(Error::parse(format!(
                        "byte {at}: zero denominator in coefficient"
                    )));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = Rational::new(num, den);
            if !self.take(&Tok::Star) {
                return Err(Error::parse(format!(
                    "byte {}: expected `*` and a product after the coefficient",
                    self.here()
                )));
            }
        }
        let mut terms = self.product()?;
        for (c, _) in &mut terms {
            *c *= &coeff;
        }
        Ok(terms)
    }

    /// `product := atom ['*' atom]` — a second `*` at the same level is an
    /// error; nested products must be parenthesized.
    fn product(&mut self) -> Result<Terms> {
        let left = self.atom()?;
        if !self.take(&Tok::Star) {
            return Ok(left);
        }
        let right = self.atom()?;
        if self.peek() == Some(&Tok::Star) {
            return Err(Error::parse(format!(
                "byte {}: ambiguous product chain — parenthesize nested products",
                self.here()
            )));
        }
        let mut out = Vec::new();
        for (cl, tl) in &left {
            for (cr, tr) in &right {
                out.push((
                    cl * cr,
                    ProductTree::Node(Box::new(tl.clone()), Box::new(tr.clone())),
                ));
            }
        }
        Ok(out)
    }

    /// `atom := variable | '(' expr ')'`
    fn atom(&mut self) -> Result<Terms> {
        let at = self.here();
        match self.next() {
            Some(Tok::Ident(v)) => Ok(vec![(Rational::one(), ProductTree::Leaf(v))]),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if !self.take(&Tok::RParen) {
                    return Err(Error::parse(format!(
                        "byte {}: unbalanced parentheses — expected `)`",
                        self.here()
                    )));
                }
                Ok(inner)
            }
            _ => Err(Error::parse(format!(
                "byte {at}: expected a variable or `(`"
            ))),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let at = self.here();
        match self.next() {
            Some(Tok::Int(d)) => d
                .parse()
                .map_err(|_| Error::parse(format!("byte {at}: invalid integer"))),
            _ => Err(Error::parse(format!("byte {at}: expected an integer"))),
        }
    }
}
