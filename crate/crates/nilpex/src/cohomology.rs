//! The cocycle space `Z²`, the coboundary space `B²`, and the second
//! cohomology `H² = Z²/B²` of an algebra relative to a set of multilinear
//! identities.
//!
//! A bilinear form on an `n`-dimensional algebra is an element of the
//! `n²`-dimensional span of the elementary forms `Δ_{i,j}` (the form whose
//! value at `(e_i, e_j)` is 1 and 0 elsewhere). Forms are flattened
//! row-major — index `i·n + j` holds the coefficient of `Δ_{i+1,j+1}` —
//! whenever they are treated as vectors.
//!
//! # Examples
//!
//! ```
//! use nilpex::algebra::Algebra;
//! use nilpex::cohomology::compute_h2;
//! use nilpex::identity::IdentitySet;
//!
//! let a = Algebra::parse(
//!     "[algebra]\nname = \"demo\"\ndim = 3\n\n[product]\ne1*e1 = e2\ne1*e2 = e3\ne2*e1 = e3\n",
//! )
//! .unwrap();
//! let ids = IdentitySet::parse("assoc : (x*y)*z - x*(y*z)\n").unwrap();
//!
//! let spaces = compute_h2(&a, &ids).unwrap();
//! assert_eq!(spaces.z2.dim(), spaces.b2.dim() + spaces.h2_reps.len());
//! assert_eq!(spaces.h2_reps[0].to_literal(), "d13 + d22 + d31");
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::algebra::Algebra;
use crate::algebra::Element;
use crate::arith::{parse_scalar, Monomial, Polynomial, Scalar};
use crate::identity::{expand_cocycle, index_tuples, Identity};
use crate::linalg::{complete_basis, Matrix, Subspace};
use crate::render::linear_combination;
use crate::{Error, Result};

/// A scalar-valued bilinear form `θ`, stored as the `n×n` matrix with
/// `θ(e_i, e_j)` at entry `(i, j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    /// The zero form on an `n`-dimensional algebra.
    #[must_use]
    pub fn zero(n: usize) -> BilinearForm {
        BilinearForm {
            matrix: Matrix::zero(n, n),
        }
    }

    /// The elementary form `Δ_{i+1,j+1}` (0-based arguments).
    #[must_use]
    pub fn delta(n: usize, i: usize, j: usize) -> BilinearForm {
        let mut m = Matrix::zero(n, n);
        m.set(i, j, Scalar::one());
        BilinearForm { matrix: m }
    }

    /// Wraps a square matrix.
    pub fn from_matrix(matrix: Matrix) -> Result<BilinearForm> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::shape("a bilinear form matrix must be square"));
        }
        Ok(BilinearForm { matrix })
    }

    /// Rebuilds a form from its flattened row-major coefficient vector.
    pub fn from_flat(n: usize, flat: &[Scalar]) -> Result<BilinearForm> {
        if flat.len() != n * n {
            return Err(Error::shape(format!(
                "expected {} coefficients for a {n}×{n} form, got {}",
                n * n,
                flat.len()
            )));
        }
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, flat[i * n + j].clone());
            }
        }
        Ok(BilinearForm { matrix: m })
    }

    /// The coboundary `δf` of a linear functional `f = Σ f_k e_k^*`:
    /// `δf(x, y) = f(x·y)`, so the matrix entry `(i, j)` is
    /// `Σ_k f_k c_{ij}^k`.
    pub fn coboundary(a: &Algebra, f: &[Scalar]) -> Result<BilinearForm> {
        let n = a.dim;
        if f.len() != n {
            return Err(Error::shape("functional length must equal the dimension"));
        }
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut v = Scalar::zero();
                for (k, fk) in f.iter().enumerate() {
                    if !fk.is_zero() {
                        v = &v + &(fk * a.sc(i, j, k));
                    }
                }
                m.set(i, j, v);
            }
        }
        Ok(BilinearForm { matrix: m })
    }

    /// The `k`-th structure-constant slice `δ(e_{k+1}^*)` (0-based `k`).
    #[must_use]
    pub fn slice(a: &Algebra, k: usize) -> BilinearForm {
        let mut f = vec![Scalar::zero(); a.dim];
        f[k] = Scalar::one();
        BilinearForm::coboundary(a, &f).expect("functional has the right length")
    }

    /// Side length `n`.
    #[must_use]
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    /// The matrix entry `θ(e_i, e_j)` (0-based).
    #[must_use]
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(i, j)
    }

    /// Borrows the underlying matrix.
    #[must_use]
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Flattens row-major into a length-`n²` vector.
    #[must_use]
    pub fn flatten(&self) -> Vec<Scalar> {
        self.matrix.to_rows().into_iter().flatten().collect()
    }

    /// True when every entry vanishes.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.flatten().iter().all(Scalar::is_zero)
    }

    /// Evaluates `θ(x, y)` bilinearly.
    pub fn eval(&self, x: &Element, y: &Element) -> Result<Scalar> {
        let n = self.n();
        if x.coords.len() != n || y.coords.len() != n {
            return Err(Error::shape("element dimension does not match the form"));
        }
        let mut out = Scalar::zero();
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y.coords[j].is_zero() {
                    continue;
                }
                let e = self.entry(i, j);
                if !e.is_zero() {
                    out = &out + &(&(&x.coords[i] * &y.coords[j]) * e);
                }
            }
        }
        Ok(out)
    }

    /// Scales every entry.
    #[must_use]
    pub fn scale(&self, c: &Scalar) -> BilinearForm {
        let n = self.n();
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.entry(i, j) * c);
            }
        }
        BilinearForm { matrix: m }
    }

    /// Substitutes scalars for variables in every entry.
    pub fn substitute(
        &self,
        map: &std::collections::BTreeMap<String, Scalar>,
    ) -> Result<BilinearForm> {
        let n = self.n();
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.entry(i, j).substitute(map)?);
            }
        }
        Ok(BilinearForm { matrix: m })
    }

    /// Parses a form literal: a linear combination of elementary-form
    /// symbols `dIJ` (1-based indices, e.g. `d13 + d22 + d31`, or `dI_J`
    /// for dimensions above 9), with scalar coefficients such as
    /// `l*d11 + d21 + d22`.
    pub fn parse(text: &str, n: usize) -> Result<BilinearForm> {
        let value = parse_scalar(text)?;
        let den = Scalar::from_poly(value.denom().clone());
        let mut flat = vec![Scalar::zero(); n * n];
        if value.is_zero() {
            return BilinearForm::from_flat(n, &flat);
        }
        for (m, c) in value.numer().terms() {
            let mut slot: Option<usize> = None;
            let mut rest = Vec::new();
            for (v, e) in m.iter() {
                match delta_index(v, n) {
                    Some(Ok((i, j))) => {
                        if e != 1 || slot.is_some() {
                            return Err(Error::parse(format!(
                                "`{text}` is not linear in the form symbols"
                            )));
                        }
                        slot = Some(i * n + j);
                    }
                    Some(Err(msg)) => return Err(Error::parse(msg)),
                    None => rest.push((v.to_string(), e)),
                }
            }
            let Some(idx) = slot else {
                return Err(Error::parse(format!(
                    "`{text}` has a term without a form symbol dIJ"
                )));
            };
            let coeff_poly = Polynomial::from_terms([(Monomial::from_exps(rest), c.clone())]);
            let coeff = Scalar::from_poly(coeff_poly).div(&den)?;
            flat[idx] = &flat[idx] + &coeff;
        }
        BilinearForm::from_flat(n, &flat)
    }

    /// Renders as a form literal; `parse(to_literal(θ), n)` reproduces `θ`.
    #[must_use]
    pub fn to_literal(&self) -> String {
        let n = self.n();
        let terms = (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
        linear_combination(terms.map(|(i, j)| {
            let sym = if n <= 9 {
                format!("d{}{}", i + 1, j + 1)
            } else {
                format!("d{}_{}", i + 1, j + 1)
            };
            (self.entry(i, j).clone(), sym)
        }))
    }
}

/// Decodes a `dIJ` / `dI_J` symbol to 0-based indices. `None` means the
/// name is not a form symbol at all (e.g. a parameter).
fn delta_index(name: &str, n: usize) -> Option<std::result::Result<(usize, usize), String>> {
    let rest = name.strip_prefix('d')?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit() || b == b'_') {
        return None;
    }
    let (i, j) = if let Some((a, b)) = rest.split_once('_') {
        (a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)
    } else {
        if rest.len() != 2 {
            return Some(Err(format!(
                "form symbol `{name}` must have exactly two indices (use dI_J above dimension 9)"
            )));
        }
        (rest[..1].parse().ok()?, rest[1..].parse().ok()?)
    };
    if i == 0 || j == 0 || i > n || j > n {
        return Some(Err(format!(
            "form symbol `{name}` is out of range for dimension {n}"
        )));
    }
    Some(Ok((i - 1, j - 1)))
}

impl Add for &BilinearForm {
    type Output = BilinearForm;
    fn add(self, rhs: &BilinearForm) -> BilinearForm {
        assert_eq!(self.n(), rhs.n(), "form dimension mismatch");
        let n = self.n();
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.entry(i, j) + rhs.entry(i, j));
            }
        }
        BilinearForm { matrix: m }
    }
}

impl Sub for &BilinearForm {
    type Output = BilinearForm;
    fn sub(self, rhs: &BilinearForm) -> BilinearForm {
        self + &-rhs
    }
}

impl Neg for &BilinearForm {
    type Output = BilinearForm;
    fn neg(self) -> BilinearForm {
        self.scale(&Scalar::int(-1))
    }
}

impl fmt::Display for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

/// `Z²`, `B²`, and `H²` representatives of one algebra, as produced by
/// [`compute_h2`].
#[derive(Clone, Debug)]
pub struct CohomologySpaces {
    /// The cocycle space, a subspace of the `n²`-dimensional form space,
    /// with an RREF-canonical basis.
    pub z2: Subspace,
    /// The coboundary space, spanned by the independent structure-constant
    /// slices (in slice order, not re-echelonized).
    pub b2: Subspace,
    /// Cocycles completing a basis of `b2` to one of `z2`; their classes
    /// form a basis of `H² = Z²/B²`.
    pub h2_reps: Vec<BilinearForm>,
    /// Parameter polynomials whose vanishing would change an elimination
    /// pivot; empty for parameter-free algebras.
    pub case_splits: Vec<Polynomial>,
}

/// Stacks every cocycle equation `expand_cocycle(a, id, tuple) = 0` into
/// one coefficient matrix over the `n²` form coordinates. Duplicate and
/// zero rows are dropped.
pub fn cocycle_system(a: &Algebra, ids: &[Identity]) -> Result<Matrix> {
    let n = a.dim;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut seen = BTreeSet::new();
    for id in ids {
        for tuple in index_tuples(n, id.arity()) {
            let row = expand_cocycle(a, id, &tuple)?;
            if row.iter().all(Scalar::is_zero) {
                continue;
            }
            let key = row
                .iter()
                .map(Scalar::to_string)
                .collect::<Vec<_>>()
                .join("|");
            if seen.insert(key) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(Matrix::zero(1, n * n));
    }
    Matrix::from_rows(rows)
}

/// Computes `Z²(A)` as the nullspace of the stacked cocycle system, after
/// checking that the algebra itself satisfies the identities (a cocycle
/// extension of an algebra outside the variety would be meaningless).
///
/// Returns the subspace together with any parameter case splits from the
/// elimination.
pub fn compute_z2(a: &Algebra, ids: &[Identity]) -> Result<(Subspace, Vec<Polynomial>)> {
    let report = a.check_identities(ids)?;
    if let Some(fail) = report.failures.first() {
        return Err(Error::IdentityViolated(format!(
            "algebra `{}` violates {}",
            a.name, fail
        )));
    }
    compute_z2_unchecked(a, ids)
}

/// [`compute_z2`] without the membership gate. Useful for oracles and for
/// inspecting algebras that are not known to lie in the variety.
pub fn compute_z2_unchecked(a: &Algebra, ids: &[Identity]) -> Result<(Subspace, Vec<Polynomial>)> {
    let system = cocycle_system(a, ids)?;
    Ok(system.nullspace_with_splits())
}

/// Computes `B²(A)`: the span of the structure-constant slices
/// `δ(e_k^*)`, with linearly dependent slices removed. The basis keeps the
/// surviving slices verbatim, in slice order.
#[must_use]
pub fn compute_b2(a: &Algebra) -> Subspace {
    let n = a.dim;
    let slices = (0..n)
        .map(|k| BilinearForm::slice(a, k).flatten())
        .collect();
    Subspace::from_vectors(n * n, slices).expect("slices have length n²")
}

/// Computes `Z²`, `B²`, and representatives for `H² = Z²/B²`.
///
/// The representatives complete the `B²` basis to a `Z²` basis greedily in
/// the `Z²` enumeration order, so `dim Z² = dim B² + |h2_reps|`.
pub fn compute_h2(a: &Algebra, ids: &[Identity]) -> Result<CohomologySpaces> {
    let (z2, case_splits) = compute_z2(a, ids)?;
    let b2 = compute_b2(a);
    if !z2.contains_subspace(&b2) {
        return Err(Error::VerificationFailed(format!(
            "coboundaries violate cocycle equations for algebra `{}`",
            a.name
        )));
    }
    let added = complete_basis(&b2, &z2)?;
    let h2_reps = added
        .basis()
        .iter()
        .map(|v| BilinearForm::from_flat(a.dim, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologySpaces {
        z2,
        b2,
        h2_reps,
        case_splits,
    })
}
