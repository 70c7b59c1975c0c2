//! Exact dense linear algebra over the scalar field.
//!
//! The workhorse is [`Matrix::rref`], which never divides silently by a
//! parameter-dependent entry: pivots that are nonzero rational constants are
//! preferred, and whenever elimination must pivot on an entry that involves
//! parameters, the entry's numerator polynomial is recorded in
//! `case_splits` and the generic (nonzero) branch is taken.
//!
//! # Examples
//!
//! ```
//! use nilpex::arith::{parse_scalar, Scalar};
//! use nilpex::linalg::Matrix;
//!
//! let row = |a: &str, b: &str| vec![parse_scalar(a).unwrap(), parse_scalar(b).unwrap()];
//! let m = Matrix::from_rows(vec![row("1", "2"), row("2", "4")]).unwrap();
//! assert_eq!(m.rank(), 1);
//!
//! let kernel = m.nullspace();
//! assert_eq!(kernel.dim(), 1);
//! let image = m.mul_vec(&kernel.basis()[0]).unwrap();
//! assert!(image.iter().all(Scalar::is_zero));
//! ```

use std::fmt;

use crate::arith::{Polynomial, Scalar};
use crate::{Error, Result};

/// A dense matrix of scalars, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct RrefResult {
    /// The reduced row echelon form.
    pub r: Matrix,
    /// Pivot column indices, strictly increasing.
    pub pivots: Vec<usize>,
    /// Parameter-dependent polynomials assumed nonzero while pivoting.
    pub case_splits: Vec<Polynomial>,
}

impl Matrix {
    /// Zero matrix of the given shape.
    #[must_use]
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    /// Identity matrix.
    #[must_use]
    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::shape("rows of unequal length"));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Row count.
    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Column count.
    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(r, c)` (0-based).
    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    /// Replaces the entry at `(r, c)`.
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    /// The `r`-th row as a slice.
    #[must_use]
    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// All rows as owned vectors.
    #[must_use]
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Transpose.
    #[must_use]
    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Matrix product.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * rhs.get(k, c));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::shape("vector length does not match column count"));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (c, value) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !value.is_zero() {
                        acc = &acc + &(a * value);
                    }
                }
                acc
            })
            .collect())
    }

    /// Exact determinant by cofactor expansion (square matrices at desk
    /// scale; expansion skips zero entries).
    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::shape("determinant of a non-square matrix"));
        }
        Ok(det_rec(self, &(0..self.cols).collect::<Vec<_>>(), 0))
    }

    /// Reduced row echelon form with case-split tracking.
    #[must_use]
    pub fn rref(&self) -> RrefResult {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut case_splits: Vec<Polynomial> = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // Prefer a pivot that is a nonzero rational constant; otherwise
            // take the first nonzero entry and record the assumption.
            let mut choice: Option<usize> = None;
            let mut constant_choice: Option<usize> = None;
            for r in pivot_row..m.rows {
                let v = m.get(r, col);
                if v.is_zero() {
                    continue;
                }
                if choice.is_none() {
                    choice = Some(r);
                }
                if v.is_constant() {
                    constant_choice = Some(r);
                    break;
                }
            }
            let Some(r) = constant_choice.or(choice) else {
                continue;
            };
            let pivot = m.get(r, col).clone();
            if !pivot.is_constant() {
                let p = pivot.numer().primitive_part();
                if !case_splits.contains(&p) {
                    case_splits.push(p);
                }
            }
            m.swap_rows(pivot_row, r);
            let inv = pivot.inverse().expect("nonzero pivot");
            m.scale_row(pivot_row, &inv);
            for rr in 0..m.rows {
                if rr != pivot_row && !m.get(rr, col).is_zero() {
                    let factor = m.get(rr, col).clone();
                    m.sub_scaled_row(rr, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        RrefResult {
            r: m,
            pivots,
            case_splits,
        }
    }

    /// Rank (number of pivots in the RREF).
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Nullspace with the case splits encountered while reducing.
    #[must_use]
    pub fn nullspace_with_splits(&self) -> (Subspace, Vec<Polynomial>) {
        let RrefResult {
            r,
            pivots,
            case_splits,
        } = self.rref();
        let mut basis = Vec::new();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r.get(prow, f);
            }
            basis.push(v);
        }
        (
            Subspace {
                ambient: self.cols,
                basis,
            },
            case_splits,
        )
    }

    /// Nullspace: all `v` with `self · v = 0`, as a subspace of dimension
    /// `cols - rank`.
    #[must_use]
    pub fn nullspace(&self) -> Subspace {
        self.nullspace_with_splits().0
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c);
            if !v.is_zero() {
                let scaled = v * factor;
                self.set(r, c, scaled);
            }
        }
    }

    /// `row_a -= factor * row_b`.
    fn sub_scaled_row(&mut self, a: usize, b: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let vb = self.get(b, c);
            if vb.is_zero() {
                continue;
            }
            let va = self.get(a, c);
            let nv = va - &(factor * vb);
            self.set(a, c, nv);
        }
    }
}

fn det_rec(m: &Matrix, cols: &[usize], row: usize) -> Scalar {
    if cols.is_empty() {
        return Scalar::one();
    }
    let mut acc = Scalar::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let a = m.get(row, c);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
        let minor = det_rec(m, &rest, row + 1);
        let signed = if pos % 2 == 0 {
            a * &minor
        } else {
            -&(a * &minor)
        };
        acc = &acc + &signed;
    }
    acc
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let cells: Vec<String> = self.row(r).iter().map(Scalar::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// A linear subspace of coordinate space, stored as an independent basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    /// The zero subspace.
    #[must_use]
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    /// The full coordinate space with its standard basis.
    #[must_use]
    pub fn full(ambient: usize) -> Subspace {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Scalar::zero(); ambient];
                v[i] = Scalar::one();
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    /// Greedy span constructor: keeps each vector that is independent of the
    /// ones kept before it, preserving the given enumeration order.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Subspace> {
        let mut space = Subspace::zero(ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::shape(
                    "vector length does not match ambient dimension",
                ));
            }
            if !space.contains(&v) {
                space.basis.push(v);
            }
        }
        Ok(space)
    }

    /// Ambient dimension.
    #[must_use]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Subspace dimension (basis length).
    #[must_use]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// True for the zero subspace.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// The stored basis.
    #[must_use]
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Exact span-membership test.
    #[must_use]
    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        if v.iter().all(Scalar::is_zero) {
            return true;
        }
        if self.basis.is_empty() {
            return false;
        }
        // Solve  B·c = v  with basis vectors as columns; consistent iff no
        // pivot lands in the augmented column.
        let mut rows = Vec::with_capacity(self.ambient);
        for i in 0..self.ambient {
            let mut row: Vec<Scalar> = self.basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            rows.push(row);
        }
        let m = Matrix::from_rows(rows).expect("rectangular by construction");
        let aug_col = self.basis.len();
        !m.rref().pivots.contains(&aug_col)
    }

    /// True when every basis vector of `other` lies in `self`.
    #[must_use]
    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Span equality.
    #[must_use]
    pub fn span_equal(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// Sum of two subspaces (greedy basis, `self`'s basis first).
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::shape("ambient dimension mismatch in subspace sum"));
        }
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient, vecs)
    }
}

/// Span membership of a single vector (exact).
#[must_use]
pub fn in_span(v: &[Scalar], s: &Subspace) -> bool {
    s.contains(v)
}

/// Greedily completes `inner` to `outer`: returns outer-basis members, in
/// `outer`'s enumeration order, that together with `inner` span `outer`.
/// Fails when `inner` is not contained in `outer`.
pub fn complete_basis(inner: &Subspace, outer: &Subspace) -> Result<Subspace> {
    if inner.ambient() != outer.ambient() {
        return Err(Error::shape(
            "ambient dimension mismatch in basis completion",
        ));
    }
    if !outer.contains_subspace(inner) {
        return Err(Error::shape(
            "inner subspace is not contained in outer subspace",
        ));
    }
    let mut current = inner.clone();
    let mut added = Vec::new();
    for v in outer.basis() {
        if !current.contains(v) {
            current.basis.push(v.clone());
            added.push(v.clone());
        }
    }
    Ok(Subspace {
        ambient: outer.ambient(),
        basis: added,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_scalar, rat_int};

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    fn mat(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|c| s(c)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_rank_one() {
        let m = mat(&[&["1", "2"], &["2", "4"]]);
        let out = m.rref();
        assert_eq!(out.pivots, vec![0]);
        assert!(out.case_splits.is_empty());
        assert_eq!(out.r.get(0, 1), &s("2"));
    }

    #[test]
    fn rref_identity_is_fixed() {
        let m = Matrix::identity(3);
        let out = m.rref();
        assert_eq!(out.r, Matrix::identity(3));
        assert_eq!(out.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_records_parameter_pivots() {
        let m = mat(&[&["l", "1"], &["0", "1"]]);
        let out = m.rref();
        assert_eq!(out.case_splits.len(), 1);
        assert_eq!(out.case_splits[0].to_string(), "l");
        assert_eq!(out.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_prefers_constant_pivots() {
        // A constant pivot is available below the parametric entry, so no
        // case split is needed.
        let m = mat(&[&["l", "1"], &["1", "0"]]);
        let out = m.rref();
        assert!(out.case_splits.is_empty(), "{:?}", out.case_splits);
        assert_eq!(out.pivots, vec![0, 1]);
        // But when a later pivot is forced onto a parametric entry, the
        // assumption is recorded.
        let m = mat(&[&["1", "1"], &["1", "l"]]);
        let out = m.rref();
        assert_eq!(out.case_splits.len(), 1);
        assert_eq!(out.case_splits[0].to_string(), "l - 1");
    }

    #[test]
    fn rref_is_idempotent() {
        let m = mat(&[&["2", "4", "1"], &["0", "0", "3"], &["1", "2", "0"]]);
        let once = m.rref().r;
        let twice = once.rref().r;
        assert_eq!(once, twice);
    }

    #[test]
    fn nullspace_simple() {
        let m = mat(&[&["1", "1"]]);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 1);
        assert_eq!(ns.basis()[0], vec![s("-1"), s("1")]);
        assert!(Matrix::identity(4).nullspace().is_zero());
    }

    #[test]
    fn nullspace_certificate_and_dimension_law() {
        let m = mat(&[&["1", "2", "3"], &["2", "4", "6"], &["0", "1", "1"]]);
        let ns = m.nullspace();
        assert_eq!(ns.dim() + m.rank(), m.cols());
        for v in ns.basis() {
            let image = m.mul_vec(v).unwrap();
            assert!(image.iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn span_membership() {
        let sp = Subspace::from_vectors(
            3,
            vec![vec![s("1"), s("0"), s("0")], vec![s("0"), s("1"), s("1")]],
        )
        .unwrap();
        assert!(sp.contains(&[s("2"), s("3"), s("3")]));
        assert!(!sp.contains(&[s("0"), s("1"), s("0")]));
        assert!(sp.contains(&[Scalar::zero(), Scalar::zero(), Scalar::zero()]));
    }

    #[test]
    fn complete_basis_greedy() {
        let outer =
            Subspace::from_vectors(2, vec![vec![s("1"), s("0")], vec![s("0"), s("1")]]).unwrap();
        let inner = Subspace::zero(2);
        let added = complete_basis(&inner, &outer).unwrap();
        assert_eq!(added.dim(), 2);
        let same = complete_basis(&outer, &outer).unwrap();
        assert_eq!(same.dim(), 0);
        // inner ⊄ outer must fail.
        let line = Subspace::from_vectors(2, vec![vec![s("1"), s("1")]]).unwrap();
        let other = Subspace::from_vectors(2, vec![vec![s("1"), s("0")]]).unwrap();
        assert!(complete_basis(&line, &other).is_err());
    }

    #[test]
    fn determinant_exact() {
        let m = mat(&[&["1", "2"], &["3", "4"]]);
        assert_eq!(m.det().unwrap(), s("-2"));
        let tri = mat(&[
            &["l11", "0", "0"],
            &["l21", "l11^2", "0"],
            &["l31", "2*l11*l21", "l11^3"],
        ]);
        assert_eq!(tri.det().unwrap(), s("l11^6"));
        assert!(mat(&[&["1", "2"]]).det().is_err());
    }

    #[test]
    fn matrix_product_and_transpose() {
        let a = mat(&[&["1", "2"], &["3", "4"]]);
        let b = mat(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(a.mul(&b).unwrap(), mat(&[&["2", "1"], &["4", "3"]]));
        assert_eq!(a.transpose(), mat(&[&["1", "3"], &["2", "4"]]));
        let v = a.mul_vec(&[s("1"), s("1")]).unwrap();
        assert_eq!(v, vec![rat_scalar(3), rat_scalar(7)]);
    }

    fn rat_scalar(n: i64) -> Scalar {
        Scalar::from_rational(rat_int(n))
    }

    #[test]
    fn subspace_sum() {
        let a = Subspace::from_vectors(2, vec![vec![s("1"), s("0")]]).unwrap();
        let b = Subspace::from_vectors(2, vec![vec![s("1"), s("1")]]).unwrap();
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert!(a.sum(&a).unwrap().span_equal(&a));
    }
}
