//! The polynomial system defining `Aut(A)`, a budgeted Gröbner-basis
//! engine for solving it at desk scale, verification of user-supplied
//! parametric automorphism families, and sampling of concrete
//! automorphisms.
//!
//! The convention throughout: an endomorphism `F` acts by
//! `F(e_i) = Σ_j λ_{i,j} e_j`, and displayed matrices act column-wise on
//! coordinates — column `i` of a matrix is the coordinate vector of
//! `F(e_i)`. The unknown `λ_{i,j}` is named `l{i}{j}` (or `l{i}_{j}` above
//! dimension 9).
//!
//! # Examples
//!
//! ```
//! use nilpex::algebra::Algebra;
//! use nilpex::automorphism::{automorphism_equations, verify_parametric_family,
//!                            ParametricMatrixFamily};
//!
//! let a = Algebra::parse(
//!     "[algebra]\nname = \"M3_01\"\ndim = 3\n\n[product]\ne1*e1 = e2\ne1*e2 = e3\ne2*e1 = e3\n",
//! )
//! .unwrap();
//!
//! let system = automorphism_equations(&a);
//! assert_eq!(system.unknowns.len(), 9);
//! assert!(system.equations.iter().any(|p| p.to_string() == "l11^2 - l22"));
//!
//! let fam = ParametricMatrixFamily::parse(
//!     "[family]\n\
//!      algebra = \"M3_01\"\n\
//!      dim = 3\n\
//!      nonvanishing = [l11]\n\
//!      \n\
//!      [matrix]\n\
//!      l11, 0, 0\n\
//!      l21, l11^2, 0\n\
//!      l31, 2*l11*l21, l11^3\n",
//! )
//! .unwrap();
//! let report = verify_parametric_family(&a, &fam).unwrap();
//! assert!(report.is_automorphism_family);
//! assert_eq!(report.det.to_string(), "l11^6");
//! ```

mod groebner;

pub use groebner::{buchberger, buchberger_with_budget, Budget, GroebnerBasis};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::arith::{parse_polynomial, Polynomial, Rational, Scalar};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// A finite list of polynomial equations (`= 0`) in named unknowns.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialSystem {
    /// Unknown names in row-major `λ_{i,j}` order.
    pub unknowns: Vec<String>,
    /// The equations; each involves only unknowns and algebra parameters.
    pub equations: Vec<Polynomial>,
}

/// One automorphism equation, labeled by the basis pair and coordinate it
/// came from (all 0-based).
#[derive(Clone, Debug, PartialEq)]
pub struct AutEquation {
    /// First factor index: the equation compares `F(e_{i+1})·F(e_{j+1})`
    /// with `F(e_{i+1}·e_{j+1})`.
    pub i: usize,
    /// Second factor index.
    pub j: usize,
    /// Coordinate in which the two sides are compared.
    pub k: usize,
    /// The polynomial that must vanish.
    pub poly: Polynomial,
}

impl fmt::Display for AutEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(e{}*e{}) @ e{}: {} = 0",
            self.i + 1,
            self.j + 1,
            self.k + 1,
            self.poly
        )
    }
}

/// The canonical name of the unknown `λ_{i+1,j+1}` (0-based arguments).
#[must_use]
pub fn lambda_name(i: usize, j: usize, n: usize) -> String {
    if n <= 9 {
        format!("l{}{}", i + 1, j + 1)
    } else {
        format!("l{}_{}", i + 1, j + 1)
    }
}

/// Generates the defining equations of `Aut(A)`, labeled by origin: for
/// each basis pair `(i, j)` and coordinate `k`, the polynomial
///
/// ```text
/// Σ_{p,q} λ_{i,p} λ_{j,q} c_{pq}^k − Σ_r c_{ij}^r λ_{r,k}
/// ```
///
/// Identically-zero equations are dropped; the rest appear in
/// lexicographic `(i, j, k)` order. Parametric structure constants leave
/// their parameters in the equations (denominators are cleared).
pub fn automorphism_equations_labeled(a: &Algebra) -> Vec<AutEquation> {
    let n = a.dim;
    let lam = |i: usize, j: usize| Scalar::var(&lambda_name(i, j, n));
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut eq = Scalar::zero();
                for p in 0..n {
                    for q in 0..n {
                        let c = a.sc(p, q, k);
                        if !c.is_zero() {
                            eq = &eq + &(&(&lam(i, p) * &lam(j, q)) * c);
                        }
                    }
                }
                for r in 0..n {
                    let c = a.sc(i, j, r);
                    if !c.is_zero() {
                        eq = &eq - &(c * &lam(r, k));
                    }
                }
                if !eq.is_zero() {
                    let poly = eq.numer().primitive_part();
                    out.push(AutEquation { i, j, k, poly });
                }
            }
        }
    }
    out
}

/// [`automorphism_equations_labeled`] packaged as a plain system, with the
/// unknowns `l11 … lnn` listed row-major.
#[must_use]
pub fn automorphism_equations(a: &Algebra) -> PolynomialSystem {
    let n = a.dim;
    let unknowns = (0..n)
        .flat_map(|i| (0..n).map(move |j| lambda_name(i, j, n)))
        .collect();
    let equations = automorphism_equations_labeled(a)
        .into_iter()
        .map(|e| e.poly)
        .collect();
    PolynomialSystem {
        unknowns,
        equations,
    }
}

/// A parametric matrix family: a square grid of polynomial entries in free
/// parameters, with declared nonvanishing conditions (typically the
/// factors of the determinant). Column `i` is the image of `e_{i+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametricMatrixFamily {
    /// Name of the algebra the family belongs to (a label; may be empty).
    pub algebra: String,
    /// `entries[row][col]`; column-as-image convention.
    pub entries: Vec<Vec<Polynomial>>,
    /// Polynomials that must not vanish at a sampled point.
    pub nonvanishing: Vec<Polynomial>,
}

impl ParametricMatrixFamily {
    /// Side length.
    #[must_use]
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Every parameter appearing in the entries.
    #[must_use]
    pub fn params(&self) -> std::collections::BTreeSet<String> {
        self.entries
            .iter()
            .flatten()
            .flat_map(Polynomial::vars)
            .collect()
    }

    /// The family matrix with entries read as scalars.
    #[must_use]
    pub fn matrix(&self) -> Matrix {
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().cloned().map(Scalar::from_poly).collect())
            .collect();
        Matrix::from_rows(rows).expect("family grids are rectangular")
    }

    /// Parses the family file format:
    ///
    /// ```text
    /// [family]
    /// algebra = "M3_01"
    /// dim = 3
    /// nonvanishing = [l11]
    ///
    /// [matrix]
    /// l11, 0,          0
    /// l21, l11^2,      0
    /// l31, 2*l11*l21,  l11^3
    /// ```
    pub fn parse(text: &str) -> Result<ParametricMatrixFamily> {
        let mut algebra = String::new();
        let mut dim: Option<usize> = None;
        let mut nonvanishing = Vec::new();
        let mut rows: Vec<Vec<Polynomial>> = Vec::new();
        let mut in_matrix = false;
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
            match line {
                "[family]" => {
                    in_matrix = false;
                    continue;
                }
                "[matrix]" => {
                    in_matrix = true;
                    continue;
                }
                _ => {}
            }
            if line.starts_with('[') {
                return Err(Error::parse(format!("line {at}: unknown section `{line}`")));
            }
            if in_matrix {
                let row = line
                    .split(',')
                    .map(|cell| {
                        parse_polynomial(cell.trim())
                            .map_err(|e| Error::parse(format!("line {at}: bad matrix entry: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                rows.push(row);
            } else {
                let (key, value) = line
                    .split_once('=')
                    .ok_or_else(|| Error::parse(format!("line {at}: expected `key = value`")))?;
                let value = value.trim();
                match key.trim() {
                    "algebra" => algebra = value.trim_matches('"').to_string(),
                    "dim" => {
                        dim = Some(value.parse().map_err(|_| {
                            Error::parse(format!("line {at}: invalid dim `{value}`"))
                        })?)
                    }
                    "nonvanishing" => {
                        let inner = value
                            .strip_prefix('[')
                            .and_then(|s| s.strip_suffix(']'))
                            .ok_or_else(|| {
                                Error::parse(format!("line {at}: expected a [..] list"))
                            })?;
                        for part in inner.split(',') {
                            let part = part.trim();
                            if part.is_empty() {
                                continue;
                            }
                            let p = parse_polynomial(part)?;
                            if p.is_zero() {
                                return Err(Error::parse(format!(
                                    "line {at}: a nonvanishing condition cannot be 0"
                                )));
                            }
                            nonvanishing.push(p);
                        }
                    }
                    other => {
                        return Err(Error::parse(format!(
                            "line {at}: unknown key `{other}` in [family]"
                        )))
                    }
                }
            }
        }
        let dim = dim.ok_or_else(|| Error::parse("missing `dim` in [family]"))?;
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::parse(format!(
                "matrix must be {dim}×{dim} to match dim"
            )));
        }
        Ok(ParametricMatrixFamily {
            algebra,
            entries: rows,
            nonvanishing,
        })
    }

    /// Canonical printer; `parse(print(f))` reproduces `f`.
    #[must_use]
    pub fn print(&self) -> String {
        let mut out = String::new();
        out.push_str("[family]\n");
        out.push_str(&format!("algebra = \"{}\"\n", self.algebra));
        out.push_str(&format!("dim = {}\n", self.n()));
        let nv: Vec<String> = self
            .nonvanishing
            .iter()
            .map(Polynomial::to_string)
            .collect();
        out.push_str(&format!("nonvanishing = [{}]\n", nv.join(", ")));
        out.push_str("\n[matrix]\n");
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(Polynomial::to_string).collect();
            out.push_str(&cells.join(", "));
            out.push('\n');
        }
        out
    }

    /// The substitution `λ_{i,j} ↦ entries[j][i]` used to plug the family
    /// into the automorphism equations: the unknown for "coordinate `j` of
    /// `F(e_i)`" is the matrix entry at row `j`, column `i`.
    fn substitution(&self) -> BTreeMap<String, Scalar> {
        let n = self.n();
        let mut map = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                map.insert(
                    lambda_name(i, j, n),
                    Scalar::from_poly(self.entries[j][i].clone()),
                );
            }
        }
        map
    }
}

/// Outcome of [`verify_parametric_family`].
#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// True when every automorphism equation vanishes identically under
    /// the family substitution.
    pub is_automorphism_family: bool,
    /// The symbolic determinant of the family matrix.
    pub det: Polynomial,
    /// Equations that did not vanish, with the substituted residual.
    pub residuals: Vec<AutEquation>,
    /// True when the determinant divides a product of the declared
    /// nonvanishing conditions — so the conditions genuinely certify
    /// invertibility.
    pub invertibility_certified: bool,
}

/// Substitutes a parametric family into the automorphism equations of `a`
/// and reports whether every equation vanishes identically, along with the
/// symbolic determinant and an invertibility certificate.
pub fn verify_parametric_family(
    a: &Algebra,
    fam: &ParametricMatrixFamily,
) -> Result<VerificationReport> {
    if fam.n() != a.dim {
        return Err(Error::shape(format!(
            "family is {}×{} but the algebra has dimension {}",
            fam.n(),
            fam.n(),
            a.dim
        )));
    }
    let map = fam.substitution();
    let mut residuals = Vec::new();
    for eq in automorphism_equations_labeled(a) {
        let value = eq.poly.substitute(&map)?;
        if !value.is_zero() {
            residuals.push(AutEquation {
                poly: value.numer().primitive_part(),
                ..eq
            });
        }
    }
    let det = fam.matrix().det()?.numer().clone();
    let invertibility_certified = divides_product_of(&det, &fam.nonvanishing);
    Ok(VerificationReport {
        is_automorphism_family: residuals.is_empty(),
        det,
        residuals,
        invertibility_certified,
    })
}

/// True when `det` divides some product of powers of `factors` (up to a
/// nonzero rational constant): repeatedly strip each factor; certificate
/// granted iff a nonzero constant remains.
fn divides_product_of(det: &Polynomial, factors: &[Polynomial]) -> bool {
    if det.is_zero() {
        return false;
    }
    let mut d = det.primitive_part();
    while !d.is_constant() {
        let mut stripped = false;
        for f in factors {
            let f = f.primitive_part();
            if f.is_constant() {
                continue;
            }
            while !d.is_constant() {
                let Ok((q, r)) = crate::arith::poly_divmod(
                    &d,
                    std::slice::from_ref(&f),
                    crate::arith::MonomialOrder::Lex,
                ) else {
                    return false;
                };
                if r.is_zero() && !q[0].is_zero() {
                    d = q[0].clone();
                    stripped = true;
                } else {
                    break;
                }
            }
        }
        if !stripped {
            return false;
        }
    }
    !d.is_zero()
}

/// Outcome of [`sample_automorphisms`].
#[derive(Clone, Debug)]
pub struct SampleReport {
    /// Concrete matrices, one per accepted assignment, in input order.
    pub matrices: Vec<Matrix>,
    /// Human-readable notices for skipped assignments.
    pub notices: Vec<String>,
}

/// Instantiates a family at concrete parameter assignments. Assignments
/// under which a nonvanishing condition vanishes are skipped with a
/// notice, as are (defensively) assignments whose matrix fails the
/// automorphism equations.
pub fn sample_automorphisms(
    a: &Algebra,
    fam: &ParametricMatrixFamily,
    assignments: &[BTreeMap<String, Rational>],
) -> Result<SampleReport> {
    if fam.n() != a.dim {
        return Err(Error::shape(format!(
            "family is {}×{} but the algebra has dimension {}",
            fam.n(),
            fam.n(),
            a.dim
        )));
    }
    let n = a.dim;
    let mut matrices = Vec::new();
    let mut notices = Vec::new();
    'next: for (t, assign) in assignments.iter().enumerate() {
        for cond in &fam.nonvanishing {
            if cond.evaluate(assign)?.is_zero() {
                notices.push(format!(
                    "assignment {t}: skipped — nonvanishing condition `{cond}` vanishes"
                ));
                continue 'next;
            }
        }
        let mut m = Matrix::zero(n, n);
        let mut lambda = BTreeMap::new();
        for row in 0..n {
            for col in 0..n {
                let v = self::evaluate_entry(&fam.entries[row][col], assign)?;
                lambda.insert(lambda_name(col, row, n), v.clone());
                m.set(row, col, v);
            }
        }
        let mut ok = true;
        for eq in automorphism_equations_labeled(a) {
            if !eq.poly.substitute(&lambda)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            matrices.push(m);
        } else {
            notices.push(format!(
                "assignment {t}: skipped — matrix fails the automorphism equations"
            ));
        }
    }
    Ok(SampleReport { matrices, notices })
}

fn evaluate_entry(p: &Polynomial, assign: &BTreeMap<String, Rational>) -> Result<Scalar> {
    Ok(Scalar::from_rational(p.evaluate(assign)?))
}
