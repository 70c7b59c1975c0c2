//! nilpex — exact-arithmetic toolkit for classifying nilpotent algebras by
//! central extensions.
//!
//! The library mechanizes the cocycle method: given a nilpotent algebra `A`
//! of dimension `n` in a variety cut out by multilinear identities, one
//! computes the cocycle space `Z²(A)`, the coboundaries `B²(A)`, the second
//! cohomology `H² = Z²/B²`, the automorphism group action on `H²`, and then
//! builds `(n+m)`-dimensional central extensions from suitable tuples of
//! cohomology classes. All arithmetic is exact: rational numbers or rational
//! functions in named parameters, never floats.
//!
//! The crate is organized bottom-up:
//!
//! - [`arith`] — rationals, sparse multivariate polynomials, monomial orders,
//!   and the field of rational functions ([`arith::Scalar`]).
//! - [`linalg`] — dense exact matrices, RREF with case-split tracking,
//!   nullspaces, and subspace operations.
//! - [`algebra`] — algebras presented by structure constants, products of
//!   generic elements, identity checking, annihilators, nilpotency.
//! - [`identity`] — a small DSL for multilinear identities and their
//!   expansion into linear constraints on cocycles.
//! - [`cohomology`] — `Z²`, `B²`, `H²` as explicit spaces of bilinear forms.
//! - [`automorphism`] — polynomial equations for `Aut(A)`, a Gröbner basis
//!   engine, parametric solution families, and sampling.
//! - [`extension`] — the automorphism action on cocycles, annihilator
//!   intersection conditions, `T_m` membership, and central extensions.
//! - [`cli`] — the `nilpex` command-line front end.
//!
//! ```
//! use nilpex::algebra::Algebra;
//! use nilpex::identity::IdentitySet;
//! use nilpex::cohomology::compute_h2;
//!
//! let alg = Algebra::parse(
//!     "[algebra]\nname = demo\ndim = 3\n\n[product]\ne1*e1 = e2\ne1*e2 = e3\ne2*e1 = e3\n",
//! )
//! .unwrap();
//! let ids = IdentitySet::parse(
//!     "assoc : ((x*y)*z) - (x*(y*z))\n",
//! )
//! .unwrap();
//! let h2 = compute_h2(&alg, &ids).unwrap();
//! assert_eq!(h2.h2_reps.len(), 1);
//! ```

pub mod algebra;
pub mod arith;
pub mod automorphism;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod extension;
pub mod identity;
pub mod linalg;
mod render;

#[cfg(test)]
pub(crate) mod fixtures;

pub use error::{Error, Result};
