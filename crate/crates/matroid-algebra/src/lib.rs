//! Exact arithmetic for the restriction-contraction coalgebra of
//! matroids and the algebra dual to it, specialized to the matroids
//! described by 0/1 words. The central computation expands products of
//! the two one-element classes (a point and a loop) over word classes
//! and certifies, bidegree by bidegree, that the expansion matrix is
//! invertible: the point and the loop generate a free subalgebra.
//!
//! Start with the runnable examples:
//!
//! - `word_matroids`: building matroids from 0/1 words and reading the
//!   word back off the matroid
//! - `coproducts`: restriction (x) contraction sums over all subsets
//! - `products`: the dual product, from point and loop powers to a
//!   three-point line times a doubled point
//! - `coefficient_matrix`: the triangular matrix behind freeness, plus
//!   its extension by a non-word class
//! - `freeness_certificates`: per-bidegree invertibility certificates
//! - `ordering_images`: rank-increment words over all insertion orders,
//!   principal and not
//! - `dominance_lattice`: the word order, meets, joins, and DOT output
//! - `dual_basis`: inverting the matrix into a deconcatenation basis
//! - `matroid_census`: isomorphism class counts against word counts
//! - `minors_and_duality`: restriction, contraction, closure, duals
//!
//! The `matroid-algebra` binary exposes the same operations as
//! subcommands; `matroid-algebra verify` runs the full verification
//! battery.

pub mod error;
pub mod family;
pub mod freedom;
pub mod freeness;
pub mod hopf;
pub mod iso;
pub mod lambda;
pub mod matroid;
pub mod perm;
pub mod subset;
pub mod verify;
pub mod word;

pub use error::{Axiom, Error, Result};
pub use matroid::{FlagSpec, Matroid, Validation};
