//! Exact computation of the discrete invariants attached to moduli of
//! principal bundles on a curve: fundamental groups of reductive groups,
//! Néron–Severi lattices of the moduli stacks, the induced maps between
//! them, and Dynkin indices.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in this crate. The generic linear
//! algebra layer ([`matrix`], [`linalg`]) is scalar-type-agnostic via
//! `num-traits`; the domain layer instantiates it at the aliases below.
//!
//! The main entry points are:
//!
//! - [`catalog::catalog`] and [`root_data::build_root_datum`] to obtain a
//!   reductive group presented by its root datum,
//! - [`root_data::derive`] for the derived lattice chain and `pi1`,
//! - [`ns::ns_reductive`] for the Néron–Severi lattice of a component of
//!   the moduli stack,
//! - [`functorial`] for pullback maps and Dynkin indices,
//! - [`oracle`] for the independent brute-force cross-checks.

pub mod cartan;
pub mod catalog;
pub mod curve;
pub mod descriptor;
pub mod error;
pub mod functorial;
pub mod hom;
pub mod lattice;
pub mod linalg;
pub mod matrix;
pub mod ns;
pub mod oracle;
pub mod report;
pub mod root_data;

/// Exact integer scalar used by the domain layer.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar used by the domain layer.
pub type Rat = num_rational::Ratio<Int>;
/// Integer matrix over [`Int`].
pub type IntMat = matrix::Mat<Int>;
/// Rational matrix over [`Rat`].
pub type RatMat = matrix::Mat<Rat>;

pub use error::Error;

/// Convenience constructor for [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Convenience constructor for [`Rat`] from a numerator/denominator pair.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
