//! Mean values and variances of factorization functions over F_q[T].
//!
//! The crate computes, at desk scale, exact data for the polynomial-ring
//! analogues of short-interval and arithmetic-progression averages:
//!
//! - exact F_q and F_q[T] arithmetic, enumeration, and factorization
//!   ([`field`], [`poly`], [`census`]);
//! - Hayes characters: the relation R_{l,M} identifying monic polynomials by
//!   their first l next-to-leading coefficients and their residue mod M, its
//!   unit group, character group, orthogonality, and GAP sets ([`hayes`]);
//! - L-functions of Hayes characters, their inverse roots, and numerical
//!   checks of the Riemann hypothesis |gamma| in {1, sqrt(q)} ([`lfunc`]);
//! - partitions, monomial/power-sum symmetric polynomials, brick tabloids and
//!   the m-to-p base-change coefficients ([`symcomb`]);
//! - the explicit character-sum bound machinery: per-type exponential sums,
//!   majorant generating functions and the auxiliary inequalities ([`expsum`]);
//! - factorization-function registry, means and variances over short
//!   intervals, arithmetic progressions and GAP sets, computed both by brute
//!   force and by the character formula ([`meanval`]);
//! - the one-shot verification suites behind `ffmv verify` ([`verify`]).

pub mod budget;
pub mod census;
pub mod error;
pub mod field;
pub mod hayes;
pub mod lfunc;
pub mod meanval;
pub mod poly;
pub mod symcomb;
pub mod unity;
pub mod verify;

pub mod expsum;

pub use error::{Error, Result};
