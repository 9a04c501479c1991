//! Exact verification and construction toolkit for Hom-type superalgebras.
//!
//! `hnk` works with finite-dimensional ℤ₂-graded algebras presented by
//! structure constants over the rationals. It checks the twisted ("Hom")
//! identities of Hom-associative, Hom-Lie, Hom-Poisson and n-ary Hom-Nambu
//! superalgebras, builds new structures from old ones (commutator brackets,
//! Rota–Baxter twists, cochain-induced n-ary brackets, reductions,
//! semidirect products, induced representations) and reports an exact
//! counterexample whenever an identity fails.
//!
//! All arithmetic is exact: scalars are arbitrary-precision rationals and
//! identities are compared with `==`. Every check quantifies over basis
//! tuples, which is equivalent to checking all homogeneous elements by
//! multilinearity.
//!
//! ```
//! use hnk::fixtures;
//! use hnk::binary::check_hom_lie;
//!
//! let lie = fixtures::odd_square_lie(hnk::scalar::int(1));
//! assert!(check_hom_lie(&lie).passed());
//! ```

pub mod binary;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod file;
pub mod fixtures;
pub mod graded;
pub mod nary;
pub mod report;
pub mod representations;
pub mod scalar;

pub use error::Error;
pub use graded::{Cochain, LinearMap, MultiLinearMap, Parity, SuperSpace, Vector};
pub use report::{CheckReport, Verdict, Witness};
pub use scalar::Scalar;
