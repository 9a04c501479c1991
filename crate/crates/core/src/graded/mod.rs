//! Exact linear algebra over ℤ₂-graded spaces.
//!
//! This module provides the data every other module is built on:
//!
//! * [`Parity`] and [`SuperSpace`] — a finite ordered basis of homogeneous
//!   elements;
//! * [`Vector`], [`LinearMap`], [`MultiLinearMap`] and [`Cochain`] — dense
//!   exact-rational coordinates and structure constants;
//! * [`ParityBook`] and [`koszul_sign`] — the sign exponents `|X|`, `|X|ᵢʲ`,
//!   `|X|^{i−1}` and `γ_{ij}` used by the graded identities.

mod linear;
mod sign;
mod space;
mod tensor;

pub use linear::{maps_commute, LinearMap};
pub use sign::{koszul_sign, ParityBook, SignKind};
pub use space::{Parity, SuperSpace, Tuples, Vector};
pub use tensor::{is_even, Cochain, EvenMap, MultiLinearMap};

pub(crate) use linear::linear_map_evenness;
pub(crate) use tensor::{describe_tuple, multilinear_evenness};
