//! Exact algebra of Toeplitz matrices over the Hamilton quaternions ℍ and the
//! Segre commutative quaternions 𝕊.
//!
//! The crate covers displacement structure (`T − ΓTΓ*`), the rank-one
//! description of products of Toeplitz matrices, zero-product
//! classification, κ-adjoint normality over 𝕊, and the χ₁ complex
//! representation. Every structural statement has a brute-force dense
//! counterpart in [`oracle`], and [`verify`] runs seeded campaigns that
//! compare the two exactly.
//!
//! All algebra is generic over the component type (see [`scalar::Real`]);
//! the aliases below fix the common choices.

pub mod complex_rep;
pub mod error;
pub mod hamilton;
pub mod io;
pub mod matrix;
pub mod normality;
pub mod oracle;
pub mod product;
pub mod sample;
pub mod scalar;
pub mod segre;
pub mod toeplitz;
pub mod verify;

pub use error::{Error, Result};
pub use hamilton::Hamilton;
pub use matrix::{Mat, Vect};
pub use scalar::{Field, Int, Involutive, Kappa, Quaternion, Real, Ring};
pub use segre::{Segre, SegreConj};
pub use toeplitz::ToeplitzGen;

/// Arbitrary-precision rational, the default exact component type.
pub type Rational = num_rational::BigRational;

/// Exact Hamilton quaternion.
pub type HQuat = Hamilton<Rational>;
/// Exact Segre commutative quaternion.
pub type SQuat = Segre<Rational>;
/// Exact complex number, the entry type of χ / χ₁ images.
pub type CplxPair = num_complex::Complex<Rational>;

/// Integer-valued Hamilton quaternion with checked arithmetic.
pub type HQuatInt = Hamilton<Int>;
/// Integer-valued Segre quaternion with checked arithmetic.
pub type SQuatInt = Segre<Int>;

pub type HQuat64 = Hamilton<f64>;
pub type SQuat64 = Segre<f64>;
pub type HQuat32 = Hamilton<f32>;
pub type SQuat32 = Segre<f32>;
