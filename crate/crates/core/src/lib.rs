//! Higher-depth zeta-regularized determinants of shifted sphere
//! Laplacians, computed through Barnes and Milnor multiple gamma functions.
//!
//! The crate has an exact layer over `Q` ([`exact`], [`poly`], [`sphere`])
//! and a multiprecision numeric layer ([`real`], [`hurwitz`],
//! [`multigamma`], [`spectral`]). [`oracle`] holds independent
//! recomputations used to validate the main pipeline.

pub mod error;
pub mod exact;
mod memo;
pub mod poly;
pub mod real;
pub mod sphere;
pub mod hurwitz;
pub mod multigamma;
pub mod oracle;
pub mod spectral;

pub use error::{Error, Result};
pub use poly::RationalPolynomial;
pub use real::{Arg, EMConfig, Real};
