//! Exact computations for cyclic product-quotient surfaces: singularities and
//! their resolutions, numerical invariants, tangent-sheaf cohomology counts,
//! abelian-cover building data and determinantal smoothing certificates.

pub mod cli;
pub mod curvecover;
pub mod error;
pub mod exactnum;
pub mod linalg;
pub mod pardini;
pub mod polyring;
pub mod pqsurface;
pub mod scenario;
pub mod tangentcoh;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::Fraction;
