//! Subgeometric convergence-rate machinery for adaptive MCMC.
//!
//! The crate is organized around four pieces:
//!
//! - [`rates`]: concave rate functions `phi`, the transform
//!   `H_{w0,phi}(w) = ∫_{w0}^w dv/phi(v)`, its inverse, and the derived
//!   function `r(s) = phi(H^{-1}(s))`.
//! - [`bounds`]: explicit total-variation lower bounds from tail/growth
//!   certificates, upper bounds under quantitative diminishing adaptation
//!   with a full constant ledger, and the specialized bound calculators
//!   for the three studied sampler families.
//! - [`samplers`]: the adaptive process engine (parameter update, then
//!   state update) with the independence Metropolis-Hastings, unadjusted
//!   Langevin, and covariance-adaptive random-walk Metropolis families.
//! - [`oracle`]: independent verification machinery — an exact quadrature
//!   transition operator for the 1-D independence sampler (exact marginals
//!   and TV distance), plus closed-form/quadrature/Monte Carlo checkers
//!   for the growth, drift, contraction, and diminishing conditions.

pub mod bounds;
pub mod error;
pub mod oracle;
pub mod rates;
pub mod samplers;

pub use error::{Error, Result};
pub use rates::{HTransform, RateFunction};
