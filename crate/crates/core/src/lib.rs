//! Exact intersection calculus on the projectivized cotangent bundle `M = P(T*P^n)`.
//!
//! * [`ring`]: the cohomology ring `H*(M)` with canonical reduction and integration.
//! * [`classes`]: conormal classes, classes of varieties and k-distributions built from
//!   their characteristic numbers, pencil classes.
//! * [`polar`]: polar degrees, invariance inequalities, non-invariance certificates and
//!   degree bounds for smooth invariant hypersurfaces.
//! * [`web`]: a desk-scale lab that measures the same numbers on explicit plane webs
//!   `F(x, y, p) = 0`, built on [`poly`] and [`resultant`].
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod classes;
pub mod error;
pub mod polar;
pub mod poly;
pub mod resultant;
pub mod ring;
pub mod web;

pub use num_bigint::BigInt;

pub use classes::{
    char_numbers_from_web_class, conormal_linear, degree_of_variety, pencil_class,
    smooth_hypersurface_char_numbers, twist_degree, variety_class, web_characteristic_vector,
    web_class, CharNumbers, WebCharNumbers,
};
pub use error::{CalcError, LabError};
pub use polar::{
    certify_noninvariance, hypersurface_degree_bound, invariance_inequalities,
    polar_degree_variety, polar_degree_variety_by_integration, polar_degree_web,
    polar_degree_web_by_integration, DegreeBound, HypersurfaceBounds, InequalityEntry,
    InequalityReport, Verdict,
};
pub use poly::{gcd, MultiPoly, Var};
pub use resultant::{discriminant, resultant};
pub use ring::{reduce, xi_class, AmbientDim, RingElement};
pub use web::{AffineLine, ImplicitWeb, LabReport, Sampler, Tangency};
