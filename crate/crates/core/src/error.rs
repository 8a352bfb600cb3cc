use alloc::string::String;
use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::Var;

/// Errors raised by the cohomology-ring, class and polar calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalcError {
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension mismatch: P^{left} vs P^{right}")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("{name} = {value} is out of range {min}..={max}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("{name} has length {found}, expected {expected}")]
    Length {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("class is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: u32 },
    #[error("recovered d0 = {found} but k = {expected}")]
    KMismatch { expected: BigInt, found: BigInt },
    #[error("invariant subvariety needs q >= p (q = {q}, p = {p})")]
    InvariantDimension { q: u32, p: u32 },
    #[error("{0}")]
    Invalid(String),
}

/// Errors raised by polynomial arithmetic and the plane-web lab.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial is constant in {0}")]
    ConstantIn(Var),
    #[error("variable {0} is not allowed here")]
    UnexpectedVariable(Var),
    #[error("web equation is not square-free in p")]
    NotSquareFree,
    #[error("p-coefficients share the factor {0}, so the singular set has codimension one")]
    SingularDivisor(String),
    #[error("restriction vanishes identically: the line is invariant or not generic")]
    DegenerateLine,
    #[error("resultant vanishes identically: the point is not generic")]
    DegeneratePoint,
    #[error("no two generic samples agreed after {attempts} attempts")]
    Exhausted { attempts: u32 },
    #[error("curve is constant")]
    ConstantCurve,
    #[error("curve is not reduced (both partials vanish on a component)")]
    NotReduced,
}
