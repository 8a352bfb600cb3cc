//! Polar-class degrees, the invariance inequalities between a variety and a k-distribution,
//! and degree bounds for smooth invariant hypersurfaces.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::classes::{pencil_class, variety_class, web_class, CharNumbers, WebCharNumbers};
use crate::error::CalcError;
use crate::ring::RingElement;

/// `deg P^V_j = a_{n-q+j} + a_{n-q+j-1}` for `0 <= j <= q`.
pub fn polar_degree_variety(c: &CharNumbers, j: u32) -> Result<BigInt, CalcError> {
    if j > c.q() {
        return Err(CalcError::OutOfRange {
            name: "j",
            value: j.into(),
            min: 0,
            max: c.q().into(),
        });
    }
    let top = c.dim().get() - c.q() + j;
    let closed = c.a(top) + c.a(top - 1);
    debug_assert_eq!(
        Ok(&closed),
        polar_degree_variety_by_integration(c, j).as_ref()
    );
    Ok(closed)
}

/// `deg P^V_j = ∫ [Con(V)]·[S_{H_{q-j+2}}]·h^{q-j}`.
pub fn polar_degree_variety_by_integration(c: &CharNumbers, j: u32) -> Result<BigInt, CalcError> {
    let n = c.dim();
    if j > c.q() {
        return Err(CalcError::OutOfRange {
            name: "j",
            value: j.into(),
            min: 0,
            max: c.q().into(),
        });
    }
    let pencil = pencil_class(c.q() - j + 2, n)?;
    let h = RingElement::monomial(n, c.q() - j, 0);
    Ok((&(&variety_class(c) * &pencil) * &h).integrate())
}

fn check_web_index(w: &WebCharNumbers, s: u32) -> Result<(), CalcError> {
    if s == 0 || s > w.p() {
        return Err(CalcError::OutOfRange {
            name: "s",
            value: s.into(),
            min: 1,
            max: w.p().into(),
        });
    }
    Ok(())
}

/// `deg P^W_s = d_s + d_{s-1}` for `1 <= s <= p`.
pub fn polar_degree_web(w: &WebCharNumbers, s: u32) -> Result<BigInt, CalcError> {
    check_web_index(w, s)?;
    let closed = w.d(s) + w.d(s - 1);
    debug_assert_eq!(Ok(&closed), polar_degree_web_by_integration(w, s).as_ref());
    Ok(closed)
}

/// `deg P^W_s = ∫ [S_W]·[S_{H_{p-s+2}}]·h^{n-s}`.
pub fn polar_degree_web_by_integration(w: &WebCharNumbers, s: u32) -> Result<BigInt, CalcError> {
    check_web_index(w, s)?;
    let n = w.dim();
    let pencil = pencil_class(w.p() - s + 2, n)?;
    let h = RingElement::monomial(n, n.get() - s, 0);
    Ok((&(&web_class(w) * &pencil) * &h).integrate())
}

/// One `(m, j)` instance of `deg P^V_{q-p-j+m} <= deg P^V_{q-p-j} · deg P^W_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityEntry {
    pub m: u32,
    pub j: u32,
    /// `deg P^V_{q-p-j+m}`.
    pub lhs: BigInt,
    /// `deg P^V_{q-p-j} · (d_m + d_{m-1})`.
    pub rhs: BigInt,
    pub holds: bool,
    /// Set for `j > 0`: the inequality needs `P^V_{q-p-j+m} ⊆ P^W_m`, which the caller
    /// has to assert.
    pub conditional: bool,
    /// The denominator polar degree `deg P^V_{q-p-j}` is zero; the entry carries no
    /// information.
    pub vacuous: bool,
}

impl InequalityEntry {
    /// A failed entry that certifies non-invariance on its own.
    pub fn is_unconditional_failure(&self) -> bool {
        !self.holds && !self.conditional && !self.vacuous
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    /// Ordered by `m`, then `j`.
    pub entries: Vec<InequalityEntry>,
}

impl InequalityReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds || e.vacuous)
    }
}

fn check_pair(c: &CharNumbers, w: &WebCharNumbers) -> Result<(), CalcError> {
    if c.dim() != w.dim() {
        return Err(CalcError::DimensionMismatch {
            left: c.dim().get(),
            right: w.dim().get(),
        });
    }
    if c.q() < w.p() {
        return Err(CalcError::InvariantDimension { q: c.q(), p: w.p() });
    }
    Ok(())
}

/// Evaluates the invariance inequalities for every `m in 1..=p` and `j = 0` (or every
/// `j in 0..=q-p` when `include_conditional`). The quotient form is cross-multiplied so
/// everything stays in the integers.
pub fn invariance_inequalities(
    c: &CharNumbers,
    w: &WebCharNumbers,
    include_conditional: bool,
) -> Result<InequalityReport, CalcError> {
    check_pair(c, w)?;
    let (q, p) = (c.q(), w.p());
    let max_j = if include_conditional { q - p } else { 0 };
    let mut entries = Vec::new();
    for m in 1..=p {
        let web = polar_degree_web(w, m)?;
        for j in 0..=max_j {
            let lhs = polar_degree_variety(c, q - p - j + m)?;
            let denominator = polar_degree_variety(c, q - p - j)?;
            let vacuous = denominator.is_zero();
            let rhs = denominator * &web;
            entries.push(InequalityEntry {
                m,
                j,
                holds: lhs <= rhs,
                lhs,
                rhs,
                conditional: j > 0,
                vacuous,
            });
        }
    }
    Ok(InequalityReport { entries })
}

/// Outcome of testing a variety against a distribution with the `j = 0` inequalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Some unconditional inequality fails, so `V` cannot be invariant.
    NotInvariant { witness: InequalityEntry },
    /// All unconditional inequalities hold; they are necessary conditions only.
    Inconclusive,
}

pub fn certify_noninvariance(c: &CharNumbers, w: &WebCharNumbers) -> Result<Verdict, CalcError> {
    let report = invariance_inequalities(c, w, false)?;
    Ok(report
        .entries
        .into_iter()
        .find(InequalityEntry::is_unconditional_failure)
        .map_or(Verdict::Inconclusive, |witness| Verdict::NotInvariant {
            witness,
        }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBound {
    pub m: u32,
    /// `d_m + d_{m-1}`.
    pub polar_degree: BigInt,
    /// Largest `d` with `(d - 1)^m <= d_m + d_{m-1}`.
    pub bound: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypersurfaceBounds {
    pub per_m: Vec<DegreeBound>,
    pub overall: BigInt,
}

/// Largest `r >= 0` with `r^m <= value`; exact integer root.
fn integer_root(value: &BigInt, m: u32) -> BigInt {
    if value <= &BigInt::zero() {
        return BigInt::zero();
    }
    let root = value.nth_root(m);
    debug_assert!(root.pow(m) <= *value && (&root + 1u32).pow(m) > *value);
    root
}

/// Degree bounds for a smooth hypersurface invariant by `w`: for each `m`, the largest `d`
/// with `(d-1)^m <= d_m + d_{m-1}`, and their minimum.
pub fn hypersurface_degree_bound(w: &WebCharNumbers) -> HypersurfaceBounds {
    let per_m: Vec<DegreeBound> = (1..=w.p())
        .map(|m| {
            let polar_degree = w.d(m) + w.d(m - 1);
            let bound = integer_root(&polar_degree, m) + BigInt::one();
            DegreeBound {
                m,
                polar_degree,
                bound,
            }
        })
        .collect();
    debug_assert_eq!(per_m[0].bound, w.k() + w.degree() + 1u32);
    let overall = per_m.iter().map(|b| b.bound.clone()).min().expect("p >= 1");
    HypersurfaceBounds { per_m, overall }
}
