//! The cohomology ring of `M = P(T*P^n)`.
//!
//! `H*(M) = Z[h, ȟ] / (h^{n+1}, h^n - h^{n-1} ȟ + ... + (-1)^n ȟ^n)` where `h` and `ȟ`
//! pull back the hyperplane classes of `P^n` and its dual. Elements are kept in the
//! canonical basis `h^a ȟ^b` with `a <= n` and `b <= n - 1`, so equality of elements is
//! equality of coefficient maps. In ASCII output `ȟ` is written `c`.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::CalcError;

/// Dimension `n >= 1` of the projective space `P^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AmbientDim(u32);

impl AmbientDim {
    pub fn new(n: u32) -> Result<Self, CalcError> {
        if n == 0 {
            return Err(CalcError::ZeroDimension);
        }
        Ok(AmbientDim(n))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for AmbientDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exponent pair `(a, b)` of the monomial `h^a ȟ^b`.
pub type Exponents = (u32, u32);

/// An element of `H*(M)` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    n: AmbientDim,
    terms: BTreeMap<Exponents, BigInt>,
}

impl RingElement {
    pub fn zero(n: AmbientDim) -> Self {
        RingElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: AmbientDim) -> Self {
        Self::monomial(n, 0, 0)
    }

    pub fn h(n: AmbientDim) -> Self {
        Self::monomial(n, 1, 0)
    }

    /// The dual hyperplane class `ȟ`.
    pub fn check_h(n: AmbientDim) -> Self {
        Self::monomial(n, 0, 1)
    }

    /// `h^a ȟ^b`, reduced.
    pub fn monomial(n: AmbientDim, a: u32, b: u32) -> Self {
        reduce([((a, b), BigInt::one())], n)
    }

    /// Integer multiple of the identity.
    pub fn constant(n: AmbientDim, value: impl Into<BigInt>) -> Self {
        Self::one(n).scale(&value.into())
    }

    #[inline]
    pub fn dim(&self) -> AmbientDim {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the canonical monomial `h^a ȟ^b`.
    pub fn coefficient(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Canonical terms in ascending `(a, b)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// The common degree `a + b` of all terms, or `None` for zero or mixed elements.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|(a, b)| a + b);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        RingElement {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), CalcError> {
        if self.n != other.n {
            return Err(CalcError::DimensionMismatch {
                left: self.n.get(),
                right: other.n.get(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CalcError> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, *e, c.clone());
        }
        Ok(RingElement { n: self.n, terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CalcError> {
        self.checked_add(&-other)
    }

    /// Product: distribute, then reduce.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, CalcError> {
        self.check_same(other)?;
        let mut raw: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                accumulate(&mut raw, (a1 + a2, b1 + b2), c1 * c2);
            }
        }
        Ok(reduce(raw, self.n))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The integration functional `∫_M`: the coefficient of `h^n ȟ^{n-1}`, the only
    /// canonical monomial of top degree `2n - 1`.
    pub fn integrate(&self) -> BigInt {
        let n = self.n.get();
        self.coefficient(n, n - 1)
    }

    /// Multiplication by `ȟ` on canonical forms; needs at most one substitution per term.
    fn mul_check_h(&self) -> Self {
        let n = self.n.get();
        let mut terms = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            if b + 1 < n {
                accumulate(&mut terms, (a, b + 1), c.clone());
            } else {
                // ȟ^n = (-1)^{n+1} Σ_{i<n} (-1)^i h^{n-i} ȟ^i; terms with a + n - i > n die.
                for i in a..n {
                    let coef = if (n + 1 + i).is_multiple_of(2) {
                        c.clone()
                    } else {
                        -c
                    };
                    accumulate(&mut terms, (a + n - i, i), coef);
                }
            }
        }
        RingElement { n: self.n, terms }
    }
}

fn accumulate(terms: &mut BTreeMap<Exponents, BigInt>, e: Exponents, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(e).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        terms.remove(&e);
    }
}

/// Reduces a formal integer polynomial `Σ c_{a,b} h^a ȟ^b` to canonical form.
///
/// The raw polynomial is evaluated by Horner's rule in `ȟ`, so every step multiplies a
/// canonical element by `ȟ` and strictly lowers the pending `ȟ`-degree; powers of `h`
/// above `n` vanish.
pub fn reduce<I>(raw: I, n: AmbientDim) -> RingElement
where
    I: IntoIterator<Item = (Exponents, BigInt)>,
{
    let nn = n.get();
    let mut by_check_degree: BTreeMap<u32, BTreeMap<Exponents, BigInt>> = BTreeMap::new();
    for ((a, b), c) in raw {
        if a > nn || c.is_zero() {
            continue;
        }
        accumulate(by_check_degree.entry(b).or_default(), (a, 0), c);
    }
    let Some(&top) = by_check_degree.keys().next_back() else {
        return RingElement::zero(n);
    };
    let mut acc = RingElement::zero(n);
    for b in (0..=top).rev() {
        if b != top {
            acc = acc.mul_check_h();
        }
        if let Some(slice) = by_check_degree.remove(&b) {
            for (e, c) in slice {
                accumulate(&mut acc.terms, e, c);
            }
        }
    }
    acc
}

/// The class `ξ = c_1(O_M(-1)) = -h - ȟ`.
pub fn xi_class(n: AmbientDim) -> RingElement {
    -&(&RingElement::h(n) + &RingElement::check_h(n))
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        RingElement {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        -&self
    }
}

// Operator forms panic on a dimension mismatch; use the `checked_*` methods when the
// operands come from user input.
macro_rules! ring_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RingElement> for &RingElement {
            type Output = RingElement;

            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs)
                    .expect("ring elements over different P^n")
            }
        }

        impl $trait<RingElement> for RingElement {
            type Output = RingElement;

            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
    };
}

ring_binop!(Add, add, checked_add);
ring_binop!(Sub, sub, checked_sub);
ring_binop!(Mul, mul, checked_mul);

impl fmt::Display for RingElement {
    /// Terms by descending total degree, ties broken by descending `ȟ`-power; `ȟ` prints as `c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: alloc::vec::Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|((a1, b1), _), ((a2, b2), _)| (a2 + b2, b2).cmp(&(a1 + b1, b1)));
        for (idx, ((a, b), c)) in ordered.into_iter().enumerate() {
            let factors = [('h', *a), ('c', *b)];
            crate::poly::write_term(f, idx == 0, c, factors.iter().copied())?;
        }
        Ok(())
    }
}
