//! Sparse multivariate polynomials over the integers in the variables `x, y, p, t, u`.
//!
//! Monomials are ordered lexicographically with `x > y > p > t > u`; the leading term is
//! the lex-largest one.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub const NVARS: usize = 5;

/// Exponent vector indexed by [`Var::index`].
pub type Monomial = [u32; NVARS];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    /// Slope `dy/dx`.
    P,
    T,
    U,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::P, Var::T, Var::U];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::P => 'p',
            Var::T => 't',
            Var::U => 'u',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

fn add_term(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(m).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        terms.remove(&m);
    }
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = *a;
    for (o, e) in out.iter_mut().zip(b) {
        *o += e;
    }
    out
}

/// `a / b` if `b` divides `a`.
fn mono_div(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    let mut out = [0; NVARS];
    for i in 0..NVARS {
        out[i] = a[i].checked_sub(b[i])?;
    }
    Some(out)
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term([0; NVARS], c)
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = 1;
        Self::term(m, 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, m, c.into());
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in iter {
            add_term(&mut terms, m, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is a constant (zero included).
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m[v.index()]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m[v.index()] > 0)
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.contains(v)).collect()
    }

    /// Smallest exponent of `v` over all terms.
    pub fn valuation_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m[v.index()]).min().unwrap_or(0)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Coefficients of `v^0, v^1, ...` as polynomials free of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = core::mem::take(&mut rest[v.index()]);
            add_term(&mut out[e as usize].terms, rest, c.clone());
        }
        out
    }

    /// Inverse of [`MultiPoly::coeffs_in`]: `Σ coeffs[i] v^i`.
    pub fn from_coeffs_in(v: Var, coeffs: &[MultiPoly]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, poly) in coeffs.iter().enumerate() {
            for (m, c) in &poly.terms {
                let mut m = *m;
                m[v.index()] += i as u32;
                add_term(&mut terms, m, c.clone());
            }
        }
        MultiPoly { terms }
    }

    /// Leading coefficient with respect to `v`.
    pub fn lead_coeff_in(&self, v: Var) -> MultiPoly {
        self.coeffs_in(v).pop().unwrap_or_default()
    }

    /// Replaces `v` by `value` (Horner in `v`).
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Self {
        self.coeffs_in(v)
            .iter()
            .rev()
            .fold(MultiPoly::zero(), |acc, c| &(&acc * value) + c)
    }

    /// Evaluates every listed variable at an integer.
    pub fn evaluate(&self, assignment: &[(Var, BigInt)]) -> Self {
        assignment.iter().fold(self.clone(), |acc, (v, val)| {
            acc.substitute(*v, &MultiPoly::constant(val.clone()))
        })
    }

    pub fn derivative(&self, v: Var) -> Self {
        let i = v.index();
        MultiPoly::from_terms(self.terms.iter().filter(|(m, _)| m[i] > 0).map(|(m, c)| {
            let mut m2 = *m;
            m2[i] -= 1;
            (m2, c * BigInt::from(m[i]))
        }))
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut m2 = *m;
            m2.swap(a.index(), b.index());
            (m2, c.clone())
        }))
    }

    /// Nonnegative gcd of the integer coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        let content = self.content();
        if content.is_zero() {
            return Self::zero();
        }
        let sign = match self.leading_term() {
            Some((_, c)) if c.is_negative() => -content,
            _ => content,
        };
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c / &sign)).collect(),
        }
    }

    /// Makes the leading coefficient positive.
    pub fn normalized(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// `self / d` over the integers, or `None` when `d` does not divide `self` exactly.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.clone();
        let mut quotient = MultiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let shift = mono_div(m, &dm)?;
            let (q, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let t = MultiPoly::term(shift, q);
            rem = &rem - &(&t * d);
            quotient = &quotient + &t;
        }
        Some(quotient)
    }

    /// Whether `d` divides `self` in `Q[x, y, p, t, u]`.
    ///
    /// A single polynomial is a Gröbner basis of the ideal it generates, so the remainder
    /// of lex division is zero exactly when `d` divides; the remainder is scaled by
    /// integers as it goes, which does not change whether it vanishes.
    pub fn is_divisible_by(&self, d: &MultiPoly) -> bool {
        let Some((dm, dc)) = d.leading_term() else {
            return self.is_zero();
        };
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.primitive_part();
        while let Some((m, c)) = rem.leading_term() {
            let Some(shift) = mono_div(m, &dm) else {
                return false;
            };
            let g = c.gcd(&dc);
            let t = MultiPoly::term(shift, c / &g);
            rem = (&rem.scale(&(&dc / &g)) - &(&t * d)).primitive_part();
        }
        true
    }

    /// Pseudo-remainder of `self` by `b` with respect to `v`:
    /// `lc_v(b)^(deg self - deg b + 1) · self = q·b + r` with `deg_v r < deg_v b`.
    pub fn pseudo_rem(&self, b: &MultiPoly, v: Var) -> MultiPoly {
        let db = b.degree_in(v);
        let lc = b.lead_coeff_in(v);
        let mut r = self.clone();
        let mut steps = (self.degree_in(v) + 1).saturating_sub(db);
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let mut shift = [0; NVARS];
            shift[v.index()] = dr - db;
            let t = &r.lead_coeff_in(v) * &MultiPoly::term(shift, 1);
            r = &(&lc * &r) - &(&t * b);
            steps -= 1;
        }
        &lc.pow(steps) * &r
    }

    fn content_in(&self, v: Var) -> MultiPoly {
        self.coeffs_in(v)
            .iter()
            .fold(MultiPoly::zero(), |g, c| gcd(&g, c))
    }

    fn primitive_in(&self, v: Var) -> MultiPoly {
        let content = self.content_in(v);
        self.exact_div(&content).expect("content divides")
    }
}

/// Greatest common divisor in `Z[x, y, p, t, u]`, normalized to a positive leading
/// coefficient. Recursive primitive remainder sequences, one variable at a time.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let v = match Var::ALL
        .into_iter()
        .find(|&v| a.contains(v) || b.contains(v))
    {
        Some(v) => v,
        None => return MultiPoly::constant(a.content().gcd(&b.content())),
    };
    let (ca, cb) = (a.content_in(v), b.content_in(v));
    let content = gcd(&ca, &cb);
    let mut f = a.exact_div(&ca).expect("content divides");
    let mut g = b.exact_div(&cb).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        core::mem::swap(&mut f, &mut g);
    }
    let primitive = loop {
        if g.is_zero() {
            break f.primitive_in(v);
        }
        if g.degree_in(v) == 0 {
            break MultiPoly::one();
        }
        let r = f.pseudo_rem(&g, v);
        f = g;
        g = if r.is_zero() { r } else { r.primitive_in(v) };
    };
    (&content * &primitive).normalized()
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, *m, c.clone());
        }
        MultiPoly { terms }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, *m, -c);
        }
        MultiPoly { terms }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                add_term(&mut terms, mono_mul(m1, m2), c1 * c2);
            }
        }
        MultiPoly { terms }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }

        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Writes one signed term like ` - 3*h^2*c`; the first term carries no leading `+`.
pub(crate) fn write_term<I>(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coef: &BigInt,
    factors: I,
) -> fmt::Result
where
    I: Iterator<Item = (char, u32)>,
{
    let factors: Vec<(char, u32)> = factors.filter(|(_, e)| *e > 0).collect();
    match (first, coef.is_negative()) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    let magnitude = coef.abs();
    let mut need_star = false;
    if !magnitude.is_one() || factors.is_empty() {
        write!(f, "{magnitude}")?;
        need_star = true;
    }
    for (name, e) in factors {
        if need_star {
            f.write_str("*")?;
        }
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
        need_star = true;
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    /// Graded: descending total degree, ties in descending lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(m1, _), (m2, _)| {
            let d1: u32 = m1.iter().sum();
            let d2: u32 = m2.iter().sum();
            (d2, *m2).cmp(&(d1, *m1))
        });
        for (idx, (m, c)) in ordered.into_iter().enumerate() {
            let factors = Var::ALL.into_iter().map(|v| (v.name(), m[v.index()]));
            write_term(f, idx == 0, c, factors)?;
        }
        Ok(())
    }
}
