//! Distinguished classes in `H*(M)`: conormal varieties of linear spaces, classes of
//! varieties and k-distributions from their characteristic numbers, and the pencil
//! classes `[S_{H_i}]`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::CalcError;
use crate::ring::{AmbientDim, RingElement};

fn out_of_range(name: &'static str, value: i64, min: i64, max: i64) -> CalcError {
    CalcError::OutOfRange {
        name,
        value,
        min,
        max,
    }
}

/// Characteristic numbers `(a_1, ..., a_n)` of a subvariety `V ⊆ P^n` of dimension `q`,
/// the coefficients of `[Con(V)] = Σ a_i h^i ȟ^{n-i}`. `a_0 = 0` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharNumbers {
    n: AmbientDim,
    q: u32,
    a: Vec<BigInt>,
}

impl CharNumbers {
    /// `a` lists `a_1, ..., a_n`. Signs are not restricted: linear spaces have
    /// alternating characteristic numbers. Use [`CharNumbers::warnings`] to flag data
    /// that cannot come from an actual variety.
    pub fn new(n: AmbientDim, q: u32, a: Vec<BigInt>) -> Result<Self, CalcError> {
        let nn = n.get();
        if q >= nn {
            return Err(out_of_range("q", q.into(), 0, i64::from(nn) - 1));
        }
        if a.len() != nn as usize {
            return Err(CalcError::Length {
                name: "a",
                expected: nn as usize,
                found: a.len(),
            });
        }
        Ok(CharNumbers { n, q, a })
    }

    pub fn dim(&self) -> AmbientDim {
        self.n
    }

    /// Dimension of the variety.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// `a_i`, with `a_0 = 0`.
    pub fn a(&self, i: u32) -> BigInt {
        match i {
            0 => BigInt::zero(),
            i => self.a[i as usize - 1].clone(),
        }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.a
    }

    /// Human-readable problems: nonpositive degree or negative polar degrees.
    pub fn warnings(&self) -> Vec<alloc::string::String> {
        use alloc::format;
        let mut out = Vec::new();
        let deg = degree_of_variety(self);
        if !deg.is_positive() {
            out.push(format!("degree {deg} is not positive"));
        }
        for j in 1..=self.q {
            let d = self.a(self.n.get() - self.q + j) + self.a(self.n.get() - self.q + j - 1);
            if d.is_negative() {
                out.push(format!("polar degree deg P_{j} = {d} is negative"));
            }
        }
        out
    }
}

/// Characteristic numbers `(d_0, ..., d_p)` of a k-distribution of dimension `p` on `P^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WebCharNumbers {
    n: AmbientDim,
    p: u32,
    d: Vec<BigInt>,
}

impl WebCharNumbers {
    /// `d` lists `d_0, ..., d_p`; `d_0` is the number `k` of planes through a generic point.
    pub fn new(n: AmbientDim, p: u32, d: Vec<BigInt>) -> Result<Self, CalcError> {
        let nn = n.get();
        if p == 0 || p >= nn {
            return Err(out_of_range("p", p.into(), 1, i64::from(nn) - 1));
        }
        if d.len() != p as usize + 1 {
            return Err(CalcError::Length {
                name: "d",
                expected: p as usize + 1,
                found: d.len(),
            });
        }
        if !d[0].is_positive() {
            return Err(CalcError::Invalid(alloc::format!(
                "d0 = k must be positive, got {}",
                d[0]
            )));
        }
        if let Some(neg) = d.iter().find(|v| v.is_negative()) {
            return Err(CalcError::Invalid(alloc::format!(
                "characteristic numbers of a distribution are nonnegative, got {neg}"
            )));
        }
        Ok(WebCharNumbers { n, p, d })
    }

    pub fn dim(&self) -> AmbientDim {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> &BigInt {
        &self.d[0]
    }

    /// `d_1 = deg(W)`.
    pub fn degree(&self) -> &BigInt {
        &self.d[1]
    }

    pub fn d(&self, i: u32) -> &BigInt {
        &self.d[i as usize]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.d
    }
}

/// `[Con(P^j)] = Σ_{t=0}^{j} (-1)^{j-t} h^{n-t} ȟ^t` for a linear `P^j ⊆ P^n`.
pub fn conormal_linear(j: u32, n: AmbientDim) -> Result<RingElement, CalcError> {
    let nn = n.get();
    if j >= nn {
        return Err(out_of_range("j", j.into(), 0, i64::from(nn) - 1));
    }
    let mut class = RingElement::zero(n);
    for t in 0..=j {
        let sign = if (j - t).is_multiple_of(2) { 1 } else { -1 };
        let term = RingElement::monomial(n, nn - t, t).scale(&BigInt::from(sign));
        class = &class + &term;
    }
    Ok(class)
}

/// `[Con(V)] = a_n h^n + a_{n-1} h^{n-1} ȟ + ... + a_1 h ȟ^{n-1}`.
pub fn variety_class(c: &CharNumbers) -> RingElement {
    let n = c.n;
    let nn = n.get();
    (1..=nn).fold(RingElement::zero(n), |acc, i| {
        &acc + &RingElement::monomial(n, i, nn - i).scale(&c.a(i))
    })
}

/// `[S_W] = d_p h^p + ... + d_1 h ȟ^{p-1} + d_0 ȟ^p`.
pub fn web_class(w: &WebCharNumbers) -> RingElement {
    let n = w.n;
    (0..=w.p).fold(RingElement::zero(n), |acc, i| {
        &acc + &RingElement::monomial(n, i, w.p - i).scale(w.d(i))
    })
}

/// Integrates a homogeneous degree-`p` class against `[Con(P^{n-p-1+i})]·h^{n-p-1}` for
/// `i = 0..=p`. No sign or positivity checks: any integer class is accepted.
pub fn web_characteristic_vector(s: &RingElement, p: u32) -> Result<Vec<BigInt>, CalcError> {
    let n = s.dim();
    let nn = n.get();
    if p == 0 || p >= nn {
        return Err(out_of_range("p", p.into(), 1, i64::from(nn) - 1));
    }
    if !s.is_zero() && s.homogeneous_degree() != Some(p) {
        return Err(CalcError::NotHomogeneous { expected: p });
    }
    let h_power = RingElement::monomial(n, nn - p - 1, 0);
    let with_h = s * &h_power;
    (0..=p)
        .map(|i| Ok((&with_h * &conormal_linear(nn - p - 1 + i, n)?).integrate()))
        .collect()
}

/// Recovers `d_0, ..., d_p` from a class `[S_W]` by integration; checks `d_0 = k` when `k`
/// is supplied.
pub fn char_numbers_from_web_class(
    s: &RingElement,
    p: u32,
    k: Option<&BigInt>,
) -> Result<WebCharNumbers, CalcError> {
    let d = web_characteristic_vector(s, p)?;
    if let Some(k) = k {
        if &d[0] != k {
            return Err(CalcError::KMismatch {
                expected: k.clone(),
                found: d[0].clone(),
            });
        }
    }
    WebCharNumbers::new(s.dim(), p, d)
}

/// `deg(V) = a_{n-q} + a_{n-q-1}`.
pub fn degree_of_variety(c: &CharNumbers) -> BigInt {
    let top = c.n.get() - c.q;
    c.a(top) + c.a(top - 1)
}

/// `[S_{H_i}] = ȟ^{n-i+1}` where `H_i` is the family of hyperplanes through a codimension-`i`
/// linear space.
pub fn pencil_class(i: u32, n: AmbientDim) -> Result<RingElement, CalcError> {
    let nn = n.get();
    if i == 0 || i > nn + 1 {
        return Err(out_of_range("i", i.into(), 1, i64::from(nn) + 1));
    }
    Ok(RingElement::monomial(n, 0, nn + 1 - i))
}

/// Characteristic numbers of a smooth hypersurface of degree `d`, from the polar degrees
/// `a_{j+1} + a_j = d (d-1)^j`.
pub fn smooth_hypersurface_char_numbers(
    d: impl Into<BigInt>,
    n: AmbientDim,
) -> Result<CharNumbers, CalcError> {
    let d = d.into();
    if d < BigInt::one() {
        return Err(CalcError::Invalid(alloc::format!(
            "hypersurface degree must be at least 1, got {d}"
        )));
    }
    let nn = n.get();
    let mut a = Vec::with_capacity(nn as usize);
    let mut prev = BigInt::zero();
    let mut polar = d.clone();
    let step = &d - 1u32;
    for _ in 0..nn {
        let next = &polar - &prev;
        a.push(next.clone());
        prev = next;
        polar *= &step;
    }
    CharNumbers::new(n, nn - 1, a)
}

/// Degree of the twisting line bundle `L = O(deg(W) + k(n-p) + k)` of the form defining a
/// k-distribution.
pub fn twist_degree(
    k: &BigInt,
    p: u32,
    n: AmbientDim,
    deg_w: &BigInt,
) -> Result<BigInt, CalcError> {
    let nn = n.get();
    if !k.is_positive() {
        return Err(CalcError::Invalid(alloc::format!(
            "k must be positive, got {k}"
        )));
    }
    if p == 0 || p >= nn {
        return Err(out_of_range("p", p.into(), 1, i64::from(nn) - 1));
    }
    if deg_w.is_negative() {
        return Err(CalcError::Invalid(alloc::format!(
            "deg(W) must be nonnegative, got {deg_w}"
        )));
    }
    Ok(deg_w + k * BigInt::from(nn - p) + k)
}
