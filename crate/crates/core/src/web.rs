//! Plane webs given by an implicit differential equation `F(x, y, p) = 0`, `p = dy/dx`.
//!
//! A k-web on `P^2` is the twisted symmetric 1-form `Σ f_i(x, y) dy^i dx^{k-i}` written
//! in the affine chart. The lab measures its characteristic numbers `(d_0, d_1)` from
//! tangencies with explicit lines, its first polar curve by a resultant, and decides
//! invariance of explicit curves exactly.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::WebCharNumbers;
use crate::error::LabError;
use crate::poly::{gcd, MultiPoly, Var, NVARS};
use crate::resultant::{discriminant, resultant};
use crate::ring::AmbientDim;

/// Random coordinates are drawn from `-SAMPLE_RANGE..=SAMPLE_RANGE`.
pub const SAMPLE_RANGE: i64 = 999;
/// Samples tried before giving up on two agreeing generic measurements.
pub const MAX_ATTEMPTS: u32 = 8;

/// Counter-based sampler: sample `i` of a seed always sees the same stream, independent of
/// how many other samples were drawn.
#[derive(Debug, Clone, Copy)]
pub struct Sampler {
    seed: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { seed }
    }

    /// `count` integers for sample `index` of `purpose`.
    pub fn draw(&self, purpose: u64, index: u32, count: usize) -> Vec<BigInt> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ purpose.rotate_left(32));
        rng.set_stream(u64::from(index));
        (0..count)
            .map(|_| BigInt::from(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE)))
            .collect()
    }
}

const LINE_STREAM: u64 = 0x6c69_6e65;
const POINT_STREAM: u64 = 0x706f_6c65;

/// The affine line `y = a·x + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLine {
    pub a: BigInt,
    pub b: BigInt,
}

/// Zeros of the tangency divisor of a web along a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tangency {
    /// Zeros in the affine chart, with multiplicity.
    pub affine: u32,
    /// Multiplicity at the point at infinity of the line.
    pub at_infinity: u32,
}

impl Tangency {
    pub fn total(&self) -> u32 {
        self.affine + self.at_infinity
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicitWeb {
    f: MultiPoly,
    /// `f_i`, the coefficient of `p^i`.
    coeffs: Vec<MultiPoly>,
    twist: u32,
}

fn only_vars(poly: &MultiPoly, allowed: &[Var]) -> Result<(), LabError> {
    match poly.variables().into_iter().find(|v| !allowed.contains(v)) {
        Some(v) => Err(LabError::UnexpectedVariable(v)),
        None => Ok(()),
    }
}

impl ImplicitWeb {
    /// Validates `F`: only `x, y, p` occur, `deg_p F = k >= 1`, `F` is square-free in `p`
    /// and the `f_i` have no common factor (the singular set has codimension two).
    pub fn new(f: MultiPoly) -> Result<Self, LabError> {
        if f.is_zero() {
            return Err(LabError::ZeroPolynomial);
        }
        only_vars(&f, &[Var::X, Var::Y, Var::P])?;
        if f.degree_in(Var::P) == 0 {
            return Err(LabError::ConstantIn(Var::P));
        }
        if gcd(&f, &f.derivative(Var::P)).degree_in(Var::P) > 0 {
            return Err(LabError::NotSquareFree);
        }
        let coeffs = f.coeffs_in(Var::P);
        let common = coeffs.iter().fold(MultiPoly::zero(), |g, c| gcd(&g, c));
        if !common.is_constant() {
            return Err(LabError::SingularDivisor(common.to_string()));
        }
        let twist = chart_degree(&coeffs);
        Ok(ImplicitWeb { f, coeffs, twist })
    }

    pub fn equation(&self) -> &MultiPoly {
        &self.f
    }

    /// `d_0 = k = deg_p F`.
    pub fn k(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    /// Degree of the tangency divisor on any non-invariant line: the twist left on `P^1`
    /// after restricting the form, read off in the chart at infinity.
    pub fn restriction_degree(&self) -> u32 {
        self.twist
    }

    /// Reflection in the diagonal `x <-> y`: `p^k F(y, x, 1/p)`.
    pub fn transposed(&self) -> Result<Self, LabError> {
        let k = self.coeffs.len() - 1;
        let mut swapped = Vec::with_capacity(k + 1);
        for i in 0..=k {
            swapped.push(self.coeffs[k - i].swap_vars(Var::X, Var::Y));
        }
        ImplicitWeb::new(MultiPoly::from_coeffs_in(Var::P, &swapped))
    }

    /// Restriction of the form to `y = a·x + b`: `F(x, a·x + b, a)` as a polynomial in `x`.
    pub fn restrict_to_line(&self, line: &AffineLine) -> MultiPoly {
        let y = &(&MultiPoly::var(Var::X) * &MultiPoly::constant(line.a.clone()))
            + &MultiPoly::constant(line.b.clone());
        self.f
            .substitute(Var::Y, &y)
            .substitute(Var::P, &MultiPoly::constant(line.a.clone()))
    }

    /// Counts the tangency divisor of the web along `line`, including the point at
    /// infinity: the restriction `g(x)` is homogenized to `u^d g(t/u)` with `d` the twist of
    /// the restricted form.
    pub fn tangency_with_line(&self, line: &AffineLine) -> Result<Tangency, LabError> {
        let g = self.restrict_to_line(line);
        if g.is_zero() {
            return Err(LabError::DegenerateLine);
        }
        let d = self.twist;
        debug_assert!(g.degree_in(Var::X) <= d);
        let binary_form = MultiPoly::from_terms(g.terms().map(|(m, c)| {
            let e = m[Var::X.index()];
            let mut hm = [0; NVARS];
            hm[Var::T.index()] = e;
            hm[Var::U.index()] = d - e;
            (hm, c.clone())
        }));
        let at_infinity = binary_form.valuation_in(Var::U);
        Ok(Tangency {
            affine: binary_form.total_degree() - at_infinity,
            at_infinity,
        })
    }

    pub fn random_line(&self, sampler: &Sampler, index: u32) -> AffineLine {
        let v = sampler.draw(LINE_STREAM, index, 2);
        AffineLine {
            a: v[0].clone(),
            b: v[1].clone(),
        }
    }

    /// `d_1 = deg(W)`, measured as the tangency count with random lines; two generic lines
    /// must agree.
    pub fn degree(&self, seed: u64) -> Result<u32, LabError> {
        let sampler = Sampler::new(seed);
        let mut seen = Vec::new();
        for index in 0..MAX_ATTEMPTS {
            let line = self.random_line(&sampler, index);
            let Ok(count) = self.tangency_with_line(&line) else {
                continue;
            };
            if seen.contains(&count.total()) {
                return Ok(count.total());
            }
            seen.push(count.total());
        }
        Err(LabError::Exhausted {
            attempts: MAX_ATTEMPTS,
        })
    }

    /// `Res_p(F, (y - z_2) - p (x - z_1))` without content: the points whose web tangent
    /// passes through `z`.
    pub fn polar_curve(&self, z: (&BigInt, &BigInt)) -> Result<MultiPoly, LabError> {
        let x_shift = &MultiPoly::var(Var::X) - &MultiPoly::constant(z.0.clone());
        let y_shift = &MultiPoly::var(Var::Y) - &MultiPoly::constant(z.1.clone());
        let pencil = &y_shift - &(&MultiPoly::var(Var::P) * &x_shift);
        let r = resultant(&self.f, &pencil, Var::P)?;
        if r.is_zero() {
            return Err(LabError::DegeneratePoint);
        }
        Ok(r.primitive_part())
    }

    pub fn random_point(&self, sampler: &Sampler, index: u32) -> (BigInt, BigInt) {
        let v = sampler.draw(POINT_STREAM, index, 2);
        (v[0].clone(), v[1].clone())
    }

    /// Degree of the polar curve for generic `z`; two samples must agree.
    pub fn polar_degree(&self, seed: u64) -> Result<u32, LabError> {
        let sampler = Sampler::new(seed);
        let mut seen = Vec::new();
        for index in 0..MAX_ATTEMPTS {
            let (z1, z2) = self.random_point(&sampler, index);
            let Ok(curve) = self.polar_curve((&z1, &z2)) else {
                continue;
            };
            let degree = curve.total_degree();
            if seen.contains(&degree) {
                return Ok(degree);
            }
            seen.push(degree);
        }
        Err(LabError::Exhausted {
            attempts: MAX_ATTEMPTS,
        })
    }

    /// `Disc_p(F)` up to content; contains the points where the web is not smooth.
    pub fn discriminant_locus(&self) -> MultiPoly {
        if self.k() == 1 {
            // Res_p(f_0 + f_1 p, f_1) = f_1
            return self.coeffs[1].primitive_part();
        }
        discriminant(&self.f, Var::P).expect("k >= 2")
    }

    /// Whether the curve `C(x, y) = 0` is invariant: `C` divides
    /// `Σ f_i (-C_x)^i C_y^{k-i}`, the form evaluated on the tangent direction `(C_y, -C_x)`.
    pub fn is_invariant(&self, curve: &MultiPoly) -> Result<bool, LabError> {
        if curve.is_zero() {
            return Err(LabError::ZeroPolynomial);
        }
        only_vars(curve, &[Var::X, Var::Y])?;
        if curve.is_constant() {
            return Err(LabError::ConstantCurve);
        }
        let cx = curve.derivative(Var::X);
        let cy = curve.derivative(Var::Y);
        if !gcd(curve, &gcd(&cx, &cy)).is_constant() {
            return Err(LabError::NotReduced);
        }
        let k = self.k();
        let minus_cx = -&cx;
        let restricted = self
            .coeffs
            .iter()
            .enumerate()
            .fold(MultiPoly::zero(), |acc, (i, fi)| {
                let i = i as u32;
                &acc + &(&(fi * &minus_cx.pow(i)) * &cy.pow(k - i))
            });
        Ok(restricted.is_divisible_by(curve))
    }

    /// `(d_0, d_1)` as characteristic numbers of a 1-dimensional distribution on `P^2`.
    pub fn char_numbers(&self, seed: u64) -> Result<WebCharNumbers, LabError> {
        let d1 = self.degree(seed)?;
        let plane = AmbientDim::new(2).expect("2 >= 1");
        Ok(
            WebCharNumbers::new(plane, 1, [self.k(), d1].map(BigInt::from).to_vec())
                .expect("k >= 1 and d_1 >= 0"),
        )
    }

    /// Measures everything and checks the polar degree against `d_0 + d_1` and, for an
    /// invariant curve the caller asserts smooth, the bound `deg C <= k + d_1 + 1`.
    pub fn end_to_end_check(
        &self,
        curve: Option<&MultiPoly>,
        curve_is_smooth: bool,
        seed: u64,
    ) -> Result<LabReport, LabError> {
        let k = self.k();
        let degree = self.degree(seed)?;
        let polar_degree = self.polar_degree(seed)?;
        let curve = match curve {
            None => None,
            Some(c) => {
                let invariant = self.is_invariant(c)?;
                let curve_degree = c.total_degree();
                let bound_check = (invariant && curve_is_smooth).then(|| {
                    let bound = k + degree + 1;
                    DegreeBoundCheck {
                        curve_degree,
                        bound,
                        holds: curve_degree <= bound,
                    }
                });
                Some(CurveCheck {
                    degree: curve_degree,
                    invariant,
                    bound_check,
                })
            }
        };
        Ok(LabReport {
            k,
            degree,
            polar_degree,
            polar_expected: k + degree,
            discriminant: self.discriminant_locus(),
            curve,
        })
    }
}

/// Restriction twist `d = D - v`: map the form to the chart `x = 1/X, y = Y/X` and strip
/// the largest power `X^v` from the numerator over `X^{D+2k}`.
fn chart_degree(coeffs: &[MultiPoly]) -> u32 {
    let k = coeffs.len() as u32 - 1;
    let top = coeffs
        .iter()
        .map(MultiPoly::total_degree)
        .max()
        .unwrap_or(0);
    // X -> x, Y -> y, dX -> t, dY -> u
    let (big_x, big_y) = (MultiPoly::var(Var::X), MultiPoly::var(Var::Y));
    let (dx, dy) = (MultiPoly::var(Var::T), MultiPoly::var(Var::U));
    let dy_image = &(&big_x * &dy) - &(&big_y * &dx);
    let dx_image = -&dx;
    let mut numerator = MultiPoly::zero();
    for (i, fi) in coeffs.iter().enumerate() {
        let i = i as u32;
        let form = &dy_image.pow(i) * &dx_image.pow(k - i);
        let homogenized = MultiPoly::from_terms(fi.terms().map(|(m, c)| {
            let (a, b) = (m[Var::X.index()], m[Var::Y.index()]);
            let mut hm = [0; NVARS];
            hm[Var::X.index()] = top - a - b;
            hm[Var::Y.index()] = b;
            (hm, c.clone())
        }));
        numerator = &numerator + &(&homogenized * &form);
    }
    top - numerator.valuation_in(Var::X)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBoundCheck {
    pub curve_degree: u32,
    /// `k + d_1 + 1`.
    pub bound: u32,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveCheck {
    pub degree: u32,
    pub invariant: bool,
    /// `None` when the curve is not invariant or not asserted smooth.
    pub bound_check: Option<DegreeBoundCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabReport {
    pub k: u32,
    pub degree: u32,
    pub polar_degree: u32,
    pub polar_expected: u32,
    pub discriminant: MultiPoly,
    pub curve: Option<CurveCheck>,
}

impl LabReport {
    pub fn polar_ok(&self) -> bool {
        self.polar_degree == self.polar_expected
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(Var::Y)
    }
    fn p() -> MultiPoly {
        MultiPoly::var(Var::P)
    }
    fn k(c: i64) -> MultiPoly {
        MultiPoly::constant(c)
    }
    fn web(f: MultiPoly) -> ImplicitWeb {
        ImplicitWeb::new(f).unwrap()
    }
    fn line(a: i64, b: i64) -> AffineLine {
        AffineLine {
            a: a.into(),
            b: b.into(),
        }
    }

    #[test]
    fn k_is_degree_in_slope() {
        assert_eq!(web(&p().pow(2) - &x()).k(), 2);
        assert_eq!(web(&x() + &(&y() * &p())).k(), 1);
        let cubic = &(&(&p() - &k(1)) * &(&p() - &k(2))) * &(&p() - &k(3));
        assert_eq!(web(cubic).k(), 3);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(ImplicitWeb::new(k(5)), Err(LabError::ConstantIn(Var::P)));
        assert_eq!(
            ImplicitWeb::new(MultiPoly::zero()),
            Err(LabError::ZeroPolynomial)
        );
        assert_eq!(
            ImplicitWeb::new(&p() + &MultiPoly::var(Var::T)),
            Err(LabError::UnexpectedVariable(Var::T))
        );
        assert_eq!(
            ImplicitWeb::new((&p() - &x()).pow(2)),
            Err(LabError::NotSquareFree)
        );
        assert!(matches!(
            ImplicitWeb::new(&x() * &(&p().pow(2) - &k(1))),
            Err(LabError::SingularDivisor(_))
        ));
    }

    #[test]
    fn tangency_counts() {
        let w = web(&p().pow(2) - &x());
        let t = w.tangency_with_line(&line(5, -2)).unwrap();
        assert_eq!(
            t,
            Tangency {
                affine: 1,
                at_infinity: 0
            }
        );
        let w = web(&x() + &(&y() * &p()));
        assert_eq!(w.tangency_with_line(&line(3, 7)).unwrap().total(), 1);
        let w = web(&p().pow(2) - &y());
        assert_eq!(w.tangency_with_line(&line(-4, 11)).unwrap().total(), 1);
    }

    #[test]
    fn tangency_at_infinity_is_counted() {
        // radial pencil through the origin: y - x p; the line at infinity is not invariant
        // and every line through the origin is a leaf
        let w = web(&y() - &(&x() * &p()));
        assert_eq!(w.restriction_degree(), 0);
        assert_eq!(w.tangency_with_line(&line(2, 3)).unwrap().total(), 0);
        assert_eq!(
            w.tangency_with_line(&line(2, 0)),
            Err(LabError::DegenerateLine)
        );
        // horizontal lines, dy = 0: degree 0 with the tangency at the point at infinity
        let w = web(p());
        assert_eq!(w.restriction_degree(), 0);
        // parallel lines of slope 1: p - 1
        let w = web(&p() - &k(1));
        assert_eq!(w.tangency_with_line(&line(2, 5)).unwrap().total(), 0);
        // dy = x^2 dx has degree 2, but the restriction has only affine degree 2
        let w = web(&p() - &x().pow(2));
        let t = w.tangency_with_line(&line(7, 1)).unwrap();
        assert_eq!(t.total(), 2);
        // dy - y^2 dx: degree 2, restriction g = a - (a x + b)^2 has affine degree 2
        let w = web(&p() - &y().pow(2));
        assert_eq!(w.restriction_degree(), 2);
        // dy - y dx is singular at [0:1:0]; horizontal lines pass through it
        let w = web(&p() - &y());
        assert_eq!(w.restriction_degree(), 1);
        let t = w.tangency_with_line(&line(0, 5)).unwrap();
        assert_eq!(
            t,
            Tangency {
                affine: 0,
                at_infinity: 1
            }
        );
        let t = w.tangency_with_line(&line(3, 5)).unwrap();
        assert_eq!(
            t,
            Tangency {
                affine: 1,
                at_infinity: 0
            }
        );
    }

    #[test]
    fn polar_curve_matches_expansion() {
        let (z1, z2) = (BigInt::from(4), BigInt::from(-7));
        let w = web(&p().pow(2) - &x());
        let expected = &(&y() - &k(-7)).pow(2) - &(&x() * &(&x() - &k(4)).pow(2));
        assert_eq!(
            w.polar_curve((&z1, &z2)).unwrap(),
            expected.primitive_part()
        );
        let w = web(&x() + &(&y() * &p()));
        let expected = &(&x() * &(&x() - &k(4))) + &(&y() * &(&y() - &k(-7)));
        assert_eq!(
            w.polar_curve((&z1, &z2)).unwrap(),
            expected.primitive_part()
        );
    }

    #[test]
    fn discriminants() {
        assert_eq!(web(&p().pow(2) - &x()).discriminant_locus(), x());
        assert_eq!(web(&p().pow(2) - &y()).discriminant_locus(), y());
        assert_eq!(web(&p() - &(&x() * &y())).discriminant_locus(), k(1));
    }

    #[test]
    fn invariance_examples() {
        let w = web(&p().pow(2) - &y());
        for c in [-5i64, 0, 3, 12] {
            let parabola = &y().scale(&4.into()) - &(&x() + &k(c)).pow(2);
            assert!(w.is_invariant(&parabola).unwrap(), "c = {c}");
        }
        assert!(!web(&p().pow(2) - &x()).is_invariant(&y()).unwrap());
        let circle = &(&x().pow(2) + &y().pow(2)) - &k(9);
        assert!(web(&x() + &(&y() * &p())).is_invariant(&circle).unwrap());
    }

    #[test]
    fn vertical_curves_use_the_same_test() {
        // p - x^2 has no vertical leaves; x = 0 is not invariant
        assert!(!web(&p() - &x().pow(2)).is_invariant(&x()).unwrap());
        // x p - y (radial) has x = 0 as a leaf
        assert!(web(&(&x() * &p()) - &y()).is_invariant(&x()).unwrap());
    }

    #[test]
    fn curve_errors() {
        let w = web(&p().pow(2) - &y());
        assert_eq!(w.is_invariant(&k(3)), Err(LabError::ConstantCurve));
        assert_eq!(w.is_invariant(&y().pow(2)), Err(LabError::NotReduced));
        assert_eq!(
            w.is_invariant(&(&y() + &p())),
            Err(LabError::UnexpectedVariable(Var::P))
        );
    }

    #[test]
    fn sampler_is_reproducible_per_index() {
        let s = Sampler::new(42);
        assert_eq!(s.draw(1, 3, 4), s.draw(1, 3, 4));
        assert_ne!(s.draw(1, 3, 4), s.draw(1, 4, 4));
        assert!(s
            .draw(1, 0, 100)
            .iter()
            .all(|v| v.magnitude() <= &num_bigint::BigUint::from(999u32)));
    }
}
