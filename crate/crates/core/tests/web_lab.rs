use num_bigint::BigInt;
use num_traits::Zero;
use polarweb_core::{gcd, resultant, AffineLine, ImplicitWeb, LabError, MultiPoly, Var};
use proptest::prelude::*;

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

/// Dense polynomial in `x, y` of total degree at most `e`, coefficients in index order.
fn dense(e: u32, coeffs: &[i64]) -> MultiPoly {
    let mut out = MultiPoly::zero();
    let mut it = coeffs.iter();
    for total in 0..=e {
        for a in 0..=total {
            let c = *it.next().expect("enough coefficients");
            let mut m = [0u32; 5];
            m[Var::X.index()] = a;
            m[Var::Y.index()] = total - a;
            out = &out + &MultiPoly::term(m, c);
        }
    }
    out
}

fn dense_len(e: u32) -> usize {
    ((e + 1) * (e + 2) / 2) as usize
}

fn test_webs() -> Vec<(&'static str, MultiPoly, u32, u32)> {
    vec![
        ("p^2 - x", &p().pow(2) - &x(), 2, 1),
        ("x + y*p", &x() + &(&y() * &p()), 1, 1),
        ("p^2 - y", &p().pow(2) - &y(), 2, 1),
        ("p - x^2", &p() - &x().pow(2), 1, 2),
        ("p - y^2", &p() - &y().pow(2), 1, 2),
        ("p^3 - x*y", &p().pow(3) - &(&x() * &y()), 3, 2),
        (
            "(p-1)(p-2)(p-3)",
            &(&(&p() - &k(1)) * &(&p() - &k(2))) * &(&p() - &k(3)),
            3,
            0,
        ),
        ("x*p^2 + y", &(&x() * &p().pow(2)) + &y(), 2, 1),
    ]
}

#[test]
fn polar_degree_is_k_plus_degree() {
    for (name, f, k, d1) in test_webs() {
        let w = ImplicitWeb::new(f).unwrap();
        assert_eq!(w.k(), k, "{name}");
        assert_eq!(w.degree(7).unwrap(), d1, "{name}");
        assert_eq!(w.polar_degree(7).unwrap(), k + d1, "{name}");
        assert_eq!(w.restriction_degree(), d1, "{name}");
    }
}

#[test]
fn degree_does_not_depend_on_the_seed() {
    for (name, f, k, d1) in test_webs() {
        let w = ImplicitWeb::new(f).unwrap();
        for seed in [0u64, 1, 42, 1234, 0xdead_beef, u64::MAX] {
            assert_eq!(w.degree(seed).unwrap(), d1, "{name} seed {seed}");
            assert_eq!(w.polar_degree(seed).unwrap(), k + d1, "{name} seed {seed}");
            let c = w.char_numbers(seed).unwrap();
            assert_eq!(c.values(), &[BigInt::from(k), BigInt::from(d1)]);
        }
    }
}

#[test]
fn every_non_degenerate_line_gives_the_same_count() {
    for (name, f, _, d1) in test_webs() {
        let w = ImplicitWeb::new(f).unwrap();
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                let line = AffineLine {
                    a: a.into(),
                    b: b.into(),
                };
                match w.tangency_with_line(&line) {
                    Ok(t) => assert_eq!(t.total(), d1, "{name} on y = {a}x + {b}"),
                    Err(e) => assert_eq!(e, LabError::DegenerateLine),
                }
            }
        }
    }
}

#[test]
fn transposition_preserves_the_measured_numbers() {
    for (name, f, k, d1) in test_webs() {
        let w = ImplicitWeb::new(f).unwrap();
        let t = w.transposed().unwrap();
        assert_eq!(t.k(), k, "{name}");
        assert_eq!(t.degree(3).unwrap(), d1, "{name}");
        assert_eq!(t.polar_degree(3).unwrap(), k + d1, "{name}");
        assert_eq!(t.transposed().unwrap(), w, "{name}");
    }
}

#[test]
fn invariance_is_chart_stable() {
    let parabola = &y().scale(&4.into()) - &x().pow(2);
    let circle = &(&x().pow(2) + &y().pow(2)) - &k(1);
    let cases = vec![
        (&p().pow(2) - &y(), parabola.clone(), true),
        (&p().pow(2) - &y(), &parabola - &k(3), false),
        (&x() + &(&y() * &p()), circle.clone(), true),
        (&x() + &(&y() * &p()), &x() - &y(), false),
        (&(&x() * &p()) - &y(), &y() - &x().scale(&3.into()), true),
        (&(&x() * &p()) - &y(), x(), true),
        (&p().pow(2) - &x(), y(), false),
        (&p().pow(2) - &x(), x(), false),
        (&p() - &k(1), &y() - &(&x() + &k(7)), true),
    ];
    for (f, c, expected) in cases {
        let w = ImplicitWeb::new(f).unwrap();
        assert_eq!(
            w.is_invariant(&c).unwrap(),
            expected,
            "{} / {}",
            w.equation(),
            c
        );
        let swapped = c.swap_vars(Var::X, Var::Y);
        assert_eq!(
            w.transposed().unwrap().is_invariant(&swapped).unwrap(),
            expected,
            "transposed {} / {}",
            w.equation(),
            swapped
        );
    }
}

#[test]
fn foliations_have_k_one() {
    for (_, f, k, _) in test_webs() {
        let w = ImplicitWeb::new(f).unwrap();
        if k == 1 {
            assert_eq!(w.char_numbers(11).unwrap().d(0), &BigInt::from(1));
            assert!(w.discriminant_locus().total_degree() <= w.degree(11).unwrap() + 1);
        }
    }
}

#[test]
fn end_to_end_reports() {
    let w = ImplicitWeb::new(&p().pow(2) - &y()).unwrap();
    let curve = &y().scale(&4.into()) - &x().pow(2);
    let r = w.end_to_end_check(Some(&curve), true, 5).unwrap();
    assert_eq!((r.k, r.degree, r.polar_degree), (2, 1, 3));
    assert!(r.polar_ok());
    let c = r.curve.unwrap();
    assert!(c.invariant);
    let cor = c.bound_check.unwrap();
    assert_eq!((cor.curve_degree, cor.bound, cor.holds), (2, 4, true));

    let w = ImplicitWeb::new(&x() + &(&y() * &p())).unwrap();
    let circle = &(&x().pow(2) + &y().pow(2)) - &k(1);
    let r = w.end_to_end_check(Some(&circle), true, 5).unwrap();
    let cor = r.curve.unwrap().bound_check.unwrap();
    assert_eq!((cor.curve_degree, cor.bound, cor.holds), (2, 3, true));

    let w = ImplicitWeb::new(&p().pow(2) - &x()).unwrap();
    let r = w.end_to_end_check(Some(&y()), true, 5).unwrap();
    let c = r.curve.unwrap();
    assert!(!c.invariant);
    assert!(c.bound_check.is_none());
}

fn univariate_gcd_degree(f: &MultiPoly, g: &MultiPoly) -> u32 {
    if f.is_zero() && g.is_zero() {
        return u32::MAX;
    }
    gcd(f, g).degree_in(Var::P)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generic_foliation_degree(
        e in 1u32..=3,
        a in prop::collection::vec(-9i64..=9, 10),
        b in prop::collection::vec(-9i64..=9, 10),
        seed in any::<u64>(),
    ) {
        // A + B p with A, B of exact total degree e and generic top forms
        let n = dense_len(e);
        let mut a = a[..n].to_vec();
        let mut b = b[..n].to_vec();
        let top = dense_len(e - 1);
        for (i, v) in a[top..].iter_mut().enumerate() {
            *v = if *v == 0 { 3 + i as i64 } else { *v };
        }
        for (i, v) in b[top..].iter_mut().enumerate() {
            *v = if *v == 0 { -5 - 2 * i as i64 } else { *v };
        }
        let f = &dense(e, &a) + &(&dense(e, &b) * &p());
        let Ok(w) = ImplicitWeb::new(f) else { return Ok(()); };
        // x * A_top + y * B_top vanishing would make the line at infinity invariant
        prop_assume!(w.restriction_degree() == e);
        prop_assert_eq!(w.degree(seed).unwrap(), e);
        prop_assert_eq!(w.polar_degree(seed).unwrap(), e + 1);
    }

    #[test]
    fn resultant_vanishes_exactly_at_common_roots(
        f_coeffs in prop::collection::vec(-4i64..=4, 6),
        g_coeffs in prop::collection::vec(-4i64..=4, 6),
        points in prop::collection::vec((-3i64..=3, -3i64..=3), 12),
    ) {
        // f = (p - x)(f0 + f1 p) + f2 y, g = (p - y)(g0 + g1 p) + g2 x; the common
        // roots along x = y make zeros of the resultant likely on the grid
        let lin = |c: &[i64]| &(&k(c[0]) + &(&k(c[1]) * &x())) + &(&k(c[2]) * &p());
        let f = &(&(&p() - &x()) * &lin(&f_coeffs[..3])) + &(&k(f_coeffs[3]) * &y());
        let g = &(&(&p() - &y()) * &lin(&g_coeffs[..3])) + &(&k(g_coeffs[3]) * &x());
        prop_assume!(f.degree_in(Var::P) > 0 && g.degree_in(Var::P) > 0);
        let r = resultant(&f, &g, Var::P).unwrap();
        for (px, py) in points {
            let at = [(Var::X, BigInt::from(px)), (Var::Y, BigInt::from(py))];
            let (fe, ge) = (f.evaluate(&at), g.evaluate(&at));
            // leading coefficients surviving evaluation keep the criterion exact
            if fe.degree_in(Var::P) != f.degree_in(Var::P) || ge.degree_in(Var::P) != g.degree_in(Var::P) {
                continue;
            }
            let value = r.evaluate(&at).constant_value().unwrap_or_else(BigInt::zero);
            prop_assert_eq!(value.is_zero(), univariate_gcd_degree(&fe, &ge) > 0);
        }
    }

    #[test]
    fn resultant_symmetry(
        f_coeffs in prop::collection::vec(-6i64..=6, 4),
        g_coeffs in prop::collection::vec(-6i64..=6, 3),
    ) {
        let f = MultiPoly::from_coeffs_in(Var::P, &[
            &k(f_coeffs[0]) + &x(), k(f_coeffs[1]), &k(f_coeffs[2]) - &y(), k(f_coeffs[3]).pow(0),
        ]);
        let g = MultiPoly::from_coeffs_in(Var::P, &[
            &k(g_coeffs[0]) * &y(), k(g_coeffs[1]), &k(g_coeffs[2]) + &x(),
        ]);
        let fg = resultant(&f, &g, Var::P).unwrap();
        let gf = resultant(&g, &f, Var::P).unwrap();
        let sign = (f.degree_in(Var::P) * g.degree_in(Var::P)) % 2;
        prop_assert_eq!(fg, if sign == 1 { -gf } else { gf });
    }
}
