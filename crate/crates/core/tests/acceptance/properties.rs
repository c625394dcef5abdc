//! Property suites behind criterion 10, each run for 200 seeded cases.

use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use riordan_core::algebra::rational::frac;
use riordan_core::amoeba::{cone_omega, newton_polygon, Amoeba, Membership};
use riordan_core::asympt::{saddle, Direction};
use riordan_core::cauchy::{residual, riordan_initial_data, solve};
use riordan_core::genfun::{assemble_riordan, correction_is_zero, series_of};
use riordan_core::laurent::LaurentTail;
use riordan_core::riordan::{is_lower_triangular, table_from_tails};
use riordan_core::{bundled, DifferenceEquation, Polynomial, Rational, RiordanSpec};

use crate::common;

const CASES: u32 = 200;

fn runner() -> TestRunner {
    let mut seed = [0u8; 32];
    seed[..8].copy_from_slice(&common::SEED.to_le_bytes());
    println!("proptest seed {:#x}, {CASES} cases", common::SEED);
    TestRunner::new_with_rng(
        Config {
            cases: CASES,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &seed),
    )
}

fn spec_strategy() -> impl Strategy<Value = RiordanSpec> {
    any::<u64>().prop_map(|s| common::random_spec(&mut common::rng(s)))
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| Polynomial::from_ints(&c))
}

fn tail(order: usize) -> impl Strategy<Value = LaurentTail> {
    prop::collection::vec((-9i64..=9, 1i64..=4), order + 1)
        .prop_map(|v| LaurentTail::new(v.into_iter().map(|(n, d)| frac(n, d)).collect()))
}

#[test]
fn polynomial_division_identity() {
    runner()
        .run(&(small_poly(6), small_poly(4)), |(a, b)| {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
            Ok(())
        })
        .unwrap();
}

#[test]
fn gcd_divides_both() {
    runner()
        .run(
            &(small_poly(4), small_poly(3), small_poly(3)),
            |(g, a, b)| {
                let (x, y) = (&g * &a, &g * &b);
                prop_assume!(!x.is_zero() && !y.is_zero());
                let d = x.gcd(&y);
                prop_assert!(x.exact_div(&d).is_some() && y.exact_div(&d).is_some());
                prop_assert!(d.degree() >= g.degree());
                Ok(())
            },
        )
        .unwrap();
}

#[test]
fn roots_have_small_residuals() {
    runner()
        .run(&small_poly(6), |a| {
            prop_assume!(a.degree().unwrap_or(0) >= 1);
            let rs = riordan_core::algebra::roots(&a).unwrap();
            prop_assert_eq!(rs.len(), a.degree().unwrap());
            let scale = 1.0 + a.max_abs_coeff();
            for r in rs {
                let tol = 1e-12 * scale * r.norm().max(1.0).powi(a.degree().unwrap() as i32);
                prop_assert!(a.eval_complex(r).norm() <= tol);
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn laurent_multiplication_is_commutative_and_associative() {
    runner()
        .run(&(tail(6), tail(6), tail(6)), |(a, b, c)| {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            Ok(())
        })
        .unwrap();
}

#[test]
fn expansion_multiplies_back() {
    runner()
        .run(&spec_strategy(), |spec| {
            const K: usize = 12;
            let (_, h) = spec.tails(K).unwrap();
            let hc = h.coeffs();
            let m = spec.m() as i64;
            // [z^e] P(z) sum_n h_n z^(-n-1) = sum_i P_i h_(i-e-1)
            for e in -((K as i64) - m) - 1..=m {
                let mut acc = Rational::zero();
                for (i, c) in spec.p.coeffs().iter().enumerate() {
                    let n = i as i64 - e - 1;
                    if n >= 0 {
                        acc += c * &hc[n as usize];
                    }
                }
                let want = if e >= 0 {
                    spec.q.coeff(e as usize)
                } else {
                    Rational::zero()
                };
                prop_assert_eq!(acc, want, "z^{}", e);
            }
            prop_assert_eq!(hc[0].is_zero(), !spec.is_proper());
            Ok(())
        })
        .unwrap();
}

#[test]
fn tables_are_lower_triangular_and_linear_in_d() {
    runner()
        .run(&(spec_strategy(), -4i64..=4), |(spec, c)| {
            let t = spec.table(10, 6).unwrap();
            prop_assert!(is_lower_triangular(&t));
            let (d, h) = spec.tails(10).unwrap();
            let scaled = table_from_tails(&d.scale(&frac(c, 1)), &h, 10, 6).unwrap();
            prop_assert_eq!(scaled, t.map(|v| v * frac(c, 1)));
            Ok(())
        })
        .unwrap();
}

#[test]
fn residue_tables_solve_the_recurrence() {
    runner()
        .run(&spec_strategy(), |spec| {
            let eq = DifferenceEquation::from_spec(&spec);
            let t = spec.table(10, 5).unwrap();
            prop_assert!(residual(&eq, &t).is_zero());
            Ok(())
        })
        .unwrap();
}

#[test]
fn cauchy_solutions_are_linear_in_the_data() {
    runner()
        .run(
            &(spec_strategy(), spec_strategy(), -3i64..=3, -3i64..=3),
            |(s1, s2, a, b)| {
                let eq = DifferenceEquation::from_spec(&s1);
                let m = eq.m();
                let i1 = riordan_initial_data(&s1, 8, 4).unwrap();
                // borrow the second spec's numbers as arbitrary data of the right shape
                let mut i2 = riordan_initial_data(&s2, 8, 4).unwrap();
                i2.cols.resize(m, vec![Rational::zero(); 4]);
                let (a, b) = (frac(a, 1), frac(b, 1));
                let lhs = solve(&eq, &i1.combine(&a, &i2, &b), 8, 4).unwrap();
                let g1 = solve(&eq, &i1, 8, 4).unwrap();
                let g2 = solve(&eq, &i2, 8, 4).unwrap();
                for y in 0..=4 {
                    for x in 0..=8 {
                        prop_assert_eq!(lhs.get(x, y), &(&a * g1.get(x, y) + &b * g2.get(x, y)));
                    }
                }
                prop_assert!(residual(&eq, &lhs).is_zero());
                Ok(())
            },
        )
        .unwrap();
}

#[test]
fn generating_function_reproduces_table() {
    runner()
        .run(&spec_strategy(), |spec| {
            let eq = DifferenceEquation::from_spec(&spec);
            prop_assert!(correction_is_zero(&eq, &spec, 6).unwrap());
            let gf = assemble_riordan(&spec).unwrap();
            prop_assert_eq!(series_of(&gf, 8, 4).unwrap(), spec.table(8, 4).unwrap());
            // num - D den = 0, with D = d / (w - h) = P d / (P w - Q) cross-multiplied
            let lhs = gf.num.mul(&riordan_core::BivariatePoly::linear_in_w(
                &eq.p * &spec.d_den,
                -&(&eq.q * &spec.d_den),
            ));
            let rhs = gf.den.mul_z(&(&eq.p * &spec.d_num));
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .unwrap();
}

#[test]
fn series_of_is_linear_in_scalars() {
    runner()
        .run(&(spec_strategy(), -5i64..=5, 1i64..=5), |(spec, n, d)| {
            let gf = assemble_riordan(&spec).unwrap();
            let c = frac(n, d);
            prop_assert_eq!(
                series_of(&gf.scale(&c), 6, 3).unwrap(),
                series_of(&gf, 6, 3).unwrap().map(|v| v * &c)
            );
            Ok(())
        })
        .unwrap();
}

#[test]
fn newton_polygon_contains_support() {
    runner()
        .run(&spec_strategy(), |spec| {
            let np = newton_polygon(&DifferenceEquation::from_spec(&spec));
            for &p in &np.points {
                prop_assert!(np.contains(p));
                prop_assert!(p.1 == 0 || p.1 == 1);
            }
            prop_assert!(np.vertices.contains(&(spec.m() as i64, 1)));
            Ok(())
        })
        .unwrap();
}

#[test]
fn cone_membership_is_scale_invariant() {
    runner()
        .run(
            &(spec_strategy(), 1i64..=7, 1i64..=7, 2i64..=5),
            |(spec, p, q, l)| {
                let np = newton_polygon(&DifferenceEquation::from_spec(&spec));
                if let Ok(cone) = cone_omega(&np) {
                    prop_assert_eq!(
                        cone.contains_interior(p, q),
                        cone.contains_interior(l * p, l * q)
                    );
                }
                Ok(())
            },
        )
        .unwrap();
}

#[test]
fn zero_set_lies_in_the_amoeba() {
    runner()
        .run(
            &(spec_strategy(), -2.0f64..2.0, -3.1f64..3.1),
            |(spec, t, phi)| {
                let am = Amoeba::new(&DifferenceEquation::from_spec(&spec)).unwrap();
                let eta = am.f(t, phi);
                prop_assume!(eta.is_finite());
                let s = am.section(t, 256).unwrap();
                prop_assume!(!s.tentacle);
                prop_assert!(s.lo <= s.hi);
                prop_assert_eq!(
                    am.membership(t, eta, 256).unwrap(),
                    Membership::InsideAmoeba
                );
                Ok(())
            },
        )
        .unwrap();
}

#[test]
fn section_sampling_converges() {
    runner()
        .run(&(spec_strategy(), -2.0f64..2.0), |(spec, t)| {
            let am = Amoeba::new(&DifferenceEquation::from_spec(&spec)).unwrap();
            let a = am.section(t, 1024).unwrap();
            prop_assume!(!a.tentacle && a.lo.is_finite() && a.hi.is_finite());
            // stay clear of roots close to the circle, where f has a near-singular spike
            let near = am
                .q_roots()
                .iter()
                .chain(am.p_roots())
                .any(|r| (r.norm().ln() - t).abs() < 1e-2);
            prop_assume!(!near);
            let b = am.section(t, 2048).unwrap();
            prop_assert!((a.lo - b.lo).abs() < 1e-6 && (a.hi - b.hi).abs() < 1e-6);
            Ok(())
        })
        .unwrap();
}

#[test]
fn binomial_saddles_follow_closed_form() {
    let eq = DifferenceEquation::from_spec(&bundled::binomial());
    runner()
        .run(&(2u64..=12, 1u64..=11), |(p, q)| {
            prop_assume!(p > q);
            let dir = Direction::new(p, q).unwrap();
            let s = saddle(&eq, dir).unwrap();
            let (pr, qr) = (dir.p as f64, dir.q as f64);
            prop_assert!((s.z0.re - pr / (pr - qr)).abs() < 1e-10 && s.z0.im.abs() < 1e-10);
            prop_assert!((s.w0.re - (pr - qr) / qr).abs() < 1e-10);
            let (r1, r2) = s.residuals(&eq, dir);
            prop_assert!(r1 <= 1e-10 && r2 <= 1e-10);
            Ok(())
        })
        .unwrap();
}

#[test]
fn saddle_selection_ignores_scale() {
    let eqs = [
        bundled::binomial(),
        bundled::chessboard(2),
        bundled::isolated_elements(),
    ]
    .map(|s| DifferenceEquation::from_spec(&s));
    runner()
        .run(
            &(0usize..3, 1u64..=6, 1u64..=6, 2u64..=4),
            |(i, p, q, l)| {
                prop_assume!(p > q);
                let a = saddle(&eqs[i], Direction::new(p, q).unwrap());
                let b = saddle(&eqs[i], Direction::new(l * p, l * q).unwrap());
                match (a, b) {
                    (Ok(a), Ok(b)) => {
                        prop_assert!((a.z0 - b.z0).norm() < 1e-10 && (a.w0 - b.w0).norm() < 1e-10);
                        let dir = Direction::new(p, q).unwrap();
                        let (r1, r2) = a.residuals(&eqs[i], dir);
                        prop_assert!(r1 <= 1e-10 && r2 <= 1e-10);
                    }
                    (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
                }
                Ok(())
            },
        )
        .unwrap();
}

#[test]
fn ratio_error_shrinks_with_lambda() {
    let spec = bundled::binomial();
    let dir = Direction::new(2, 1).unwrap();
    let rows =
        riordan_core::asympt::convergence_probe(&spec, dir, &[10, 25, 40, 50, 100, 200]).unwrap();
    let err = |l: u64| (rows.iter().find(|r| r.lambda == l).unwrap().ratio - 1.0).abs();
    for l in [10, 25, 50] {
        assert!(err(4 * l) < err(l), "lambda {l}");
    }
    assert!(rows.iter().all(|r| r.ratio.is_finite()));
}
