//! One test per acceptance criterion; every check prints a PASS/FAIL line.

mod common;
mod properties;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use riordan_core::amoeba::{component_census, cone_omega, newton_polygon};
use riordan_core::asympt::{convergence_probe, hessian_h, saddle, Direction};
use riordan_core::cauchy::{residual, riordan_initial_data, solve};
use riordan_core::genfun::{assemble_riordan, correction_is_zero, series_of};
use riordan_core::riordan::is_lower_triangular;
use riordan_core::{
    bundled, BivariatePoly, DifferenceEquation, InitialData, Polynomial, ProblemFile, Rational,
    RiordanSpec,
};

use common::{binomial, int};

fn check(criterion: u32, what: &str, ok: bool, detail: impl std::fmt::Display) -> bool {
    println!(
        "[{}] criterion {criterion}: {what} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn finish(criterion: u32, results: &[bool]) {
    let ok = results.iter().all(|&b| b);
    println!(
        "[{}] criterion {criterion}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed");
}

fn riordan_file(text: &str) -> RiordanSpec {
    match ProblemFile::from_json(text).unwrap() {
        ProblemFile::Riordan(s) => s,
        other => panic!("expected a riordan spec, got {other:?}"),
    }
}

fn triple(spec: &RiordanSpec, xmax: usize, ymax: usize) -> Result<(), String> {
    let residue = spec.table(xmax, ymax).map_err(|e| e.to_string())?;
    let eq = DifferenceEquation::from_spec(spec);
    let init = riordan_initial_data(spec, xmax, ymax).map_err(|e| e.to_string())?;
    let solved = solve(&eq, &init, xmax, ymax).map_err(|e| e.to_string())?;
    let gf = assemble_riordan(spec).map_err(|e| e.to_string())?;
    let series = series_of(&gf, xmax, ymax).map_err(|e| e.to_string())?;
    if let Some((x, y)) = residue.first_mismatch(&solved) {
        return Err(format!("residue vs solve differ at ({x},{y})"));
    }
    if let Some((x, y)) = residue.first_mismatch(&series) {
        return Err(format!("residue vs series differ at ({x},{y})"));
    }
    Ok(())
}

#[test]
fn criterion_01_triple_equivalence() {
    let start = Instant::now();
    let mut results = Vec::new();
    let named = [
        ("example1", riordan_file(bundled::EXAMPLE1_JSON)),
        ("example2_m2", riordan_file(bundled::EXAMPLE2_M2_JSON)),
        ("example2_m3", riordan_file(bundled::EXAMPLE2_M3_JSON)),
        ("example3", riordan_file(bundled::EXAMPLE3_JSON)),
    ];
    for (name, spec) in &named {
        let r = triple(spec, 20, 10);
        results.push(check(
            1,
            &format!("{name} 20x10"),
            r.is_ok(),
            r.err().unwrap_or_else(|| "equal".into()),
        ));
    }
    let mut rng = common::rng(common::SEED);
    println!("criterion 1 random specs: seed {:#x}", common::SEED);
    let mut random_ok = 0;
    for i in 0..20 {
        let spec = common::random_spec(&mut rng);
        match triple(&spec, 20, 10) {
            Ok(()) => random_ok += 1,
            Err(e) => {
                check(
                    1,
                    &format!("random spec {i} P={} Q={}", spec.p, spec.q),
                    false,
                    e,
                );
            }
        }
    }
    results.push(check(
        1,
        "20 random specs 20x10",
        random_ok == 20,
        format!("{random_ok}/20 equal"),
    ));
    let elapsed = start.elapsed();
    results.push(check(
        1,
        "runtime < 30 s",
        elapsed < Duration::from_secs(30),
        format!("{elapsed:.2?}"),
    ));
    finish(1, &results);
}

#[test]
fn criterion_02_pascal() {
    let t = riordan_file(bundled::EXAMPLE1_JSON).table(30, 30).unwrap();
    let mut bad = None;
    for x in 0..=30u64 {
        for y in 0..=x {
            if t.get(x as usize, y as usize) != &int(binomial(x, y)) {
                bad.get_or_insert((x, y));
            }
        }
    }
    let ok = check(
        2,
        "table == C(x,y), 0<=y<=x<=30",
        bad.is_none(),
        format!("first mismatch {bad:?}"),
    );
    finish(2, &[ok]);
}

/// Explicit sum, with the empty-selection count 1 at `y = 0`.
fn chessboard_sum(m: u64, x: u64, y: u64) -> BigInt {
    if y == 0 {
        return BigInt::from(1);
    }
    (1..=y)
        .map(|r| BigInt::from(m).pow(r as u32) * binomial(y - 1, r - 1) * binomial(x + 1 - y, r))
        .sum()
}

/// Selections of `y` cells in an `x` by `m` board: at most one per row, and
/// cells in adjacent rows share a column.
fn chessboard_brute(m: usize, x: usize, y: usize) -> u64 {
    let mut count = 0;
    let total = (m + 1).pow(x as u32);
    for code in 0..total {
        let mut c = code;
        let rows: Vec<usize> = (0..x)
            .map(|_| {
                let v = c % (m + 1);
                c /= m + 1;
                v
            })
            .collect();
        if rows.iter().filter(|&&v| v != 0).count() != y {
            continue;
        }
        if rows
            .windows(2)
            .all(|w| w[0] == 0 || w[1] == 0 || w[0] == w[1])
        {
            count += 1;
        }
    }
    count
}

#[test]
fn criterion_03_chessboard() {
    let mut results = Vec::new();
    for (m, text) in [
        (2u64, bundled::EXAMPLE2_M2_CHESSBOARD_JSON),
        (3, bundled::EXAMPLE2_M3_CHESSBOARD_JSON),
    ] {
        let ProblemFile::Cauchy(cp) = ProblemFile::from_json(text).unwrap() else {
            panic!("cauchy file expected")
        };
        let g = solve(&cp.eq, &cp.init, 25, 25).unwrap();
        let mut bad = None;
        for x in 0..=25u64 {
            for y in 0..=x {
                if g.get(x as usize, y as usize) != &int(chessboard_sum(m, x, y)) {
                    bad.get_or_insert((x, y));
                }
            }
        }
        results.push(check(
            3,
            &format!("m={m}: recursion == explicit sum, 0<=y<=x<=25"),
            bad.is_none(),
            format!("first mismatch {bad:?}"),
        ));
        let mut brute_bad = None;
        for x in 1..=7usize {
            for y in 0..=x {
                if g.get(x, y) != &int(chessboard_brute(m as usize, x, y)) {
                    brute_bad.get_or_insert((x, y));
                }
            }
        }
        results.push(check(
            3,
            &format!("m={m}: recursion == brute-force placements, x<=7"),
            brute_bad.is_none(),
            format!("first mismatch {brute_bad:?}"),
        ));
    }
    finish(3, &results);
}

fn isolated_counts(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return counts;
    }
    // a_1 = 0, the remaining n-1 bits free
    for rest in 0..(1u64 << (n - 1)) {
        let bit = |j: usize| if j == 0 { 0 } else { (rest >> (j - 1)) & 1 };
        let k = (0..n)
            .filter(|&j| {
                let left = j == 0 || bit(j - 1) != bit(j);
                let right = j + 1 == n || bit(j + 1) != bit(j);
                left && right
            })
            .count();
        counts[k] += 1;
    }
    counts
}

#[test]
fn criterion_04_isolated_elements() {
    const N: usize = 18;
    let eq = DifferenceEquation::new(
        Polynomial::from_ints(&[-1, -1, 1]),
        Polynomial::from_ints(&[-1, 1]),
    );
    let mut init = InitialData::zeros(2, N, N);
    let mut fib = vec![int(1), int(0)];
    for x in 2..=N {
        let next = &fib[x - 1] + &fib[x - 2];
        fib.push(next);
    }
    init.row0 = fib.clone();
    init.set(1, 1, int(1));
    let g = solve(&eq, &init, N, N).unwrap();
    let mut bad = None;
    for n in 1..=N {
        let counts = isolated_counts(n);
        for (k, c) in counts.iter().enumerate() {
            if g.get(n, k) != &int(*c) {
                bad.get_or_insert((n, k));
            }
        }
        for k in n + 1..=N {
            if !g.get(n, k).is_zero() {
                bad.get_or_insert((n, k));
            }
        }
    }
    let mut results = vec![check(
        4,
        "recursion == brute-force strings, 1<=n<=18",
        bad.is_none(),
        format!("first mismatch {bad:?}"),
    )];
    let fib_ok = (2..=N).all(|x| g.get(x, 0) == &(g.get(x - 1, 0) + g.get(x - 2, 0)));
    results.push(check(
        4,
        "row y=0 follows phi(x,0)=phi(x-1,0)+phi(x-2,0)",
        fib_ok,
        "x<=18",
    ));
    let from_spec = riordan_file(bundled::EXAMPLE3_JSON).table(N, N).unwrap();
    results.push(check(
        4,
        "residue table of example3 == recursion",
        from_spec == g,
        "18x18",
    ));
    finish(4, &results);
}

fn bp(rows: &[&[i64]]) -> BivariatePoly {
    BivariatePoly::from_int_grid(rows)
}

#[test]
fn criterion_05_generating_functions() {
    let mut results = Vec::new();
    let z = Polynomial::z();
    let one = Polynomial::one();
    // 1/(zw - w - 1)
    let e1 = (bp(&[&[1]]), BivariatePoly::linear_in_w(&z - &one, -&one));
    // z/(z(z-1)w - z - (m-1)), m = 2
    let e2 = (
        BivariatePoly::from_z(z.clone()),
        BivariatePoly::linear_in_w(&z * &(&z - &one), -&(&z + &one)),
    );
    // (z-1)/(z^2 w - z w - w - z + 1)
    let e3 = (
        BivariatePoly::from_z(&z - &one),
        BivariatePoly::linear_in_w(&(&(&z * &z) - &z) - &one, -&(&z - &one)),
    );
    let cases = [
        ("example1", bundled::EXAMPLE1_JSON, e1, "1/(z*w - w - 1)"),
        (
            "example2_m2",
            bundled::EXAMPLE2_M2_JSON,
            e2,
            "z/(z^2*w - z*w - z - 1)",
        ),
        (
            "example3",
            bundled::EXAMPLE3_JSON,
            e3,
            "(z - 1)/(z^2*w - z*w - w - z + 1)",
        ),
    ];
    for (name, text, (num, den), shown) in cases {
        let spec = riordan_file(text);
        let gf = assemble_riordan(&spec).unwrap();
        results.push(check(
            5,
            &format!("{name} numerator and denominator"),
            gf.num == num && gf.den == den,
            &gf,
        ));
        results.push(check(
            5,
            &format!("{name} printed form"),
            gf.to_string() == shown,
            &gf,
        ));
        let eq = DifferenceEquation::from_spec(&spec);
        results.push(check(
            5,
            &format!("{name} correction_is_zero at depth 8"),
            correction_is_zero(&eq, &spec, 8).unwrap(),
            "depth 8",
        ));
    }
    finish(5, &results);
}

type Pt = (i64, i64);

/// Lattice points of the hull of `support`: a box point is kept when it is on
/// the inner side of every line through two support points that has all of
/// the support on one side.
fn hull_lattice_points(support: &[Pt]) -> usize {
    let cross = |o: Pt, a: Pt, b: Pt| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut edges = Vec::new();
    for &a in support {
        for &b in support {
            if a != b && support.iter().all(|&c| cross(a, b, c) >= 0) {
                edges.push((a, b));
            }
        }
    }
    let (x0, x1) = (
        support.iter().map(|p| p.0).min().unwrap(),
        support.iter().map(|p| p.0).max().unwrap(),
    );
    let (y0, y1) = (
        support.iter().map(|p| p.1).min().unwrap(),
        support.iter().map(|p| p.1).max().unwrap(),
    );
    let mut count = 0;
    for x in x0..=x1 {
        for y in y0..=y1 {
            if edges.iter().all(|&(a, b)| cross(a, b, (x, y)) >= 0) {
                count += 1;
            }
        }
    }
    count
}

/// Distinct root moduli of a polynomial of degree at most 2, by the
/// quadratic formula.
fn distinct_moduli(c: &[i64]) -> usize {
    let c: Vec<f64> = c.iter().map(|&v| v as f64).collect();
    let moduli: Vec<f64> = match c.len() {
        1 => vec![],
        2 => vec![(c[0] / c[1]).abs()],
        3 => {
            let disc = c[1] * c[1] - 4.0 * c[2] * c[0];
            if disc >= 0.0 {
                let s = disc.sqrt();
                vec![
                    ((-c[1] + s) / (2.0 * c[2])).abs(),
                    ((-c[1] - s) / (2.0 * c[2])).abs(),
                ]
            } else {
                let m = (c[0] / c[2]).abs().sqrt();
                vec![m, m]
            }
        }
        _ => unreachable!(),
    };
    let mut distinct: Vec<f64> = Vec::new();
    for m in moduli {
        if !distinct.iter().any(|d| (d - m).abs() < 1e-12) {
            distinct.push(m);
        }
    }
    distinct.len()
}

#[test]
fn criterion_06_amoeba_census() {
    let mut results = Vec::new();
    // (name, P, Q) as integer coefficient lists
    let cases: [(&str, &str, &[i64], &[i64]); 3] = [
        ("example1", bundled::EXAMPLE1_JSON, &[-1, 1], &[1]),
        (
            "example2_m2",
            bundled::EXAMPLE2_M2_JSON,
            &[0, -1, 1],
            &[1, 1],
        ),
        ("example3", bundled::EXAMPLE3_JSON, &[-1, -1, 1], &[-1, 1]),
    ];
    for (name, text, p, q) in cases {
        let spec = riordan_file(text);
        assert_eq!(spec.p, Polynomial::from_ints(p));
        assert_eq!(spec.q, Polynomial::from_ints(q));
        let support: Vec<Pt> = q
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(a, _)| (a as i64, 0))
            .chain(
                p.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(a, _)| (a as i64, 1)),
            )
            .collect();
        let lattice = hull_lattice_points(&support) as i64;
        let (n1, n2) = (distinct_moduli(q), distinct_moduli(p));
        let kappa = usize::from(p[0] == 0 || q[0] == 0);
        let bound = (n1 + n2 + 2 - kappa) as i64;
        let c = component_census(&DifferenceEquation::from_spec(&spec)).unwrap();
        let got = (
            c.n1,
            c.n2,
            c.kappa,
            c.lower_bound,
            c.lattice_points,
            c.maximal,
        );
        let want = (n1, n2, kappa, bound, lattice, bound == lattice);
        results.push(check(
            6,
            &format!("{name} census == oracle"),
            got == want,
            format!(
                "N1={} N2={} kappa={} bound={} lattice={} maximal={}",
                c.n1, c.n2, c.kappa, c.lower_bound, c.lattice_points, c.maximal
            ),
        ));
        results.push(check(
            6,
            &format!("{name} maximal"),
            c.maximal,
            format!("{} == {}", c.lower_bound, c.lattice_points),
        ));
    }
    finish(6, &results);
}

#[test]
fn criterion_07_binomial_asymptotics() {
    let start = Instant::now();
    let spec = riordan_file(bundled::EXAMPLE1_JSON);
    let eq = DifferenceEquation::from_spec(&spec);
    let dir = Direction::new(2, 1).unwrap();
    let s = saddle(&eq, dir).unwrap();
    let mut results = Vec::new();
    let dz = (s.z0.re - 2.0).abs().max(s.z0.im.abs());
    let dw = (s.w0.re - 1.0).abs().max(s.w0.im.abs());
    results.push(check(
        7,
        "saddle (2,1) within 1e-10",
        dz <= 1e-10 && dw <= 1e-10,
        format!("z0={} w0={}", s.z0, s.w0),
    ));
    let h = hessian_h(&eq, s.z0, dir).unwrap();
    results.push(check(
        7,
        "H(z0) = 0.5 within 1e-12",
        (h.re - 0.5).abs() <= 1e-12 && h.im.abs() <= 1e-12,
        h,
    ));
    let rows = convergence_probe(&spec, dir, &[10, 200]).unwrap();
    let exact_ok = rows
        .iter()
        .all(|r| r.exact == int(binomial(2 * r.lambda, r.lambda)));
    results.push(check(
        7,
        "probe exact side == C(2l,l)",
        exact_ok,
        "big integers",
    ));
    let r10 = rows[0].ratio;
    results.push(check(
        7,
        "ratio at lambda=10 in [0.985, 1.0]",
        (0.985..=1.0).contains(&r10),
        format!("{r10:.6}"),
    ));
    let r200 = rows[1].ratio;
    results.push(check(
        7,
        "ratio at lambda=200 within 1 +- 0.001",
        (r200 - 1.0).abs() <= 1e-3,
        format!("{r200:.6}"),
    ));
    let elapsed = start.elapsed();
    results.push(check(
        7,
        "runtime < 10 s",
        elapsed < Duration::from_secs(10),
        format!("{elapsed:.2?}"),
    ));
    finish(7, &results);
}

#[test]
fn criterion_08_chessboard_asymptotics() {
    let start = Instant::now();
    let spec = riordan_file(bundled::EXAMPLE2_M2_JSON);
    let eq = DifferenceEquation::from_spec(&spec);
    let dir = Direction::new(2, 1).unwrap();
    let mu = 2.0f64;
    let s = saddle(&eq, dir).unwrap();
    let mut results = Vec::new();
    let z0_closed = (1.0 + ((mu - 1.0).powi(2) + 1.0).sqrt()) / (mu - 1.0);
    results.push(check(
        8,
        "z0 == (1+sqrt((mu-1)^2+1))/(mu-1) within 1e-9",
        (s.z0.re - z0_closed).abs() <= 1e-9 && s.z0.im.abs() <= 1e-9,
        format!("z0={} closed={z0_closed}", s.z0),
    ));
    let z0 = s.z0.re;
    let h_closed = (mu - 1.0) * ((mu - 2.0) * z0 - mu) / (z0 * z0 * (z0 - 1.0));
    let h = hessian_h(&eq, s.z0, dir).unwrap();
    results.push(check(
        8,
        "H(z0) == (mu-1)((mu-2)z0-mu)/(z0^2(z0-1)) within 1e-9",
        (h.re - h_closed).abs() <= 1e-9 && h.im.abs() <= 1e-9,
        format!("H={} closed={h_closed}", h),
    ));
    let rows = convergence_probe(&spec, dir, &[20, 100, 300]).unwrap();
    for r in &rows {
        println!(
            "criterion 8 probe: lambda={} ratio={:.6}",
            r.lambda, r.ratio
        );
    }
    let r300 = rows[2].ratio;
    results.push(check(
        8,
        "ratio at lambda=300 within 1 +- 0.02",
        (r300 - 1.0).abs() <= 0.02,
        format!("{r300:.6}"),
    ));
    let elapsed = start.elapsed();
    results.push(check(
        8,
        "runtime < 60 s",
        elapsed < Duration::from_secs(60),
        format!("{elapsed:.2?}"),
    ));
    finish(8, &results);
}

#[test]
fn criterion_09_cone_gating() {
    let spec = riordan_file(bundled::EXAMPLE1_JSON);
    let cone = cone_omega(&newton_polygon(&DifferenceEquation::from_spec(&spec))).unwrap();
    let mut rejected = true;
    for p in 1..=12 {
        for q in p..=12 {
            if cone.contains_interior(p, q) {
                rejected = false;
                println!("accepted ({p},{q}) with p <= q");
            }
        }
    }
    let mut results = vec![check(
        9,
        "every p <= q rejected (1..=12)",
        rejected,
        format!("generators {:?}", cone.generators),
    )];
    for (p, q) in [(2, 1), (3, 2), (5, 2)] {
        results.push(check(
            9,
            &format!("({p},{q}) accepted"),
            cone.contains_interior(p, q),
            "interior",
        ));
    }
    let est = riordan_core::asympt::estimate(&spec, Direction::new(1, 1).unwrap(), 10);
    let outside = matches!(est, Err(riordan_core::AsymptError::OutsideCone { .. }));
    results.push(check(
        9,
        "estimate refuses (1,1) as outside the cone",
        outside,
        format!("{est:?}"),
    ));
    finish(9, &results);
}

/// Invariants of every module over seeded random specs.
#[test]
fn criterion_10_property_harness() {
    const CASES: usize = 200;
    println!(
        "criterion 10 harness: seed {:#x}, {CASES} cases per property",
        common::SEED
    );
    let mut rng = common::rng(common::SEED ^ 0xa11);
    let mut failures: Vec<(&str, usize)> = Vec::new();
    let mut record = |name: &'static str, i: usize, ok: bool| {
        if !ok {
            failures.push((name, i));
        }
    };
    for i in 0..CASES {
        let spec = common::random_spec(&mut rng);
        let eq = DifferenceEquation::from_spec(&spec);
        record("valid spec", i, spec.validate().is_valid());
        let t = spec.table(10, 5).unwrap();
        record("lower triangular", i, is_lower_triangular(&t));
        record(
            "residue table solves recurrence",
            i,
            residual(&eq, &t).is_zero(),
        );
        let init = riordan_initial_data(&spec, 10, 5).unwrap();
        record(
            "solve == residue",
            i,
            solve(&eq, &init, 10, 5).unwrap() == t,
        );
        record(
            "correction vanishes",
            i,
            correction_is_zero(&eq, &spec, 6).unwrap(),
        );
        let gf = assemble_riordan(&spec).unwrap();
        record("series == residue", i, series_of(&gf, 10, 5).unwrap() == t);
        record("den leading term positive", i, leading_positive(&gf.den));
        let np = newton_polygon(&eq);
        record(
            "support in hull",
            i,
            np.points.iter().all(|&p| np.contains(p)),
        );
        record(
            "hull count == oracle",
            i,
            np.lattice_count() == hull_lattice_points(&np.points) as i64,
        );
        if let Ok(cone) = cone_omega(&np) {
            let scale_ok = (1..=5).all(|p| {
                (1..=5)
                    .all(|q| cone.contains_interior(p, q) == cone.contains_interior(3 * p, 3 * q))
            });
            record("cone scale invariance", i, scale_ok);
        }
        record("census computes", i, component_census(&eq).is_ok());
        let c = Rational::new(BigInt::from(-3), BigInt::from(7));
        record(
            "series linear",
            i,
            series_of(&gf.scale(&c), 6, 3).unwrap()
                == series_of(&gf, 6, 3).unwrap().map(|v| v * &c),
        );
    }
    for (name, i) in &failures {
        println!("property {name} failed on case {i}");
    }
    let ok = check(
        10,
        "module invariants over 200 random specs",
        failures.is_empty(),
        format!("{} failures", failures.len()),
    );
    finish(10, &[ok]);
}

fn leading_positive(p: &BivariatePoly) -> bool {
    // total degree descending, then w power descending
    let mut best: Option<(usize, usize, Rational)> = None;
    for (j, row) in p.rows().iter().enumerate() {
        for (i, c) in row.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let key = (i + j, j);
            if best.as_ref().is_none_or(|b| key > (b.0, b.1)) {
                best = Some((key.0, key.1, c.clone()));
            }
        }
    }
    best.is_some_and(|b| b.2.is_positive())
}
