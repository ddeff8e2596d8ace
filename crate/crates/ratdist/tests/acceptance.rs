//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Randomized criteria use fixed ChaCha seeds.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratdist::{cmd_multiples, Status};
use ratdist_core::geometry::{
    approx_quadrilateral, approx_triangle, certificate_verify, euler_triangle, heron_sixteen_area_squared,
    EulerSign, PointSet, SearchBudget,
};
use ratdist_core::rational::{int, is_perfect_square, rat, BigRat};
use ratdist_core::{CubicCurve, CurvePoint, Error, FamilyParams, Real};

type Outcome = Result<String, String>;

/// Name, pinned runtime limit and check.
type Criterion = (&'static str, Duration, fn() -> Outcome);

/// `(U, W)` of `kP1` at `(m, n) = (1, 2)`, `k = 1..=11`.
const TABLE: [(&str, &str); 11] = [
    ("3", "3"),
    ("17/4", "11/8"),
    ("-189/25", "-2091/125"),
    ("11713/1936", "-740943/85184"),
    ("5104323/1394761", "-774296133/1647212741"),
    ("923701649/48580900", "27508807641557/338608873000"),
    ("-61622709117/433923895441", "3530515935858140877/285838253719954489"),
    ("17006294967389953/4251429122504256", "-6468618165127547413697/277205865051779043899904"),
    (
        "5746975304186971011/41665298499035050225",
        "-3133684517758753884882526375341/268943929702576480749933159625",
    ),
    (
        "7830395115762668512371857/371647707091770699565924",
        "-21637825704318812407875118259091920491/226567277774013103139189522148402968",
    ),
    (
        "3948440455789942950949604475843/1082370632513496730007602575721",
        "599341435809994228534143420075705642493847013/1126066400833062513831952039757204874476841269",
    ),
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_rat(rng: &mut ChaCha8Rng) -> BigRat {
    rat(rng.gen_range(-100..=100), rng.gen_range(1..=100))
}

fn random_params(rng: &mut ChaCha8Rng) -> FamilyParams {
    FamilyParams::new(small_rat(rng), small_rat(rng))
}

fn nonsingular_params(rng: &mut ChaCha8Rng) -> FamilyParams {
    loop {
        let fp = random_params(rng);
        if !fp.is_singular() {
            return fp;
        }
    }
}

fn reference_curve() -> CubicCurve {
    CubicCurve::from_ints(2, -60, 144)
}

fn multiples_table() -> Outcome {
    let res = cmd_multiples("1", "2", 11);
    ensure(res.status == Status::Ok, || format!("status {:?}", res.status))?;
    let rows = res.json().and_then(|v| v["multiples"].as_array()).ok_or("no multiples array")?;
    ensure(rows.len() == 11, || format!("{} rows", rows.len()))?;
    for (k, (row, (u, w))) in rows.iter().zip(TABLE).enumerate() {
        let k = k + 1;
        ensure(row["k"] == k, || format!("row {k} has k = {}", row["k"]))?;
        ensure(row["U"] == u, || format!("{k}P1: U = {}, expected {u}", row["U"]))?;
        ensure(row["W"] == w, || format!("{k}P1: W = {}, expected {w}", row["W"]))?;
    }
    Ok("11 rows byte-identical".into())
}

fn curve_membership() -> Outcome {
    let fp = FamilyParams::new(int(1), int(2));
    let curve = fp.cubic();
    ensure(curve == reference_curve(), || format!("cubic at (1, 2) is {curve:?}"))?;
    let pts = curve.multiples(&fp.p1(), 50).map_err(|e| e.to_string())?;
    for (k, p) in pts.iter().enumerate() {
        ensure(!p.is_infinity(), || format!("{}P1 is the identity", k + 1))?;
        ensure(reference_curve().contains(p), || format!("{}P1 is off the curve", k + 1))?;
    }
    let digits = pts[49].u().map_or(0, |u| u.denom().to_string().len());
    Ok(format!("k = 1..50 on the curve, 50P1 denominator has {digits} digits"))
}

fn family_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut singular = 0;
    for _ in 0..1000 {
        let fp = random_params(&mut rng);
        let (m, n) = (&fp.m, &fp.n);
        let cubic = fp.cubic();
        let f = fp.q_factorization();
        // (U - r)(U^2 + sU + t) = U^3 + (s - r)U^2 + (t - rs)U - rt
        let expanded = CubicCurve::new(&f.linear - &f.root, &f.constant - &f.root * &f.linear, -(&f.root * &f.constant));
        ensure(expanded == cubic, || format!("factorization mismatch at ({m}, {n})"))?;
        ensure(fp.family_discriminant() == cubic.discriminant(), || {
            format!("discriminant ratio is not 1 at ({m}, {n})")
        })?;
        ensure(is_perfect_square(&cubic.c).is_some(), || format!("C is not a square at ({m}, {n})"))?;
        let sp = fp.special_points();
        let slope = (int(1) + n) * m;
        let level = n * n * (int(1) + n) * m;
        for p in [&sp.p1, &sp.p2, &sp.p3] {
            ensure(cubic.contains(p), || format!("special point off the curve at ({m}, {n})"))?;
            let (u, w) = (p.u().ok_or("special point at infinity")?, p.w().ok_or("special point at infinity")?);
            ensure(w + &slope * u == level, || format!("special point off the line at ({m}, {n})"))?;
        }
        ensure(cubic.contains(&sp.p4), || format!("P4 off the curve at ({m}, {n})"))?;
        singular += usize::from(fp.is_singular());
    }
    Ok(format!("1000 params ({singular} singular), global constant 1"))
}

fn round_trip() -> Outcome {
    let fp = FamilyParams::new(int(1), int(2));
    let quartic = fp.quartic();
    let curve = fp.cubic();
    let mut excluded = 0;
    for k in 2..=20 {
        let p = curve.scalar_mul(k, &fp.p1()).map_err(|e| e.to_string())?;
        match fp.cubic_to_quartic(&p) {
            Ok((x, y)) => {
                ensure(quartic.contains(&x, &y), || format!("image of {k}P1 is off the quartic"))?;
                let back = fp.quartic_to_cubic(&x, &y).map_err(|e| e.to_string())?;
                ensure(back == p, || format!("{k}P1 does not round-trip"))?;
            }
            Err(Error::ExcludedPoint) => excluded += 1,
            Err(e) => return Err(format!("{k}P1: {e}")),
        }
    }
    Ok(format!("k = 2..20 exact, {excluded} excluded fibers"))
}

/// Curve through three random points with distinct `U`, plus those points.
fn random_curve_with_points(rng: &mut ChaCha8Rng) -> (CubicCurve, [CurvePoint; 3]) {
    loop {
        let pts: Vec<(BigRat, BigRat)> =
            (0..3).map(|_| (rat(rng.gen_range(-12..=12), rng.gen_range(1..=4)), rat(rng.gen_range(-12..=12), rng.gen_range(1..=4)))).collect();
        let (u0, u1, u2) = (&pts[0].0, &pts[1].0, &pts[2].0);
        if u0 == u1 || u1 == u2 || u0 == u2 {
            continue;
        }
        // A u^2 + B u + C = w^2 - u^3 through three nodes: divided differences.
        let v: Vec<BigRat> = pts.iter().map(|(u, w)| w * w - u * u * u).collect();
        let d01 = (&v[1] - &v[0]) / (u1 - u0);
        let d12 = (&v[2] - &v[1]) / (u2 - u1);
        let a = (&d12 - &d01) / (u2 - u0);
        let b = &d01 - &a * (u0 + u1);
        let c = &v[0] - &a * u0 * u0 - &b * u0;
        let curve = CubicCurve::new(a, b, c);
        if curve.is_singular() {
            continue;
        }
        let [p, q, r] = [0, 1, 2].map(|i| CurvePoint::affine(pts[i].0.clone(), pts[i].1.clone()));
        return (curve, [p, q, r]);
    }
}

fn group_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut triples = 0;
    let curves = 25;
    for _ in 0..curves {
        let (curve, [p, q, r]) = random_curve_with_points(&mut rng);
        let add = |x: &CurvePoint, y: &CurvePoint| curve.add(x, y).map_err(|e| e.to_string());
        for pt in [&p, &q, &r] {
            ensure(curve.contains(pt), || "constructed point off its curve".into())?;
        }
        let pool = [p.clone(), q.clone(), r.clone(), add(&p, &q)?, add(&q, &r)?, add(&p, &p)?, r.negate(), CurvePoint::Infinity];
        for _ in 0..10 {
            let [x, y, z] = [0; 3].map(|_| pool[rng.gen_range(0..pool.len())].clone());
            let left = add(&add(&x, &y)?, &z)?;
            let right = add(&x, &add(&y, &z)?)?;
            ensure(left == right, || "associativity fails".into())?;
            ensure(curve.contains(&left), || "sum off the curve".into())?;
            ensure(add(&x, &y)? == add(&y, &x)?, || "commutativity fails".into())?;
            ensure(add(&x, &CurvePoint::Infinity)? == x, || "identity fails".into())?;
            ensure(add(&x, &x.negate())?.is_infinity(), || "inverse fails".into())?;
            triples += 1;
        }
    }
    let mut prng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..100 {
        let fp = nonsingular_params(&mut prng);
        let order = fp.cubic().torsion_order(&fp.special_points().p3).map_err(|e| e.to_string())?;
        ensure(order == Some(2), || format!("P3 has order {order:?} at ({}, {})", fp.m, fp.n))?;
    }
    Ok(format!("{triples} triples on {curves} curves, P3 of order 2 on 100 fibers"))
}

fn coord(rng: &mut ChaCha8Rng) -> BigRat {
    rat(rng.gen_range(-10_000..=10_000), 1000)
}

fn cross(o: &(BigRat, BigRat), a: &(BigRat, BigRat), b: &(BigRat, BigRat)) -> BigRat {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn real_close(a: &Real, b: &Real, tol: f64) -> bool {
    (a - b).abs() < tol
}

fn triangles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let eps = Real::parse("0.05").unwrap();
    let mut worst = 0.0f64;
    for t in 0..100 {
        let v = loop {
            let v: Vec<(BigRat, BigRat)> = (0..3).map(|_| (coord(&mut rng), coord(&mut rng))).collect();
            if !cross(&v[0], &v[1], &v[2]).is_zero() {
                break v;
            }
        };
        let input = PointSet::from_xy(v.clone());
        let out = approx_triangle(&input, &eps).map_err(|e| format!("triangle {t}: {e}"))?;
        let cert = &out.certificate;
        let check = certificate_verify(cert);
        ensure(check.is_valid(), || format!("triangle {t}: {:?}", check.reasons))?;
        ensure(!out.budget_exhausted && out.gap.value() < &eps, || {
            format!("triangle {t}: gap {}", out.gap.value().to_f64())
        })?;
        worst = worst.max(out.gap.value().to_f64());
        // A is the vertex opposite the longest side.
        let len2 = |i: usize, j: usize| {
            let (dx, dy) = (&v[i].0 - &v[j].0, &v[i].1 - &v[j].1);
            &dx * &dx + &dy * &dy
        };
        let (ia, ib, ic) = [(0, 1, 2), (1, 2, 0), (2, 0, 1)].into_iter().max_by(|x, y| len2(x.1, x.2).cmp(&len2(y.1, y.2))).unwrap();
        let user = cert.user_points();
        let (a, b, c) = (&user[ia], &user[ib], &user[ic]);
        ensure(real_close(&a.1, &Real::from_rat(&v[ia].0), 1e-30) && real_close(&a.2, &Real::from_rat(&v[ia].1), 1e-30), || {
            format!("triangle {t}: vertex A moved")
        })?;
        let (bx, by) = (Real::from_rat(&(&v[ic].0 - &v[ib].0)), Real::from_rat(&(&v[ic].1 - &v[ib].1)));
        let (px, py) = (&c.1 - &b.1, &c.2 - &b.2);
        ensure(real_close(&(&bx * &py - &by * &px), &Real::zero(), 1e-30), || format!("triangle {t}: B'C' not parallel to BC"))?;
        let labels: Vec<&str> = cert.points.iter().map(|p| p.label.as_str()).collect();
        let side = |i: usize, j: usize| cert.distance(labels[i], labels[j]).cloned().ok_or("missing side");
        let sixteen = heron_sixteen_area_squared(&side(0, 1)?, &side(1, 2)?, &side(2, 0)?);
        let area = cert.area.clone().ok_or("no area")?;
        ensure(sixteen == int(16) * &area * &area, || format!("triangle {t}: Heron mismatch"))?;
    }
    Ok(format!("100 triangles, worst gap {worst:.2e}"))
}

fn convex_quad(rng: &mut ChaCha8Rng) -> Vec<(BigRat, BigRat)> {
    loop {
        let (cx, cy) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let mut angles: Vec<f64> = (0..4).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..4).all(|i| {
            let next = if i == 3 { angles[0] + std::f64::consts::TAU } else { angles[i + 1] };
            next - angles[i] > 0.4
        });
        if !gaps_ok {
            continue;
        }
        let pts: Vec<(BigRat, BigRat)> = angles
            .iter()
            .map(|t| {
                let r = rng.gen_range(2.0..4.0);
                let q = |x: f64| rat((x * 1000.0).round() as i64, 1000);
                (q(cx + r * t.cos()), q(cy + r * t.sin()))
            })
            .collect();
        let convex = (0..4).all(|i| cross(&pts[i], &pts[(i + 1) % 4], &pts[(i + 2) % 4]).is_positive());
        if convex {
            return pts;
        }
    }
}

fn quadrilaterals() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let eps = Real::parse("0.1").unwrap();
    let mut inputs = vec![vec![(int(0), int(0)), (int(1), int(0)), (int(1), int(1)), (int(0), int(1))]];
    inputs.extend((0..10).map(|_| convex_quad(&mut rng)));
    let mut report = Vec::new();
    let mut reached = 0;
    for (i, v) in inputs.into_iter().enumerate() {
        let input = PointSet::from_xy(v);
        let start = Instant::now();
        let out = approx_quadrilateral(&input, &eps, &SearchBudget::default()).map_err(|e| format!("quad {i}: {e}"))?;
        let check = certificate_verify(&out.certificate);
        ensure(check.is_valid(), || format!("quad {i}: {:?}", check.reasons))?;
        ensure(out.certificate.distances.len() == 6, || format!("quad {i}: {} distances", out.certificate.distances.len()))?;
        let gap = out.gap.value().to_f64();
        let ok = !out.budget_exhausted && out.gap.value() < &eps;
        if i == 0 {
            ensure(ok, || format!("unit square: gap {gap}, exhausted {}", out.budget_exhausted))?;
        }
        reached += usize::from(ok);
        report.push(format!("{gap:.1e}{}/{:.1}s", if ok { "" } else { "*" }, start.elapsed().as_secs_f64()));
    }
    Ok(format!("{reached}/11 within eps (* = flagged); gaps {}", report.join(" ")))
}

fn oval_claim() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..500 {
        let fp = nonsingular_params(&mut rng);
        let ok = fp.oval_membership_check().map_err(|e| e.to_string())?;
        ensure(ok, || format!("oval check fails at ({}, {})", fp.m, fp.n))?;
    }
    Ok("500 params".into())
}

fn euler_generator() -> Outcome {
    let (mut made, mut rejected) = (0, 0);
    for p in 1..=6u64 {
        for q in 1..p {
            for r in 1..=6u64 {
                for s in 1..=r {
                    for sign in [EulerSign::Upper, EulerSign::Lower] {
                        let cert = match euler_triangle(p, q, r, s, sign) {
                            Ok(c) => c,
                            Err(Error::NotATriangle) => {
                                rejected += 1;
                                continue;
                            }
                            Err(e) => return Err(format!("({p},{q},{r},{s}) {sign:?}: {e}")),
                        };
                        let (a, b, c) = (
                            cert.distance("B", "C").ok_or("missing BC")?,
                            cert.distance("C", "A").ok_or("missing CA")?,
                            cert.distance("A", "B").ok_or("missing AB")?,
                        );
                        let area = cert.area.clone().ok_or("no area")?;
                        ensure(heron_sixteen_area_squared(a, b, c) == int(16) * &area * &area, || {
                            format!("({p},{q},{r},{s}) {sign:?}: Heron mismatch")
                        })?;
                        ensure(certificate_verify(&cert).is_valid(), || format!("({p},{q},{r},{s}) {sign:?}: invalid"))?;
                        made += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{made} triangles with rational area, {rejected} sign choices without a triangle"))
}

fn real_roots() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..500 {
        let fp = nonsingular_params(&mut rng);
        let c = fp.cubic();
        let at = || format!("({}, {})", fp.m, fp.n);
        ensure(&c.a * &c.a - int(3) * &c.b > BigRat::zero(), || format!("A^2 - 3B <= 0 at {}", at()))?;
        ensure(c.discriminant() > BigRat::zero(), || format!("discriminant <= 0 at {}", at()))?;
        ensure(c.has_three_distinct_real_roots(), || format!("fewer than three real roots at {}", at()))?;
    }
    Ok("500 params".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("multiples table reproduction", Duration::from_secs(1), multiples_table),
        ("curve membership k <= 50", Duration::from_secs(10), curve_membership),
        ("family identities", Duration::from_secs(30), family_identities),
        ("birational round trip", Duration::from_secs(10), round_trip),
        ("group-law axioms", Duration::from_secs(60), group_axioms),
        ("triangle approximation", Duration::from_secs(60), triangles),
        ("quadrilateral approximation", Duration::from_secs(300), quadrilaterals),
        ("oval claim", Duration::from_secs(5), oval_claim),
        ("Euler generator", Duration::from_secs(5), euler_generator),
        ("three real roots", Duration::from_secs(5), real_roots),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if took <= limit {
                Ok(detail)
            } else {
                Err(format!("{detail}; took {:.2}s, limit {}s", took.as_secs_f64(), limit.as_secs()))
            }
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{:.2}s]", i + 1, took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{:.2}s]", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
