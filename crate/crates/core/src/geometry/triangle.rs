//! Triangle approximation through the foot of the altitude on the longest
//! side, and the shared placement of collinear inputs.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{
    already_rational, cross, finish, guarded, Approximation, Frame, LabeledPoint, PointSet, RationalCertificate,
};
use crate::rational::{int, positive_rational_near, rational_angle_near, rational_near, BigRat};
use crate::real::Real;
use crate::Error;

const MAX_REFINEMENTS: u32 = 48;

fn dot(a: &(Real, Real), b: &(Real, Real)) -> Real {
    &a.0 * &b.0 + &a.1 * &b.1
}

fn sub(a: &(Real, Real), b: &(Real, Real)) -> (Real, Real) {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn unit(v: &(Real, Real)) -> (Real, Real) {
    let len = Real::hypot(&v.0, &v.1);
    (&v.0 / &len, &v.1 / &len)
}

/// Approximates three points by a rational triangle with rational area.
///
/// With `BC` the longest side and `D` the foot of the altitude from `A`, the
/// output keeps `A`, keeps the new `B'C'` parallel to `BC`, and takes a
/// rational altitude `AD'` and rational angles at `A` on both sides of it.
/// Collinear inputs are placed at rational positions along their line.
pub fn approx_triangle(tri: &PointSet, eps: &Real) -> Result<Approximation, Error> {
    if tri.len() != 3 {
        return Err(Error::InvalidInput("a triangle needs exactly three points".into()));
    }
    tri.require_distinct()?;
    let threshold = guarded(eps)?;
    if let Some(done) = already_rational(tri, true) {
        return Ok(done);
    }
    let pts = tri.points();
    if cross(&pts[0], &pts[1], &pts[2]).is_zero() {
        return place_on_line(tri, &threshold);
    }

    let side = |i: usize, j: usize| {
        let (dx, dy) = (&pts[i].x - &pts[j].x, &pts[i].y - &pts[j].y);
        &dx * &dx + &dy * &dy
    };
    // (apex, base end, base end), base the longest side
    let (ia, ib, ic) = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
        .into_iter()
        .max_by(|x, y| side(x.1, x.2).cmp(&side(y.1, y.2)))
        .unwrap_or((0, 1, 2));
    let (a, b, c) = (tri.real(ia), tri.real(ib), tri.real(ic));
    let along = unit(&sub(&c, &b));
    let proj = dot(&sub(&a, &b), &along);
    let d = (&b.0 + &proj * &along.0, &b.1 + &proj * &along.1);
    let ad = sub(&a, &d);
    let h = Real::hypot(&ad.0, &ad.1);
    let normal = (&ad.0 / &h, &ad.1 / &h);
    // Right-handed: the canonical y axis is the altitude direction.
    let ex = (normal.1.clone(), -&normal.0);
    let xb = dot(&sub(&b, &d), &ex);
    let xc = dot(&sub(&c, &d), &ex);
    let alpha = Real::atan2(&xb.abs(), &h);
    let beta = Real::atan2(&xc.abs(), &h);
    let spread = (&h * &h + &xb * &xb).max(&h * &h + &xc * &xc) / &h + Real::one();

    let mut last = None;
    let mut pos_tol = eps.shr(3);
    for _ in 0..MAX_REFINEMENTS {
        let angle_tol = &pos_tol / &spread;
        pos_tol = pos_tol.shr(1);
        let h1 = positive_rational_near(&h, &pos_tol);
        let a1 = rational_angle_near(&alpha, &angle_tol);
        let b1 = rational_angle_near(&beta, &angle_tol);
        let usable = |t: &crate::RationalAngle| t.cos().is_positive() && !t.sin().is_negative();
        if !usable(&a1) || !usable(&b1) {
            continue;
        }
        let signed = |x: &Real, len: BigRat| if x.is_negative() { -len } else { len };
        let xb1 = signed(&xb, &h1 * a1.sin() / a1.cos());
        let xc1 = signed(&xc, &h1 * b1.sin() / b1.cos());
        if xb1 == xc1 {
            continue;
        }
        let mut placed = Vec::with_capacity(3);
        for (i, p) in pts.iter().enumerate() {
            let (x, y) = match i {
                _ if i == ia => (int(0), h1.clone()),
                _ if i == ib => (xb1.clone(), int(0)),
                _ => (xc1.clone(), int(0)),
            };
            placed.push(LabeledPoint::new(p.label.clone(), x, y));
        }
        let h1r = Real::from_rat(&h1);
        let frame = Frame {
            cos: ex.0.clone(),
            sin: ex.1.clone(),
            dx: &a.0 - &h1r * &normal.0,
            dy: &a.1 - &h1r * &normal.1,
        };
        let cert = RationalCertificate::from_points(placed, frame, true)?;
        let result = finish(cert, tri, false, None)?;
        if result.gap.value() < &threshold {
            return Ok(result);
        }
        last = Some(result);
    }
    let mut result = last.ok_or_else(|| Error::InvalidInput("triangle too thin to approximate".into()))?;
    result.budget_exhausted = true;
    Ok(result)
}

/// Places exactly collinear points at rational positions along their line.
pub(crate) fn place_on_line(input: &PointSet, threshold: &Real) -> Result<Approximation, Error> {
    let n = input.len();
    let origin = input.real(0);
    let far = (1..n)
        .map(|i| input.real(i))
        .max_by(|p, q| {
            let dp = sub(p, &origin);
            let dq = sub(q, &origin);
            dot(&dp, &dp).cmp(&dot(&dq, &dq))
        })
        .ok_or_else(|| Error::InvalidInput("need at least two points".into()))?;
    let dir = unit(&sub(&far, &origin));
    let positions: Vec<Real> = (0..n).map(|i| dot(&sub(&input.real(i), &origin), &dir)).collect();
    let frame = Frame { cos: dir.0.clone(), sin: dir.1.clone(), dx: origin.0.clone(), dy: origin.1.clone() };
    let mut tol = threshold.shr(1);
    let mut last = None;
    for _ in 0..MAX_REFINEMENTS {
        let placed: Vec<LabeledPoint> = input
            .points()
            .iter()
            .zip(&positions)
            .enumerate()
            .map(|(i, (p, t))| {
                let x = if i == 0 { int(0) } else { rational_near(t, &tol) };
                LabeledPoint::new(p.label.clone(), x, int(0))
            })
            .collect();
        tol = tol.shr(1);
        let distinct = placed.iter().enumerate().all(|(i, p)| placed[..i].iter().all(|q| q.x != p.x));
        if !distinct {
            continue;
        }
        let cert = RationalCertificate::from_points(placed, frame.clone(), true)?;
        let result = finish(cert, input, false, None)?;
        if result.gap.value() < threshold {
            return Ok(result);
        }
        last = Some(result);
    }
    let mut result = last.ok_or_else(|| Error::InvalidInput("points too close to separate".into()))?;
    result.budget_exhausted = true;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::certificate_verify;
    use crate::rational::rat;

    fn set(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_xy(coords.iter().map(|&(x, y)| (int(x), int(y))))
    }

    fn eps(s: &str) -> Real {
        Real::parse(s).unwrap()
    }

    #[test]
    fn rational_right_triangle_is_kept() {
        let out = approx_triangle(&set(&[(0, 0), (3, 0), (0, 4)]), &eps("0.1")).unwrap();
        assert!(out.gap.value().is_zero());
        assert_eq!(out.certificate.area, Some(int(6)));
        let mut sides: Vec<_> = out.certificate.distances.iter().map(|d| d.value.clone()).collect();
        sides.sort();
        assert_eq!(sides, [int(3), int(4), int(5)]);
    }

    #[test]
    fn generic_triangle() {
        let input = set(&[(0, 0), (4, 0), (1, 2)]);
        let out = approx_triangle(&input, &eps("0.05")).unwrap();
        assert!(certificate_verify(&out.certificate).is_valid());
        assert!(out.gap.value() < &eps("0.05"));
        assert!(!out.budget_exhausted);
        // (1, 2) is the apex opposite the longest side and is kept.
        let user = out.certificate.user_points();
        assert!((&user[2].1 - Real::from_i64(1)).abs() < 1e-40);
        assert!((&user[2].2 - Real::from_i64(2)).abs() < 1e-40);
    }

    #[test]
    fn collinear_triangle() {
        let input = PointSet::from_xy([(int(0), int(0)), (rat(1, 3), rat(1, 3)), (int(2), int(2))]);
        let out = approx_triangle(&input, &eps("0.01")).unwrap();
        assert!(certificate_verify(&out.certificate).is_valid());
        assert_eq!(out.certificate.area, Some(int(0)));
        assert!(out.gap.value() < &eps("0.01"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(approx_triangle(&set(&[(0, 0), (1, 0)]), &eps("0.1")).is_err());
        assert!(approx_triangle(&set(&[(0, 0), (1, 0), (1, 0)]), &eps("0.1")).is_err());
        assert!(approx_triangle(&set(&[(0, 0), (1, 0), (0, 1)]), &eps("0")).is_err());
    }
}
