//! Closed-form rational-distance constructions.

use alloc::vec;

use num_traits::{One, Signed, Zero};

use super::{Frame, LabeledPoint, RationalCertificate};
use crate::family::FamilyParams;
use crate::rational::{int, BigRat, RationalAngle};
use crate::Error;

/// `x = (u + a/u)/2`, `y = (u - a/u)/2`, so `x^2 - y^2 = a`.
pub fn hyperbola_point(a: &BigRat, u: &BigRat) -> Result<(BigRat, BigRat), Error> {
    if a.is_zero() || u.is_zero() {
        return Err(Error::ZeroInput);
    }
    let a_over_u = a / u;
    let two = int(2);
    Ok(((u + &a_over_u) / &two, (u - &a_over_u) / two))
}

/// A point `R` on a ray from `O` at rational distance from `P`, where
/// `|OP| = r` and the ray makes `angle` with `OP`.
///
/// Returns `(q, p) = (|OR|, |PR|)` with `p^2 = q^2 + r^2 - 2 q r cos(angle)`.
/// `q` increases strictly with `u` and takes every real value; it is
/// negative when `R` lies behind `O`.
pub fn line_rational_distance_point(
    r: &BigRat,
    angle: &RationalAngle,
    u: &BigRat,
) -> Result<(BigRat, BigRat), Error> {
    if !u.is_positive() {
        return Err(Error::InvalidInput("u must be positive".into()));
    }
    let a = r * r * angle.sin() * angle.sin();
    let a_over_u = &a / u;
    let two = int(2);
    let p = (u + &a_over_u) / &two;
    let s = (u - &a_over_u) / two;
    Ok((r * angle.cos() + s, p))
}

/// Point of the line through the origin with direction `(m, 1)` cut by the
/// line through `(c, 0)` of slope `2x / (1 - x^2)`.
pub(crate) fn b_from_x(m: &BigRat, c: &BigRat, x: &BigRat) -> Option<(BigRat, BigRat)> {
    let den = x * x + int(2) * m * x - BigRat::one();
    if den.is_zero() {
        return None;
    }
    let t = int(2) * c * x / den;
    Some((&t * m, t))
}

/// Turns a rational point `(x, y)` of the quartic of `params` into a point
/// `B` on the line through `O` at `angle` whose distances to `A = (-a, 0)`,
/// `O = (0, 0)` and `C = (c, 0)` are rational.
///
/// Requires `m = cot(angle)` and `n = c / a`. The certificate lists
/// `A`, `O`, `C`, `B`.
pub fn quartic_point_to_b(
    params: &FamilyParams,
    a: &BigRat,
    c: &BigRat,
    angle: &RationalAngle,
    x: &BigRat,
    y: &BigRat,
) -> Result<RationalCertificate, Error> {
    if angle.sin().is_zero() || a.is_zero() {
        return Err(Error::InconsistentParams("angle and a must be nonzero".into()));
    }
    if params.m != angle.cos() / angle.sin() || params.n != c / a {
        return Err(Error::InconsistentParams("m must be cot(angle) and n must be c/a".into()));
    }
    if !params.quartic().contains(x, y) {
        return Err(Error::NotOnQuartic);
    }
    if x.is_zero() || x.abs().is_one() {
        return Err(Error::DegeneratePoint);
    }
    let (bx, by) = b_from_x(&params.m, c, x).ok_or(Error::DegeneratePoint)?;
    let points = vec![
        LabeledPoint::new("A", -a, int(0)),
        LabeledPoint::new("O", int(0), int(0)),
        LabeledPoint::new("C", c.clone(), int(0)),
        LabeledPoint::new("B", bx, by),
    ];
    RationalCertificate::from_points(points, Frame::identity(), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::certificate_verify;
    use crate::rational::rat;

    #[test]
    fn hyperbola_examples() {
        assert_eq!(hyperbola_point(&int(1), &int(2)).unwrap(), (rat(5, 4), rat(3, 4)));
        assert_eq!(hyperbola_point(&int(1), &int(1)).unwrap(), (int(1), int(0)));
        assert_eq!(hyperbola_point(&int(0), &int(1)), Err(Error::ZeroInput));
        assert_eq!(hyperbola_point(&int(3), &int(0)), Err(Error::ZeroInput));
    }

    #[test]
    fn line_point_examples() {
        let angle = RationalAngle::new(rat(3, 5), rat(4, 5)).unwrap();
        assert_eq!(line_rational_distance_point(&int(5), &angle, &int(4)).unwrap(), (int(3), int(4)));
        assert_eq!(line_rational_distance_point(&int(5), &angle, &int(8)).unwrap(), (int(6), int(5)));
    }

    #[test]
    fn trivial_quartic_points_are_degenerate() {
        let params = FamilyParams::new(rat(4, 3), int(2));
        let angle = RationalAngle::new(rat(4, 5), rat(3, 5)).unwrap();
        for y in [int(1), int(-1)] {
            let got = quartic_point_to_b(&params, &int(1), &int(2), &angle, &int(0), &y);
            assert_eq!(got, Err(Error::DegeneratePoint));
        }
    }

    #[test]
    fn inconsistent_params_rejected() {
        let params = FamilyParams::new(int(1), int(2));
        let angle = RationalAngle::new(rat(4, 5), rat(3, 5)).unwrap();
        let got = quartic_point_to_b(&params, &int(1), &int(2), &angle, &int(0), &int(1));
        assert!(matches!(got, Err(Error::InconsistentParams(_))));
    }

    #[test]
    fn multiples_give_rational_four_sets() {
        let params = FamilyParams::new(rat(4, 3), int(2));
        let angle = RationalAngle::new(rat(4, 5), rat(3, 5)).unwrap();
        let cubic = params.cubic();
        let p1 = params.p1();
        let mut found = 0;
        for k in 1..=6 {
            let pt = cubic.scalar_mul(k, &p1).unwrap();
            let Ok((x, y)) = params.cubic_to_quartic(&pt) else { continue };
            match quartic_point_to_b(&params, &int(1), &int(2), &angle, &x, &y) {
                Ok(cert) => {
                    assert!(certificate_verify(&cert).is_valid());
                    assert_eq!(cert.distances.len(), 6);
                    found += 1;
                }
                Err(Error::DegeneratePoint) => {}
                Err(e) => panic!("k = {k}: {e:?}"),
            }
        }
        assert!(found >= 4);
    }
}
