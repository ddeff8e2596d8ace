//! Euler's rational-area triangles and Kummer's symmetric relation.

use alloc::vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Frame, LabeledPoint, RationalCertificate};
use crate::rational::{int, is_perfect_square, BigRat};
use crate::Error;

/// Choice of the upper or lower signs in the middle side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EulerSign {
    Upper,
    Lower,
}

/// `16 Area^2 = 2a^2b^2 + 2b^2c^2 + 2c^2a^2 - a^4 - b^4 - c^4`.
pub fn heron_sixteen_area_squared(a: &BigRat, b: &BigRat, c: &BigRat) -> BigRat {
    let (a2, b2, c2) = (a * a, b * b, c * c);
    int(2) * (&a2 * &b2 + &b2 * &c2 + &c2 * &a2) - &a2 * &a2 - &b2 * &b2 - &c2 * &c2
}

/// Triangle with sides
/// `(r^2+s^2)/(rs) : (ps ± rq)(pr ∓ qs)/(pqrs) : (p^2+q^2)/(pq)`.
///
/// Vertices are `B = (0, 0)`, `C = (a, 0)` and `A` above the axis, where
/// `a = BC`, `b = CA`, `c = AB` are the three sides in that order.
pub fn euler_triangle(p: u64, q: u64, r: u64, s: u64, sign: EulerSign) -> Result<RationalCertificate, Error> {
    if p == 0 || q == 0 || r == 0 || s == 0 {
        return Err(Error::NotATriangle);
    }
    let [p, q, r, s] = [p, q, r, s].map(|v| BigRat::from_integer(BigInt::from(v)));
    let a = (&r * &r + &s * &s) / (&r * &s);
    let c = (&p * &p + &q * &q) / (&p * &q);
    let (f, g) = match sign {
        EulerSign::Upper => (&p * &s + &r * &q, &p * &r - &q * &s),
        EulerSign::Lower => (&p * &s - &r * &q, &p * &r + &q * &s),
    };
    let b = f * g / (&p * &q * &r * &s);
    if !b.is_positive() || &a + &b <= c || &b + &c <= a || &c + &a <= b {
        return Err(Error::NotATriangle);
    }
    let sixteen_sq = heron_sixteen_area_squared(&a, &b, &c);
    let four_area = is_perfect_square(&sixteen_sq)
        .ok_or_else(|| Error::SquareRootNotRational(alloc::format!("16 Area^2 = {sixteen_sq}")))?;
    let area = four_area / int(4);
    let ax = (&a * &a + &c * &c - &b * &b) / (int(2) * &a);
    let ay = int(2) * &area / &a;
    let points = vec![
        LabeledPoint::new("A", ax, ay),
        LabeledPoint::new("B", int(0), int(0)),
        LabeledPoint::new("C", a, int(0)),
    ];
    RationalCertificate::from_points(points, Frame::identity(), true)
}

fn kummer_term(t: &BigRat, c: &BigRat, plus: bool) -> BigRat {
    let shifted = if plus { t + c } else { t - c };
    (&shifted * &shifted - int(1)) / (int(2) * t)
}

/// Exact test of
/// `((xi+c)^2-1)/(2xi) * ((x-c)^2-1)/(2x) = ((nu-c)^2-1)/(2nu) * ((y+c)^2-1)/(2y)`.
pub fn kummer_check(xi: &BigRat, nu: &BigRat, x: &BigRat, y: &BigRat, c: &BigRat) -> Result<bool, Error> {
    if [xi, nu, x, y].iter().any(|v| v.is_zero()) {
        return Err(Error::ZeroDenominator);
    }
    let lhs = kummer_term(xi, c, true) * kummer_term(x, c, false);
    let rhs = kummer_term(nu, c, false) * kummer_term(y, c, true);
    Ok(lhs == rhs)
}
