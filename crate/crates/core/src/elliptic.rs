//! Chord-and-tangent arithmetic on `W^2 = U^3 + A U^2 + B U + C` over the
//! rationals, in affine coordinates.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::{int, BigRat};
use crate::Error;

/// Orders a rational point of finite order can have (Mazur).
pub const MAZUR_ORDERS: [u32; 11] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12];

/// The cubic `W^2 = U^3 + A U^2 + B U + C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicCurve {
    pub a: BigRat,
    pub b: BigRat,
    pub c: BigRat,
}

/// A point of a [`CubicCurve`], stored as `(U, W)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { u: BigRat, w: BigRat },
}

impl CurvePoint {
    pub fn affine(u: BigRat, w: BigRat) -> Self {
        CurvePoint::Affine { u, w }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn negate(&self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { u, w } => CurvePoint::Affine { u: u.clone(), w: -w },
        }
    }

    pub fn u(&self) -> Option<&BigRat> {
        match self {
            CurvePoint::Affine { u, .. } => Some(u),
            CurvePoint::Infinity => None,
        }
    }

    pub fn w(&self) -> Option<&BigRat> {
        match self {
            CurvePoint::Affine { w, .. } => Some(w),
            CurvePoint::Infinity => None,
        }
    }
}

impl CubicCurve {
    pub fn new(a: BigRat, b: BigRat, c: BigRat) -> Self {
        CubicCurve { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        CubicCurve::new(int(a), int(b), int(c))
    }

    /// `U^3 + A U^2 + B U + C`.
    pub fn rhs(&self, u: &BigRat) -> BigRat {
        ((u + &self.a) * u + &self.b) * u + &self.c
    }

    pub fn contains(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { u, w } => w * w == self.rhs(u),
        }
    }

    /// `18ABC - 4A^3C + A^2B^2 - 4B^3 - 27C^2`, the discriminant of the
    /// cubic polynomial in `U`.
    pub fn discriminant(&self) -> BigRat {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let a2 = a * a;
        let b2 = b * b;
        int(18) * a * b * c - int(4) * &a2 * a * c + &a2 * &b2 - int(4) * &b2 * b
            - int(27) * c * c
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// Three distinct real roots iff `A^2 - 3B > 0` and
    /// `-A^2B^2 + 4B^3 + 4A^3C - 18ABC + 27C^2 < 0`.
    pub fn has_three_distinct_real_roots(&self) -> bool {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let a2 = a * a;
        let b2 = b * b;
        let critical = -(&a2 * &b2) + int(4) * &b2 * b + int(4) * &a2 * a * c
            - int(18) * a * b * c
            + int(27) * c * c;
        (&a2 - int(3) * b).is_positive() && critical.is_negative()
    }

    /// `256 (A^2 - 3B)^3 / disc`, normalized so that `W^2 = U^3 + U` gives
    /// 1728.
    pub fn j_invariant(&self) -> Result<BigRat, Error> {
        let disc = self.discriminant();
        if disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        let c4 = &self.a * &self.a - int(3) * &self.b;
        Ok(int(256) * &c4 * &c4 * &c4 / disc)
    }

    fn check(&self, pts: &[&CurvePoint]) -> Result<(), Error> {
        if self.is_singular() {
            return Err(Error::SingularCurve);
        }
        if pts.iter().any(|p| !self.contains(p)) {
            return Err(Error::PointNotOnCurve);
        }
        Ok(())
    }

    /// Group sum; validates both inputs.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint, Error> {
        self.check(&[p, q])?;
        Ok(self.add_unchecked(p, q))
    }

    /// Group sum of two points already known to be on a nonsingular curve.
    pub fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (u0, w0, u1, w1) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { u: u0, w: w0 }, CurvePoint::Affine { u: u1, w: w1 }) => {
                (u0, w0, u1, w1)
            }
        };
        let slope = if u0 != u1 {
            (w1 - w0) / (u1 - u0)
        } else if w0 == w1 && !w0.is_zero() {
            // tangent
            (int(3) * u0 * u0 + int(2) * &self.a * u0 + &self.b) / (int(2) * w0)
        } else {
            // P + (-P), including doubling a 2-torsion point
            return CurvePoint::Infinity;
        };
        let u = &slope * &slope - &self.a - u0 - u1;
        let w = -w0 - (&u - u0) * &slope;
        CurvePoint::Affine { u, w }
    }

    /// `k P` by double-and-add; negative `k` negates.
    pub fn scalar_mul(&self, k: i64, p: &CurvePoint) -> Result<CurvePoint, Error> {
        self.check(&[p])?;
        Ok(self.scalar_mul_unchecked(k, p))
    }

    pub fn scalar_mul_unchecked(&self, k: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if k < 0 { p.negate() } else { p.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        acc
    }

    /// `[P, 2P, ..., kmax P]` by repeated addition.
    pub fn multiples(&self, p: &CurvePoint, kmax: usize) -> Result<alloc::vec::Vec<CurvePoint>, Error> {
        self.check(&[p])?;
        let mut out = alloc::vec::Vec::with_capacity(kmax);
        let mut acc = CurvePoint::Infinity;
        for _ in 0..kmax {
            acc = self.add_unchecked(&acc, p);
            out.push(acc.clone());
        }
        Ok(out)
    }

    /// Least `k` in `{1..10, 12}` (capped at `cap`) with `kP = O`, or
    /// `None` when no such `k` exists, meaning `P` has infinite order.
    pub fn torsion_order_capped(&self, p: &CurvePoint, cap: u32) -> Result<Option<u32>, Error> {
        self.check(&[p])?;
        // U = X / d^2, W = Y / d^3 is an integral model, where torsion points
        // have integer X and Y; a non-integral multiple settles the question.
        let d = BigRat::from_integer(self.a.denom().lcm(self.b.denom()).lcm(self.c.denom()));
        let (d2, d3) = (&d * &d, &d * &d * &d);
        let mut acc = CurvePoint::Infinity;
        for k in 1..=cap.min(12) {
            acc = self.add_unchecked(&acc, p);
            match &acc {
                CurvePoint::Infinity => {
                    // Order 11 cannot occur for a rational point.
                    return Ok(MAZUR_ORDERS.contains(&k).then_some(k));
                }
                CurvePoint::Affine { u, w } => {
                    if !(u * &d2).is_integer() || !(w * &d3).is_integer() {
                        return Ok(None);
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn torsion_order(&self, p: &CurvePoint) -> Result<Option<u32>, Error> {
        self.torsion_order_capped(p, 12)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn reference_curve() -> CubicCurve {
        CubicCurve::from_ints(2, -60, 144)
    }

    fn pt(u: BigRat, w: BigRat) -> CurvePoint {
        CurvePoint::affine(u, w)
    }

    #[test]
    fn membership() {
        let e = reference_curve();
        assert!(e.contains(&pt(int(3), int(3))));
        assert!(e.contains(&CurvePoint::Infinity));
        assert!(!e.contains(&pt(int(3), int(4))));
    }

    #[test]
    fn chord_sum_of_p1_and_p2() {
        let e = reference_curve();
        let s = e.add(&pt(int(3), int(3)), &pt(int(0), int(12))).unwrap();
        assert_eq!(s, pt(int(4), int(0)));
    }

    #[test]
    fn identity_and_inverse() {
        let e = reference_curve();
        let p = pt(int(3), int(3));
        assert_eq!(e.add(&p, &CurvePoint::Infinity).unwrap(), p);
        assert_eq!(e.add(&p, &p.negate()).unwrap(), CurvePoint::Infinity);
    }

    #[test]
    fn small_multiples() {
        let e = reference_curve();
        let p = pt(int(3), int(3));
        assert_eq!(e.scalar_mul(2, &p).unwrap(), pt(rat(17, 4), rat(11, 8)));
        assert_eq!(e.scalar_mul(3, &p).unwrap(), pt(rat(-189, 25), rat(-2091, 125)));
        assert_eq!(e.scalar_mul(0, &p).unwrap(), CurvePoint::Infinity);
        assert_eq!(e.scalar_mul(-2, &p).unwrap(), pt(rat(17, 4), rat(-11, 8)));
        let listed = e.multiples(&p, 5).unwrap();
        for (k, q) in listed.iter().enumerate() {
            assert_eq!(*q, e.scalar_mul(k as i64 + 1, &p).unwrap());
        }
    }

    #[test]
    fn torsion_orders() {
        let e = reference_curve();
        assert_eq!(e.torsion_order(&pt(int(4), int(0))).unwrap(), Some(2));
        assert_eq!(e.torsion_order(&CurvePoint::Infinity).unwrap(), Some(1));
        assert_eq!(e.torsion_order(&pt(int(3), int(3))).unwrap(), None);
        // y^2 = x^3 + 1 has (2, 3) of order 6 and (0, 1) of order 3.
        let e = CubicCurve::from_ints(0, 0, 1);
        assert_eq!(e.torsion_order(&pt(int(2), int(3))).unwrap(), Some(6));
        assert_eq!(e.torsion_order(&pt(int(0), int(1))).unwrap(), Some(3));
    }

    #[test]
    fn discriminant_examples() {
        assert!(CubicCurve::from_ints(0, 0, 0).discriminant().is_zero());
        assert_eq!(reference_curve().discriminant(), int(2880));
        assert_eq!(CubicCurve::from_ints(0, -1, 0).discriminant(), int(4));
    }

    #[test]
    fn real_roots() {
        assert!(reference_curve().has_three_distinct_real_roots());
        assert!(!CubicCurve::from_ints(0, 1, 0).has_three_distinct_real_roots());
        assert!(!CubicCurve::from_ints(0, -3, 2).has_three_distinct_real_roots());
    }

    #[test]
    fn j_invariant_anchors() {
        assert_eq!(CubicCurve::from_ints(0, 1, 0).j_invariant().unwrap(), int(1728));
        assert!(CubicCurve::from_ints(0, 0, 1).j_invariant().unwrap().is_zero());
        assert_eq!(
            CubicCurve::from_ints(0, 0, 0).j_invariant(),
            Err(Error::SingularCurve)
        );
        // 256 * (4 + 180)^3 / 2880
        assert_eq!(reference_curve().j_invariant().unwrap(), rat(256 * 184 * 184 * 184, 2880));
    }

    #[test]
    fn group_ops_reject_bad_input() {
        let e = reference_curve();
        assert_eq!(e.add(&pt(int(3), int(4)), &CurvePoint::Infinity), Err(Error::PointNotOnCurve));
        let cusp = CubicCurve::from_ints(0, 0, 0);
        assert_eq!(cusp.add(&CurvePoint::Infinity, &CurvePoint::Infinity), Err(Error::SingularCurve));
    }
}
