//! The two-parameter family of quartics
//! `y^2 = x^4 + p x^3 + q x^2 + r x + 1` and its Weierstrass cubics.
//!
//! Parameters are `m = cot(theta)` (angle between the line through `O` and
//! the line `AOC`) and `n = cot(beta) = OC / AO`.

use num_traits::{One, Signed, Zero};

use crate::elliptic::{CubicCurve, CurvePoint};
use crate::rational::{int, BigRat};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub m: BigRat,
    pub n: BigRat,
}

/// `y^2 = x^4 + p x^3 + q x^2 + r x + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticCurve {
    pub p: BigRat,
    pub q: BigRat,
    pub r: BigRat,
}

impl QuarticCurve {
    pub fn rhs(&self, x: &BigRat) -> BigRat {
        (((x + &self.p) * x + &self.q) * x + &self.r) * x + BigRat::one()
    }

    pub fn contains(&self, x: &BigRat, y: &BigRat) -> bool {
        y * y == self.rhs(x)
    }
}

/// Linear root and monic quadratic factor of the cubic:
/// `Q(U) = (U - root)(U^2 + linear U + constant)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub root: BigRat,
    pub linear: BigRat,
    pub constant: BigRat,
}

/// The four rational points every fiber carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPoints {
    pub p1: CurvePoint,
    pub p2: CurvePoint,
    pub p3: CurvePoint,
    pub p4: CurvePoint,
}

impl FamilyParams {
    pub fn new(m: BigRat, n: BigRat) -> Self {
        FamilyParams { m, n }
    }

    /// Singular over the rationals: `n = 0`, `n = -1`, or `(m, n) = (0, 1)`.
    pub fn is_singular(&self) -> bool {
        self.n.is_zero()
            || self.n == -BigRat::one()
            || (self.m.is_zero() && self.n.is_one())
    }

    fn one_plus_n(&self) -> BigRat {
        BigRat::one() + &self.n
    }

    pub fn quartic(&self) -> QuarticCurve {
        let k = self.one_plus_n() * &self.m;
        let p = int(4) * &k;
        let q = int(4) * &k * &k + int(4) * &self.n * &self.n - int(2);
        let r = -&p;
        QuarticCurve { p, q, r }
    }

    pub fn cubic(&self) -> CubicCurve {
        let (m, n) = (&self.m, &self.n);
        let n1 = self.one_plus_n();
        let m2 = m * m;
        let n2 = n * n;
        let a = BigRat::one() - int(2) * &n2 + &n1 * &n1 * &m2;
        let b = -(&n2 * &n1) * ((BigRat::one() - n) + int(2) * &n1 * &m2);
        let c = &n2 * &n2 * &n1 * &n1 * &m2;
        CubicCurve::new(a, b, c)
    }

    pub fn q_factorization(&self) -> Factorization {
        let (m, n) = (&self.m, &self.n);
        let n1 = self.one_plus_n();
        let m2 = m * m;
        let n2 = n * n;
        Factorization {
            root: n2.clone(),
            linear: &m2 * &n1 * &n1 - &n2 + BigRat::one(),
            constant: -(&m2 * &n2 * &n1 * &n1),
        }
    }

    /// `n^4 (1+n)^2 (1+m^2) ((1-n)^2 + (1+n)^2 m^2)`.
    pub fn family_discriminant(&self) -> BigRat {
        let (m, n) = (&self.m, &self.n);
        let n1 = self.one_plus_n();
        let m2 = m * m;
        let n2 = n * n;
        let one_minus_n = BigRat::one() - n;
        &n2 * &n2 * &n1 * &n1 * (BigRat::one() + &m2)
            * (&one_minus_n * &one_minus_n + &n1 * &n1 * &m2)
    }

    /// `P1 = (n^2 - 1, m(1+n))`, `P2 = (0, n^2(1+n)m)`, `P3 = (n^2, 0)`,
    /// `P4 = -P1`, as `(U, W)`. `P1`, `P2`, `P3` lie on the line
    /// `W + (1+n) m U = n^2 (1+n) m`.
    pub fn special_points(&self) -> SpecialPoints {
        let (m, n) = (&self.m, &self.n);
        let n1 = self.one_plus_n();
        let n2 = n * n;
        let p1 = CurvePoint::affine(&n2 - BigRat::one(), m * &n1);
        SpecialPoints {
            p4: p1.negate(),
            p1,
            p2: CurvePoint::affine(BigRat::zero(), &n2 * &n1 * m),
            p3: CurvePoint::affine(n2, BigRat::zero()),
        }
    }

    pub fn p1(&self) -> CurvePoint {
        let n1 = self.one_plus_n();
        CurvePoint::affine(&self.n * &self.n - BigRat::one(), &self.m * n1)
    }

    /// `(p^3 - 4pq + 8r) / 64`, the constant of the `W` shift.
    fn w_shift(&self, quartic: &QuarticCurve) -> BigRat {
        let QuarticCurve { p, q, r } = quartic;
        (p * p * p - int(4) * p * q + int(8) * r) / int(64)
    }

    /// Quartic point excluded from the correspondence, `U = 0` on it:
    /// `(-(n-1)/(2m), ((n-1)^2 + 4 m^2 n^2) / (4 m^2))`. Needs `m != 0`.
    pub fn excluded_quartic_point(&self) -> Option<(BigRat, BigRat)> {
        if self.m.is_zero() {
            return None;
        }
        let (m, n) = (&self.m, &self.n);
        let n_minus_1 = n - BigRat::one();
        let x = -&n_minus_1 / (int(2) * m);
        let y = (&n_minus_1 * &n_minus_1 + int(4) * m * m * n * n) / (int(4) * m * m);
        Some((x, y))
    }

    /// Maps a rational point of the quartic to the cubic.
    pub fn quartic_to_cubic(&self, x: &BigRat, y: &BigRat) -> Result<CurvePoint, Error> {
        let quartic = self.quartic();
        if !quartic.contains(x, y) {
            return Err(Error::NotOnQuartic);
        }
        let (m, n) = (&self.m, &self.n);
        let inner = y - x * x - int(2) * self.one_plus_n() * m * x + (BigRat::one() - int(2) * n * n);
        let u = -inner / int(2);
        if u.is_zero() {
            return Err(Error::ExcludedPoint);
        }
        let v = x * &u;
        let w = v + &quartic.p / int(4) * &u + self.w_shift(&quartic);
        Ok(CurvePoint::affine(u, w))
    }

    /// Maps an affine cubic point with `U != 0` back to the quartic.
    pub fn cubic_to_quartic(&self, pt: &CurvePoint) -> Result<(BigRat, BigRat), Error> {
        let (u, w) = match pt {
            CurvePoint::Infinity => return Err(Error::ExcludedPoint),
            CurvePoint::Affine { u, w } => (u, w),
        };
        if !self.cubic().contains(pt) {
            return Err(Error::PointNotOnCurve);
        }
        if u.is_zero() {
            return Err(Error::ExcludedPoint);
        }
        Ok(self.cubic_to_quartic_unchecked(u, w))
    }

    pub(crate) fn cubic_to_quartic_unchecked(&self, u: &BigRat, w: &BigRat) -> (BigRat, BigRat) {
        let quartic = self.quartic();
        let v = w - &quartic.p / int(4) * u - self.w_shift(&quartic);
        let x = v / u;
        let n = &self.n;
        let y = -(int(2) * u) + &x * &x + int(2) * self.one_plus_n() * &self.m * &x + int(2) * n * n
            - BigRat::one();
        (x, y)
    }

    /// Order of `P1(m, n)`, `None` when it has infinite order.
    pub fn torsion_scan(&self) -> Result<Option<u32>, Error> {
        if self.is_singular() {
            return Err(Error::SingularParams);
        }
        self.cubic().torsion_order(&self.p1())
    }

    /// Sign checks placing `±P1`, `±P2` on the bounded real component: the
    /// quadratic factor is non-positive at `U = 0` and `U = n^2 - 1`.
    pub fn oval_membership_check(&self) -> Result<bool, Error> {
        if self.is_singular() {
            return Err(Error::SingularParams);
        }
        let f = self.q_factorization();
        let quad = |u: &BigRat| u * u + &f.linear * u + &f.constant;
        let at_p1 = &self.n * &self.n - BigRat::one();
        Ok(!quad(&BigRat::zero()).is_positive() && !quad(&at_p1).is_positive())
    }
}
