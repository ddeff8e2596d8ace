//! Exact rationals, perfect-square detection and rational points on the
//! unit circle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::real::Real;
use crate::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. `Display` and `FromStr` use `"num/den"` (the
/// denominator is omitted when it is 1).
pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Parses `"num/den"`, an integer, or a decimal literal with optional
/// exponent (`"-0.125"`, `"3e-2"`). The value is exact: `"0.1"` is `1/10`.
pub fn parse_rational(s: &str) -> Option<BigRat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRat::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut all = alloc::string::String::with_capacity(int_part.len() + frac_part.len());
    all.push_str(int_part);
    all.push_str(frac_part);
    let n: BigInt = all.parse().ok()?;
    let scale = exponent as i64 - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        BigRat::from_integer(n * ten.pow(scale as u32))
    } else {
        BigRat::new(n, ten.pow((-scale) as u32))
    };
    if negative {
        q = -q;
    }
    Some(q)
}

/// Integer square root when `n` is a perfect square.
pub fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// The non-negative rational square root of `q`, when one exists.
pub fn is_perfect_square(q: &BigRat) -> Option<BigRat> {
    let n = integer_sqrt_exact(q.numer())?;
    let d = integer_sqrt_exact(q.denom())?;
    Some(BigRat::new(n, d))
}

/// Whether `atan(q/p)` has rational sine and cosine, i.e. `p^2 + q^2` is a
/// perfect square. Expects coprime `p`, `q`, not both zero.
pub fn is_member_qtan2(p: &BigInt, q: &BigInt) -> bool {
    integer_sqrt_exact(&(p * p + q * q)).is_some()
}

/// A point `(cos, sin)` of the unit circle with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    cos: BigRat,
    sin: BigRat,
}

impl RationalAngle {
    pub fn new(cos: BigRat, sin: BigRat) -> Result<Self, Error> {
        if &cos * &cos + &sin * &sin != BigRat::one() {
            return Err(Error::NotOnUnitCircle);
        }
        Ok(RationalAngle { cos, sin })
    }

    pub fn zero() -> Self {
        RationalAngle { cos: BigRat::one(), sin: BigRat::zero() }
    }

    pub fn right() -> Self {
        RationalAngle { cos: BigRat::zero(), sin: BigRat::one() }
    }

    /// `((1 - t^2)/(1 + t^2), 2t/(1 + t^2))`, the angle whose half has
    /// tangent `t`.
    pub fn from_tangent_half(t: &BigRat) -> Self {
        let t2 = t * t;
        let den = BigRat::one() + &t2;
        RationalAngle {
            cos: (BigRat::one() - t2) / &den,
            sin: (t * BigRat::from_integer(2.into())) / den,
        }
    }

    pub fn cos(&self) -> &BigRat {
        &self.cos
    }

    pub fn sin(&self) -> &BigRat {
        &self.sin
    }

    /// `tan` of the angle; `None` at `cos = 0`.
    pub fn tan(&self) -> Option<BigRat> {
        (!self.cos.is_zero()).then(|| &self.sin / &self.cos)
    }

    /// `cot` of the angle; `None` at `sin = 0`.
    pub fn cot(&self) -> Option<BigRat> {
        (!self.sin.is_zero()).then(|| &self.cos / &self.sin)
    }

    /// Tangent of the half angle, `sin / (1 + cos)`; `None` at the angle pi.
    pub fn tangent_half(&self) -> Option<BigRat> {
        let den = BigRat::one() + &self.cos;
        (!den.is_zero()).then(|| &self.sin / den)
    }

    /// Angle sum.
    pub fn compose(&self, other: &RationalAngle) -> RationalAngle {
        RationalAngle {
            cos: &self.cos * &other.cos - &self.sin * &other.sin,
            sin: &self.sin * &other.cos + &self.cos * &other.sin,
        }
    }

    pub fn negate(&self) -> RationalAngle {
        RationalAngle { cos: self.cos.clone(), sin: -&self.sin }
    }

    /// The angle plus pi.
    pub fn opposite(&self) -> RationalAngle {
        RationalAngle { cos: -&self.cos, sin: -&self.sin }
    }

    /// Angle in radians, in `(-pi, pi]`.
    pub fn radians(&self) -> Real {
        Real::atan2(&Real::from_rat(&self.sin), &Real::from_rat(&self.cos))
    }
}

/// Continued-fraction convergents of a rational number, in order of
/// increasing denominator. Finite, ending with the number itself.
pub struct Convergents {
    rest: Option<BigRat>,
    prev: (BigInt, BigInt),
    curr: (BigInt, BigInt),
}

impl Convergents {
    pub fn new(x: &BigRat) -> Self {
        Convergents {
            rest: Some(x.clone()),
            prev: (BigInt::zero(), BigInt::one()),
            curr: (BigInt::one(), BigInt::zero()),
        }
    }
}

impl Iterator for Convergents {
    type Item = BigRat;

    fn next(&mut self) -> Option<BigRat> {
        let x = self.rest.take()?;
        let a = x.numer().div_floor(x.denom());
        let frac = &x - BigRat::from_integer(a.clone());
        if !frac.is_zero() {
            self.rest = Some(frac.recip());
        }
        let h = &a * &self.curr.0 + &self.prev.0;
        let k = &a * &self.curr.1 + &self.prev.1;
        self.prev = core::mem::replace(&mut self.curr, (h.clone(), k.clone()));
        Some(BigRat::new(h, k))
    }
}

/// The first continued-fraction convergent of `x` within `tol` of it.
pub fn approximate_within(x: &BigRat, tol: &BigRat) -> BigRat {
    let mut last = x.clone();
    for c in Convergents::new(x) {
        if (&c - x).abs() <= *tol {
            return c;
        }
        last = c;
    }
    last
}

/// Rational approximation of a real target within `tol`.
pub fn rational_near(x: &Real, tol: &Real) -> BigRat {
    approximate_within(&x.to_rat(), &tol.to_rat())
}

/// Rational approximation of a positive real target within `tol`, never
/// returning zero or a negative value.
pub fn positive_rational_near(x: &Real, tol: &Real) -> BigRat {
    let target = x.to_rat();
    for c in Convergents::new(&target) {
        if c.is_positive() && (&c - &target).abs() <= tol.to_rat() {
            return c;
        }
    }
    target
}

/// A rational angle within `delta` radians of `theta`.
///
/// The half-angle tangent of `theta` is approximated by its continued
/// fraction convergents, and the first one whose angle is close enough
/// wins, so the output has the smallest heights this search can find.
pub fn rational_angle_near(theta: &Real, delta: &Real) -> RationalAngle {
    let pi = Real::pi();
    let two_pi = &pi + &pi;
    // Reduce into (-pi, pi].
    let mut t = theta.clone();
    while t > pi {
        t = t - &two_pi;
    }
    while t <= -&pi {
        t = t + &two_pi;
    }
    // Work in [-pi/2, pi/2] so the half-angle tangent stays in [-1, 1].
    let half_pi = pi.shr(1);
    let flipped = t.abs() > half_pi;
    if flipped {
        t = if t.is_positive() { t - &pi } else { t + &pi };
    }
    let (s, c) = t.shr(1).sin_cos();
    let target = (s / c).to_rat();

    let mut best = RationalAngle::zero();
    for tan_half in Convergents::new(&target) {
        let cand = RationalAngle::from_tangent_half(&tan_half);
        let err = (cand.radians() - &t).abs();
        best = cand;
        if err < *delta {
            break;
        }
    }
    if flipped {
        best.opposite()
    } else {
        best
    }
}
