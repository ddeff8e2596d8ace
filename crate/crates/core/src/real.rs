//! Binary fixed-point reals with [`FRAC_BITS`] fractional bits.
//!
//! Approximation targets (input coordinates, angles, tolerances) are
//! inherently inexact; they live here. Anything that ends up in a
//! certificate is a [`BigRat`] instead.
//!
//! Transcendental functions are evaluated with [`GUARD_BITS`] extra bits
//! and rounded back, so results are accurate to within a few units in the
//! last place.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::BigRat;

/// Number of fractional bits carried by every [`Real`].
pub const FRAC_BITS: u32 = 192;
/// Extra bits used internally by `sqrt`, `atan`, `sin`, `cos` and `pi`.
pub const GUARD_BITS: u32 = 32;

/// A real number `mant / 2^FRAC_BITS`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Real {
    mant: BigInt,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// `round(n / d)` for `d > 0`, ties toward +inf.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    (n * 2u32 + d).div_floor(&(d * 2u32))
}

fn round_shr(x: &BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return x.clone();
    }
    (x + pow2(bits - 1)).div_floor(&pow2(bits))
}

impl Real {
    pub fn zero() -> Self {
        Real { mant: BigInt::zero() }
    }

    pub fn one() -> Self {
        Real { mant: pow2(FRAC_BITS) }
    }

    pub fn from_i64(v: i64) -> Self {
        Real { mant: BigInt::from(v) << FRAC_BITS }
    }

    /// `m * 2^exp`, rounded to the nearest representable value.
    pub fn from_dyadic(m: BigInt, exp: i64) -> Self {
        let shift = exp + FRAC_BITS as i64;
        let mant = if shift >= 0 {
            m << (shift as u64)
        } else {
            round_shr(&m, (-shift) as u32)
        };
        Real { mant }
    }

    /// Nearest representable value to `q`.
    pub fn from_rat(q: &BigRat) -> Self {
        let n = q.numer() << FRAC_BITS;
        Real { mant: round_div(&n, q.denom()) }
    }

    /// Exact value as a dyadic rational.
    pub fn to_rat(&self) -> BigRat {
        BigRat::new(self.mant.clone(), pow2(FRAC_BITS))
    }

    /// Exact conversion of a finite `f64`; `None` for NaN and infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        let bits = x.to_bits();
        let negative = bits >> 63 == 1;
        let exp_bits = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp_bits == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp_bits - 1075)
        };
        let m = BigInt::from(m);
        Some(Real::from_dyadic(if negative { -m } else { m }, e))
    }

    pub fn to_f64(&self) -> f64 {
        // 2^-FRAC_BITS as an f64 bit pattern.
        let scale = f64::from_bits((1023 - FRAC_BITS as u64) << 52);
        self.mant.to_f64().unwrap_or(f64::NAN) * scale
    }

    /// Parses a decimal literal (`-1.25`, `3e-4`) or a fraction (`7/3`).
    pub fn parse(s: &str) -> Option<Self> {
        crate::rational::parse_rational(s).map(|q| Real::from_rat(&q))
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn abs(&self) -> Self {
        Real { mant: self.mant.abs() }
    }

    /// `x / 2^k`, rounded.
    pub fn shr(&self, k: u32) -> Self {
        Real { mant: round_shr(&self.mant, k) }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn checked_div(&self, rhs: &Real) -> Option<Real> {
        if rhs.is_zero() {
            return None;
        }
        let n = &self.mant << FRAC_BITS;
        let (n, d) = if rhs.mant.is_negative() {
            (-n, -&rhs.mant)
        } else {
            (n, rhs.mant.clone())
        };
        Some(Real { mant: round_div(&n, &d) })
    }

    pub fn square(&self) -> Real {
        self * self
    }

    /// Square root, `None` for negative input.
    pub fn sqrt(&self) -> Option<Real> {
        if self.is_negative() {
            return None;
        }
        let wide = &self.mant << (FRAC_BITS + 2 * GUARD_BITS);
        Some(Real { mant: round_shr(&wide.sqrt(), GUARD_BITS) })
    }

    /// Euclidean norm of `(x, y)`.
    pub fn hypot(x: &Real, y: &Real) -> Real {
        (x.square() + y.square()).sqrt().expect("sum of squares is non-negative")
    }

    fn widen(&self) -> BigInt {
        &self.mant << GUARD_BITS
    }

    fn narrow(wide: &BigInt) -> Real {
        Real { mant: round_shr(wide, GUARD_BITS) }
    }

    pub fn pi() -> Real {
        Real::narrow(&pi_fixed(FRAC_BITS + GUARD_BITS))
    }

    pub fn atan(&self) -> Real {
        Real::narrow(&atan_fixed(&self.widen(), FRAC_BITS + GUARD_BITS))
    }

    /// Angle of the vector `(x, y)` in `(-pi, pi]`; `atan2(0, 0) = 0`.
    pub fn atan2(y: &Real, x: &Real) -> Real {
        let p = FRAC_BITS + GUARD_BITS;
        let (yw, xw) = (y.widen(), x.widen());
        let angle = if xw.is_zero() {
            match yw.sign() {
                num_bigint::Sign::Plus => pi_fixed(p) >> 1u32,
                num_bigint::Sign::Minus => -(pi_fixed(p) >> 1u32),
                num_bigint::Sign::NoSign => BigInt::zero(),
            }
        } else {
            let (n, d) = if xw.is_negative() {
                (-(&yw << p), -&xw)
            } else {
                (&yw << p, xw.clone())
            };
            let base = atan_fixed(&round_div(&n, &d), p);
            if xw.is_negative() {
                if yw.is_negative() {
                    base - pi_fixed(p)
                } else {
                    base + pi_fixed(p)
                }
            } else {
                base
            }
        };
        Real::narrow(&angle)
    }

    /// `(sin x, cos x)`.
    pub fn sin_cos(&self) -> (Real, Real) {
        let (s, c) = sin_cos_fixed(&self.widen(), FRAC_BITS + GUARD_BITS);
        (Real::narrow(&s), Real::narrow(&c))
    }

    pub fn sin(&self) -> Real {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Real {
        self.sin_cos().1
    }
}

/// `atan(x)` for small `|x|` by its Taylor series; `x` and the result are
/// fixed-point with `p` fractional bits.
fn atan_series(x: &BigInt, p: u32) -> BigInt {
    let x2 = (x * x) >> p;
    let mut term = x.clone();
    let mut sum = x.clone();
    let mut n = 1u32;
    loop {
        term = -((&term * &x2) >> p);
        n += 2;
        let t = &term / n;
        if t.is_zero() {
            return sum;
        }
        sum += t;
    }
}

fn pi_fixed(p: u32) -> BigInt {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    let one = pow2(p);
    let a = atan_series(&(&one / 5u32), p);
    let b = atan_series(&(&one / 239u32), p);
    a * 16u32 - b * 4u32
}

fn atan_fixed(x: &BigInt, p: u32) -> BigInt {
    let one = pow2(p);
    if x.abs() > one {
        // atan(x) = sign(x) pi/2 - atan(1/x)
        let recip = round_div(&(&one << p), &x.abs());
        let half_pi = pi_fixed(p) >> 1u32;
        let r = half_pi - atan_fixed(&recip, p);
        return if x.is_negative() { -r } else { r };
    }
    // Halve the angle until the series converges quickly:
    // atan(x) = 2 atan(x / (1 + sqrt(1 + x^2))).
    let small = &one >> 8u32;
    let mut x = x.clone();
    let mut doublings = 0u32;
    while x.abs() > small {
        let x2 = (&x * &x) >> p;
        let root = ((&one + x2) << p).sqrt();
        x = round_div(&(&x << p), &(&one + root));
        doublings += 1;
    }
    atan_series(&x, p) << doublings
}

fn sin_cos_fixed(x: &BigInt, p: u32) -> (BigInt, BigInt) {
    let pi = pi_fixed(p);
    let two_pi = &pi * 2u32;
    // Reduce into [-pi, pi].
    let turns = round_div(x, &two_pi);
    let r = x - turns * &two_pi;
    let r2 = (&r * &r) >> p;

    let one = pow2(p);
    let mut sin = r.clone();
    let mut cos = one.clone();
    let mut s_term = r;
    let mut c_term = one;
    let mut k = 1u32;
    loop {
        // c_term: (-1)^j r^{2j}/(2j)!, s_term: (-1)^j r^{2j+1}/(2j+1)!
        c_term = -((&c_term * &r2) >> p) / (k * (k + 1));
        s_term = -((&s_term * &r2) >> p) / ((k + 1) * (k + 2));
        k += 2;
        if c_term.is_zero() && s_term.is_zero() {
            break;
        }
        cos += &c_term;
        sin += &s_term;
    }
    (sin, cos)
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_f64(), f)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { mant: -self.mant }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { mant: -&self.mant }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let f: fn(&Real, &Real) -> Real = $body;
                f(self, rhs)
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Real { mant: &a.mant + &b.mant });
forward_binop!(Sub, sub, |a, b| Real { mant: &a.mant - &b.mant });
forward_binop!(Mul, mul, |a, b| Real {
    mant: round_shr(&(&a.mant * &b.mant), FRAC_BITS)
});
forward_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("division of Real by zero"));

impl PartialEq<f64> for Real {
    fn eq(&self, other: &f64) -> bool {
        Real::from_f64(*other).is_some_and(|o| *self == o)
    }
}

impl PartialOrd<f64> for Real {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        Real::from_f64(*other).map(|o| self.cmp(&o))
    }
}
