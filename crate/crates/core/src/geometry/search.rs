//! Candidate stream for points at rational distance from three collinear
//! points, driven by multiples of a point of infinite order on the family
//! cubic.
//!
//! The stream runs in fixed-point arithmetic to locate a candidate; only the
//! chosen one is recomputed exactly.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::primitives::{b_from_x, line_rational_distance_point};
use crate::elliptic::CurvePoint;
use crate::family::FamilyParams;
use crate::rational::{int, integer_sqrt_exact, is_perfect_square, BigRat, Convergents, RationalAngle};
use crate::real::Real;
use crate::Error;

/// `sign * (k G + T)` with `G` the family's generator and `T` one of its
/// coset representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub k: u32,
    pub coset: usize,
    pub negated: bool,
}

/// Collinear anchors `A = (-a, 0)`, `O`, `C = (c, 0)` and the line through
/// `O` with cotangent `m`, where `n = c / a`, with a point of infinite order
/// on the family cubic.
#[derive(Clone, Debug)]
pub(crate) struct LineFamily {
    pub params: FamilyParams,
    pub c: BigRat,
    generator: CurvePoint,
    cosets: Vec<CurvePoint>,
}

/// Height bound of the fallback search for a generator.
const SMALL_POINT_BOUND: i64 = 40;

type RealPoint = Option<(Real, Real)>;

struct RealCurve {
    a: Real,
    b: Real,
}

impl RealCurve {
    fn add(&self, p: &RealPoint, q: &RealPoint) -> RealPoint {
        let ((u0, w0), (u1, w1)) = match (p, q) {
            (None, _) => return q.clone(),
            (_, None) => return p.clone(),
            (Some(p), Some(q)) => (p, q),
        };
        let slope = if u0 != u1 {
            (w1 - w0).checked_div(&(u1 - u0))?
        } else if w0 == w1 && !w0.is_zero() {
            let three = Real::from_i64(3);
            let two = Real::from_i64(2);
            (three * u0 * u0 + two.clone() * &self.a * u0 + &self.b).checked_div(&(two * w0))?
        } else {
            return None;
        };
        let u = &slope * &slope - &self.a - u0 - u1;
        let w = -w0 - (&u - u0) * &slope;
        Some((u, w))
    }
}

fn real_point(p: &CurvePoint) -> RealPoint {
    match p {
        CurvePoint::Infinity => None,
        CurvePoint::Affine { u, w } => Some((Real::from_rat(u), Real::from_rat(w))),
    }
}

/// Iterator over `(candidate, B)` with `B` in fixed point, ordered by `k`
/// and then by coset.
pub(crate) struct CandidateStream {
    curve: RealCurve,
    generator: RealPoint,
    cosets: Vec<RealPoint>,
    acc: RealPoint,
    k: u32,
    max_k: u32,
    quarter_p: Real,
    shift: Real,
    m: Real,
    c: Real,
    pending: Vec<(Candidate, (Real, Real))>,
}

impl CandidateStream {
    fn b_of(&self, pt: &(Real, Real)) -> Option<(Real, Real)> {
        let (u, w) = pt;
        let tiny = Real::from_dyadic(1.into(), -120);
        if u.abs() < tiny {
            return None;
        }
        let v = w - &self.quarter_p * u - &self.shift;
        let x = v.checked_div(u)?;
        let one = Real::one();
        if x.abs() < tiny || (x.abs() - &one).abs() < tiny {
            return None;
        }
        let den = &x * &x + Real::from_i64(2) * &self.m * &x - &one;
        let t = (Real::from_i64(2) * &self.c * &x).checked_div(&den)?;
        Some((&t * &self.m, t))
    }

    fn refill(&mut self) -> bool {
        while self.pending.is_empty() {
            if self.k >= self.max_k {
                return false;
            }
            self.k += 1;
            self.acc = self.curve.add(&self.acc, &self.generator);
            if self.acc.is_none() {
                return false;
            }
            let members: Vec<RealPoint> = self.cosets.iter().map(|t| self.curve.add(&self.acc, t)).collect();
            let mut fresh = Vec::with_capacity(2 * members.len());
            for negated in [false, true] {
                for (coset, member) in members.iter().enumerate() {
                    let Some((u, w)) = member else { continue };
                    let pt = if negated { (u.clone(), -w) } else { (u.clone(), w.clone()) };
                    if let Some(b) = self.b_of(&pt) {
                        fresh.push((Candidate { k: self.k, coset, negated }, b));
                    }
                }
            }
            fresh.reverse();
            self.pending = fresh;
        }
        true
    }
}

impl Iterator for CandidateStream {
    type Item = (Candidate, (Real, Real));

    fn next(&mut self) -> Option<Self::Item> {
        if !self.refill() {
            return None;
        }
        self.pending.pop()
    }
}

impl LineFamily {
    /// `None` when the parameters are singular or no point of infinite
    /// order turns up. `P1` is used when it has infinite order, with cosets
    /// `O`, `P2`, `P3`; otherwise a small-height point is searched for and
    /// the cosets run over the known torsion points.
    pub fn new(params: FamilyParams, c: BigRat) -> Option<Self> {
        if params.is_singular() {
            return None;
        }
        let sp = params.special_points();
        let (generator, cosets) = if params.torsion_scan().ok()?.is_none() {
            (sp.p1, vec![CurvePoint::Infinity, sp.p2, sp.p3])
        } else {
            (small_generator(&params)?, torsion_points(&params))
        };
        Some(LineFamily { params, c, generator, cosets })
    }

    #[cfg(test)]
    pub fn generator(&self) -> &CurvePoint {
        &self.generator
    }

    pub fn stream(&self, max_k: u32) -> CandidateStream {
        let quartic = self.params.quartic();
        let cubic = self.params.cubic();
        let (p, q, r) = (&quartic.p, &quartic.q, &quartic.r);
        let shift: BigRat = (p * p * p - int(4) * p * q + int(8) * r) / int(64);
        CandidateStream {
            curve: RealCurve { a: Real::from_rat(&cubic.a), b: Real::from_rat(&cubic.b) },
            generator: real_point(&self.generator),
            cosets: self.cosets.iter().map(real_point).collect(),
            acc: None,
            k: 0,
            max_k,
            quarter_p: Real::from_rat(&(p / int(4))),
            shift: Real::from_rat(&shift),
            m: Real::from_rat(&self.params.m),
            c: Real::from_rat(&self.c),
            pending: Vec::new(),
        }
    }

    /// Exact `B` for a candidate found by the stream.
    pub fn realize(&self, cand: &Candidate) -> Result<(BigRat, BigRat), Error> {
        let cubic = self.params.cubic();
        let mut pt = cubic.scalar_mul_unchecked(cand.k as i64, &self.generator);
        pt = cubic.add_unchecked(&pt, &self.cosets[cand.coset]);
        if cand.negated {
            pt = pt.negate();
        }
        // The point is on the cubic by construction and the caller's
        // certificate checks every distance, so no membership tests here.
        let CurvePoint::Affine { u, w } = &pt else { return Err(Error::ExcludedPoint) };
        if u.is_zero() {
            return Err(Error::ExcludedPoint);
        }
        let (x, _) = self.params.cubic_to_quartic_unchecked(u, w);
        if x.is_zero() || x.abs().is_one() {
            return Err(Error::DegeneratePoint);
        }
        b_from_x(&self.params.m, &self.c, &x).ok_or(Error::DegeneratePoint)
    }
}

/// First quartic point `x = s/t` with `|s| <= 3 * bound`, `t <= bound` whose
/// cubic image has infinite order.
fn small_generator(params: &FamilyParams) -> Option<CurvePoint> {
    let quartic = params.quartic();
    let cubic = params.cubic();
    // Clear denominators: d * (s^4 + p s^3 t + q s^2 t^2 + r s t^3 + t^4).
    let d = quartic.p.denom().lcm(quartic.q.denom()).lcm(quartic.r.denom());
    let scaled = |v: &BigRat| (v * BigRat::from_integer(d.clone())).to_integer();
    let (p, q, r) = (scaled(&quartic.p), scaled(&quartic.q), scaled(&quartic.r));
    for t in 1..=SMALL_POINT_BOUND {
        for s in -3 * SMALL_POINT_BOUND..=3 * SMALL_POINT_BOUND {
            if s.gcd(&t) != 1 {
                continue;
            }
            let (s_, t_) = (BigInt::from(s), BigInt::from(t));
            let (s2, t2) = (&s_ * &s_, &t_ * &t_);
            let form = &d * (&s2 * &s2 + &t2 * &t2) + &p * &s2 * &s_ * &t_ + &q * &s2 * &t2 + &r * &s_ * &t2 * &t_;
            // form / d must be a square: test form * d
            let Some(root) = integer_sqrt_exact(&(&form * &d)) else { continue };
            let x = BigRat::new(s_, t_);
            let y = BigRat::new(root, &d * &t2);
            let Ok(pt) = params.quartic_to_cubic(&x, &y) else { continue };
            if matches!(cubic.torsion_order(&pt), Ok(None)) {
                return Some(pt);
            }
        }
    }
    None
}

/// Subgroup generated by the torsion points among `P1`, `P2`, `P3` and the
/// rational roots of the cubic.
fn torsion_points(params: &FamilyParams) -> Vec<CurvePoint> {
    let cubic = params.cubic();
    let sp = params.special_points();
    let mut gens = vec![sp.p1, sp.p2, sp.p3];
    let f = params.q_factorization();
    if let Some(root) = is_perfect_square(&(&f.linear * &f.linear - int(4) * &f.constant)) {
        for r in [&root, &-&root] {
            gens.push(CurvePoint::affine((r - &f.linear) / int(2), BigRat::zero()));
        }
    }
    gens.retain(|g| matches!(cubic.torsion_order(g), Ok(Some(_))));
    let mut group = vec![CurvePoint::Infinity];
    let mut i = 0;
    while i < group.len() && group.len() < 32 {
        for g in &gens {
            let sum = cubic.add_unchecked(&group[i], g);
            if !group.contains(&sum) {
                group.push(sum);
            }
        }
        i += 1;
    }
    group
}

/// Solves `q(u) = target` for the point of [`line_rational_distance_point`]
/// and returns a rational `(q, p)` with `|q - target| < tol`.
pub(crate) fn point_near(
    r: &BigRat,
    angle: &RationalAngle,
    target: &Real,
    tol: &Real,
) -> Option<(BigRat, BigRat)> {
    let a = Real::from_rat(&(r * r * angle.sin() * angle.sin()));
    let t = target - Real::from_rat(&(r * angle.cos()));
    let root = (&t * &t + &a).sqrt()?;
    let u = if t.is_negative() { a.checked_div(&(&root - &t))? } else { &t + &root };
    if !u.is_positive() {
        return None;
    }
    for cand in Convergents::new(&u.to_rat()) {
        if !cand.is_positive() {
            continue;
        }
        let (q, p) = line_rational_distance_point(r, angle, &cand).ok()?;
        if (Real::from_rat(&q) - target).abs() < *tol {
            return Some((q, p));
        }
    }
    None
}
