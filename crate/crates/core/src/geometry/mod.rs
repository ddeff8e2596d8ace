//! Rational point sets in the plane: exact certificates and the
//! approximation pipelines.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::rational::{is_perfect_square, BigRat};
use crate::real::Real;
use crate::Error;

mod euler;
mod primitives;
mod quadrilateral;
mod search;
mod triangle;

pub use euler::{euler_triangle, heron_sixteen_area_squared, kummer_check, EulerSign};
pub use primitives::{hyperbola_point, line_rational_distance_point, quartic_point_to_b};
pub use quadrilateral::{approx_parallelogram, approx_quadrilateral};
pub use triangle::approx_triangle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoint {
    pub label: String,
    pub x: BigRat,
    pub y: BigRat,
}

impl LabeledPoint {
    pub fn new(label: impl Into<String>, x: BigRat, y: BigRat) -> Self {
        LabeledPoint { label: label.into(), x, y }
    }
}

/// Input configuration. Coordinates are exact rationals (decimal input is
/// read exactly); labels are unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<LabeledPoint>,
}

impl PointSet {
    pub fn new(points: Vec<LabeledPoint>) -> Result<Self, Error> {
        for (i, p) in points.iter().enumerate() {
            if points[..i].iter().any(|q| q.label == p.label) {
                return Err(Error::InvalidInput(format!("duplicate label {}", p.label)));
            }
        }
        Ok(PointSet { points })
    }

    /// Labels the points `A`, `B`, `C`, ... in order.
    pub fn from_xy(coords: impl IntoIterator<Item = (BigRat, BigRat)>) -> Self {
        let points = coords
            .into_iter()
            .enumerate()
            .map(|(i, (x, y))| LabeledPoint::new(default_label(i), x, y))
            .collect();
        PointSet { points }
    }

    pub fn points(&self) -> &[LabeledPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&LabeledPoint> {
        self.points.iter().find(|p| p.label == label)
    }

    pub(crate) fn real(&self, i: usize) -> (Real, Real) {
        let p = &self.points[i];
        (Real::from_rat(&p.x), Real::from_rat(&p.y))
    }

    pub(crate) fn require_distinct(&self) -> Result<(), Error> {
        for (i, p) in self.points.iter().enumerate() {
            if self.points[..i].iter().any(|q| q.x == p.x && q.y == p.y) {
                return Err(Error::InvalidInput(format!("point {} repeats another point", p.label)));
            }
        }
        Ok(())
    }
}

pub(crate) fn default_label(i: usize) -> String {
    if i < 26 {
        char::from(b'A' + i as u8).to_string()
    } else {
        format!("P{i}")
    }
}

/// Rigid motion `user = R(angle) * canonical + (dx, dy)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub cos: Real,
    pub sin: Real,
    pub dx: Real,
    pub dy: Real,
}

impl Frame {
    pub fn identity() -> Self {
        Frame { cos: Real::one(), sin: Real::zero(), dx: Real::zero(), dy: Real::zero() }
    }

    pub fn angle(&self) -> Real {
        Real::atan2(&self.sin, &self.cos)
    }

    pub fn apply(&self, x: &Real, y: &Real) -> (Real, Real) {
        (
            &self.cos * x - &self.sin * y + &self.dx,
            &self.sin * x + &self.cos * y + &self.dy,
        )
    }

    /// Inverse motion, user frame to canonical frame.
    pub fn unapply(&self, x: &Real, y: &Real) -> (Real, Real) {
        let (tx, ty) = (x - &self.dx, y - &self.dy);
        (&self.cos * &tx + &self.sin * &ty, &self.cos * &ty - &self.sin * &tx)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distance {
    pub from: String,
    pub to: String,
    pub value: BigRat,
}

/// An exact rational configuration with all pairwise distances, an optional
/// area, and the motion placing it over the user's input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCertificate {
    pub points: Vec<LabeledPoint>,
    pub distances: Vec<Distance>,
    pub area: Option<BigRat>,
    pub frame: Frame,
}

fn squared_distance(p: &LabeledPoint, q: &LabeledPoint) -> BigRat {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

/// `|shoelace|` of the points in listed order.
pub fn polygon_area(points: &[LabeledPoint]) -> BigRat {
    let n = points.len();
    let mut twice = BigRat::zero();
    for i in 0..n {
        let (p, q) = (&points[i], &points[(i + 1) % n]);
        twice += &p.x * &q.y - &q.x * &p.y;
    }
    twice.abs() / BigRat::from_integer(2.into())
}

impl RationalCertificate {
    /// Builds the certificate, certifying every distance as an exact
    /// rational. Area is included when `with_area` is set.
    pub fn from_points(points: Vec<LabeledPoint>, frame: Frame, with_area: bool) -> Result<Self, Error> {
        let mut distances = Vec::new();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let d2 = squared_distance(&points[i], &points[j]);
                let value = is_perfect_square(&d2).ok_or_else(|| {
                    Error::SquareRootNotRational(format!("{}{}^2 = {}", points[i].label, points[j].label, d2))
                })?;
                distances.push(Distance {
                    from: points[i].label.clone(),
                    to: points[j].label.clone(),
                    value,
                });
            }
        }
        let area = with_area.then(|| polygon_area(&points));
        Ok(RationalCertificate { points, distances, area, frame })
    }

    pub fn point(&self, label: &str) -> Option<&LabeledPoint> {
        self.points.iter().find(|p| p.label == label)
    }

    pub fn distance(&self, a: &str, b: &str) -> Option<&BigRat> {
        self.distances
            .iter()
            .find(|d| (d.from == a && d.to == b) || (d.from == b && d.to == a))
            .map(|d| &d.value)
    }

    /// Points mapped into the user's frame.
    pub fn user_points(&self) -> Vec<(String, Real, Real)> {
        self.points
            .iter()
            .map(|p| {
                let (x, y) = self.frame.apply(&Real::from_rat(&p.x), &Real::from_rat(&p.y));
                (p.label.clone(), x, y)
            })
            .collect()
    }
}

/// Outcome of [`certificate_verify`]: valid iff `reasons` is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verification {
    pub reasons: Vec<String>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.reasons.is_empty()
    }
}

/// Exact check that the certificate describes a rational set: unique
/// labels, one nonnegative distance per pair with `d^2` equal to the squared
/// coordinate distance, and (when present) the shoelace area.
pub fn certificate_verify(cert: &RationalCertificate) -> Verification {
    let mut reasons = Vec::new();
    let pts = &cert.points;
    for (i, p) in pts.iter().enumerate() {
        if pts[..i].iter().any(|q| q.label == p.label) {
            reasons.push(format!("duplicate label {}", p.label));
        }
    }
    for d in &cert.distances {
        let (Some(p), Some(q)) = (cert.point(&d.from), cert.point(&d.to)) else {
            reasons.push(format!("distance {}-{} names an unknown point", d.from, d.to));
            continue;
        };
        if d.value.is_negative() {
            reasons.push(format!("distance {}-{} is negative", d.from, d.to));
        }
        if &d.value * &d.value != squared_distance(p, q) {
            reasons.push(format!("distance {}-{} = {} does not match the coordinates", d.from, d.to, d.value));
        }
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (a, b) = (&pts[i].label, &pts[j].label);
            let count = cert
                .distances
                .iter()
                .filter(|d| (&d.from == a && &d.to == b) || (&d.from == b && &d.to == a))
                .count();
            match count {
                1 => {}
                0 => reasons.push(format!("missing distance {a}-{b}")),
                _ => reasons.push(format!("distance {a}-{b} listed {count} times")),
            }
        }
    }
    if let Some(area) = &cert.area {
        let expected = polygon_area(pts);
        if *area != expected {
            reasons.push(format!("area {area} differs from shoelace area {expected}"));
        }
    }
    Verification { reasons }
}

/// `D(K1, K2)`: the largest distance between matched points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HausdorffGap(pub Real);

impl HausdorffGap {
    pub fn value(&self) -> &Real {
        &self.0
    }
}

/// Gap between the certificate (in the user frame) and `input`, matching
/// points by label.
pub fn hausdorff_gap(cert: &RationalCertificate, input: &PointSet) -> Result<HausdorffGap, Error> {
    let mut gap = Real::zero();
    for (label, x, y) in cert.user_points() {
        let p = input
            .get(&label)
            .ok_or_else(|| Error::InvalidInput(format!("label {label} missing from input")))?;
        let d = Real::hypot(&(x - Real::from_rat(&p.x)), &(y - Real::from_rat(&p.y)));
        gap = gap.max(d);
    }
    Ok(HausdorffGap(gap))
}

/// Wall-clock and iteration limits for the curve searches.
#[derive(Clone, Copy)]
pub struct SearchBudget<'a> {
    /// Largest multiple `k` of the generator tried per parameter draw.
    pub max_k: u32,
    /// Number of rational parameter draws before giving up.
    pub max_param_draws: u32,
    /// Polled between candidates; `true` stops the search early.
    pub should_stop: Option<&'a dyn Fn() -> bool>,
}

impl Default for SearchBudget<'_> {
    fn default() -> Self {
        SearchBudget { max_k: 120, max_param_draws: 128, should_stop: None }
    }
}

impl core::fmt::Debug for SearchBudget<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SearchBudget")
            .field("max_k", &self.max_k)
            .field("max_param_draws", &self.max_param_draws)
            .field("should_stop", &self.should_stop.is_some())
            .finish()
    }
}

impl SearchBudget<'_> {
    pub(crate) fn stop_requested(&self) -> bool {
        self.should_stop.is_some_and(|f| f())
    }
}

/// A certified approximation of a user configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximation {
    pub certificate: RationalCertificate,
    pub gap: HausdorffGap,
    /// Set when the search ran out of budget before reaching the tolerance;
    /// the certificate is then the best one found.
    pub budget_exhausted: bool,
    /// Canonical-frame intersection point of the two lines used by the
    /// quadrilateral construction, when there is one. Its distances to the
    /// four output points are rational.
    pub center: Option<(BigRat, BigRat)>,
}

/// Safety margin kept below the requested tolerance.
pub(crate) fn guarded(eps: &Real) -> Result<Real, Error> {
    if !eps.is_positive() {
        return Err(Error::InvalidInput("eps must be positive".into()));
    }
    let margin = eps.shr(2).min(Real::from_dyadic(1.into(), -20));
    Ok(eps - margin)
}

/// Returns the input itself when it already is a rational set.
pub(crate) fn already_rational(input: &PointSet, with_area: bool) -> Option<Approximation> {
    let cert = RationalCertificate::from_points(input.points().to_vec(), Frame::identity(), with_area).ok()?;
    Some(Approximation { certificate: cert, gap: HausdorffGap(Real::zero()), budget_exhausted: false, center: None })
}

pub(crate) fn finish(
    cert: RationalCertificate,
    input: &PointSet,
    budget_exhausted: bool,
    center: Option<(BigRat, BigRat)>,
) -> Result<Approximation, Error> {
    let gap = hausdorff_gap(&cert, input)?;
    Ok(Approximation { certificate: cert, gap, budget_exhausted, center })
}

/// Exact cross product `(q - p) x (r - p)`.
pub(crate) fn cross(p: &LabeledPoint, q: &LabeledPoint, r: &LabeledPoint) -> BigRat {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}
