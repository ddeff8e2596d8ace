//! Parallelogram and quadrilateral approximation.
//!
//! Both work in a canonical frame with a rational center `O` at the origin,
//! one line through `O` as the x axis, and the other line through `O` at a
//! rational angle. Points on the x axis are placed directly. Points on the
//! other line come from the family cubic: every rational point of it maps
//! to a point of that line at rational distance from `A`, `O` and `C`, and
//! two such points are at rational distance from each other as well.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::search::{point_near, Candidate, LineFamily};
use super::triangle::place_on_line;
use super::{
    already_rational, cross, finish, guarded, Approximation, Frame, LabeledPoint, PointSet, RationalCertificate,
    SearchBudget,
};
use crate::family::FamilyParams;
use crate::rational::{int, positive_rational_near, rational_angle_near, BigRat, RationalAngle};
use crate::real::Real;
use crate::Error;

type RealXY = (Real, Real);

fn dist(p: &RealXY, q: &RealXY) -> Real {
    Real::hypot(&(&p.0 - &q.0), &(&p.1 - &q.1))
}

fn rxy(x: &BigRat, y: &BigRat) -> RealXY {
    (Real::from_rat(x), Real::from_rat(y))
}

/// Frame with origin `o` whose x axis points along `dir`, flipped if needed
/// so that `up` lies strictly above the axis.
fn frame_towards(o: &(BigRat, BigRat), dir: &(BigRat, BigRat), up: &(BigRat, BigRat)) -> Frame {
    let side = &dir.0 * &up.1 - &dir.1 * &up.0;
    let sign = if side.is_negative() { -Real::one() } else { Real::one() };
    let (dx, dy) = rxy(&dir.0, &dir.1);
    let len = Real::hypot(&dx, &dy);
    Frame {
        cos: &sign * &dx / &len,
        sin: &sign * &dy / &len,
        dx: Real::from_rat(&o.0),
        dy: Real::from_rat(&o.1),
    }
}

fn diff(p: &LabeledPoint, o: &(BigRat, BigRat)) -> (BigRat, BigRat) {
    (&p.x - &o.0, &p.y - &o.1)
}

/// Draws sharing one tolerance level.
const DRAWS_PER_LEVEL: u32 = 64;

/// Tolerances and target offsets for draw `d`. Tolerances shrink by 4 from
/// one level to the next; within a level the targets are shifted along a
/// low-discrepancy sequence so that draws tend to give different curves.
struct Draw {
    pos_tol: Real,
    angle_tol: Real,
    jitter: Real,
    offsets: [Real; 2],
}

fn draw(eps: &Real, radius: &Real, d: u32) -> Draw {
    let (level, j) = (d / DRAWS_PER_LEVEL, i64::from(d % DRAWS_PER_LEVEL));
    let pos_tol = eps.shr(3 + 2 * level);
    let angle_tol = &pos_tol / &(radius + Real::one());
    // (j * mult) mod 1 in [-1/2, 1/2), zero for j = 0
    let frac = |mult: i64| Real::from_dyadic(((j * mult + 512) % 1024 - 512).into(), -10);
    let jitter = &angle_tol * &frac(633);
    let offsets = [&pos_tol * &frac(391), &pos_tol * &frac(857)];
    Draw { pos_tol, angle_tol, jitter, offsets }
}

/// Rational within `pos_tol` of `x`, shifted by the draw's `i`-th offset.
fn length_near(x: &Real, dr: &Draw, i: usize) -> BigRat {
    positive_rational_near(&(x + &dr.offsets[i]), &dr.pos_tol.shr(3))
}

/// Largest `k` for each pass over the draws. Exact points grow like `k^2`,
/// so every curve is tried with cheap multiples before any with costly ones.
fn k_passes(max_k: u32) -> Vec<u32> {
    let mut out: Vec<u32> = [12, 24, 40, 64].into_iter().filter(|&k| k < max_k).collect();
    out.push(max_k);
    out
}

fn upper_angle_near(theta: &Real, dr: &Draw) -> Option<RationalAngle> {
    let angle = rational_angle_near(&(theta + &dr.jitter), &dr.angle_tol.shr(3));
    angle.sin().is_positive().then_some(angle)
}

/// Exact point coordinates in the canonical frame.
type Exact = (BigRat, BigRat);

/// Multiples above this are never realized for a flagged result; exact
/// points get costly quickly and a flagged answer should come back fast.
const FALLBACK_K: u32 = 32;

/// A point found by the curve search: the input index it replaces and the
/// canonical position it should approach. A mirrored slot also places `-B`
/// at a second index.
#[derive(Clone)]
struct Slot {
    index: usize,
    target: RealXY,
    mirror: Option<(usize, RealXY)>,
}

impl Slot {
    fn gap(&self, b: &RealXY) -> Real {
        let d = dist(b, &self.target);
        match &self.mirror {
            Some((_, t)) => d.max(dist(&(-&b.0, -&b.1), t)),
            None => d,
        }
    }
}

/// One parameter draw ready for the curve search.
struct Prepared {
    family: LineFamily,
    fixed: Vec<LabeledPoint>,
    base_gap: Real,
    frame: Frame,
    slots: Vec<Slot>,
}

impl Prepared {
    fn place(&self, exact: &[Exact]) -> Vec<LabeledPoint> {
        let mut coords = Vec::new();
        for (slot, (x, y)) in self.slots.iter().zip(exact) {
            coords.push((slot.index, x.clone(), y.clone()));
            if let Some((j, _)) = &slot.mirror {
                coords.push((*j, -x, -y));
            }
        }
        relabel(&self.fixed, &coords)
    }
}

/// Output of the draw loop: a family to search, or a certificate already
/// found without one.
enum Drawn {
    Family(Prepared),
    Done(Approximation),
}

/// Certificate for `points` with `O` at the origin of `frame`, measured
/// against `input`.
fn certify(input: &PointSet, frame: &Frame, points: Vec<LabeledPoint>, exhausted: bool) -> Result<Approximation, Error> {
    let distinct = points.iter().enumerate().all(|(i, p)| points[..i].iter().all(|q| (&q.x, &q.y) != (&p.x, &p.y)));
    if !distinct {
        return Err(Error::DegeneratePoint);
    }
    let cert = RationalCertificate::from_points(points, frame.clone(), true)?;
    finish(cert, input, exhausted, Some((int(0), int(0))))
}

/// Best cheap candidates seen so far, kept so a flagged result can be built.
struct Best {
    gap: Real,
    draw: usize,
    picks: Vec<Candidate>,
}

struct Searcher<'a, 'b> {
    input: &'a PointSet,
    threshold: Real,
    budget: &'a SearchBudget<'b>,
    best: Option<Best>,
    stopped: bool,
}

impl Searcher<'_, '_> {
    /// Walks the candidate stream of draw `idx` up to `max_k`, taking the
    /// first candidate within the threshold of each slot. Exact points are
    /// only computed once every slot has one.
    fn search(&mut self, idx: usize, p: &Prepared, max_k: u32) -> Result<Option<Approximation>, Error> {
        let n = p.slots.len();
        let mut hits: Vec<Option<Candidate>> = vec![None; n];
        let mut best: Vec<Option<(Real, Candidate)>> = vec![None; n];
        for (cand, b) in p.family.stream(max_k) {
            if self.budget.stop_requested() {
                self.stopped = true;
                break;
            }
            for (i, slot) in p.slots.iter().enumerate() {
                let gap = slot.gap(&b);
                if cand.k <= FALLBACK_K && best[i].as_ref().is_none_or(|(g, _)| gap < *g) {
                    best[i] = Some((gap.clone(), cand));
                }
                if hits[i].is_none() && p.base_gap.clone().max(gap) < self.threshold {
                    hits[i] = Some(cand);
                }
            }
            if hits.iter().all(Option::is_some) {
                break;
            }
        }
        if let Some(picks) = best.into_iter().collect::<Option<Vec<_>>>() {
            let gap = picks.iter().fold(p.base_gap.clone(), |acc, (g, _)| acc.max(g.clone()));
            if self.best.as_ref().is_none_or(|b| gap < b.gap) {
                let picks = picks.into_iter().map(|(_, c)| c).collect();
                self.best = Some(Best { gap, draw: idx, picks });
            }
        }
        let Some(hits) = hits.into_iter().collect::<Option<Vec<_>>>() else { return Ok(None) };
        let mut exact = Vec::with_capacity(n);
        for (slot, cand) in p.slots.iter().zip(&hits) {
            let Ok(b) = p.family.realize(cand) else { return Ok(None) };
            if p.base_gap.clone().max(slot.gap(&rxy(&b.0, &b.1))) >= self.threshold {
                return Ok(None);
            }
            exact.push(b);
        }
        match self.certificate(&p.frame, p.place(&exact), false) {
            Ok(out) if out.gap.value() < &self.threshold => Ok(Some(out)),
            _ => Ok(None),
        }
    }

    /// Sweeps the prepared draws with growing `k` limits; falls back to the
    /// best cheap candidates when none reaches the threshold.
    /// Draws are pulled from `draws` lazily during the first pass, so an
    /// early hit skips preparing the rest.
    fn run(&mut self, mut draws: impl Iterator<Item = Drawn>) -> Result<Approximation, Error> {
        let mut prepared = Vec::new();
        for (pass, max_k) in k_passes(self.budget.max_k).into_iter().enumerate() {
            let mut idx = 0;
            loop {
                if self.stopped || self.budget.stop_requested() {
                    self.stopped = true;
                    return self.fallback(&prepared);
                }
                if idx == prepared.len() {
                    match draws.next() {
                        Some(Drawn::Family(p)) if pass == 0 => prepared.push(p),
                        Some(Drawn::Done(out)) if pass == 0 => return Ok(out),
                        _ => break,
                    }
                }
                if let Some(out) = self.search(idx, &prepared[idx], max_k)? {
                    return Ok(out);
                }
                idx += 1;
            }
        }
        self.fallback(&prepared)
    }

    fn certificate(&self, frame: &Frame, points: Vec<LabeledPoint>, exhausted: bool) -> Result<Approximation, Error> {
        certify(self.input, frame, points, exhausted)
    }

    /// Best certificate seen when no draw reached the threshold.
    fn fallback(&self, prepared: &[Prepared]) -> Result<Approximation, Error> {
        let best = self.best.as_ref().ok_or(Error::BudgetExhausted)?;
        let p = &prepared[best.draw];
        let exact = best.picks.iter().map(|c| p.family.realize(c)).collect::<Result<Vec<_>, _>>()?;
        self.certificate(&p.frame, p.place(&exact), true)
    }
}

fn relabel(template: &[LabeledPoint], coords: &[(usize, BigRat, BigRat)]) -> Vec<LabeledPoint> {
    let mut out: Vec<LabeledPoint> = template.to_vec();
    for (i, x, y) in coords {
        out[*i].x = x.clone();
        out[*i].y = y.clone();
    }
    out
}

/// Approximates a parallelogram (points in polygon order) by a rational
/// parallelogram.
///
/// The diagonals' midpoint `O` becomes the origin, one diagonal gets a
/// rational half-length `a`, the other a rational direction, and its
/// endpoint `B` is a point at rational distance from `-a`, `0` and `a` on
/// that line; the fourth vertex is `-B`.
pub fn approx_parallelogram(quad: &PointSet, eps: &Real, budget: &SearchBudget) -> Result<Approximation, Error> {
    if quad.len() != 4 {
        return Err(Error::NotAParallelogram);
    }
    quad.require_distinct()?;
    let threshold = guarded(eps)?;
    let p = quad.points();
    let (p0, p1, p2, p3) = (quad.real(0), quad.real(1), quad.real(2), quad.real(3));
    let scale = [&p0, &p1, &p2, &p3].iter().fold(Real::one(), |acc, q| acc.max(q.0.abs()).max(q.1.abs()));
    let tol = &scale * Real::parse("1e-9").unwrap_or_default();
    let mismatch = dist(&(&p0.0 + &p2.0, &p0.1 + &p2.1), &(&p1.0 + &p3.0, &p1.1 + &p3.1));
    if mismatch > tol || cross(&p[0], &p[1], &p[2]).is_zero() {
        return Err(Error::NotAParallelogram);
    }
    if let Some(done) = already_rational(quad, true) {
        return Ok(done);
    }

    let two = int(2);
    let o = ((&p[0].x + &p[2].x) / &two, (&p[0].y + &p[2].y) / &two);
    let frame = frame_towards(&o, &diff(&p[2], &o), &diff(&p[1], &o));
    let canon: Vec<RealXY> = (0..4).map(|i| {
        let (x, y) = quad.real(i);
        frame.unapply(&x, &y)
    }).collect();
    // Index of the vertex on the negative x axis, and its opposite.
    let (ia, ic) = if canon[0].0.is_negative() { (0, 2) } else { (2, 0) };
    let half = (dist(&canon[0], &(Real::zero(), Real::zero())) + dist(&canon[2], &(Real::zero(), Real::zero()))).shr(1);
    let b_len = Real::hypot(&canon[1].0, &canon[1].1);
    let phi = Real::atan2(&canon[1].1, &canon[1].0);
    let radius = half.clone().max(b_len.clone());

    let slots = vec![Slot { index: 1, target: canon[1].clone(), mirror: Some((3, canon[3].clone())) }];
    let mut seen = Vec::new();
    let draws = (0..budget.max_param_draws.max(1)).filter_map(|d| {
        let dr = draw(eps, &radius, d);
        let angle = upper_angle_near(&phi, &dr)?;
        let a = length_near(&half, &dr, 0);
        let mut fixed = p.to_vec();
        fixed[ia].x = -&a;
        fixed[ia].y = int(0);
        fixed[ic].x = a.clone();
        fixed[ic].y = int(0);
        let anchor_gap = dist(&rxy(&fixed[ia].x, &fixed[ia].y), &canon[ia])
            .max(dist(&rxy(&fixed[ic].x, &fixed[ic].y), &canon[ic]));
        if anchor_gap >= threshold {
            return None;
        }
        let m = angle.cos() / angle.sin();
        if m.is_zero() {
            // Perpendicular diagonals of equal halves: B = (0, t) with
            // a^2 + t^2 a square.
            let (t, _) = point_near(&a, &RationalAngle::right(), &b_len, &dr.pos_tol)?;
            if !t.is_positive() {
                return None;
            }
            let points = relabel(&fixed, &[(1, int(0), t.clone()), (3, int(0), -t)]);
            let out = certify(quad, &frame, points, false).ok()?;
            return (out.gap.value() < &threshold).then_some(Drawn::Done(out));
        }
        if seen.contains(&(a.clone(), angle.clone())) {
            return None;
        }
        seen.push((a.clone(), angle.clone()));
        let family = LineFamily::new(FamilyParams::new(m, BigRat::one()), a)?;
        let (frame, slots) = (frame.clone(), slots.clone());
        Some(Drawn::Family(Prepared { family, fixed, base_gap: anchor_gap, frame, slots }))
    });
    let mut searcher = Searcher { input: quad, threshold: threshold.clone(), budget, best: None, stopped: false };
    searcher.run(draws)
}

/// The two lines used by the quadrilateral construction: `O` is their
/// intersection and lies strictly between `axis.0` and `axis.1`.
struct Layout {
    o: (BigRat, BigRat),
    axis: (usize, usize),
    /// Point on the other line placed directly.
    near: usize,
    /// Point on the other line found by the curve search, or the index of
    /// the point sitting at `O` itself.
    last: Last,
}

enum Last {
    OnLine(usize),
    AtCenter(usize),
}

fn intersection(p: &LabeledPoint, r: &LabeledPoint, q: &LabeledPoint, s: &LabeledPoint) -> Option<(BigRat, BigRat)> {
    let (d1x, d1y) = (&r.x - &p.x, &r.y - &p.y);
    let (d2x, d2y) = (&s.x - &q.x, &s.y - &q.y);
    let den = &d1x * &d2y - &d1y * &d2x;
    if den.is_zero() {
        return None;
    }
    let lambda = ((&q.x - &p.x) * &d2y - (&q.y - &p.y) * &d2x) / den;
    Some((&p.x + &lambda * &d1x, &p.y + &lambda * &d1y))
}

fn strictly_between(o: &(BigRat, BigRat), p: &LabeledPoint, r: &LabeledPoint) -> bool {
    let dot = (&p.x - &o.0) * (&r.x - &o.0) + (&p.y - &o.1) * (&r.y - &o.1);
    dot.is_negative()
}

/// Candidate line pairs. Three collinear points give a single layout with
/// the middle one at `O`. Otherwise every pair of lines meeting strictly
/// inside both segments is returned with either line as the axis, since
/// the curve search can be much faster on one than on the other; when no
/// pair qualifies, one meeting inside a single segment is used.
fn layouts(quad: &PointSet) -> Vec<Layout> {
    let p = quad.points();
    for i in 0..4 {
        for j in (i + 1)..4 {
            for k in (j + 1)..4 {
                if cross(&p[i], &p[j], &p[k]).is_zero() {
                    let rest = 6 - i - j - k;
                    // middle point of the collinear triple becomes O
                    let found = [(i, (j, k)), (j, (i, k)), (k, (i, j))].into_iter().find(|(m, (e, f))| {
                        let o = (p[*m].x.clone(), p[*m].y.clone());
                        strictly_between(&o, &p[*e], &p[*f])
                    });
                    return found
                        .map(|(mid, ends)| Layout {
                            o: (p[mid].x.clone(), p[mid].y.clone()),
                            axis: ends,
                            near: rest,
                            last: Last::AtCenter(mid),
                        })
                        .into_iter()
                        .collect();
                }
            }
        }
    }
    let mut both = Vec::new();
    let mut fallback = None;
    for ((a, b), (c, d)) in [((0, 2), (1, 3)), ((0, 1), (2, 3)), ((0, 3), (1, 2))] {
        let Some(o) = intersection(&p[a], &p[b], &p[c], &p[d]) else { continue };
        let first = strictly_between(&o, &p[a], &p[b]);
        let second = strictly_between(&o, &p[c], &p[d]);
        let make = |axis: (usize, usize), other: (usize, usize)| Layout {
            o: o.clone(),
            axis,
            near: other.0,
            last: Last::OnLine(other.1),
        };
        if first && second {
            both.push(make((a, b), (c, d)));
            both.push(make((c, d), (a, b)));
        } else if fallback.is_none() {
            if first {
                fallback = Some(make((a, b), (c, d)));
            } else if second {
                fallback = Some(make((c, d), (a, b)));
            }
        }
    }
    if both.is_empty() {
        both.extend(fallback);
    }
    both
}

/// A layout in its canonical frame.
struct Setup {
    frame: Frame,
    canon: Vec<RealXY>,
    /// Indices on the negative and positive x axis, and on the other line.
    ia: usize,
    ic: usize,
    iq: usize,
    last: Last,
    phi: Real,
    radius: Real,
}

fn setup(quad: &PointSet, lay: Layout) -> Setup {
    let p = quad.points();
    let frame = frame_towards(&lay.o, &diff(&p[lay.axis.1], &lay.o), &diff(&p[lay.near], &lay.o));
    let canon: Vec<RealXY> = (0..4)
        .map(|i| {
            let (x, y) = quad.real(i);
            frame.unapply(&x, &y)
        })
        .collect();
    let origin = (Real::zero(), Real::zero());
    let (ia, ic) = if canon[lay.axis.0].0.is_negative() { lay.axis } else { (lay.axis.1, lay.axis.0) };
    let iq = lay.near;
    let phi = Real::atan2(&canon[iq].1, &canon[iq].0);
    let radius = canon.iter().fold(Real::zero(), |acc, q| acc.max(dist(q, &origin)));
    Setup { frame, canon, ia, ic, iq, last: lay.last, phi, radius }
}

/// Approximates four points by a rational 4-set (all six distances
/// rational).
///
/// Two lines through the points meet at `O`, which lies strictly inside the
/// segment on the first line. The first line's points get rational
/// positions and the second line a rational direction; both points on it
/// are searched among curve points mapped onto that line. When three
/// points are collinear the middle one is `O` and no search is needed.
pub fn approx_quadrilateral(quad: &PointSet, eps: &Real, budget: &SearchBudget) -> Result<Approximation, Error> {
    if quad.len() != 4 {
        return Err(Error::InvalidInput("a quadrilateral needs exactly four points".into()));
    }
    quad.require_distinct()?;
    let threshold = guarded(eps)?;
    if let Some(done) = already_rational(quad, true) {
        return Ok(done);
    }
    let p = quad.points();
    if cross(&p[0], &p[1], &p[2]).is_zero() && cross(&p[0], &p[1], &p[3]).is_zero() {
        return place_on_line(quad, &threshold);
    }
    let setups: Vec<Setup> = layouts(quad).into_iter().map(|lay| setup(quad, lay)).collect();
    if setups.is_empty() {
        return Err(Error::InvalidInput("no pair of lines meets inside a segment".into()));
    }
    let mut searcher = Searcher { input: quad, threshold: threshold.clone(), budget, best: None, stopped: false };
    if let Last::AtCenter(io) = setups[0].last {
        return at_center(&mut searcher, eps, &setups[0], io);
    }
    let make = |d: u32, su: &Setup, seen: &mut Vec<(usize, BigRat, BigRat, RationalAngle)>, which: usize| {
        let Last::OnLine(is) = su.last else { return None };
        let dr = draw(eps, &su.radius, d);
        let angle = upper_angle_near(&su.phi, &dr)?;
        let a = length_near(&su.canon[su.ia].0.abs(), &dr, 0);
        let c = length_near(&su.canon[su.ic].0.abs(), &dr, 1);
        let mut fixed = p.to_vec();
        fixed[su.ia].x = -&a;
        fixed[su.ia].y = int(0);
        fixed[su.ic].x = c.clone();
        fixed[su.ic].y = int(0);
        let base_gap = dist(&rxy(&fixed[su.ia].x, &fixed[su.ia].y), &su.canon[su.ia])
            .max(dist(&rxy(&fixed[su.ic].x, &fixed[su.ic].y), &su.canon[su.ic]));
        if base_gap >= threshold {
            return None;
        }
        let (tq, ts) = (&su.canon[su.iq], &su.canon[is]);
        let m = angle.cos() / angle.sin();
        let n = &c / &a;
        if m.is_zero() && n.is_one() {
            // Both points sit on the perpendicular bisector: (0, t) with
            // a^2 + t^2 a square.
            let near = |target: &Real| point_near(&a, &RationalAngle::right(), &target.abs(), &dr.pos_tol);
            let ((t1, _), (t2, _)) = (near(&tq.1)?, near(&ts.1)?);
            let points = relabel(&fixed, &[(su.iq, int(0), t1), (is, int(0), -t2)]);
            let out = certify(quad, &su.frame, points, false).ok()?;
            return (out.gap.value() < &threshold).then_some(Drawn::Done(out));
        }
        let key = (which, a.clone(), c.clone(), angle.clone());
        if seen.contains(&key) {
            return None;
        }
        seen.push(key);
        let family = LineFamily::new(FamilyParams::new(m, n), c)?;
        let slots = vec![
            Slot { index: su.iq, target: tq.clone(), mirror: None },
            Slot { index: is, target: ts.clone(), mirror: None },
        ];
        Some(Drawn::Family(Prepared { family, fixed, base_gap, frame: su.frame.clone(), slots }))
    };
    let mut seen = Vec::new();
    let draws = (0..budget.max_param_draws.max(1))
        .flat_map(|d| (0..setups.len()).map(move |which| (d, which)))
        .filter_map(|(d, which)| make(d, &setups[which], &mut seen, which));
    searcher.run(draws)
}

/// Three collinear points with the middle one `io` at the origin: the
/// fourth point `iq` gets rational distances from the other two directly.
fn at_center(
    searcher: &mut Searcher,
    eps: &Real,
    su: &Setup,
    io: usize,
) -> Result<Approximation, Error> {
    let (ia, ic, iq) = (su.ia, su.ic, su.iq);
    let a_len = su.canon[ia].0.abs();
    let c_len = su.canon[ic].0.abs();
    let q_len = dist(&su.canon[iq], &(Real::zero(), Real::zero()));
    let mut last = None;
    for d in 0..searcher.budget.max_param_draws.max(1) {
        let dr = draw(eps, &su.radius, d);
        let Some(angle) = upper_angle_near(&su.phi, &dr) else { continue };
        let a = length_near(&a_len, &dr, 0);
        // Q on the second line at rational distance from (-a, 0).
        let from_a = RationalAngle::new(-angle.cos(), angle.sin().clone())?;
        let Some((b, _)) = point_near(&a, &from_a, &q_len, &dr.pos_tol) else { continue };
        // C on the x axis at rational distance from Q.
        let Some((c, _)) = point_near(&b, &angle, &c_len, &dr.pos_tol) else { continue };
        if !b.is_positive() || !c.is_positive() {
            continue;
        }
        let fixed = searcher.input.points();
        let coords = [
            (ia, -&a, int(0)),
            (ic, c, int(0)),
            (iq, &b * angle.cos(), &b * angle.sin()),
            (io, int(0), int(0)),
        ];
        let Ok(out) = searcher.certificate(&su.frame, relabel(fixed, &coords), false) else { continue };
        if out.gap.value() < &searcher.threshold {
            return Ok(out);
        }
        if last.as_ref().is_none_or(|l: &Approximation| out.gap < l.gap) {
            last = Some(out);
        }
    }
    let mut out = last.ok_or(Error::BudgetExhausted)?;
    out.budget_exhausted = true;
    Ok(out)
}
