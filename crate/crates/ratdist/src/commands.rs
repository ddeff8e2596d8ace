//! The subcommands as plain functions, independent of argument parsing.

use std::time::{Duration, Instant};

use ratdist_core::geometry::{
    approx_parallelogram, approx_quadrilateral, approx_triangle, certificate_verify, SearchBudget,
};
use ratdist_core::{BigRat, CurvePoint, Error, FamilyParams, Real};
use serde_json::{json, Value};

use crate::format::{
    approximation_json, cubic_json, curve_point_json, parse_rat_arg, point_set_from_json, rat_json,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Flagged,
    Error,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Json(Value),
    Csv(String),
}

/// Outcome of one command: what to print and how to exit.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Payload,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    fn ok(payload: Payload) -> Self {
        CommandResult { status: Status::Ok, payload, diagnostics: Vec::new() }
    }

    pub fn error(message: impl Into<String>) -> Self {
        let message = message.into();
        CommandResult {
            status: Status::Error,
            payload: Payload::Json(json!({ "error": message })),
            diagnostics: vec![message],
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Flagged => 2,
            Status::Error => 1,
        }
    }

    /// The payload as written to stdout or `--out`.
    pub fn render(&self) -> String {
        match &self.payload {
            Payload::Json(v) => {
                let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
                s.push('\n');
                s
            }
            Payload::Csv(s) => s.clone(),
        }
    }

    pub fn json(&self) -> Option<&Value> {
        match &self.payload {
            Payload::Json(v) => Some(v),
            Payload::Csv(_) => None,
        }
    }
}

fn params(m: &str, n: &str) -> Result<FamilyParams, String> {
    Ok(FamilyParams::new(parse_rat_arg("m", m)?, parse_rat_arg("n", n)?))
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return CommandResult::error(e.to_string()),
        }
    };
}

/// `kP1` on the cubic of `(m, n)` for `k = 1..=kmax`.
pub fn cmd_multiples(m: &str, n: &str, kmax: usize) -> CommandResult {
    let fp = attempt!(params(m, n));
    if fp.is_singular() {
        return CommandResult::error(Error::SingularParams.to_string());
    }
    let curve = fp.cubic();
    let pts = attempt!(curve.multiples(&fp.p1(), kmax));
    let rows: Vec<Value> = pts
        .iter()
        .zip(1..)
        .map(|(p, k)| {
            let mut row = curve_point_json(p);
            row["k"] = json!(k);
            row
        })
        .collect();
    CommandResult::ok(Payload::Json(json!({
        "m": rat_json(&fp.m),
        "n": rat_json(&fp.n),
        "curve": cubic_json(&curve),
        "multiples": rows,
    })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Triangle,
    Parallelogram,
    Quad,
}

impl std::str::FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "triangle" => Ok(Shape::Triangle),
            "parallelogram" => Ok(Shape::Parallelogram),
            "quad" | "quadrilateral" => Ok(Shape::Quad),
            _ => Err(format!("unknown shape {s:?} (triangle, parallelogram or quad)")),
        }
    }
}

/// Search limits for `approx`; `None` keeps the library default.
#[derive(Clone, Copy, Debug, Default)]
pub struct ApproxLimits {
    pub kbudget: Option<u32>,
    pub time_budget: Option<Duration>,
}

/// Approximates the point set in `input` (JSON text) within `eps`.
pub fn cmd_approx(shape: Shape, input: &str, eps: &str, limits: ApproxLimits) -> CommandResult {
    let doc: Value = attempt!(serde_json::from_str(input));
    let set = attempt!(point_set_from_json(&doc));
    let eps = attempt!(Real::parse(eps).ok_or_else(|| format!("--eps: not a number: {eps:?}")));
    let start = Instant::now();
    let stop = move || limits.time_budget.is_some_and(|t| start.elapsed() >= t);
    let mut budget = SearchBudget { should_stop: Some(&stop), ..SearchBudget::default() };
    if let Some(k) = limits.kbudget {
        budget.max_k = k;
    }
    let result = match shape {
        Shape::Triangle => approx_triangle(&set, &eps),
        Shape::Parallelogram => approx_parallelogram(&set, &eps, &budget),
        Shape::Quad => approx_quadrilateral(&set, &eps, &budget),
    };
    let approx = attempt!(result);
    let mut diagnostics = vec![format!("gap {:.3e}", approx.gap.value().to_f64())];
    let status = if approx.budget_exhausted {
        diagnostics.push("budget exhausted before reaching eps; best certificate returned".into());
        Status::Flagged
    } else {
        Status::Ok
    };
    CommandResult { status, payload: Payload::Json(approximation_json(&approx)), diagnostics }
}

fn parse_range(name: &str, s: &str) -> Result<(BigRat, BigRat), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("--{name}: expected lo:hi, found {s:?}"))?;
    Ok((parse_rat_arg(name, lo)?, parse_rat_arg(name, hi)?))
}

fn grid(lo: &BigRat, hi: &BigRat, steps: usize) -> Vec<BigRat> {
    if steps == 1 {
        return vec![lo.clone()];
    }
    let h = (hi - lo) / BigRat::from_integer((steps - 1).into());
    (0..steps).map(|i| lo + &h * BigRat::from_integer(i.into())).collect()
}

/// CSV over an `m` by `n` grid, `m` varying slowest.
pub fn cmd_scan(m_range: &str, n_range: &str, steps: usize) -> CommandResult {
    if steps == 0 {
        return CommandResult::error("--steps must be positive");
    }
    let (m_lo, m_hi) = attempt!(parse_range("m-range", m_range));
    let (n_lo, n_hi) = attempt!(parse_range("n-range", n_range));
    let mut out = csv::Writer::from_writer(Vec::new());
    attempt!(out.write_record(["m", "n", "singular", "discriminant", "torsion_order", "oval_check"]));
    for m in grid(&m_lo, &m_hi, steps) {
        for n in grid(&n_lo, &n_hi, steps) {
            let fp = FamilyParams::new(m.clone(), n);
            let singular = fp.is_singular();
            let (torsion, oval) = if singular {
                (String::new(), false)
            } else {
                let t = attempt!(fp.torsion_scan());
                (t.map(|k| k.to_string()).unwrap_or_default(), attempt!(fp.oval_membership_check()))
            };
            attempt!(out.write_record([
                fp.m.to_string(),
                fp.n.to_string(),
                u8::from(singular).to_string(),
                fp.family_discriminant().to_string(),
                torsion,
                u8::from(oval).to_string(),
            ]));
        }
    }
    let bytes = attempt!(out.into_inner());
    CommandResult::ok(Payload::Csv(attempt!(String::from_utf8(bytes))))
}

/// Exact verification of a certificate file.
pub fn cmd_verify(input: &str) -> CommandResult {
    let doc: Value = attempt!(serde_json::from_str(input));
    let cert = attempt!(crate::format::certificate_from_json(&doc));
    let v = certificate_verify(&cert);
    let payload = Payload::Json(json!({ "valid": v.is_valid(), "reasons": v.reasons }));
    if v.is_valid() {
        CommandResult::ok(payload)
    } else {
        CommandResult { status: Status::Error, payload, diagnostics: v.reasons }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    QuarticToCubic,
    CubicToQuartic,
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "q2c" => Ok(Direction::QuarticToCubic),
            "c2q" => Ok(Direction::CubicToQuartic),
            _ => Err(format!("unknown direction {s:?} (q2c or c2q)")),
        }
    }
}

/// Maps `(x, y)` on the quartic to `(U, W)` on the cubic, or back.
pub fn cmd_transform(dir: Direction, m: &str, n: &str, first: &str, second: &str) -> CommandResult {
    let fp = attempt!(params(m, n));
    let payload = match dir {
        Direction::QuarticToCubic => {
            let x = attempt!(parse_rat_arg("x", first));
            let y = attempt!(parse_rat_arg("y", second));
            curve_point_json(&attempt!(fp.quartic_to_cubic(&x, &y)))
        }
        Direction::CubicToQuartic => {
            let u = attempt!(parse_rat_arg("u", first));
            let w = attempt!(parse_rat_arg("w", second));
            let (x, y) = attempt!(fp.cubic_to_quartic(&CurvePoint::affine(u, w)));
            json!({ "x": rat_json(&x), "y": rat_json(&y) })
        }
    };
    CommandResult::ok(Payload::Json(payload))
}
