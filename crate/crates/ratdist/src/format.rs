//! JSON encodings of the exact types. Rationals travel as `"num/den"`
//! strings; plain JSON numbers are accepted on input and read exactly.

use ratdist_core::geometry::{Approximation, Distance, Frame, LabeledPoint, PointSet, RationalCertificate};
use ratdist_core::rational::parse_rational;
use ratdist_core::{BigRat, CubicCurve, CurvePoint, RationalAngle, Real};
use serde_json::{json, Map, Value};

pub fn rat_json(q: &BigRat) -> Value {
    Value::String(q.to_string())
}

/// Reads a rational from a string (`"3/4"`, `"-2"`, `"0.25"`) or a JSON
/// number. Numbers keep their literal text, so `0.1` is exactly `1/10`.
pub fn rat_from_json(v: &Value) -> Result<BigRat, String> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => return Err(format!("expected a rational, found {other}")),
    };
    parse_rational(&text).ok_or_else(|| format!("not a rational: {text:?}"))
}

pub fn parse_rat_arg(name: &str, s: &str) -> Result<BigRat, String> {
    parse_rational(s).ok_or_else(|| format!("--{name}: not a rational: {s:?}"))
}

pub fn curve_point_json(p: &CurvePoint) -> Value {
    match p {
        CurvePoint::Infinity => json!({ "infinity": true }),
        CurvePoint::Affine { u, w } => json!({ "U": rat_json(u), "W": rat_json(w) }),
    }
}

pub fn curve_point_from_json(v: &Value) -> Result<CurvePoint, String> {
    if v.get("infinity").and_then(Value::as_bool) == Some(true) {
        return Ok(CurvePoint::Infinity);
    }
    let field = |k: &str| v.get(k).ok_or_else(|| format!("curve point lacks {k:?}")).and_then(rat_from_json);
    Ok(CurvePoint::affine(field("U")?, field("W")?))
}

pub fn cubic_json(c: &CubicCurve) -> Value {
    json!({ "A": rat_json(&c.a), "B": rat_json(&c.b), "C": rat_json(&c.c) })
}

pub fn angle_json(t: &RationalAngle) -> Value {
    json!({ "cos": rat_json(t.cos()), "sin": rat_json(t.sin()) })
}

fn labeled_json(p: &LabeledPoint) -> Value {
    json!({ "label": p.label, "x": rat_json(&p.x), "y": rat_json(&p.y) })
}

pub fn certificate_json(cert: &RationalCertificate) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("points".into(), cert.points.iter().map(labeled_json).collect());
    let distances = cert
        .distances
        .iter()
        .map(|d| json!({ "from": d.from, "to": d.to, "value": rat_json(&d.value) }))
        .collect();
    out.insert("distances".into(), distances);
    out.insert("area".into(), cert.area.as_ref().map_or(Value::Null, rat_json));
    let f = &cert.frame;
    out.insert(
        "frame".into(),
        json!({ "angle": f.angle().to_f64(), "dx": f.dx.to_f64(), "dy": f.dy.to_f64() }),
    );
    out
}

pub fn approximation_json(a: &Approximation) -> Value {
    let mut out = certificate_json(&a.certificate);
    out.insert("gap".into(), json!(a.gap.value().to_f64()));
    out.insert("budget_exhausted".into(), json!(a.budget_exhausted));
    if let Some((x, y)) = &a.center {
        out.insert("center".into(), json!({ "x": rat_json(x), "y": rat_json(y) }));
    }
    Value::Object(out)
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str, String> {
    v.get(key).and_then(Value::as_str).ok_or_else(|| format!("missing string field {key:?}"))
}

fn rat_field(v: &Value, key: &str) -> Result<BigRat, String> {
    rat_from_json(v.get(key).ok_or_else(|| format!("missing field {key:?}"))?)
}

fn real_field(v: &Value, key: &str) -> Result<Real, String> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(Real::zero()),
        Some(x) => Ok(Real::from_rat(&rat_from_json(x)?)),
    }
}

/// Reads a certificate back. Distances and area are taken as written, so a
/// tampered file is caught by the verifier rather than silently repaired.
pub fn certificate_from_json(v: &Value) -> Result<RationalCertificate, String> {
    let points = v
        .get("points")
        .and_then(Value::as_array)
        .ok_or("certificate lacks a \"points\" array")?
        .iter()
        .map(|p| Ok(LabeledPoint::new(str_field(p, "label")?, rat_field(p, "x")?, rat_field(p, "y")?)))
        .collect::<Result<Vec<_>, String>>()?;
    let distances = v
        .get("distances")
        .and_then(Value::as_array)
        .ok_or("certificate lacks a \"distances\" array")?
        .iter()
        .map(|d| {
            Ok(Distance {
                from: str_field(d, "from")?.to_string(),
                to: str_field(d, "to")?.to_string(),
                value: rat_field(d, "value")?,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let area = match v.get("area") {
        None | Some(Value::Null) => None,
        Some(a) => Some(rat_from_json(a)?),
    };
    let frame = match v.get("frame") {
        None | Some(Value::Null) => Frame::identity(),
        Some(f) => {
            let (sin, cos) = real_field(f, "angle")?.sin_cos();
            Frame { cos, sin, dx: real_field(f, "dx")?, dy: real_field(f, "dy")? }
        }
    };
    Ok(RationalCertificate { points, distances, area, frame })
}

/// Input point sets: `{"points": [{"label", "x", "y"}, ...]}` or a bare
/// `[[x, y], ...]` array (labelled `A`, `B`, ... in order).
pub fn point_set_from_json(v: &Value) -> Result<PointSet, String> {
    let list = match v {
        Value::Array(a) => a,
        Value::Object(_) => v.get("points").and_then(Value::as_array).ok_or("input lacks a \"points\" array")?,
        _ => return Err("input must be an object or an array".into()),
    };
    if list.iter().all(Value::is_array) {
        let coords = list
            .iter()
            .map(|p| match p.as_array().map(Vec::as_slice) {
                Some([x, y]) => Ok((rat_from_json(x)?, rat_from_json(y)?)),
                _ => Err(format!("expected an [x, y] pair, found {p}")),
            })
            .collect::<Result<Vec<_>, String>>()?;
        return Ok(PointSet::from_xy(coords));
    }
    let points = list
        .iter()
        .map(|p| Ok(LabeledPoint::new(str_field(p, "label")?, rat_field(p, "x")?, rat_field(p, "y")?)))
        .collect::<Result<Vec<_>, String>>()?;
    PointSet::new(points).map_err(|e| e.to_string())
}
