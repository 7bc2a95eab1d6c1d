//! JSON file formats. Scalars are always strings in the rational text form
//! (`"3/5"`, `"-2"`); approximate runs also accept decimal text.

use serde_json::{json, Map, Value};

use qclifford_core::spacetime::Event;
use qclifford_core::{Multivector, Scalar, Signature};

use crate::error::{CliError, Result};

pub fn parse_scalar<S: Scalar>(v: &Value, what: &str) -> Result<S> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => return Err(CliError::usage(format!("{what}: expected a number string, got {other}"))),
    };
    S::parse_scalar(&text).map_err(|e| CliError::usage(format!("{what}: {e}")))
}

pub fn scalar_json<S: Scalar>(s: &S) -> Value {
    Value::String(s.to_string())
}

pub fn coords_json<S: Scalar>(coords: &[S]) -> Value {
    Value::Array(coords.iter().map(scalar_json).collect())
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| CliError::usage(format!("{what}: expected a JSON object")))
}

fn field<'a>(v: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| CliError::usage(format!("{what}: missing \"{key}\"")))
}

/// `{"signature": "Cl(1,3)", "terms": {"e0": "1", "e12": "-3/2"}}`, terms in
/// canonical blade order.
pub fn multivector_json<S: Scalar>(mv: &Multivector<S>) -> Value {
    let sig = mv.signature();
    let terms: Map<String, Value> = mv.terms().map(|(b, c)| (sig.blade_name(b), scalar_json(c))).collect();
    json!({ "signature": sig.to_string(), "terms": terms })
}

/// Reads the multivector form. Blade names may list generators in any
/// order (`"e31"`); the reordering sign is applied.
pub fn parse_multivector<S: Scalar>(v: &Value) -> Result<Multivector<S>> {
    let obj = object(v, "multivector")?;
    let sig_text = field(obj, "signature", "multivector")?
        .as_str()
        .ok_or_else(|| CliError::usage("multivector: \"signature\" must be a string"))?;
    let sig: Signature = sig_text.parse()?;
    let terms = object(field(obj, "terms", "multivector")?, "multivector terms")?;
    let mut parsed = Vec::with_capacity(terms.len());
    for (name, coef) in terms {
        let (blade, sign) = sig.parse_blade(name)?;
        let c: S = parse_scalar(coef, &format!("coefficient of {name}"))?;
        parsed.push((blade, if sign < 0 { -c } else { c }));
    }
    Ok(Multivector::from_terms(sig, parsed)?)
}

fn vector3<S: Scalar>(v: &Value, what: &str) -> Result<[S; 3]> {
    let items = v
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or_else(|| CliError::usage(format!("{what}: expected three coordinates")))?;
    Ok([
        parse_scalar(&items[0], what)?,
        parse_scalar(&items[1], what)?,
        parse_scalar(&items[2], what)?,
    ])
}

/// Three named points and their images.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene<S> {
    pub names: [String; 3],
    pub points: [[S; 3]; 3],
    pub images: [[S; 3]; 3],
}

/// `{"points": {"A": ["0","0","0"], ...}, "images": {"A": [...], ...}}`.
pub fn parse_scene<S: Scalar>(v: &Value) -> Result<Scene<S>> {
    let obj = object(v, "scene")?;
    let points = object(field(obj, "points", "scene")?, "scene points")?;
    let images = object(field(obj, "images", "scene")?, "scene images")?;
    if points.len() != 3 {
        return Err(CliError::usage(format!("scene: expected three points, got {}", points.len())));
    }
    if images.len() != 3 {
        return Err(CliError::usage(format!("scene: expected three images, got {}", images.len())));
    }
    let mut names = Vec::new();
    let mut ps = Vec::new();
    let mut is = Vec::new();
    for (name, p) in points {
        let img = images
            .get(name)
            .ok_or_else(|| CliError::usage(format!("scene: point {name} has no image")))?;
        ps.push(vector3(p, &format!("point {name}"))?);
        is.push(vector3(img, &format!("image of {name}"))?);
        names.push(name.clone());
    }
    let three = |v: Vec<[S; 3]>| <[[S; 3]; 3]>::try_from(v).map_err(|_| CliError::usage("scene: expected three points"));
    Ok(Scene {
        names: <[String; 3]>::try_from(names).map_err(|_| CliError::usage("scene: expected three points"))?,
        points: three(ps)?,
        images: three(is)?,
    })
}

pub fn scene_json<S: Scalar>(scene: &Scene<S>) -> Value {
    let mut points = Map::new();
    let mut images = Map::new();
    for i in 0..3 {
        points.insert(scene.names[i].clone(), coords_json(&scene.points[i]));
        images.insert(scene.names[i].clone(), coords_json(&scene.images[i]));
    }
    json!({ "points": points, "images": images })
}

/// An event as written in files: a time, three positions and the speed of
/// light in the same units.
#[derive(Debug, Clone, PartialEq)]
pub struct EventRecord<S> {
    pub t: S,
    pub x: S,
    pub y: S,
    pub z: S,
    pub c: S,
}

impl<S: Scalar> EventRecord<S> {
    pub fn to_event(&self) -> Result<Event<S>> {
        Ok(Event::from_time(self.t.clone(), self.x.clone(), self.y.clone(), self.z.clone(), &self.c)?)
    }

    pub fn from_event(e: &Event<S>, c: &S) -> Result<Self> {
        Ok(Self { t: e.time(c)?, x: e.x.clone(), y: e.y.clone(), z: e.z.clone(), c: c.clone() })
    }
}

/// `{"t": "5", "x": "3", "y": "0", "z": "0", "c": "1"}`; `c` defaults to 1.
pub fn parse_event<S: Scalar>(v: &Value) -> Result<EventRecord<S>> {
    let obj = object(v, "event")?;
    let get = |k: &str| -> Result<S> {
        match obj.get(k) {
            Some(v) => parse_scalar(v, &format!("event {k}")),
            None if k == "c" => Ok(S::one()),
            None => Err(CliError::usage(format!("event: missing \"{k}\""))),
        }
    };
    Ok(EventRecord { t: get("t")?, x: get("x")?, y: get("y")?, z: get("z")?, c: get("c")? })
}

pub fn event_json<S: Scalar>(e: &EventRecord<S>) -> Value {
    json!({
        "t": scalar_json(&e.t),
        "x": scalar_json(&e.x),
        "y": scalar_json(&e.y),
        "z": scalar_json(&e.z),
        "c": scalar_json(&e.c),
    })
}

/// A single event, a list of events, or `{"events": [...]}`.
pub fn parse_events<S: Scalar>(v: &Value) -> Result<Vec<EventRecord<S>>> {
    match v {
        Value::Array(items) => items.iter().map(parse_event).collect(),
        Value::Object(obj) => match obj.get("events") {
            Some(list) => parse_events(list),
            None => Ok(vec![parse_event(v)?]),
        },
        _ => Err(CliError::usage("events: expected an event object or a list of events")),
    }
}

/// `"3/5"` (along x) or `"3/5,0,0"`.
pub fn parse_beta<S: Scalar>(text: &str) -> Result<[S; 3]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let parse = |s: &str| S::parse_scalar(s).map_err(|e| CliError::usage(format!("--beta: {e}")));
    match parts.as_slice() {
        [b] => Ok([parse(b)?, S::zero(), S::zero()]),
        [x, y, z] => Ok([parse(x)?, parse(y)?, parse(z)?]),
        _ => Err(CliError::usage(format!("--beta: expected one or three components, got {text:?}"))),
    }
}
