//! The verbs behind the command line. Each returns the text to emit.

use serde_json::{json, Map, Value};

use qclifford_core::invertibility::{invert as invert_mv, Inversion, NullClassification, Witness};
use qclifford_core::reps::{build_representation, targets_for, Entry, Target};
use qclifford_core::rotor::{recover_rigid_motion, RigidMotion, Rotor};
use qclifford_core::spacetime::{interval_sq, Boost, Event};
use qclifford_core::{square_census, CayleyTable, Error, Multivector, Rational, Scalar, ScalarDomain, Signature};

use crate::error::{CliError, Result};
use crate::formats::{
    coords_json, event_json, multivector_json, parse_beta, parse_events, parse_multivector, parse_scene,
    scalar_json, EventRecord, Scene,
};

/// Output format of the `table` verb.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// The full multiplication table of a signature.
pub fn table(sig: Signature, format: Format) -> Result<String> {
    let t = CayleyTable::new(sig);
    let names: Vec<String> = t.blades().iter().map(|b| sig.blade_name(*b)).collect();
    let n = names.len();
    match format {
        Format::Json => {
            let rows: Vec<Vec<String>> = (0..n).map(|r| (0..n).map(|c| t.cell_name(r, c)).collect()).collect();
            Ok(to_text(&json!({ "signature": sig.to_string(), "blades": names, "rows": rows })))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec![String::new()];
            header.extend(names.iter().cloned());
            let csv_err = |e: csv::Error| CliError::usage(format!("csv: {e}"));
            w.write_record(&header).map_err(csv_err)?;
            for (r, name) in names.iter().enumerate() {
                let mut row = vec![name.clone()];
                row.extend((0..n).map(|c| t.cell_name(r, c)));
                w.write_record(&row).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::usage(format!("csv: {e}")))?;
            Ok(String::from_utf8(bytes).expect("blade names are ASCII"))
        }
    }
}

pub fn census(sig: Signature) -> String {
    let (plus, minus) = square_census(sig);
    to_text(&json!({ "signature": sig.to_string(), "plus": plus, "minus": minus }))
}

fn points<S: Scalar>(sig: Signature, coords: &[[S; 3]; 3]) -> Result<[Multivector<S>; 3]> {
    let v = |c: &[S; 3]| Multivector::vector(sig, c);
    Ok([v(&coords[0])?, v(&coords[1])?, v(&coords[2])?])
}

/// Recovers the rigid motion of a scene. The motion maps `P` to
/// `anchor + translation + R(P − anchor)`.
pub fn rotate<S: Scalar>(scene: &Value, domain: &ScalarDomain) -> Result<(Value, RigidMotion<S>)> {
    let scene: Scene<S> = parse_scene(scene)?;
    let sig = Signature::new(0, 3)?;
    let ps = points(sig, &scene.points)?;
    let is = points(sig, &scene.images)?;
    let motion = recover_rigid_motion(&ps, &is, domain).map_err(|e| match e {
        Error::NotRigid(i, j) => {
            let (a, b) = (&scene.names[i], &scene.names[j]);
            CliError::Domain {
                kind: "NotRigid",
                message: format!("distance between {a} and {b} is not preserved"),
                detail: json!({ "pair": [a, b] }),
            }
        }
        other => other.into(),
    })?;
    let residuals = motion.residuals(&ps, &is)?;
    let mut res = Map::new();
    for (name, r) in scene.names.iter().zip(&residuals) {
        res.insert(name.clone(), scalar_json(r));
    }
    let out = json!({
        "anchor": coords_json(&motion.anchor().vector_coords()?),
        "translation": coords_json(&motion.translation().vector_coords()?),
        "versor": multivector_json(motion.rotation().versor()),
        "residuals": res,
    });
    Ok((out, motion))
}

/// `rotate` in floating point, with the rotation also given as an axis and
/// an angle in radians.
pub fn rotate_approx(scene: &Value, domain: &ScalarDomain) -> Result<Value> {
    let (mut out, motion) = rotate::<f64>(scene, domain)?;
    let rotation: &Rotor<f64> = motion.rotation();
    out["axis_angle"] = match rotation.axis_angle() {
        Ok((axis, angle)) => json!({ "axis": coords_json(&axis), "angle": scalar_json(&angle) }),
        Err(_) => json!({ "axis": Value::Null, "angle": "0" }),
    };
    Ok(out)
}

/// Transforms events into the frame moving with velocity `beta`, optionally
/// shifting the origin afterwards.
pub fn boost<S: Scalar>(events: &Value, beta: &str, offset: Option<&Value>, domain: &ScalarDomain) -> Result<Value> {
    let records: Vec<EventRecord<S>> = parse_events(events)?;
    let beta: [S; 3] = parse_beta(beta)?;
    let b = Boost::new(beta.clone()).map_err(|e| match e {
        Error::Inexact => CliError::domain(
            "Inexact",
            "1 - |beta|^2 is not the square of a rational, so gamma is irrational; rerun with --approx",
        ),
        other => other.into(),
    })?;
    let shift = match offset {
        Some(v) => {
            let r: Vec<EventRecord<S>> = parse_events(v)?;
            match r.as_slice() {
                [one] => Some(one.to_event()?),
                _ => return Err(CliError::usage("offset: expected a single event")),
            }
        }
        None => None,
    };
    let origin = Event::origin();
    let mut rows = Vec::with_capacity(records.len());
    for rec in &records {
        let e = rec.to_event()?;
        let moved = match &shift {
            Some(o) => b.poincare_transform(o, &e)?,
            None => b.lorentz_transform(&e)?,
        };
        let before = interval_sq(&e, &origin);
        let lorentz = b.lorentz_transform(&e)?;
        let after = interval_sq(&lorentz, &origin);
        rows.push(json!({
            "event": event_json(rec),
            "transformed": event_json(&EventRecord::from_event(&moved, &rec.c)?),
            "interval_before": scalar_json(&before),
            "interval_after": scalar_json(&after),
            "interval_preserved": domain.eq(&before, &after),
        }));
    }
    Ok(json!({
        "mode": domain.mode().to_string(),
        "beta": coords_json(&beta),
        "gamma": scalar_json(b.gamma()),
        "versor": multivector_json(b.rotor().versor()),
        "events": rows,
    }))
}

/// A catalogue representation with its homomorphism verdict. With
/// `element`, the image of that multivector is included.
pub fn rep(sig: Signature, target: Option<Target>, element: Option<&str>) -> Result<Value> {
    let target = match target {
        Some(t) => t,
        None => *targets_for(sig).first().ok_or_else(|| {
            CliError::from(Error::UnsupportedRepresentation { signature: sig, target: "any".into() })
        })?,
    };
    let r = build_representation::<Rational>(sig, target)?;
    let report = r.verify_homomorphism();
    let mut images = Map::new();
    for b in sig.blades() {
        images.insert(sig.blade_name(b), json!(r.image_text(b)?));
    }
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!([sig.blade_name(v.left), sig.blade_name(v.right)]))
        .collect();
    let mut out = json!({
        "signature": sig.to_string(),
        "target": target.to_string(),
        "verdict": if report.passed() { "pass" } else { "fail" },
        "pairs_checked": report.pairs_checked,
        "violations": violations,
        "census": {
            "expected": { "plus": report.census_expected.0, "minus": report.census_expected.1 },
            "observed": {
                "plus": report.census_observed.0,
                "minus": report.census_observed.1,
                "other": report.census_observed.2,
            },
        },
        "images": images,
    });
    if let Some(text) = element {
        let a = Multivector::<Rational>::parse(sig, text)?;
        out["element"] = json!({ "multivector": a.to_string(), "matrix": r.represent_text(&a)? });
    }
    Ok(out)
}

fn classification_json<S: Scalar>(c: &NullClassification<S>) -> Value {
    let witness = match &c.witness {
        Witness::Interval(x) => json!({ "interval": scalar_json(x) }),
        Witness::Field { norm_gap, dot } => json!({ "norm_gap": scalar_json(norm_gap), "dot": scalar_json(dot) }),
        Witness::Determinant(d) => json!({ "determinant": scalar_json(d) }),
    };
    json!({ "kind": c.kind.name(), "witness": witness, "determinant": scalar_json(&c.determinant) })
}

/// Either the inverse multivector or `{"singular": {...}}`. The flag is true
/// for singular input.
pub fn invert<S: Scalar + Entry<S>>(mv: &Value, domain: &ScalarDomain) -> Result<(Value, bool)> {
    let a: Multivector<S> = parse_multivector(mv)?;
    Ok(match invert_mv(&a, domain)? {
        Inversion::Invertible(w) => (multivector_json(&w), false),
        Inversion::Singular(c) => (json!({ "singular": classification_json(&c) }), true),
    })
}
