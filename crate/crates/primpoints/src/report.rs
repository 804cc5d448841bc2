//! Plain-text and JSON renderings of results. Text reports are line based
//! with `key=value` tokens; JSON documents carry a `schema` tag.

use serde_json::{json, Value};

use primpoints_core::arith::text::{format_rational, to_literal};
use primpoints_core::arith::UniPoly;
use primpoints_core::hyperell::text::format_divisor;
use primpoints_core::hyperell::{CurveFunction, HyperCurve, RRSpace};
use primpoints_core::pipeline::{
    format_label, FiberReport, OrbitVerdict, Outcome, PrimitiveConstruction, Summary, TableVerdict,
    TwistCensusResult,
};

pub const SCHEMA_POINTS: &str = "primpoints.points/v1";
pub const SCHEMA_CLASSIFY: &str = "primpoints.classify/v1";
pub const SCHEMA_FIELD: &str = "primpoints.field/v1";
pub const SCHEMA_RR: &str = "primpoints.rr/v1";
pub const SCHEMA_CONSTRUCT: &str = "primpoints.construct/v1";
pub const SCHEMA_FIBER: &str = "primpoints.fiber/v1";
pub const SCHEMA_TWISTS: &str = "primpoints.twists/v1";
pub const SCHEMA_PERM: &str = "primpoints.perm/v1";

pub fn outcome_token(o: &Outcome) -> String {
    match o {
        Outcome::SkippedPositiveDim(r) => format!("skipped_positive_dim:{}", r.tag()),
        Outcome::Imprimitive { subfield_degree } => format!("imprimitive:{subfield_degree}"),
        o => o.name().to_string(),
    }
}

pub struct PointsHeader<'a> {
    pub label: &'a str,
    pub curve: &'a HyperCurve,
    pub degree: u64,
    pub group_order: u64,
}

pub fn points_text(h: &PointsHeader, verdicts: &[OrbitVerdict], s: &Summary) -> String {
    let mut out = format!(
        "curve={} genus={} degree={} group_order={}\n",
        h.label,
        h.curve.genus(),
        h.degree,
        h.group_order
    );
    for v in verdicts {
        out += &format!("a={} ell={} outcome={}", format_label(&v.label), v.ell, outcome_token(&v.outcome));
        if let Some(m) = &v.minpoly {
            out += &format!(" minpoly={}", to_literal(m));
        }
        out.push('\n');
    }
    out += &summary_text(s);
    out
}

pub fn summary_text(s: &Summary) -> String {
    format!(
        "classes={}\nskipped_positive_dim={}\nno_effective={}\nreducible_orbits={}\nimprimitive_orbits={}\nprimitive_orbits={}\n",
        s.classes, s.skipped_positive_dim, s.no_effective, s.reducible, s.imprimitive, s.primitive
    )
}

fn outcome_json(o: &Outcome) -> Value {
    match o {
        Outcome::SkippedPositiveDim(r) => json!({ "kind": o.name(), "reason": r.tag() }),
        Outcome::Imprimitive { subfield_degree } => json!({ "kind": o.name(), "subfield_degree": subfield_degree }),
        _ => json!({ "kind": o.name() }),
    }
}

pub fn points_json(h: &PointsHeader, verdicts: &[OrbitVerdict], s: &Summary) -> Value {
    let classes: Vec<Value> = verdicts
        .iter()
        .map(|v| {
            json!({
                "label": v.label,
                "ell": v.ell,
                "outcome": outcome_json(&v.outcome),
                "witness": v.witness.as_ref().map(format_divisor),
                "minpoly": v.minpoly.as_ref().map(to_literal),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA_POINTS,
        "curve": { "label": h.label, "f": to_literal(h.curve.f()), "genus": h.curve.genus() },
        "degree": h.degree,
        "group_order": h.group_order,
        "classes": classes,
        "summary": {
            "classes": s.classes,
            "skipped_positive_dim": s.skipped_positive_dim,
            "no_effective": s.no_effective,
            "reducible_orbits": s.reducible,
            "imprimitive_orbits": s.imprimitive,
            "primitive_orbits": s.primitive,
        },
    })
}

pub fn classify_json(verdicts: &[TableVerdict]) -> Value {
    let rows: Vec<Value> = verdicts
        .iter()
        .map(|v| json!({ "label": v.label, "finite_degrees": v.finite, "primitive_only_degrees": v.primitive_only }))
        .collect();
    json!({ "schema": SCHEMA_CLASSIFY, "rows": rows })
}

pub fn function_text(w: &CurveFunction) -> String {
    format!("u={} v={} den={}", to_literal(w.u()), to_literal(w.v()), to_literal(w.den()))
}

fn function_json(w: &CurveFunction) -> Value {
    json!({ "u": to_literal(w.u()), "v": to_literal(w.v()), "den": to_literal(w.den()) })
}

pub fn rr_text(s: &RRSpace) -> String {
    let mut out = format!("divisor={}\nell={}\n", format_divisor(&s.divisor), s.dim());
    for w in &s.basis {
        out += &format!("basis {}\n", function_text(w));
    }
    out
}

pub fn rr_json(s: &RRSpace) -> Value {
    json!({
        "schema": SCHEMA_RR,
        "divisor": format_divisor(&s.divisor),
        "ell": s.dim(),
        "basis": s.basis.iter().map(function_json).collect::<Vec<_>>(),
    })
}

pub fn construct_text(pc: &PrimitiveConstruction, field: &UniPoly) -> String {
    format!(
        "alpha={}\nf={}\nh={}\ngenus={}\nwitness={}\nwitness_field={}\n",
        format_rational(&pc.alpha),
        to_literal(&pc.f),
        to_literal(&pc.h),
        pc.curve.genus(),
        format_divisor(&primpoints_core::hyperell::Divisor::point(pc.witness.clone(), 1)),
        to_literal(field)
    )
}

pub fn construct_json(pc: &PrimitiveConstruction, field: &UniPoly) -> Value {
    json!({
        "schema": SCHEMA_CONSTRUCT,
        "alpha": format_rational(&pc.alpha),
        "f": to_literal(&pc.f),
        "h": to_literal(&pc.h),
        "genus": pc.curve.genus(),
        "witness": format_divisor(&primpoints_core::hyperell::Divisor::point(pc.witness.clone(), 1)),
        "witness_field": to_literal(field),
    })
}

pub fn primitive_count(reports: &[FiberReport]) -> usize {
    reports.iter().filter(|r| r.outcome == primpoints_core::pipeline::FiberOutcome::IrreduciblePrimitive).count()
}

pub fn fiber_text(pc: &PrimitiveConstruction, w: &CurveFunction, reports: &[FiberReport]) -> String {
    let mut out = format!("h={}\nfunction {}\n", to_literal(&pc.h), function_text(w));
    for r in reports {
        out += &format!("beta={} outcome={}", format_rational(&r.beta), r.outcome.name());
        if let Some(m) = &r.minpoly {
            out += &format!(" minpoly={}", to_literal(m));
        }
        out.push('\n');
    }
    out += &format!("samples={}\nprimitive_fraction={}/{}\n", reports.len(), primitive_count(reports), reports.len());
    out
}

pub fn fiber_json(pc: &PrimitiveConstruction, w: &CurveFunction, reports: &[FiberReport]) -> Value {
    let samples: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "beta": format_rational(&r.beta),
                "outcome": r.outcome.name(),
                "fiber": format_divisor(&r.fiber),
                "minpoly": r.minpoly.as_ref().map(to_literal),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA_FIBER,
        "h": to_literal(&pc.h),
        "function": function_json(w),
        "samples": samples,
        "primitive": primitive_count(reports),
        "total": reports.len(),
    })
}

pub fn twists_text(res: &TwistCensusResult) -> String {
    let mut out = format!("bound={} height={}\n", res.m, res.height_bound);
    for h in &res.hits {
        out += &format!("r={} x={} y={}\n", h.r, format_rational(&h.x), format_rational(&h.y));
    }
    out += &format!("hits={}\n", res.hits.len());
    out
}

pub fn twists_json(res: &TwistCensusResult) -> Value {
    let hits: Vec<Value> = res
        .hits
        .iter()
        .map(|h| json!({ "r": h.r, "x": format_rational(&h.x), "y": format_rational(&h.y) }))
        .collect();
    json!({ "schema": SCHEMA_TWISTS, "bound": res.m, "height": res.height_bound, "hits": hits })
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}
