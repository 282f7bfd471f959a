//! JSON wire formats for order specs, assignments, segments and
//! reports.
//!
//! Points serialize as two-element arrays `[x, y]` everywhere.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use cdseg_core::{
    AgreementSmoothnessReport, BadPairFinding, Certificate, DigitalSegment, EquivalenceReport,
    HausdorffResult, OrderAssignment, OrderSpec, Point, ProfileEntry, PropertyReport,
    SmoothExhibit, SmoothRegionReport, SmoothVerdict, Violation,
};

/// A malformed or invalid wire payload.
#[derive(Debug)]
pub enum FormatError {
    /// Not parseable as the expected JSON shape.
    Parse(serde_json::Error),
    /// Parseable, but the payload violates a domain invariant.
    Invalid(cdseg_core::Error),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Parse(e) => write!(f, "malformed JSON: {e}"),
            FormatError::Invalid(e) => write!(f, "invalid payload: {e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Parse(e)
    }
}

impl From<cdseg_core::Error> for FormatError {
    fn from(e: cdseg_core::Error) -> Self {
        FormatError::Invalid(e)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum OrderSpecJson {
    Natural,
    WaterlineBelow {
        anchor_x: i64,
    },
    Explicit {
        lo: i64,
        hi: i64,
        ascending: Vec<i64>,
    },
}

impl OrderSpecJson {
    pub fn to_spec(&self) -> Result<OrderSpec, FormatError> {
        Ok(match self {
            OrderSpecJson::Natural => OrderSpec::Natural,
            OrderSpecJson::WaterlineBelow { anchor_x } => OrderSpec::WaterlineBelow {
                anchor_x: *anchor_x,
            },
            OrderSpecJson::Explicit { lo, hi, ascending } => {
                OrderSpec::explicit(*lo, *hi, ascending.clone())?
            }
        })
    }

    pub fn from_spec(spec: &OrderSpec) -> Self {
        match spec {
            OrderSpec::Natural => OrderSpecJson::Natural,
            OrderSpec::WaterlineBelow { anchor_x } => OrderSpecJson::WaterlineBelow {
                anchor_x: *anchor_x,
            },
            OrderSpec::ExplicitWindow { lo, hi, ascending } => OrderSpecJson::Explicit {
                lo: *lo,
                hi: *hi,
                ascending: ascending.clone(),
            },
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct TableEntryJson {
    pub point: (i64, i64),
    pub spec1: OrderSpecJson,
    pub spec2: OrderSpecJson,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AssignmentJson {
    Uniform {
        spec1: OrderSpecJson,
        spec2: OrderSpecJson,
    },
    Waterline,
    Table {
        default: (OrderSpecJson, OrderSpecJson),
        entries: Vec<TableEntryJson>,
    },
}

impl AssignmentJson {
    pub fn to_assignment(&self) -> Result<OrderAssignment, FormatError> {
        Ok(match self {
            AssignmentJson::Uniform { spec1, spec2 } => OrderAssignment::Uniform {
                spec1: spec1.to_spec()?,
                spec2: spec2.to_spec()?,
            },
            AssignmentJson::Waterline => OrderAssignment::Waterline,
            AssignmentJson::Table { default, entries } => {
                let mut map = BTreeMap::new();
                for entry in entries {
                    let point = Point::new(entry.point.0, entry.point.1);
                    map.insert(point, (entry.spec1.to_spec()?, entry.spec2.to_spec()?));
                }
                OrderAssignment::Table {
                    entries: map,
                    default: (default.0.to_spec()?, default.1.to_spec()?),
                }
            }
        })
    }
}

pub fn order_spec_from_json(s: &str) -> Result<OrderSpec, FormatError> {
    serde_json::from_str::<OrderSpecJson>(s)?.to_spec()
}

pub fn assignment_from_json(s: &str) -> Result<OrderAssignment, FormatError> {
    serde_json::from_str::<AssignmentJson>(s)?.to_assignment()
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct SegmentJson {
    pub points: Vec<(i64, i64)>,
}

pub fn segment_to_json(seg: &DigitalSegment) -> String {
    let payload = SegmentJson {
        points: seg.points().iter().map(|p| (p.x, p.y)).collect(),
    };
    serde_json::to_string(&payload).expect("segment serialization is infallible")
}

pub fn segment_from_json(s: &str) -> Result<DigitalSegment, FormatError> {
    let payload: SegmentJson = serde_json::from_str(s)?;
    let points: Vec<Point> = payload
        .points
        .iter()
        .map(|&(x, y)| Point::new(x, y))
        .collect();
    DigitalSegment::new(points).map_err(|defect| FormatError::Invalid(defect.into()))
}

/// Accepts a single segment object, an array of them, or one object per
/// line.
pub fn segments_from_json(s: &str) -> Result<Vec<DigitalSegment>, FormatError> {
    let trimmed = s.trim();
    if trimmed.starts_with('[') {
        let payloads: Vec<SegmentJson> = serde_json::from_str(trimmed)?;
        return payloads
            .into_iter()
            .map(|p| {
                let points: Vec<Point> = p.points.iter().map(|&(x, y)| Point::new(x, y)).collect();
                DigitalSegment::new(points).map_err(|d| FormatError::Invalid(d.into()))
            })
            .collect();
    }
    let mut out = Vec::new();
    for line in trimmed.lines() {
        let line = line.trim();
        if !line.is_empty() {
            out.push(segment_from_json(line)?);
        }
    }
    Ok(out)
}

fn point_value(p: Point) -> Value {
    json!([p.x, p.y])
}

fn violation_value(v: &Violation) -> Value {
    let points: Vec<Value> = v.points.iter().map(|p| point_value(*p)).collect();
    let mut obj = json!({
        "property": v.property.name(),
        "points": points,
    });
    let map = obj.as_object_mut().expect("object literal");
    match &v.certificate {
        Certificate::Witness(w) => {
            map.insert(
                "witness".into(),
                json!({ "t1": point_value(w.t1), "t2": point_value(w.t2) }),
            );
        }
        Certificate::PathDefect(d) => {
            map.insert("defect".into(), json!(d.to_string()));
        }
        Certificate::SymmetryMismatch => {
            map.insert("defect".into(), json!("symmetry mismatch"));
        }
        Certificate::ProlongationFailure => {
            map.insert("defect".into(), json!("prolongation failure"));
        }
    }
    obj
}

pub fn report_to_json(report: &PropertyReport) -> Value {
    let checked: serde_json::Map<String, Value> = report
        .checked
        .iter()
        .map(|(p, n)| (p.name().to_string(), json!(n)))
        .collect();
    let violations: Vec<Value> = report.violations.iter().map(violation_value).collect();
    json!({ "checked": checked, "violations": violations })
}

pub fn bad_pair_to_json(finding: &BadPairFinding) -> Value {
    json!({
        "a": finding.a,
        "b": finding.b,
        "end_sum": finding.end_sum,
        "line_pos": finding.line_pos,
        "p3": point_value(finding.p3),
    })
}

pub fn equivalence_to_json(report: &EquivalenceReport) -> Value {
    json!({
        "bad_pair": report.bad_pair.as_ref().map(bad_pair_to_json),
        "conflict": report.conflict.as_ref().map(|c| json!({
            "u": c.u,
            "v": c.v,
            "p3": point_value(c.p3),
        })),
        "witness": report.witness.as_ref().map(|w| json!({
            "t1": point_value(w.witness.t1),
            "t2": point_value(w.witness.t2),
            "segment1": [point_value(w.endpoints1.0), point_value(w.endpoints1.1)],
            "segment2": [point_value(w.endpoints2.0), point_value(w.endpoints2.1)],
        })),
        "consistent": report.consistent,
    })
}

fn entry_value(e: &ProfileEntry) -> Value {
    json!({ "sum": e.sum, "r": point_value(e.r), "dist": e.dist })
}

pub fn profile_to_json(entries: &[ProfileEntry]) -> Value {
    json!({ "entries": entries.iter().map(entry_value).collect::<Vec<_>>() })
}

pub fn pair_verdict_to_json(verdict: &SmoothVerdict, entries: &[ProfileEntry]) -> Value {
    json!({
        "smooth": verdict.smooth,
        "profile": profile_to_json(entries),
        "violating_triple": verdict
            .violating_triple
            .as_ref()
            .map(|t| t.iter().map(entry_value).collect::<Vec<_>>()),
    })
}

fn exhibit_value(e: &SmoothExhibit) -> Value {
    json!({
        "endpoints1": [point_value(e.endpoints1.0), point_value(e.endpoints1.1)],
        "endpoints2": [point_value(e.endpoints2.0), point_value(e.endpoints2.1)],
        "seg1": serde_json::from_str::<Value>(&segment_to_json(&e.seg1)).expect("round trip"),
        "seg2": serde_json::from_str::<Value>(&segment_to_json(&e.seg2)).expect("round trip"),
        "triple": e.triple.iter().map(entry_value).collect::<Vec<_>>(),
    })
}

pub fn smooth_region_to_json(report: &SmoothRegionReport) -> Value {
    json!({
        "smooth": report.smooth,
        "pairs_checked": report.pairs_checked,
        "exhibit": report.exhibit.as_ref().map(exhibit_value),
    })
}

pub fn agreement_smoothness_to_json(report: &AgreementSmoothnessReport) -> Value {
    json!({
        "agreement_all": report.agreement_all,
        "smooth_all": report.smooth_all,
        "consistent": report.consistent,
        "disagreement": report.disagreement.as_ref().map(|d| json!({
            "p1": point_value(d.p1),
            "p2": point_value(d.p2),
            "a": d.a,
            "b": d.b,
            "quadrant": d.quadrant,
        })),
        "exhibit": report.exhibit.as_ref().map(exhibit_value),
    })
}

/// One CSV row of a Hausdorff measurement, matching the header
/// `n,value,error_bound`.
pub fn hausdorff_csv_row(n: u64, result: &HausdorffResult) -> String {
    format!("{n},{},{}", result.value, result.error_bound)
}
