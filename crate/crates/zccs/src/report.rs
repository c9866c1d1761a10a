use std::fmt::Write as _;

use serde::Serialize;
use zccs_core::{Params, SetKind, VerificationReport};

use crate::format::ParamsJson;

fn kind_name(kind: SetKind) -> &'static str {
    match kind {
        SetKind::Ccc => "CCC",
        SetKind::Zccs => "ZCCS",
        SetKind::Neither => "neither",
    }
}

fn params_json(p: Params) -> ParamsJson {
    ParamsJson { s: p.s, m: p.m, length: p.length, z: p.z }
}

#[derive(Debug, Serialize)]
pub struct ViolationJson {
    pub codes: [usize; 2],
    pub tau: isize,
    /// Exponent histogram of the correlation sum.
    pub counts: Vec<i64>,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub kind: &'static str,
    pub claimed: ParamsJson,
    pub measured: ParamsJson,
    pub peak: i64,
    pub optimal: bool,
    pub certified: bool,
    pub values_checked: usize,
    pub float_mismatches: usize,
    pub violation_count: usize,
    pub violations: Vec<ViolationJson>,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            kind: kind_name(r.kind),
            claimed: params_json(r.claimed),
            measured: params_json(r.measured),
            peak: r.peak,
            optimal: r.optimal,
            certified: r.certified,
            values_checked: r.values_checked,
            float_mismatches: r.float_mismatches,
            violation_count: r.violation_count,
            violations: r
                .violations
                .iter()
                .map(|v| {
                    let (re, im) = v.value.to_complex();
                    ViolationJson {
                        codes: [v.codes.0, v.codes.1],
                        tau: v.shift,
                        counts: v.value.counts().to_vec(),
                        re,
                        im,
                    }
                })
                .collect(),
        }
    }
}

pub fn to_json(report: &VerificationReport) -> String {
    let mut text = serde_json::to_string_pretty(&ReportJson::from(report)).expect("plain data serializes");
    text.push('\n');
    text
}

fn fmt_params(p: Params) -> String {
    format!("s={} m={} length={} z={}", p.s, p.m, p.length, p.z)
}

pub fn to_text(report: &VerificationReport) -> String {
    let m = report.measured;
    let mut out = String::new();
    let _ = writeln!(out, "kind:      {}", kind_name(report.kind));
    let _ = writeln!(out, "claimed:   {}", fmt_params(report.claimed));
    let _ = writeln!(out, "measured:  {}", fmt_params(m));
    let _ = writeln!(out, "peak:      {}", report.peak);
    if let Some(per_block) = m.length.checked_div(m.z) {
        let bound = m.m * per_block;
        let _ = writeln!(
            out,
            "optimal:   {} (s = {}, m * floor(length / z) = {})",
            report.optimal, m.s, bound
        );
    } else {
        let _ = writeln!(out, "optimal:   false (no zero correlation zone)");
    }
    let _ = writeln!(out, "checked:   {} correlation sums", report.values_checked);
    let _ = writeln!(out, "float cross-check mismatches: {}", report.float_mismatches);
    let _ = writeln!(out, "violations: {}", report.violation_count);
    for v in &report.violations {
        let (re, im) = v.value.to_complex();
        let _ = writeln!(
            out,
            "  codes ({}, {}) tau {}: {re:.6} {im:+.6}i counts {:?}",
            v.codes.0,
            v.codes.1,
            v.shift,
            v.value.counts()
        );
    }
    if report.violations.len() < report.violation_count {
        let _ = writeln!(out, "  ... {} more", report.violation_count - report.violations.len());
    }
    let _ = writeln!(out, "certified: {}", if report.certified { "yes" } else { "no" });
    out
}
