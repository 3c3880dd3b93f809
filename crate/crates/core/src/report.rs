//! Combined analysis of one code: N, K by two routes, distance interval,
//! theoretical bounds and logical operators.

use std::time::Instant;

use serde::Serialize;

use crate::catalog::AnyCode;
use crate::construct::{HyperbicycleSpec, Provenance};
use crate::distance::{
    classical_inputs, css_distance, logical_operators, noncss_distance, noncss_logical_operators,
    theoretical_bounds, BoundsReport, Dist, DistanceOptions, DistanceResult, Interval,
};
use crate::error::Result;
use crate::symmetry::{count_logical_qubits, noncss_k, KReport};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub distance: DistanceOptions,
    /// Skip the distance search (bounds are still computed).
    pub skip_distance: bool,
    /// Classical codes up to this dimension are enumerated in full.
    pub classical_enum_cap: usize,
    pub bounds: bool,
    pub logicals: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            distance: DistanceOptions::default(),
            skip_distance: false,
            classical_enum_cap: crate::classical::DEFAULT_ENUM_CAP,
            bounds: true,
            logicals: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LogicalSummary {
    pub k: usize,
    pub gram_identity: bool,
    pub closed_form_used: bool,
    pub repetition_verified: Option<bool>,
    pub region: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Timings {
    pub k_ms: u128,
    pub distance_ms: u128,
    pub bounds_ms: u128,
    pub logical_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub seed: u64,
    pub provenance: Provenance,
    pub css: bool,
    pub n: usize,
    pub k: usize,
    pub k_report: Option<KReport>,
    /// `N - rank H` versus the class count, for non-CSS hyperbicycle codes.
    pub k_classes: Option<usize>,
    /// `"computed"`, `"skipped"` or `"not-applicable"` (K = 0).
    pub distance_status: &'static str,
    pub distance: Option<DistanceResult>,
    pub bounds: Option<BoundsReport>,
    /// Search interval intersected with the theoretical bounds.
    pub combined: Option<Interval>,
    pub logical: Option<LogicalSummary>,
    pub checks: Vec<Check>,
    pub timings: Timings,
}

impl AnalysisReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    /// Same report with timings zeroed, for comparisons.
    pub fn without_timings(&self) -> Self {
        Self {
            timings: Timings::default(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn ms(t: Instant) -> u128 {
    t.elapsed().as_millis()
}

pub fn analyze(code: &AnyCode, spec: Option<&HyperbicycleSpec>, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut checks = Vec::new();
    let mut timings = Timings::default();
    let (css, provenance) = match code {
        AnyCode::Css(c) => (true, c.provenance.clone()),
        AnyCode::NonCss(c) => (false, c.provenance.clone()),
    };
    let k = code.k();

    let t = Instant::now();
    let (k_report, k_classes) = match (code, spec) {
        (AnyCode::Css(c), spec) => {
            let rep = count_logical_qubits(c, spec)?;
            if spec.is_some() {
                checks.push(Check {
                    name: "K by rank equals K by symmetry classes".into(),
                    ok: !rep.mismatch,
                });
            }
            (Some(rep), None)
        }
        (AnyCode::NonCss(c), Some(spec)) => {
            let kc = noncss_k(c, spec);
            checks.push(Check {
                name: "K by rank equals K by symmetry classes".into(),
                ok: kc.is_ok(),
            });
            (None, kc.ok())
        }
        (AnyCode::NonCss(_), None) => (None, None),
    };
    timings.k_ms = ms(t);

    let t = Instant::now();
    let (status, distance) = if k == 0 {
        ("not-applicable", None)
    } else if opts.skip_distance {
        ("skipped", None)
    } else {
        let d = match code {
            AnyCode::Css(c) => css_distance(c, &opts.distance),
            AnyCode::NonCss(c) => noncss_distance(c, &opts.distance),
        };
        checks.push(Check {
            name: "exact flag matches interval".into(),
            ok: d.exact == (d.d_lo == d.d_hi) && d.d_lo <= d.d_hi,
        });
        ("computed", Some(d))
    };
    timings.distance_ms = ms(t);

    let t = Instant::now();
    let bounds = match spec {
        Some(spec) if k > 0 && opts.bounds => {
            let inputs = classical_inputs(spec, opts.classical_enum_cap, &opts.distance.search)?;
            Some(theoretical_bounds(spec, &inputs, css)?)
        }
        _ => None,
    };
    timings.bounds_ms = ms(t);

    let combined = match (&distance, &bounds) {
        (Some(d), Some(b)) => {
            checks.push(Check {
                name: "distance interval consistent with theoretical bounds".into(),
                ok: b.consistent_with(d.d_lo, d.d_hi),
            });
            Some(Interval::new(d.d_lo.max(Dist::Finite(b.lower)), d.d_hi.min(b.upper)))
        }
        (Some(d), None) => Some(Interval::new(d.d_lo, d.d_hi)),
        (None, Some(b)) => Some(Interval::new(Dist::Finite(b.lower), b.upper)),
        (None, None) => None,
    };

    let t = Instant::now();
    let logical = if opts.logicals && k > 0 {
        let summary = match code {
            AnyCode::Css(c) => {
                let ops = logical_operators(c, spec)?;
                LogicalSummary {
                    k: ops.k(),
                    gram_identity: ops.check(c),
                    closed_form_used: ops.closed_form_used,
                    repetition_verified: ops.repetition_verified,
                    region: ops.region,
                }
            }
            AnyCode::NonCss(c) => {
                let ops = noncss_logical_operators(c)?;
                LogicalSummary {
                    k: ops.k(),
                    gram_identity: ops.check(c),
                    closed_form_used: false,
                    repetition_verified: None,
                    region: Vec::new(),
                }
            }
        };
        checks.push(Check {
            name: "logical operators pair with identity Gram matrix".into(),
            ok: summary.gram_identity,
        });
        Some(summary)
    } else {
        None
    };
    timings.logical_ms = ms(t);

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION,
        seed: opts.distance.search.seed,
        provenance,
        css,
        n: code.n(),
        k,
        k_report,
        k_classes,
        distance_status: status,
        distance,
        bounds,
        combined,
        logical,
        checks,
        timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::find;
    use crate::construct::generalized_bicycle;
    use crate::poly::BinPoly;

    #[test]
    fn toric_report_is_consistent() {
        let b = find("toric-18").unwrap().build().unwrap();
        let r = analyze(&b.code, b.spec.as_ref(), &AnalyzeOptions::default()).unwrap();
        assert!(r.ok(), "{:?}", r.checks);
        assert_eq!(r.combined, Some(Interval::exact(Dist::Finite(3))));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schemaVersion"], 1);
        assert_eq!(v["distance"]["dHi"], 3);
    }

    #[test]
    fn empty_code_marks_distance_not_applicable() {
        let code = generalized_bicycle(&BinPoly::one(), &BinPoly::zero(), 3).unwrap();
        let r = analyze(&AnyCode::Css(code), None, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.distance_status, "not-applicable");
        assert!(r.distance.is_none() && r.logical.is_none() && r.ok());
    }
}
