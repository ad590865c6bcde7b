use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// One checked claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproductionReport {
    pub claim: String,
    /// `null` for values that are reported without a target.
    pub target: Value,
    pub computed: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub seconds: f64,
    /// `null` exactly when `target` is `null`.
    #[serde(rename = "match")]
    pub matched: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReproductionReport {
    /// Exact comparison of the serialized values.
    pub fn exact(claim: impl Into<String>, target: impl Serialize, computed: impl Serialize, seconds: f64) -> Self {
        let target = json!(target);
        let computed = json!(computed);
        ReproductionReport {
            claim: claim.into(),
            matched: Some(target == computed),
            target,
            computed,
            tolerance: None,
            seconds,
            note: None,
        }
    }

    /// Every computed real within `tol` of its target, position by position.
    pub fn approx(claim: impl Into<String>, target: &[f64], computed: &[f64], tol: f64, seconds: f64) -> Self {
        let ok = target.len() == computed.len() && target.iter().zip(computed).all(|(t, c)| (t - c).abs() <= tol);
        let pack = |v: &[f64]| if v.len() == 1 { json!(v[0]) } else { json!(v) };
        ReproductionReport {
            claim: claim.into(),
            target: pack(target),
            computed: pack(computed),
            tolerance: Some(tol),
            seconds,
            matched: Some(ok),
            note: None,
        }
    }

    pub fn untargeted(claim: impl Into<String>, computed: impl Serialize, seconds: f64) -> Self {
        ReproductionReport {
            claim: claim.into(),
            target: Value::Null,
            computed: json!(computed),
            tolerance: None,
            seconds,
            matched: None,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn failed(&self) -> bool {
        self.matched == Some(false)
    }
}

pub fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed().as_secs_f64())
}

pub fn all_match(reports: &[ReproductionReport]) -> bool {
    reports.iter().all(|r| !r.failed())
}

pub fn to_json(reports: &[ReproductionReport]) -> Value {
    json!({
        "version": SCHEMA_VERSION,
        "all_match": all_match(reports),
        "reports": reports,
    })
}

fn cell(v: &Value, width: usize) -> String {
    let s = match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.chars().count() > width {
        let cut: String = s.chars().take(width - 3).collect();
        format!("{cut}...")
    } else {
        s
    }
}

/// Fixed-width summary, one row per report.
pub fn render_table(reports: &[ReproductionReport]) -> String {
    let claim_w = reports.iter().map(|r| r.claim.len()).max().unwrap_or(5).max(5);
    let mut s = String::new();
    writeln!(s, "{:<claim_w$}  {:<28}  {:<28}  {:<6}  {:>9}", "claim", "target", "computed", "match", "seconds").unwrap();
    for r in reports {
        let flag = match r.matched {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "-",
        };
        writeln!(
            s,
            "{:<claim_w$}  {:<28}  {:<28}  {:<6}  {:>9.4}",
            r.claim,
            cell(&r.target, 28),
            cell(&r.computed, 28),
            flag,
            r.seconds
        )
        .unwrap();
        if let Some(note) = &r.note {
            writeln!(s, "{:<claim_w$}    note: {note}", "").unwrap();
        }
    }
    let failed = reports.iter().filter(|r| r.failed()).count();
    writeln!(s, "{} claims, {failed} mismatched", reports.len()).unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_and_approx() {
        assert_eq!(ReproductionReport::exact("a", 90, 90, 0.0).matched, Some(true));
        assert_eq!(ReproductionReport::exact("a", 90, 91, 0.0).matched, Some(false));
        let r = ReproductionReport::approx("b", &[2.0], &[2.0 + 1e-10], 1e-9, 0.0);
        assert_eq!(r.matched, Some(true));
        assert_eq!(r.target, json!(2.0));
        assert!(ReproductionReport::approx("b", &[2.0], &[2.1], 1e-9, 0.0).failed());
        assert!(ReproductionReport::approx("b", &[1.0, 2.0], &[1.0], 1e-9, 0.0).failed());
        let u = ReproductionReport::untargeted("c", [4, 4], 0.0);
        assert!(!u.failed() && u.matched.is_none() && u.target.is_null());
    }

    #[test]
    fn json_round_trip() {
        let r = ReproductionReport::exact("x", 1, 2, 0.5).with_note("n");
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["match"], json!(false));
        let back: ReproductionReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn table_marks_mismatch() {
        let t = render_table(&[ReproductionReport::exact("count", 1, 2, 0.0)]);
        assert!(t.contains("NO"));
        assert!(t.ends_with("1 claims, 1 mismatched\n"));
    }
}
