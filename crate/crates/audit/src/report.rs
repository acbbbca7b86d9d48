//! Audit reports and their two renderings.
//!
//! Records output is one JSON object per line: a header, one line per
//! outcome, then a summary. Object keys are sorted, sizes are decimal
//! strings and factorizations are `[[prime, exponent], ...]`, so identical
//! inputs give identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Write};

use num_bigint::BigUint;
use serde_json::{json, Map, Value};
use vanishing_core::witnesses::WitnessReport;
use vanishing_core::{CheckOutcome, EvidenceValue, PrimeFactorization, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Check(CheckOutcome),
    Witness(Box<WitnessReport>),
}

impl Outcome {
    pub fn key(&self) -> String {
        match self {
            Outcome::Check(c) => c.label.clone(),
            Outcome::Witness(w) => format!("A_{}", w.n),
        }
    }

    pub fn verdict(&self) -> Verdict {
        match self {
            Outcome::Check(c) => c.verdict,
            Outcome::Witness(w) => w.overall(),
        }
    }

    pub fn as_check(&self) -> Option<&CheckOutcome> {
        match self {
            Outcome::Check(c) => Some(c),
            Outcome::Witness(_) => None,
        }
    }

    pub fn as_witness(&self) -> Option<&WitnessReport> {
        match self {
            Outcome::Witness(w) => Some(w),
            Outcome::Check(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
    pub unverifiable: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub outcomes: Vec<Outcome>,
    /// Whether flagged outcomes are accepted as known exceptions.
    pub allow_known_exceptions: bool,
}

impl AuditReport {
    pub fn new(command: &str, allow_known_exceptions: bool) -> Self {
        AuditReport {
            command: command.into(),
            parameters: BTreeMap::new(),
            outcomes: Vec::new(),
            allow_known_exceptions,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    /// Verdict as counted: flagged turns into fail when exceptions are not allowed.
    pub fn effective(&self, outcome: &Outcome) -> Verdict {
        match outcome.verdict() {
            Verdict::Flagged if !self.allow_known_exceptions => Verdict::Fail,
            v => v,
        }
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for o in &self.outcomes {
            match self.effective(o) {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Flagged => s.flagged += 1,
                Verdict::Unverifiable => s.unverifiable += 1,
                Verdict::Skipped => s.skipped += 1,
            }
        }
        s
    }

    /// 0 when nothing failed; unverifiable outcomes count as not passed.
    pub fn exit_code(&self) -> u8 {
        let s = self.summary();
        if s.fail + s.unverifiable == 0 {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Records => self.render_records(),
        }
    }

    pub fn write_to(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        out.write_all(self.render(format).as_bytes())
    }

    fn render_records(&self) -> String {
        let mut out = String::new();
        let header = json!({
            "record": "header",
            "command": self.command,
            "parameters": self.parameters,
            "allow_known_exceptions": self.allow_known_exceptions,
        });
        push_line(&mut out, &header);
        for o in &self.outcomes {
            let mut obj = match o {
                Outcome::Check(c) => check_json(c),
                Outcome::Witness(w) => witness_json(w),
            };
            obj.insert("record".into(), json!("outcome"));
            obj.insert("key".into(), json!(o.key()));
            obj.insert("verdict".into(), json!(self.effective(o).as_str()));
            push_line(&mut out, &Value::Object(obj));
        }
        let s = self.summary();
        push_line(
            &mut out,
            &json!({
                "record": "summary",
                "pass": s.pass,
                "fail": s.fail,
                "flagged": s.flagged,
                "unverifiable": s.unverifiable,
                "skipped": s.skipped,
                "exit_code": self.exit_code(),
            }),
        );
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "# {} {}", self.command, params.join(" "));
        let width = self.outcomes.iter().map(|o| o.key().len()).max().unwrap_or(0);
        for o in &self.outcomes {
            let detail = match o {
                Outcome::Check(c) => check_text(c),
                Outcome::Witness(w) => witness_text(w),
            };
            let _ = writeln!(out, "{:<12} {:<width$}  {detail}", self.effective(o).as_str(), o.key());
            if let Outcome::Witness(w) = o {
                for note in &w.notes {
                    let _ = writeln!(out, "{:<12} {:<width$}  note: {note}", "", "");
                }
            }
        }
        let s = self.summary();
        let _ = writeln!(
            out,
            "# pass={} fail={} flagged={} unverifiable={} skipped={} exit={}",
            s.pass,
            s.fail,
            s.flagged,
            s.unverifiable,
            s.skipped,
            self.exit_code()
        );
        out
    }
}

fn push_line(out: &mut String, value: &Value) {
    out.push_str(&serde_json::to_string(value).expect("JSON values always serialize"));
    out.push('\n');
}

/// Exact decimal expansion of a factorization.
pub fn decimal(f: &PrimeFactorization) -> String {
    f.pairs().iter().fold(BigUint::from(1u32), |acc, &(p, e)| acc * BigUint::from(p).pow(e)).to_string()
}

pub fn factorization_json(f: &PrimeFactorization) -> Value {
    Value::Array(f.pairs().iter().map(|&(p, e)| json!([p, e])).collect())
}

fn int_json(v: u128) -> Value {
    match u64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

fn evidence_json(value: &EvidenceValue) -> Value {
    match value {
        EvidenceValue::Int(v) => int_json(*v),
        EvidenceValue::Signed(v) => match i64::try_from(*v) {
            Ok(small) => json!(small),
            Err(_) => json!(v.to_string()),
        },
        EvidenceValue::Bool(b) => json!(b),
        EvidenceValue::Factorization(f) => json!({ "factors": factorization_json(f), "decimal": decimal(f) }),
        EvidenceValue::Primes(ps) => json!(ps),
        EvidenceValue::Partition(p) => json!(p.compressed().to_string()),
        EvidenceValue::Text(t) => json!(t),
    }
}

fn evidence_text(value: &EvidenceValue) -> String {
    match value {
        EvidenceValue::Int(v) => v.to_string(),
        EvidenceValue::Signed(v) => v.to_string(),
        EvidenceValue::Bool(b) => b.to_string(),
        EvidenceValue::Factorization(f) => format!("{} = {}", decimal(f), f),
        EvidenceValue::Primes(ps) => format!("{ps:?}"),
        EvidenceValue::Partition(p) => p.compressed().to_string(),
        EvidenceValue::Text(t) => t.clone(),
    }
}

fn check_json(c: &CheckOutcome) -> Map<String, Value> {
    let evidence: Map<String, Value> =
        c.evidence.iter().map(|e| (e.key.to_string(), evidence_json(&e.value))).collect();
    let mut obj = Map::new();
    obj.insert("evidence".into(), Value::Object(evidence));
    obj
}

fn check_text(c: &CheckOutcome) -> String {
    c.evidence.iter().map(|e| format!("{}={}", e.key, evidence_text(&e.value))).collect::<Vec<_>>().join("  ")
}

fn witness_json(w: &WitnessReport) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(w.n));
    obj.insert(
        "decomposition".into(),
        w.decomposition.map_or(Value::Null, |d| json!({ "p": d.p, "k": d.k, "r": d.r })),
    );
    obj.insert("cycle_type".into(), json!(w.cycle_type.to_string()));
    obj.insert("element_order".into(), factorization_json(&w.element_order));
    obj.insert("class_size".into(), json!(decimal(&w.class_size)));
    obj.insert("class_size_factors".into(), factorization_json(&w.class_size));
    obj.insert("required_primes".into(), json!(w.required_primes));
    obj.insert("prime_sets_equal".into(), json!(w.prime_sets_equal()));
    obj.insert("sigma".into(), w.sigma.as_ref().map_or(Value::Null, |s| json!(s.compressed().to_string())));
    obj.insert("certificate_row".into(), w.certificate_row.map_or(Value::Null, |r| json!(r.as_str())));
    obj.insert("mn_value".into(), w.mn_value.map_or(Value::Null, |v| json!(v.get().to_string())));
    obj.insert("closed_form_branch".into(), w.closed_form_branch.map_or(Value::Null, |b| json!(b.as_str())));
    let claims: Vec<Value> = w
        .verdicts
        .iter()
        .map(|v| {
            json!({
                "claim": v.claim.code().to_string(),
                "name": v.claim.as_str(),
                "verdict": v.verdict.as_str(),
                "detail": v.detail,
            })
        })
        .collect();
    obj.insert("claims".into(), json!(claims));
    obj.insert("notes".into(), json!(w.notes));
    obj
}

fn witness_text(w: &WitnessReport) -> String {
    let mut parts = vec![format!("x={}", w.cycle_type)];
    if let Some(d) = w.decomposition {
        parts.push(format!("n={}*{}^2+{}", d.k, d.p, d.r));
    }
    parts.push(format!("|x^A|={}", w.class_size));
    if let Some(s) = &w.sigma {
        parts.push(format!("sigma={}", s.compressed()));
    }
    if let Some(v) = w.mn_value {
        parts.push(format!("chi={v}"));
    }
    let claims: String = w
        .verdicts
        .iter()
        .map(|v| {
            let mark = match v.verdict {
                Verdict::Pass => '+',
                Verdict::Fail => 'x',
                Verdict::Flagged => '!',
                Verdict::Unverifiable => '?',
                Verdict::Skipped => '-',
            };
            format!("{}{mark}", v.claim.code())
        })
        .collect::<Vec<_>>()
        .join(" ");
    parts.push(format!("[{claims}]"));
    parts.join("  ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use vanishing_core::numtheory::factorize;

    #[test]
    fn decimal_expands_past_u128() {
        let f = factorize(1 << 100).unwrap().pow(2);
        assert_eq!(decimal(&f), BigUint::from(2u32).pow(200).to_string());
        assert_eq!(decimal(&PrimeFactorization::one()), "1");
    }

    #[test]
    fn flagged_counts_as_fail_without_allow_list() {
        let flagged = Outcome::Check(CheckOutcome::new("x", Verdict::Flagged));
        let mut r = AuditReport::new("t", true);
        r.outcomes.push(flagged.clone());
        assert_eq!((r.summary().flagged, r.exit_code()), (1, 0));
        r.allow_known_exceptions = false;
        assert_eq!((r.summary().fail, r.exit_code()), (1, 1));
    }

    #[test]
    fn records_have_header_and_summary() {
        let mut r = AuditReport::new("t", true).param("a", 1);
        r.outcomes.push(Outcome::Check(CheckOutcome::new("c", Verdict::Pass).with("v", EvidenceValue::Int(u128::MAX))));
        let text = r.render(Format::Records);
        let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0]["parameters"]["a"], "1");
        assert_eq!(lines[1]["evidence"]["v"], u128::MAX.to_string());
        assert_eq!(lines[2]["pass"], 1);
    }
}
