//! Externally supplied class records, one JSON object per line:
//!
//! ```text
//! {"group_label": "PSL3(3)", "class_label": "4A", "element_order": 4, "class_size": "702"}
//! ```
//!
//! `class_size` may be a decimal string of any length or a JSON integer.

use serde_json::{Map, Value};
use vanishing_core::numtheory::factorize;
use vanishing_core::{CheckOutcome, Error, EvidenceValue, Verdict};

pub const FIELDS: [&str; 4] = ["group_label", "class_label", "element_order", "class_size"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExternalClassRecord {
    pub group_label: String,
    pub class_label: String,
    pub element_order: u64,
    /// Decimal digits, no sign or leading zeros.
    pub class_size: String,
}

/// Parse one line. With `strict`, fields outside the four known ones are rejected.
pub fn parse_record(line: &str, strict: bool) -> Result<ExternalClassRecord, String> {
    let obj: Map<String, Value> = match serde_json::from_str(line) {
        Ok(Value::Object(obj)) => obj,
        Ok(_) => return Err("record is not a JSON object".into()),
        Err(e) => return Err(format!("invalid JSON: {e}")),
    };
    if strict {
        if let Some(extra) = obj.keys().find(|k| !FIELDS.contains(&k.as_str())) {
            return Err(format!("unknown field {extra:?}"));
        }
    }
    let label = |key: &str| -> Result<String, String> {
        match obj.get(key) {
            Some(Value::String(s)) if !s.trim().is_empty() => Ok(s.trim().to_string()),
            Some(Value::String(_)) => Err(format!("{key} is empty")),
            Some(_) => Err(format!("{key} must be a string")),
            None => Err(format!("missing field {key}")),
        }
    };
    let group_label = label("group_label")?;
    let class_label = label("class_label")?;
    let element_order = match obj.get("element_order") {
        Some(Value::Number(n)) => n.as_u64().filter(|&v| v >= 1).ok_or("element_order must be an integer >= 1")?,
        Some(_) => return Err("element_order must be an integer".into()),
        None => return Err("missing field element_order".into()),
    };
    let raw_size = match obj.get("class_size") {
        Some(Value::String(s)) => s.trim().to_string(),
        Some(Value::Number(n)) if n.is_u64() => n.to_string(),
        Some(_) => return Err("class_size must be a decimal string or a non-negative integer".into()),
        None => return Err("missing field class_size".into()),
    };
    if raw_size.is_empty() || !raw_size.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("class_size {raw_size:?} is not a decimal integer"));
    }
    let class_size = raw_size.trim_start_matches('0').to_string();
    if class_size.is_empty() {
        return Err("class_size must be >= 1".into());
    }
    Ok(ExternalClassRecord { group_label, class_label, element_order, class_size })
}

/// Pass iff the element order is a prime power above 1 and the class size
/// has at least three distinct prime factors. Sizes outside the factorizer's
/// reach are unverifiable, not failed.
pub fn check_record(r: &ExternalClassRecord) -> CheckOutcome {
    let label = format!("{} {}", r.group_label, r.class_label);
    let base = |verdict| {
        CheckOutcome::new(label.clone(), verdict)
            .with("group_label", EvidenceValue::Text(r.group_label.clone()))
            .with("class_label", EvidenceValue::Text(r.class_label.clone()))
            .with("element_order", EvidenceValue::Int(r.element_order as u128))
            .with("class_size", EvidenceValue::Text(r.class_size.clone()))
    };
    let unverifiable = |why: String| base(Verdict::Unverifiable).with("reason", EvidenceValue::Text(why));
    let Ok(size) = r.class_size.parse::<u128>() else {
        return unverifiable(format!("class size has {} digits, beyond 128-bit width", r.class_size.len()));
    };
    let order = factorize(r.element_order as u128).expect("element order is positive and below 2^64");
    let factorization = match factorize(size) {
        Ok(f) => f,
        Err(Error::Resource(why)) => return unverifiable(why),
        Err(e) => return unverifiable(e.to_string()),
    };
    let prime_power = order.is_prime_power();
    let primes = factorization.distinct_prime_count();
    let verdict = if prime_power && primes >= 3 { Verdict::Pass } else { Verdict::Fail };
    let mut out = base(verdict)
        .with("order_is_prime_power", EvidenceValue::Bool(prime_power))
        .with("factorization", EvidenceValue::Factorization(factorization))
        .with("distinct_primes", EvidenceValue::Int(primes as u128));
    if !prime_power {
        out =
            out.with("reason", EvidenceValue::Text(format!("element order {} is not a prime power", r.element_order)));
    } else if primes < 3 {
        out = out.with("reason", EvidenceValue::Text(format!("class size has {primes} distinct primes")));
    }
    out
}

/// Outcome for a line that could not be parsed in lenient mode.
pub fn malformed_outcome(line: usize, message: &str) -> CheckOutcome {
    CheckOutcome::new(format!("line {line}"), Verdict::Fail)
        .with("line", EvidenceValue::Int(line as u128))
        .with("reason", EvidenceValue::Text(format!("malformed record: {message}")))
}
