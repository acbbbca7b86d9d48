//! Structured pass/fail results shared by every audit.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::numtheory::PrimeFactorization;
use crate::partitions::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    /// A known, enumerated exception. Not a failure unless the caller says so.
    Flagged,
    Fail,
    /// The input could not be decided within the supported integer width.
    Unverifiable,
    /// The claim does not apply to this input.
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Flagged => "flagged",
            Verdict::Fail => "fail",
            Verdict::Unverifiable => "unverifiable",
            Verdict::Skipped => "skipped",
        }
    }

    /// Combine two verdicts, keeping the most severe.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        let rank = |v: Verdict| match v {
            Skipped => 0,
            Pass => 1,
            Flagged => 2,
            Unverifiable => 3,
            Fail => 4,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvidenceValue {
    Int(u128),
    Signed(i128),
    Bool(bool),
    Factorization(PrimeFactorization),
    Primes(Vec<u64>),
    Partition(Partition),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub key: &'static str,
    pub value: EvidenceValue,
}

/// Outcome of one check: a label, a verdict, and the values that justify it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub label: String,
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
}

impl CheckOutcome {
    pub fn new(label: impl Into<String>, verdict: Verdict) -> Self {
        CheckOutcome { label: label.into(), verdict, evidence: Vec::new() }
    }

    pub fn with(mut self, key: &'static str, value: EvidenceValue) -> Self {
        self.evidence.push(Evidence { key, value });
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn get(&self, key: &str) -> Option<&EvidenceValue> {
        self.evidence.iter().find(|e| e.key == key).map(|e| &e.value)
    }

    pub fn get_int(&self, key: &str) -> Option<u128> {
        match self.get(key)? {
            EvidenceValue::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub fn get_factorization(&self, key: &str) -> Option<&PrimeFactorization> {
        match self.get(key)? {
            EvidenceValue::Factorization(f) => Some(f),
            _ => None,
        }
    }
}
