//! One function per CLI command. Each returns a finished [`AuditReport`];
//! argument problems come back as [`AuditError::Usage`].

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use vanishing_core::characters::{CharacterValue, MnEvaluator};
use vanishing_core::classes::CycleType;
use vanishing_core::numtheory::{check_nagura_interval_with, check_p_square_lemma_with, is_prime_power, PrimeSieve};
use vanishing_core::oracle::{brute_force_classes, cycle_type_counts, validate_character_table_with};
use vanishing_core::partitions::partitions_of;
use vanishing_core::witnesses::{
    builtin_spot_values, check_spot_value, lie_divisor_check, psl2_classify, psl2_outcome, verify_alternating_witness,
    LieFamily,
};
use vanishing_core::{CheckOutcome, EvidenceValue, Partition, Verdict};

use crate::ingest::{check_record, malformed_outcome, parse_record};
use crate::report::{AuditReport, Outcome};
use crate::{AuditError, Result};

/// Largest degree accepted by `verify-alternating`.
pub const ALTERNATING_MAX: u64 = 20_000;
/// Largest field size for the Lie family sweep; `q^9` must fit in 128 bits.
pub const LIE_Q_MAX: u64 = 16_384;
/// Largest field size for the `PSL2` sweep.
pub const PSL2_Q_MAX: u64 = 1 << 20;
/// Upper end of both arithmetic scans.
pub const ARITH_MAX: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    pub allow_known_exceptions: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { jobs: None, allow_known_exceptions: true }
    }
}

impl RunOptions {
    fn run<T: Send>(&self, work: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            None => Ok(work()),
            Some(0) => Err(AuditError::Usage("--jobs must be at least 1".into())),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| AuditError::Usage(format!("cannot start {n} workers: {e}")))?;
                Ok(pool.install(work))
            }
        }
    }
}

fn usage(msg: impl Into<String>) -> AuditError {
    AuditError::Usage(msg.into())
}

pub fn cmd_verify_alternating(n_min: u64, n_max: u64, opts: RunOptions) -> Result<AuditReport> {
    if n_min < 6 || n_min > n_max || n_max > ALTERNATING_MAX {
        return Err(usage(format!("need 6 <= n_min <= n_max <= {ALTERNATING_MAX}, got [{n_min}, {n_max}]")));
    }
    let reports = opts.run(|| (n_min..=n_max).into_par_iter().map(verify_alternating_witness).collect::<Vec<_>>())?;
    let mut report =
        AuditReport::new("verify-alternating", opts.allow_known_exceptions).param("n_min", n_min).param("n_max", n_max);
    for r in reports {
        report.outcomes.push(Outcome::Witness(Box::new(r?)));
    }
    Ok(report)
}

enum LieTarget {
    Family(LieFamily),
    Psl2,
    Spot,
}

fn parse_lie_filter(filter: &[String]) -> Result<(Vec<LieTarget>, bool)> {
    if filter.is_empty() {
        let mut all: Vec<LieTarget> = LieFamily::ALL.into_iter().map(LieTarget::Family).collect();
        all.extend([LieTarget::Psl2, LieTarget::Spot]);
        return Ok((all, false));
    }
    let mut out = Vec::new();
    for name in filter {
        let target = match name.trim() {
            n if n.eq_ignore_ascii_case("psl2") => LieTarget::Psl2,
            n if n.eq_ignore_ascii_case("spot") => LieTarget::Spot,
            n => LieTarget::Family(n.parse().map_err(|_| usage(format!("unknown family {n:?}")))?),
        };
        out.push(target);
    }
    Ok((out, true))
}

/// Divisor checks for each selected family at every admissible `q <= q_max`.
/// An empty filter selects every family, the `PSL2` sweep and the spot values.
pub fn cmd_verify_lie(filter: &[String], q_max: u64, opts: RunOptions) -> Result<AuditReport> {
    let (targets, explicit) = parse_lie_filter(filter)?;
    let has_families = targets.iter().any(|t| matches!(t, LieTarget::Family(_)));
    if has_families && q_max > LIE_Q_MAX {
        return Err(usage(format!("q_max {q_max} exceeds {LIE_Q_MAX} for Lie families")));
    }
    if q_max > PSL2_Q_MAX {
        return Err(usage(format!("q_max {q_max} exceeds {PSL2_Q_MAX}")));
    }
    let mut jobs: Vec<(LieFamily, u64)> = Vec::new();
    let mut psl2 = false;
    let mut spot = false;
    for t in &targets {
        match t {
            LieTarget::Family(f) => {
                let qs = f.admissible_up_to(q_max);
                if qs.is_empty() && explicit {
                    return Err(usage(format!("no admissible q <= {q_max} for {f} ({})", f.constraint())));
                }
                jobs.extend(qs.into_iter().map(|q| (*f, q)));
            }
            LieTarget::Psl2 => psl2 = true,
            LieTarget::Spot => spot = true,
        }
    }
    let prime_powers: Vec<u64> = if psl2 { (4..=q_max).filter(|&q| is_prime_power(q)).collect() } else { Vec::new() };
    let (family_results, psl2_results) = opts.run(|| {
        let families: Vec<_> = jobs.par_iter().map(|&(f, q)| lie_divisor_check(f, q)).collect();
        let classes: Vec<_> = prime_powers.par_iter().map(|&q| psl2_classify(q)).collect();
        (families, classes)
    })?;

    let mut report = AuditReport::new("verify-lie", opts.allow_known_exceptions)
        .param("q_max", q_max)
        .param("families", if explicit { filter.join(",") } else { "all".to_string() });
    for r in family_results {
        report.outcomes.push(Outcome::Check(r?));
    }
    let mut exceptions = std::collections::BTreeSet::new();
    for c in psl2_results {
        let c = c?;
        if c.distinct_primes() < 3 {
            if let Some(x) = c.exception {
                exceptions.insert(x);
            }
        }
        report.outcomes.push(Outcome::Check(psl2_outcome(&c, true)));
    }
    if psl2 {
        let canonical: Vec<u64> = exceptions.iter().map(|x| x.canonical_q()).collect();
        let names: Vec<&str> = exceptions.iter().map(|x| x.name()).collect();
        let summary = CheckOutcome::new("PSL2 exceptions", Verdict::Pass)
            .with("exception_q", EvidenceValue::Primes(canonical))
            .with("exception_groups", EvidenceValue::Text(names.join(",")));
        report.outcomes.push(Outcome::Check(summary));
    }
    if spot {
        for s in builtin_spot_values() {
            report.outcomes.push(Outcome::Check(check_spot_value(&s)?));
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ArithCheck {
    PSquareLemma,
    Nagura,
}

impl ArithCheck {
    pub fn name(self) -> &'static str {
        match self {
            ArithCheck::PSquareLemma => "p-square-lemma",
            ArithCheck::Nagura => "nagura",
        }
    }

    fn min(self) -> u64 {
        match self {
            ArithCheck::PSquareLemma => 9,
            ArithCheck::Nagura => 25,
        }
    }
}

/// Scan `[lo, hi]`. Emits one aggregate outcome followed by every failure.
pub fn cmd_verify_arith(which: ArithCheck, lo: u64, hi: u64, opts: RunOptions) -> Result<AuditReport> {
    if lo < which.min() || lo > hi || hi > ARITH_MAX {
        return Err(usage(format!(
            "{} needs {} <= from <= to <= {ARITH_MAX}, got [{lo}, {hi}]",
            which.name(),
            which.min()
        )));
    }
    // Nagura witnesses lie below 6x/5; the lemma only needs sqrt(hi).
    let limit = match which {
        ArithCheck::PSquareLemma => hi.isqrt() + 1,
        ArithCheck::Nagura => hi / 5 * 6 + 6,
    };
    let sieve = PrimeSieve::new(limit)?;
    let check = |n: u64| match which {
        ArithCheck::PSquareLemma => check_p_square_lemma_with(&sieve, n),
        ArithCheck::Nagura => check_nagura_interval_with(&sieve, n),
    };
    let failures = opts.run(|| {
        (lo..=hi)
            .into_par_iter()
            .filter_map(|n| match check(n) {
                Ok(o) if o.passed() => None,
                other => Some(other),
            })
            .collect::<Vec<_>>()
    })?;
    let failures = failures.into_iter().collect::<std::result::Result<Vec<_>, _>>()?;
    let verdict = if failures.is_empty() { Verdict::Pass } else { Verdict::Fail };
    let aggregate = CheckOutcome::new(format!("{} [{lo}, {hi}]", which.name()), verdict)
        .with("checked", EvidenceValue::Int((hi - lo + 1) as u128))
        .with("failures", EvidenceValue::Int(failures.len() as u128));
    let mut report = AuditReport::new("verify-arith", opts.allow_known_exceptions)
        .param("check", which.name())
        .param("from", lo)
        .param("to", hi);
    report.outcomes.push(Outcome::Check(aggregate));
    report.outcomes.extend(failures.into_iter().map(Outcome::Check));
    Ok(report)
}

pub fn cmd_char_eval(sigma: &str, lambda: &str, opts: RunOptions) -> Result<AuditReport> {
    let parse = |s: &str| s.parse::<Partition>().map_err(|e| usage(e.to_string()));
    let (sigma_p, lambda_p) = (parse(sigma)?, parse(lambda)?);
    if sigma_p.size() != lambda_p.size() {
        return Err(usage(format!(
            "{sigma_p} partitions {} but {lambda_p} partitions {}",
            sigma_p.size(),
            lambda_p.size()
        )));
    }
    let value = MnEvaluator::new().evaluate(&sigma_p, &lambda_p)?;
    let outcome = CheckOutcome::new(format!("chi{} at {}", sigma_p.compressed(), lambda_p.compressed()), Verdict::Pass)
        .with("value", EvidenceValue::Signed(value.get()))
        .with("self_conjugate", EvidenceValue::Bool(sigma_p.is_self_conjugate()));
    let mut report = AuditReport::new("char-eval", opts.allow_known_exceptions)
        .param("sigma", sigma_p.compressed())
        .param("lambda", lambda_p.compressed());
    report.outcomes.push(Outcome::Check(outcome));
    Ok(report)
}

pub fn cmd_selftest(opts: RunOptions) -> Result<AuditReport> {
    let mut ev = MnEvaluator::new();
    selftest_with(opts, |s, l| ev.evaluate(s, l))
}

/// Oracle checks with a caller-supplied character evaluator, so that a
/// deliberately broken evaluator can be shown to fail.
pub fn selftest_with<F>(opts: RunOptions, mut chi: F) -> Result<AuditReport>
where
    F: FnMut(&Partition, &Partition) -> vanishing_core::Result<CharacterValue>,
{
    let mut report = AuditReport::new("selftest", opts.allow_known_exceptions);
    for n in 1..=7usize {
        report.outcomes.push(Outcome::Check(class_formula_check(n, false)?));
        if n >= 2 {
            report.outcomes.push(Outcome::Check(class_formula_check(n, true)?));
        }
    }
    report.outcomes.push(Outcome::Check(cycle_count_check(8)?));
    for n in 2..=8 {
        report.outcomes.push(Outcome::Check(validate_character_table_with(n, &mut chi)?));
    }
    for s in builtin_spot_values() {
        report.outcomes.push(Outcome::Check(check_spot_value(&s)?));
    }
    Ok(report)
}

/// Formula class sizes against orbit enumeration in `S_n` or `A_n`.
fn class_formula_check(n: usize, alternating: bool) -> Result<CheckOutcome> {
    let group = if alternating { format!("A_{n}") } else { format!("S_{n}") };
    let classes = brute_force_classes(n, alternating)?;
    for class in &classes {
        let ct = &class.label.cycle_type;
        let formula = if alternating { ct.class_size_alt()? } else { ct.class_size_sym()? };
        let splits = alternating && ct.splits_in_alternating()?;
        if formula.to_u128() != Some(class.size as u128) || splits != class.label.split.is_some() {
            return Ok(CheckOutcome::new(format!("classes {group}"), Verdict::Fail)
                .with("class", EvidenceValue::Text(class.label.to_string()))
                .with("enumerated", EvidenceValue::Int(class.size as u128))
                .with("formula", EvidenceValue::Factorization(formula)));
        }
    }
    Ok(CheckOutcome::new(format!("classes {group}"), Verdict::Pass)
        .with("classes", EvidenceValue::Int(classes.len() as u128)))
}

fn cycle_count_check(n: usize) -> Result<CheckOutcome> {
    let counts = cycle_type_counts(n)?;
    for lambda in partitions_of(n)? {
        let ct = CycleType::new(lambda);
        let formula = ct.class_size_sym()?;
        let counted = counts.get(&ct).copied().unwrap_or(0);
        if formula.to_u128() != Some(counted as u128) {
            return Ok(CheckOutcome::new(format!("classes S_{n}"), Verdict::Fail)
                .with("class", EvidenceValue::Text(ct.to_string()))
                .with("enumerated", EvidenceValue::Int(counted as u128))
                .with("formula", EvidenceValue::Factorization(formula)));
        }
    }
    Ok(CheckOutcome::new(format!("classes S_{n}"), Verdict::Pass)
        .with("classes", EvidenceValue::Int(counts.len() as u128)))
}

/// Check every record of a line-delimited file, in input order. Blank lines
/// are skipped. In strict mode the first malformed line aborts the run.
pub fn cmd_ingest_check(path: &Path, strict: bool, opts: RunOptions) -> Result<AuditReport> {
    let text = fs::read_to_string(path).map_err(|source| AuditError::Io { path: path.to_path_buf(), source })?;
    let mut parsed = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match parse_record(line, strict) {
            Ok(r) => parsed.push(Ok(r)),
            Err(message) if strict => return Err(AuditError::Malformed { line: i + 1, message }),
            Err(message) => parsed.push(Err((i + 1, message))),
        }
    }
    let outcomes = opts.run(|| {
        parsed
            .par_iter()
            .map(|r| match r {
                Ok(record) => check_record(record),
                Err((line, message)) => malformed_outcome(*line, message),
            })
            .collect::<Vec<_>>()
    })?;
    let mut report = AuditReport::new("ingest-check", opts.allow_known_exceptions)
        .param("path", path.display())
        .param("strict", strict)
        .param("records", parsed.len());
    report.outcomes.extend(outcomes.into_iter().map(Outcome::Check));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_range_is_checked() {
        assert!(matches!(cmd_verify_alternating(6, 5, RunOptions::default()), Err(AuditError::Usage(_))));
        assert!(matches!(cmd_verify_alternating(5, 9, RunOptions::default()), Err(AuditError::Usage(_))));
        let r = cmd_verify_alternating(6, 12, RunOptions::default()).unwrap();
        assert_eq!(r.outcomes.len(), 7);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn unknown_family_is_usage_error() {
        let r = cmd_verify_lie(&["G3".into()], 64, RunOptions::default());
        assert!(matches!(r, Err(AuditError::Usage(_))));
    }

    #[test]
    fn zero_jobs_is_rejected() {
        let opts = RunOptions { jobs: Some(0), ..RunOptions::default() };
        assert!(matches!(cmd_verify_alternating(6, 8, opts), Err(AuditError::Usage(_))));
    }
}
