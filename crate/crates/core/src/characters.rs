//! Irreducible characters of the symmetric group via the
//! Murnaghan-Nakayama rule.
//!
//! Rim hooks are found on the beta-set (first-column hook lengths) of a
//! shape: removing a hook of length `h` moves one bead from `b` to `b - h`,
//! and the leg length is the number of beads jumped over.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Error, Result};
use crate::partitions::Partition;

/// Exact value of `chi_sigma` at a cycle type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterValue(pub i128);

impl CharacterValue {
    pub fn get(self) -> i128 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for CharacterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn beta_set(parts: &[usize]) -> Vec<usize> {
    let len = parts.len();
    parts.iter().enumerate().map(|(i, &p)| p + (len - 1 - i)).collect()
}

fn from_beta_set(beta: &[usize]) -> Vec<usize> {
    let len = beta.len();
    beta.iter().enumerate().map(|(i, &b)| b - (len - 1 - i)).filter(|&p| p > 0).collect()
}

fn rim_hooks_of(parts: &[usize], length: usize) -> Vec<(Vec<usize>, usize)> {
    if length == 0 {
        return Vec::new();
    }
    let beta = beta_set(parts);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let Some(target) = b.checked_sub(length) else { continue };
        if beta.contains(&target) {
            continue;
        }
        let leg = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        out.push((from_beta_set(&moved), leg));
    }
    out
}

/// Every border strip of `length` cells whose removal from `sigma` leaves a
/// partition, paired with its leg length (rows spanned minus one).
pub fn rim_hooks(sigma: &Partition, length: usize) -> Vec<(Partition, usize)> {
    rim_hooks_of(sigma.parts(), length)
        .into_iter()
        .map(|(rest, leg)| (Partition::from_sorted_unchecked(rest), leg))
        .collect()
}

/// Default cap on memo entries held by one evaluator.
pub const MEMO_CAPACITY: usize = 1 << 20;

type MemoKey = (Vec<usize>, Vec<usize>);

/// Murnaghan-Nakayama evaluator with an optional, bounded memo keyed on
/// (remaining shape, position in the cycle type).
///
/// The cache belongs to one evaluator; separate evaluators never share
/// state, so each thread can own one.
#[derive(Debug, Clone)]
pub struct MnEvaluator {
    memo: Option<BTreeMap<MemoKey, i128>>,
    capacity: usize,
}

impl Default for MnEvaluator {
    fn default() -> Self {
        Self::new()
    }
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::with_capacity(MEMO_CAPACITY)
    }

    pub fn with_capacity(capacity: usize) -> Self {
        MnEvaluator { memo: Some(BTreeMap::new()), capacity }
    }

    /// Plain recursion, no cache.
    pub fn unmemoized() -> Self {
        MnEvaluator { memo: None, capacity: 0 }
    }

    pub fn cached_entries(&self) -> usize {
        self.memo.as_ref().map_or(0, BTreeMap::len)
    }

    /// `chi_sigma` at the class of cycle type `lambda`.
    pub fn evaluate(&mut self, sigma: &Partition, lambda: &Partition) -> Result<CharacterValue> {
        if sigma.size() != lambda.size() {
            return Err(domain!(
                "character {sigma} of S_{} cannot be evaluated at cycle type {lambda} of S_{}",
                sigma.size(),
                lambda.size()
            ));
        }
        // Parts are non-increasing, so the largest hook is removed first.
        self.eval(sigma.parts(), lambda.parts()).map(CharacterValue)
    }

    fn eval(&mut self, shape: &[usize], cycles: &[usize]) -> Result<i128> {
        let Some((&first, rest)) = cycles.split_first() else {
            return Ok(if shape.is_empty() { 1 } else { 0 });
        };
        if first == 1 {
            // Only fixed points remain: the value is the degree of the shape.
            let degree = Partition::from_sorted_unchecked(shape.to_vec()).degree()?;
            return degree.to_u128().and_then(|d| i128::try_from(d).ok()).ok_or(Error::Overflow("character degree"));
        }
        let key = (shape.to_vec(), cycles.to_vec());
        if let Some(v) = self.memo.as_ref().and_then(|m| m.get(&key)) {
            return Ok(*v);
        }
        let mut total: i128 = 0;
        for (remainder, leg) in rim_hooks_of(shape, first) {
            let v = self.eval(&remainder, rest)?;
            let signed = if leg % 2 == 0 { v } else { v.checked_neg().ok_or(Error::Overflow("character value"))? };
            total = total.checked_add(signed).ok_or(Error::Overflow("character value"))?;
        }
        if let Some(m) = self.memo.as_mut() {
            if m.len() < self.capacity {
                m.insert(key, total);
            }
        }
        Ok(total)
    }
}

/// `chi_sigma(lambda)` with a fresh memoized evaluator.
pub fn mn_value(sigma: &Partition, lambda: &Partition) -> Result<CharacterValue> {
    MnEvaluator::new().evaluate(sigma, lambda)
}

/// True iff `chi_sigma` stays irreducible on the alternating group, which
/// happens exactly when `sigma` is not self-conjugate.
pub fn restricts_irreducibly_to_alternating(sigma: &Partition) -> bool {
    !sigma.is_self_conjugate()
}
