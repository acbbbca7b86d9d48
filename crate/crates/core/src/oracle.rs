//! Brute-force ground truth for small degrees.
//!
//! Conjugacy classes come from explicit orbit enumeration over every
//! permutation, and character tables are checked against the exact
//! orthogonality relations. Nothing here uses the closed-form class size
//! formulas it is meant to validate.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::characters::{CharacterValue, MnEvaluator};
use crate::check::{CheckOutcome, EvidenceValue, Verdict};
use crate::classes::CycleType;
use crate::error::{domain, resource, Error, Result};
use crate::partitions::{partitions_of, Partition};

/// Largest degree the oracle will enumerate (`8! = 40320` permutations).
pub const MAX_DEGREE: usize = 8;

type Perm = [u8; MAX_DEGREE];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitTag {
    Plus,
    Minus,
}

/// A class of `S_n` or `A_n`: its cycle type, plus a sign tag when an
/// `S_n` class splits into two `A_n` classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassLabel {
    pub cycle_type: CycleType,
    pub split: Option<SplitTag>,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_type)?;
        match self.split {
            Some(SplitTag::Plus) => f.write_str("+"),
            Some(SplitTag::Minus) => f.write_str("-"),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteClass {
    pub label: ClassLabel,
    pub size: u64,
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(domain!("degree must be at least 1"));
    }
    if n > MAX_DEGREE {
        return Err(resource!("brute force is capped at degree {MAX_DEGREE}, got {n}"));
    }
    Ok(())
}

/// All permutations of `0..n` in lexicographic order.
fn all_perms(n: usize) -> Vec<Perm> {
    let mut cur: Perm = [0; MAX_DEGREE];
    for (i, slot) in cur.iter_mut().enumerate().take(n) {
        *slot = i as u8;
    }
    let mut out = vec![cur];
    loop {
        let s = &mut cur[..n];
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| s[i] < s[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| s[j] > s[i]).expect("successor exists");
        s.swap(i, j);
        s[i + 1..].reverse();
        out.push(cur);
    }
    out
}

/// Position of `p` in lexicographic order (Lehmer code).
fn rank(p: &Perm, n: usize) -> usize {
    let mut r = 0;
    for i in 0..n {
        let smaller_later = (i + 1..n).filter(|&j| p[j] < p[i]).count();
        r = r * (n - i) + smaller_later;
    }
    r
}

fn cycle_type(p: &Perm, n: usize) -> CycleType {
    let mut seen = [false; MAX_DEGREE];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        parts.push(len);
    }
    CycleType::from_parts(parts).expect("cycle lengths are positive")
}

fn conjugate(h: &Perm, g: &Perm, n: usize) -> Perm {
    let mut c: Perm = [0; MAX_DEGREE];
    for i in 0..n {
        c[h[i] as usize] = h[g[i] as usize];
    }
    c
}

/// Orbits of conjugation by the listed group elements, as (representative, size).
fn conjugation_orbits(group: &[Perm], n: usize, total: usize) -> Vec<(Perm, u64)> {
    let mut visited = vec![false; total];
    let mut out = Vec::new();
    for g in group {
        if visited[rank(g, n)] {
            continue;
        }
        let mut size = 0u64;
        for h in group {
            let r = rank(&conjugate(h, g, n), n);
            if !visited[r] {
                visited[r] = true;
                size += 1;
            }
        }
        out.push((*g, size));
    }
    out
}

/// Conjugacy classes of `S_n` (or `A_n`) by explicit orbit enumeration,
/// ordered by cycle type (lexicographically ascending parts), `+` before `-`.
pub fn brute_force_classes(n: usize, alternating: bool) -> Result<Vec<BruteClass>> {
    check_degree(n)?;
    let perms = all_perms(n);
    let total = perms.len();
    let group: Vec<Perm> =
        if alternating { perms.into_iter().filter(|p| cycle_type(p, n).is_even()).collect() } else { perms };
    let mut seen_types: BTreeMap<CycleType, usize> = BTreeMap::new();
    let mut raw = Vec::new();
    for (rep, size) in conjugation_orbits(&group, n, total) {
        let ct = cycle_type(&rep, n);
        let idx = seen_types.entry(ct.clone()).or_insert(0);
        *idx += 1;
        raw.push((ct, *idx, size));
    }
    let mut out: Vec<BruteClass> = raw
        .into_iter()
        .map(|(ct, idx, size)| {
            let split = match (seen_types[&ct], idx) {
                (1, _) => None,
                (_, 1) => Some(SplitTag::Plus),
                _ => Some(SplitTag::Minus),
            };
            BruteClass { label: ClassLabel { cycle_type: ct, split }, size }
        })
        .collect();
    out.sort_by(|a, b| {
        a.label
            .cycle_type
            .partition()
            .parts()
            .cmp(b.label.cycle_type.partition().parts())
            .then(a.label.split.cmp(&b.label.split))
    });
    Ok(out)
}

/// Number of permutations of each cycle type, counted one by one.
pub fn cycle_type_counts(n: usize) -> Result<BTreeMap<CycleType, u64>> {
    check_degree(n)?;
    let mut counts = BTreeMap::new();
    for p in all_perms(n) {
        *counts.entry(cycle_type(&p, n)).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Full character table of `S_n` for `n <= 8`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGroupTable {
    pub n: usize,
    /// Cycle types with their sizes, in reverse-lexicographic order.
    pub classes: Vec<(CycleType, u64)>,
    /// Character labels, in reverse-lexicographic order.
    pub labels: Vec<Partition>,
    /// `characters[i][j] = chi_{labels[i]}(classes[j])`.
    pub characters: Vec<Vec<i128>>,
}

pub fn build_character_table_with<F>(n: usize, mut chi: F) -> Result<SmallGroupTable>
where
    F: FnMut(&Partition, &Partition) -> Result<CharacterValue>,
{
    let counts = cycle_type_counts(n)?;
    let labels: Vec<Partition> = partitions_of(n)?.collect();
    let classes: Vec<(CycleType, u64)> = labels
        .iter()
        .map(|lambda| {
            let ct = CycleType::new(lambda.clone());
            let size = counts[&ct];
            (ct, size)
        })
        .collect();
    let characters = labels
        .iter()
        .map(|sigma| {
            classes
                .iter()
                .map(|(ct, _)| chi(sigma, ct.partition()).map(CharacterValue::get))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SmallGroupTable { n, classes, labels, characters })
}

pub fn build_character_table(n: usize) -> Result<SmallGroupTable> {
    let mut ev = MnEvaluator::new();
    build_character_table_with(n, |s, l| ev.evaluate(s, l))
}

fn factorial(n: usize) -> i128 {
    (1..=n as i128).product()
}

impl SmallGroupTable {
    /// Checks row and column orthogonality and the degree column against
    /// the hook length formula. The first violation found is reported.
    pub fn validate(&self) -> Result<CheckOutcome> {
        let order = factorial(self.n);
        let label = format!("character-table S_{}", self.n);
        let k = self.labels.len();
        let class_total: i128 = self.classes.iter().map(|(_, s)| *s as i128).sum();
        if class_total != order {
            return Ok(
                CheckOutcome::new(label, Verdict::Fail).with("class_size_sum", EvidenceValue::Signed(class_total))
            );
        }
        for a in 0..k {
            for b in a..k {
                let inner: i128 =
                    (0..k).map(|j| self.classes[j].1 as i128 * self.characters[a][j] * self.characters[b][j]).sum();
                let expected = if a == b { order } else { 0 };
                if inner != expected {
                    return Ok(CheckOutcome::new(label, Verdict::Fail)
                        .with("relation", EvidenceValue::Text("row orthogonality".into()))
                        .with("sigma", EvidenceValue::Partition(self.labels[a].clone()))
                        .with("tau", EvidenceValue::Partition(self.labels[b].clone()))
                        .with("inner_product", EvidenceValue::Signed(inner))
                        .with("expected", EvidenceValue::Signed(expected)));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let inner: i128 = (0..k).map(|i| self.characters[i][a] * self.characters[i][b]).sum();
                let expected = if a == b { order / self.classes[a].1 as i128 } else { 0 };
                if inner != expected {
                    return Ok(CheckOutcome::new(label, Verdict::Fail)
                        .with("relation", EvidenceValue::Text("column orthogonality".into()))
                        .with("lambda", EvidenceValue::Partition(self.labels[a].clone()))
                        .with("mu", EvidenceValue::Partition(self.labels[b].clone()))
                        .with("inner_product", EvidenceValue::Signed(inner))
                        .with("expected", EvidenceValue::Signed(expected)));
                }
            }
        }
        let identity = self
            .classes
            .iter()
            .position(|(ct, _)| ct.partition().parts().iter().all(|&p| p == 1))
            .ok_or_else(|| Error::Invariant("identity class missing".into()))?;
        let mut degree_squares = 0i128;
        for (i, sigma) in self.labels.iter().enumerate() {
            let hook_degree = sigma.degree()?.to_u128().map(|d| d as i128);
            let value = self.characters[i][identity];
            if hook_degree != Some(value) {
                return Ok(CheckOutcome::new(label, Verdict::Fail)
                    .with("relation", EvidenceValue::Text("degree".into()))
                    .with("sigma", EvidenceValue::Partition(sigma.clone()))
                    .with("value_at_identity", EvidenceValue::Signed(value)));
            }
            degree_squares += value * value;
        }
        Ok(CheckOutcome::new(label, Verdict::Pass)
            .with("classes", EvidenceValue::Int(k as u128))
            .with("sum_degree_squares", EvidenceValue::Int(degree_squares as u128)))
    }
}

/// Build the `S_n` table from the Murnaghan-Nakayama rule and check it.
pub fn validate_character_table(n: usize) -> Result<CheckOutcome> {
    build_character_table(n)?.validate()
}

/// As [`validate_character_table`] with a caller-supplied evaluator.
pub fn validate_character_table_with<F>(n: usize, chi: F) -> Result<CheckOutcome>
where
    F: FnMut(&Partition, &Partition) -> Result<CharacterValue>,
{
    build_character_table_with(n, chi)?.validate()
}
