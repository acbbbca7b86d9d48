//! Integer partitions and their Young diagrams.
//!
//! A [`Partition`] serves both as a character label and as a cycle type.
//! Parts are stored in full, trailing ones included, so equality and
//! conjugation are purely structural.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{resource, Error, Result};
use crate::numtheory::{factorial_factorization, factorize, PrimeFactorization};

/// Default largest `n` for which [`partitions_of`] will enumerate.
pub const ENUMERATION_BOUND: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates and sorts into non-increasing order. Zero parts are rejected.
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        if parts.contains(&0) {
            return Err(Error::Validation("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Build from signed input, rejecting any part `<= 0`.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let parts = parts
            .iter()
            .map(|&p| {
                usize::try_from(p)
                    .ok()
                    .filter(|&p| p > 0)
                    .ok_or_else(|| Error::Validation(alloc::format!("invalid part {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        Partition { parts }
    }

    /// The single-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition { parts: if n == 0 { vec![] } else { vec![n] } }
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each part value, as `(value, count)` in descending value order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Transpose: part `j` of the result counts parts `>= j`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j - 1) + (conj.parts[j] - i - 1) + 1).collect())
            .collect()
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> PrimeFactorization {
        let mut cache: Vec<Option<PrimeFactorization>> = vec![None; self.size() + 1];
        let mut out = PrimeFactorization::one();
        for h in self.hook_lengths().into_iter().flatten() {
            let f =
                cache[h].get_or_insert_with(|| factorize(h as u128).expect("hook lengths are small positive integers"));
            out = out.multiply(f);
        }
        out
    }

    /// Degree of the irreducible character labelled by this partition,
    /// `n! / hook_product`, kept in factorized form.
    pub fn degree(&self) -> Result<PrimeFactorization> {
        factorial_factorization(self.size() as u64)?
            .checked_div(&self.hook_product())
            .ok_or_else(|| Error::Invariant(alloc::format!("hook product of {self} does not divide n!")))
    }

    /// Rendering with runs of ones compressed, e.g. `(9,1^8)`.
    pub fn compressed(&self) -> Compressed<'_> {
        Compressed(self)
    }
}

/// `(5,2,1,1)`
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

pub struct Compressed<'a>(&'a Partition);

impl fmt::Display for Compressed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        let mut first = true;
        for (value, count) in self.0.multiplicities() {
            let mut sep = || {
                let s = if first { "" } else { "," };
                first = false;
                s
            };
            if value == 1 && count > 1 {
                write!(f, "{}1^{count}", sep())?;
            } else {
                for _ in 0..count {
                    write!(f, "{}{value}", sep())?;
                }
            }
        }
        f.write_str(")")
    }
}

/// Parses `5,2`, `(5,2)` or `(9,1^8)`; a `v^k` term expands to `k` copies of `v`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Validation(alloc::format!("cannot parse partition {s:?}: {why}"));
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .map_or(Ok(body), |b| b.strip_suffix(')').ok_or_else(|| bad("unbalanced parenthesis")))?;
        let body = body.trim();
        if body.is_empty() {
            return Ok(Partition::default());
        }
        let mut parts = Vec::new();
        for term in body.split(',') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            let (value, count) = match term.split_once('^') {
                Some((v, k)) => (v, k.parse::<usize>().map_err(|_| bad("bad exponent"))?),
                None => (term.as_str(), 1),
            };
            let value: i64 = value.parse().map_err(|_| bad("bad part"))?;
            if value <= 0 {
                return Err(bad("parts must be positive"));
            }
            parts.extend(core::iter::repeat_n(value as usize, count));
        }
        Partition::new(parts)
    }
}

/// Iterator over the partitions of `n` in reverse-lexicographic order:
/// `(n)` first, `(1^n)` last.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: decrement the last part > 1 and refill greedily.
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..i].to_vec();
            let v = current[i] - 1;
            let mut rest = current[i..].iter().sum::<usize>();
            while rest > 0 {
                let take = v.min(rest);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition::from_sorted_unchecked(current))
    }
}

pub fn partitions_of(n: usize) -> Result<Partitions> {
    partitions_of_bounded(n, ENUMERATION_BOUND)
}

pub fn partitions_of_bounded(n: usize, bound: usize) -> Result<Partitions> {
    if n > bound {
        return Err(resource!("partition enumeration of {n} exceeds bound {bound}"));
    }
    Ok(Partitions { next: Some(if n == 0 { vec![] } else { vec![n] }) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn make_partition_examples() {
        let a = Partition::from_signed(&[5, 2]).unwrap();
        assert_eq!((a.parts(), a.size()), (&[5, 2][..], 7));
        assert_eq!(Partition::from_signed(&[1]).unwrap().size(), 1);
        assert_eq!(Partition::from_signed(&[2, 1, 4]).unwrap().parts(), &[4, 2, 1]);
        assert!(Partition::from_signed(&[3, 0]).is_err());
        assert!(Partition::from_signed(&[3, -1]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 2]).conjugate(), p(&[2, 2, 1, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[9, 1]).conjugate(), p(&[2, 1, 1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(Partition::default().conjugate(), Partition::default());
    }

    #[test]
    fn self_conjugacy_examples() {
        assert!(p(&[2, 1]).is_self_conjugate());
        assert!(!p(&[5, 2]).is_self_conjugate());
        assert!(p(&[9, 1, 1, 1, 1, 1, 1, 1, 1]).is_self_conjugate());
    }

    #[test]
    fn hook_product_examples() {
        assert!(p(&[1]).hook_product().is_one());
        let sigma = p(&[5, 2]);
        assert_eq!(sigma.hook_lengths(), vec![vec![6, 5, 3, 2, 1], vec![2, 1]]);
        assert_eq!(sigma.hook_product().to_u128(), Some(360));
        assert_eq!(sigma.degree().unwrap().to_u128(), Some(14));
        assert_eq!(Partition::row(9).hook_product(), factorial_factorization(9).unwrap());
        assert!(Partition::row(9).degree().unwrap().is_one());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions_of(0).unwrap().collect::<Vec<_>>(), vec![Partition::default()]);
        assert_eq!(partitions_of(4).unwrap().count(), 5);
        assert_eq!(partitions_of(8).unwrap().count(), 22);
        assert!(partitions_of(26).is_err());
        let four: Vec<String> = partitions_of(4).unwrap().map(|q| q.to_string()).collect();
        assert_eq!(four, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
    }

    #[test]
    fn rendering_and_parsing() {
        let hook = p(&[9, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(hook.compressed().to_string(), "(9,1^8)");
        assert_eq!(p(&[4, 2, 1]).compressed().to_string(), "(4,2,1)");
        assert_eq!("(9,1^8)".parse::<Partition>().unwrap(), hook);
        assert_eq!(" 2, 5 ".parse::<Partition>().unwrap(), p(&[5, 2]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::default());
        assert!("(5,-2)".parse::<Partition>().is_err());
        assert!("(5,x)".parse::<Partition>().is_err());
        assert!("(5,2".parse::<Partition>().is_err());
    }
}
