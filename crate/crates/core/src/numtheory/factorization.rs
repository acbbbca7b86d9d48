use alloc::vec::Vec;
use core::fmt;
use core::iter::Product;
use core::ops::Mul;

use super::primes::is_prime;
use crate::error::{domain, Result};

/// A positive integer held as its prime factorization.
///
/// Pairs are `(prime, exponent)` with strictly increasing primes and
/// exponents at least one; the empty list is 1. Divisibility and quotients
/// are exponent-vector operations, so values far beyond `u128` (class sizes
/// in `A_300`, say) are handled exactly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn prime_power(p: u64, e: u32) -> Result<Self> {
        Self::from_pairs([(p, e)])
    }

    /// Build from arbitrary `(prime, exponent)` pairs. Pairs may come in any
    /// order and repeat a prime (exponents add); zero exponents are dropped.
    /// Every base must be prime.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u32)>) -> Result<Self> {
        let mut out = Self::one();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(domain!("{p} is not prime"));
            }
            out.add_exponent(p, e);
        }
        Ok(out)
    }

    /// Caller guarantees primality of every base.
    pub(crate) fn from_sorted_unchecked(factors: Vec<(u64, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|&(_, e)| e > 0));
        PrimeFactorization { factors }
    }

    pub(crate) fn add_exponent(&mut self, p: u64, e: u32) {
        if e == 0 {
            return;
        }
        match self.factors.binary_search_by_key(&p, |&(q, _)| q) {
            Ok(i) => self.factors[i].1 += e,
            Err(i) => self.factors.insert(i, (p, e)),
        }
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn prime_set(&self) -> Vec<u64> {
        self.primes().collect()
    }

    pub fn distinct_prime_count(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.binary_search_by_key(&p, |&(q, _)| q).map(|i| self.factors[i].1).unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// True for `p^e` with `e >= 1`.
    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        PrimeFactorization { factors: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        PrimeFactorization { factors: self.factors.iter().map(|&(p, e)| (p, e * k)).collect() }
    }

    /// `self / other` when `other` divides `self`, otherwise `None`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut out = self.factors.clone();
        for &(p, e) in &other.factors {
            let i = out.binary_search_by_key(&p, |&(q, _)| q).ok()?;
            if out[i].1 < e {
                return None;
            }
            out[i].1 -= e;
        }
        out.retain(|&(_, e)| e > 0);
        Some(PrimeFactorization { factors: out })
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|&(p, e)| other.exponent_of(p) >= e)
    }

    /// Least common multiple: exponent-wise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &(p, e) in &other.factors {
            let cur = out.exponent_of(p);
            if e > cur {
                out.add_exponent(p, e - cur);
            }
        }
        out
    }

    /// The represented integer, if it fits in `u128`.
    pub fn to_u128(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for &(p, e) in &self.factors {
            acc = acc.checked_mul((p as u128).checked_pow(e)?)?;
        }
        Some(acc)
    }
}

impl Mul for &PrimeFactorization {
    type Output = PrimeFactorization;
    fn mul(self, rhs: Self) -> PrimeFactorization {
        self.multiply(rhs)
    }
}

impl Mul for PrimeFactorization {
    type Output = PrimeFactorization;
    fn mul(self, rhs: Self) -> PrimeFactorization {
        self.multiply(&rhs)
    }
}

impl<'a> Product<&'a PrimeFactorization> for PrimeFactorization {
    fn product<I: Iterator<Item = &'a PrimeFactorization>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, f| acc.multiply(f))
    }
}

impl Product for PrimeFactorization {
    fn product<I: Iterator<Item = PrimeFactorization>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, f| acc.multiply(&f))
    }
}

/// Renders as `2^3 * 5 * 7`; the empty factorization renders as `1`.
impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn pf(pairs: &[(u64, u32)]) -> PrimeFactorization {
        PrimeFactorization::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn canonicalizes_pairs() {
        let f = pf(&[(5, 1), (2, 1), (2, 2), (7, 0)]);
        assert_eq!(f.pairs(), &[(2, 3), (5, 1)]);
        assert_eq!(f.to_u128(), Some(40));
    }

    #[test]
    fn rejects_composite_base() {
        assert!(PrimeFactorization::from_pairs([(4, 1)]).is_err());
        assert!(PrimeFactorization::from_pairs([(1, 1)]).is_err());
    }

    #[test]
    fn division_checks_every_exponent() {
        let a = pf(&[(2, 3), (3, 1)]);
        let b = pf(&[(2, 1), (3, 1)]);
        assert_eq!(a.checked_div(&b), Some(pf(&[(2, 2)])));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(a.checked_div(&pf(&[(5, 1)])), None);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
    }

    #[test]
    fn display_and_overflow() {
        assert_eq!(pf(&[(2, 3), (5, 1), (7, 1)]).to_string(), "2^3 * 5 * 7");
        assert_eq!(PrimeFactorization::one().to_string(), "1");
        assert_eq!(pf(&[(2, 128)]).to_u128(), None);
        assert_eq!(pf(&[(2, 127)]).to_u128(), Some(1u128 << 127));
    }

    #[test]
    fn lcm_takes_maxima() {
        let a = pf(&[(2, 3), (3, 1)]);
        let b = pf(&[(2, 1), (5, 2)]);
        assert_eq!(a.lcm(&b), pf(&[(2, 3), (3, 1), (5, 2)]));
    }
}
