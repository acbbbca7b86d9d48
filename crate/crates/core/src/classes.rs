//! Conjugacy classes of `S_n` and `A_n` from cycle types.
//!
//! All sizes are factorizations; quotients check every exponent and report
//! an invariant violation instead of going negative.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Error, Result};
use crate::numtheory::{factorial_factorization, factorize, is_prime, PrimeFactorization};
use crate::partitions::Partition;

/// Cycle type of a permutation of `{1..n}`, fixed points included as ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        CycleType(partition)
    }

    pub fn from_parts(parts: impl IntoIterator<Item = usize>) -> Result<Self> {
        Partition::new(parts).map(CycleType)
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.size()
    }

    pub fn is_even(&self) -> bool {
        (self.degree() - self.0.len()) % 2 == 0
    }

    /// Order of any element with this cycle type: the lcm of the parts.
    pub fn element_order(&self) -> PrimeFactorization {
        self.0
            .multiplicities()
            .iter()
            .map(|&(v, _)| factorize(v as u128).expect("cycle lengths are positive"))
            .fold(PrimeFactorization::one(), |acc, f| acc.lcm(&f))
    }

    /// `|C_{S_n}(x)| = prod_i i^{m_i} m_i!` where `m_i` counts parts equal to `i`.
    pub fn centralizer_order_sym(&self) -> Result<PrimeFactorization> {
        let mut out = PrimeFactorization::one();
        for (value, count) in self.0.multiplicities() {
            let v = factorize(value as u128)?;
            out = out.multiply(&v.pow(count as u32)).multiply(&factorial_factorization(count as u64)?);
        }
        Ok(out)
    }

    pub fn class_size_sym(&self) -> Result<PrimeFactorization> {
        let n_factorial = factorial_factorization(self.degree() as u64)?;
        n_factorial
            .checked_div(&self.centralizer_order_sym()?)
            .ok_or_else(|| Error::Invariant(format!("centralizer of {self} does not divide {}!", self.degree())))
    }

    /// An even class splits into two `A_n` classes iff its parts are odd and
    /// pairwise distinct.
    pub fn splits_in_alternating(&self) -> Result<bool> {
        self.require_even()?;
        let parts = self.0.parts();
        Ok(parts.iter().all(|p| p % 2 == 1) && parts.windows(2).all(|w| w[0] != w[1]))
    }

    pub fn class_size_alt(&self) -> Result<PrimeFactorization> {
        let sym = self.class_size_sym()?;
        if !self.splits_in_alternating()? {
            return Ok(sym);
        }
        sym.checked_div(&two()).ok_or_else(|| Error::Invariant(format!("split class {self} has odd S_n size")))
    }

    fn require_even(&self) -> Result<()> {
        if self.is_even() {
            Ok(())
        } else {
            Err(domain!("cycle type {self} is odd and does not lie in A_{}", self.degree()))
        }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.compressed().fmt(f)
    }
}

fn two() -> PrimeFactorization {
    PrimeFactorization::from_sorted_unchecked(alloc::vec![(2, 1)])
}

/// Which of the two closed forms for the witness class size matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormBranch {
    /// `n! / (p^{2k} k! r!)`
    Full,
    /// `n! / (2 p^{2k} k! r!)`
    Halved,
}

impl ClosedFormBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            ClosedFormBranch::Full => "full",
            ClosedFormBranch::Halved => "halved",
        }
    }
}

/// Both candidate class sizes `n!/(p^{2k} k! r!)` and half of it, for
/// `n = k p^2 + r` with `k` in `{1, 2}`, `0 <= r < p^2` and `p` an odd prime.
pub fn closed_form_sizes(n: u64, p: u64, k: u64, r: u64) -> Result<(PrimeFactorization, PrimeFactorization)> {
    if p < 3 || !is_prime(p) {
        return Err(domain!("{p} is not an odd prime"));
    }
    let square = p.checked_mul(p).ok_or_else(|| domain!("{p}^2 overflows"))?;
    if !(k == 1 || k == 2) || r >= square || k * square + r != n {
        return Err(domain!("{n} != {k}*{p}^2 + {r} with k in {{1,2}} and r < p^2"));
    }
    let denominator = PrimeFactorization::prime_power(p, 2 * k as u32)?
        .multiply(&factorial_factorization(k)?)
        .multiply(&factorial_factorization(r)?);
    let full = factorial_factorization(n)?
        .checked_div(&denominator)
        .ok_or_else(|| Error::Invariant(format!("denominator does not divide {n}!")))?;
    let half = full.checked_div(&two()).ok_or_else(|| Error::Invariant(format!("full size for n={n} is odd")))?;
    Ok((full, half))
}

/// Which branch `size` equals, if either.
pub fn closed_form_branch_of(
    size: &PrimeFactorization,
    reference: &(PrimeFactorization, PrimeFactorization),
) -> Option<ClosedFormBranch> {
    if *size == reference.0 {
        Some(ClosedFormBranch::Full)
    } else if *size == reference.1 {
        Some(ClosedFormBranch::Halved)
    } else {
        None
    }
}

/// Primes dividing `|A_n| = n!/2`.
pub fn prime_set_of_alternating_order(n: u64) -> Result<Vec<u64>> {
    if n < 3 {
        return Err(domain!("A_{n} is trivial; need n >= 3"));
    }
    let order =
        factorial_factorization(n)?.checked_div(&two()).ok_or_else(|| Error::Invariant(format!("{n}! is odd")))?;
    Ok(order.prime_set())
}

/// Class size of a tuple in a direct product: the product of the
/// component class sizes.
pub fn product_class_size(parts: &[PrimeFactorization]) -> PrimeFactorization {
    parts.iter().product()
}
