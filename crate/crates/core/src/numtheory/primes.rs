//! Primality, sieving and factorization.
//!
//! Primality is decided deterministically: Miller-Rabin over the first
//! twelve prime bases is exact below 2^64, and over the first thirteen it is
//! exact below [`PRIMALITY_BOUND`]. Above that bound no answer is given.

use alloc::vec;
use alloc::vec::Vec;

use super::factorization::PrimeFactorization;
use crate::error::{domain, resource, Result};

/// Largest exclusive bound below which thirteen-base Miller-Rabin is exact.
pub const PRIMALITY_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

/// Default cap on sieve size, in integers covered.
pub const SIEVE_BOUND: u64 = 100_000_000;

/// Upper limit for trial division before switching to Pollard rho.
const TRIAL_LIMIT: u64 = 1 << 12;

/// Iterations granted to each rho attempt.
const RHO_BUDGET: u64 = 1 << 24;

const BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return a * b % m;
    }
    // Double-and-add; operands are < m < 2^128 so a + a can overflow only
    // through the explicit wrap checks below.
    let (mut a, mut b) = (a % m, b % m);
    let mut acc: u128 = 0;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= m {
        s.wrapping_sub(m)
    } else {
        s
    }
}

pub(crate) fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime(n: u128, a: u128) -> bool {
    let d_shift = (n - 1).trailing_zeros();
    let d = (n - 1) >> d_shift;
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..d_shift {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

fn miller_rabin(n: u128, bases: &[u64]) -> bool {
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        let b = b as u128;
        if n == b {
            return true;
        }
        if n % b == 0 {
            return false;
        }
    }
    bases.iter().all(|&a| strong_probable_prime(n, a as u128))
}

/// Deterministic primality for every `u64`.
pub fn is_prime(n: u64) -> bool {
    let n = n as u128;
    if n < 41 * 41 {
        return n >= 2 && BASES.iter().all(|&b| n == b as u128 || n % b as u128 != 0);
    }
    miller_rabin(n, &BASES[..12])
}

/// Deterministic primality for `n < PRIMALITY_BOUND`; larger inputs are a
/// resource error rather than a probabilistic guess.
pub fn is_prime_u128(n: u128) -> Result<bool> {
    if n <= u64::MAX as u128 {
        return Ok(is_prime(n as u64));
    }
    if n >= PRIMALITY_BOUND {
        return Err(resource!("primality of {n} is beyond the deterministic bound"));
    }
    Ok(miller_rabin(n, &BASES))
}

/// Primes up to and including `limit`, ascending.
pub fn sieve_primes(limit: u64) -> Result<Vec<u64>> {
    sieve_primes_bounded(limit, SIEVE_BOUND)
}

pub fn sieve_primes_bounded(limit: u64, bound: u64) -> Result<Vec<u64>> {
    Ok(PrimeSieve::with_bound(limit, bound)?.primes().collect())
}

/// Odd-only bitset sieve of Eratosthenes.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    limit: u64,
    // bit i set <=> 2i+1 is composite (or 1)
    composite: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Result<Self> {
        Self::with_bound(limit, SIEVE_BOUND)
    }

    pub fn with_bound(limit: u64, bound: u64) -> Result<Self> {
        if limit > bound {
            return Err(resource!("sieve limit {limit} exceeds bound {bound}"));
        }
        let odd_count = limit / 2 + 1;
        let mut composite = vec![0u64; (odd_count as usize).div_ceil(64)];
        composite[0] |= 1; // the integer 1
        let mut i = 1u64;
        loop {
            let p = 2 * i + 1;
            if p.saturating_mul(p) > limit {
                break;
            }
            if composite[(i / 64) as usize] >> (i % 64) & 1 == 0 {
                let mut j = p * p / 2;
                while j < odd_count {
                    composite[(j / 64) as usize] |= 1 << (j % 64);
                    j += p;
                }
            }
            i += 1;
        }
        Ok(PrimeSieve { limit, composite })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Exact for `n <= limit`; falls back to Miller-Rabin beyond it.
    pub fn is_prime(&self, n: u64) -> bool {
        if n > self.limit {
            return is_prime(n);
        }
        if n == 2 {
            return true;
        }
        if n % 2 == 0 {
            return false;
        }
        let i = n / 2;
        self.composite[(i / 64) as usize] >> (i % 64) & 1 == 0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        let two = (self.limit >= 2).then_some(2);
        two.into_iter().chain((3..=self.limit).step_by(2).filter(move |&n| self.is_prime(n)))
    }
}

/// Smallest prime strictly greater than `x`.
pub fn next_prime_after(x: u64, is_p: impl Fn(u64) -> bool) -> Option<u64> {
    let mut n = x.checked_add(1)?;
    while !is_p(n) {
        n = n.checked_add(1)?;
    }
    Some(n)
}

/// Largest prime at most `x`, if any.
pub fn prev_prime_at_most(x: u64, is_p: impl Fn(u64) -> bool) -> Option<u64> {
    (2..=x).rev().find(|&n| is_p(n))
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite `n`, or `None` when the budget runs out for this constant.
fn rho_brent(n: u128, c: u128) -> Option<u128> {
    let f = |x: u128| add_mod(mul_mod(x, x, n), c, n);
    let (mut y, mut r, mut q) = (2u128, 1u64, 1u128);
    let (mut x, mut ys) = (0u128, 0u128);
    let mut g = 1u128;
    let mut spent = 0u64;
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        spent += r;
        if spent > RHO_BUDGET {
            return None;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn split_into(n: u128, out: &mut Vec<(u64, u32)>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime_u128(n)? {
        let p = u64::try_from(n).map_err(|_| resource!("prime factor {n} exceeds 64 bits"))?;
        out.push((p, 1));
        return Ok(());
    }
    for c in 1..=16u128 {
        if let Some(d) = rho_brent(n, c) {
            split_into(d, out)?;
            return split_into(n / d, out);
        }
    }
    Err(resource!("could not split composite {n} within the rho budget"))
}

/// Canonical factorization of `n >= 1`.
///
/// Trial division strips primes below 2^12, then Pollard rho splits what
/// remains. Fails with a resource error when a cofactor cannot be split or
/// its primality cannot be decided deterministically.
pub fn factorize(n: u128) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(domain!("cannot factorize 0"));
    }
    let mut rest = n;
    let mut found: Vec<(u64, u32)> = Vec::new();
    let mut strip = |d: u64, rest: &mut u128| {
        let mut e = 0;
        while *rest % d as u128 == 0 {
            *rest /= d as u128;
            e += 1;
        }
        if e > 0 {
            found.push((d, e));
        }
    };
    strip(2, &mut rest);
    strip(3, &mut rest);
    let mut d = 5u64;
    while d < TRIAL_LIMIT && (d as u128) * (d as u128) <= rest {
        strip(d, &mut rest);
        strip(d + 2, &mut rest);
        d += 6;
    }
    let mut large = Vec::new();
    split_into(rest, &mut large)?;
    let mut out = PrimeFactorization::from_sorted_unchecked(found);
    for (p, e) in large {
        out.add_exponent(p, e);
    }
    Ok(out)
}
