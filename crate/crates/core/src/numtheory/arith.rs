use alloc::format;

use super::factorization::PrimeFactorization;
use super::primes::{factorize, is_prime, next_prime_after, pow_mod, prev_prime_at_most, PrimeSieve};
use crate::check::{CheckOutcome, EvidenceValue, Verdict};
use crate::error::{domain, resource, Result};

/// Exponent of the prime `p` in `n!` by Legendre's formula.
pub fn legendre_valuation(n: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(domain!("{p} is not prime"));
    }
    let mut total = 0;
    let mut m = n;
    while m >= p {
        m /= p;
        total += m;
    }
    Ok(total)
}

/// Factorization of `n!`.
pub fn factorial_factorization(n: u64) -> Result<PrimeFactorization> {
    let sieve = PrimeSieve::new(n)?;
    let mut pairs = alloc::vec::Vec::new();
    for p in sieve.primes() {
        let e = legendre_valuation(n, p)?;
        let e = u32::try_from(e).map_err(|_| resource!("exponent of {p} in {n}! overflows"))?;
        pairs.push((p, e));
    }
    Ok(PrimeFactorization::from_sorted_unchecked(pairs))
}

/// Least `d >= 1` with `a^d = 1 (mod p)`.
pub fn multiplicative_order(a: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(domain!("{p} is not prime"));
    }
    if a % p == 0 {
        return Err(domain!("{p} divides {a}"));
    }
    let mut order = p - 1;
    for (r, _) in factorize((p - 1) as u128)?.pairs() {
        while order % r == 0 && pow_mod(a as u128, (order / r) as u128, p as u128) == 1 {
            order /= r;
        }
    }
    Ok(order)
}

/// The pair `<a, m>` whose primitive prime divisors are sought.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZsigmondyQuery {
    base: u64,
    exponent: u32,
}

impl ZsigmondyQuery {
    pub fn new(base: u64, exponent: u32) -> Result<Self> {
        if base < 2 || exponent < 2 {
            return Err(domain!("Zsigmondy query needs a >= 2 and m >= 2, got <{base}, {exponent}>"));
        }
        Ok(ZsigmondyQuery { base, exponent })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }
}

/// Smallest prime `p` not dividing `a` for which `a` has order exactly `m`
/// mod `p`, or `None` when `a^m - 1` has no such divisor.
pub fn zsigmondy_prime(q: ZsigmondyQuery) -> Result<Option<u64>> {
    let value = (q.base as u128)
        .checked_pow(q.exponent)
        .ok_or_else(|| resource!("{}^{} - 1 exceeds 128 bits", q.base, q.exponent))?
        - 1;
    for p in factorize(value)?.primes() {
        if q.base % p != 0 && multiplicative_order(q.base % p, p)? == q.exponent as u64 {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Prime used to pick a torus element for the pair `<q, m>`: the smallest
/// Zsigmondy prime, or 3 for the exceptional pair `<2, 6>`.
pub fn torus_prime(q: ZsigmondyQuery) -> Result<u64> {
    if (q.base, q.exponent) == (2, 6) {
        return Ok(3);
    }
    zsigmondy_prime(q)?.ok_or_else(|| domain!("no Zsigmondy prime for <{}, {}>", q.base, q.exponent))
}

/// `Some((p, e))` when `q = p^e` with `e >= 1`.
pub fn prime_power_decomposition(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize(q as u128).ok()?;
    match f.pairs() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn is_prime_power(q: u64) -> bool {
    prime_power_decomposition(q).is_some()
}

fn largest_prime_with_square_below_by(n: u64, is_p: impl Fn(u64) -> bool) -> Result<u64> {
    if n < 9 {
        return Err(domain!("largest prime with p^2 <= n needs n >= 9, got {n}"));
    }
    prev_prime_at_most(n.isqrt(), is_p).ok_or_else(|| domain!("no prime at most sqrt({n})"))
}

/// Largest prime `p` with `p^2 <= n`, for `n >= 9`.
pub fn largest_prime_with_square_below(n: u64) -> Result<u64> {
    largest_prime_with_square_below_by(n, is_prime)
}

fn p_square_lemma_by(n: u64, is_p: impl Fn(u64) -> bool) -> Result<CheckOutcome> {
    let p = largest_prime_with_square_below_by(n, is_p)?;
    let cube = p as u128 * p as u128 * p as u128;
    let k = n / (p * p);
    let verdict = if cube > n as u128 && (k == 1 || k == 2) { Verdict::Pass } else { Verdict::Fail };
    Ok(CheckOutcome::new(format!("p-square-lemma n={n}"), verdict)
        .with("n", EvidenceValue::Int(n as u128))
        .with("p", EvidenceValue::Int(p as u128))
        .with("p_cubed", EvidenceValue::Int(cube))
        .with("quotient", EvidenceValue::Int(k as u128)))
}

/// For `n >= 9` and `p` the largest prime with `p^2 <= n`: passes iff
/// `p^3 > n` and `floor(n / p^2)` is 1 or 2.
pub fn check_p_square_lemma(n: u64) -> Result<CheckOutcome> {
    p_square_lemma_by(n, is_prime)
}

/// Same check with primality answered by a precomputed sieve.
pub fn check_p_square_lemma_with(sieve: &PrimeSieve, n: u64) -> Result<CheckOutcome> {
    p_square_lemma_by(n, |m| sieve.is_prime(m))
}

fn nagura_by(x: u64, is_p: impl Fn(u64) -> bool) -> Result<CheckOutcome> {
    if x < 25 {
        return Err(domain!("prime interval check needs x >= 25, got {x}"));
    }
    let witness = next_prime_after(x, is_p).ok_or_else(|| resource!("no prime above {x} in u64"))?;
    // x < p < 6x/5  <=>  5p < 6x
    let inside = 5 * (witness as u128) < 6 * (x as u128);
    let verdict = if inside { Verdict::Pass } else { Verdict::Fail };
    Ok(CheckOutcome::new(format!("prime-interval x={x}"), verdict)
        .with("x", EvidenceValue::Int(x as u128))
        .with("witness_prime", EvidenceValue::Int(witness as u128))
        .with("upper_bound_times_5", EvidenceValue::Int(6 * x as u128)))
}

/// Passes iff some prime lies strictly between `x` and `6x/5`, for `x >= 25`.
pub fn check_nagura_interval(x: u64) -> Result<CheckOutcome> {
    nagura_by(x, is_prime)
}

pub fn check_nagura_interval_with(sieve: &PrimeSieve, x: u64) -> Result<CheckOutcome> {
    nagura_by(x, |m| sieve.is_prime(m))
}
