//! Exact prime arithmetic: sieving, factorization, Legendre valuations,
//! multiplicative orders, Zsigmondy primes and two interval lemmas about
//! primes near squares.

mod arith;
mod factorization;
mod primes;

pub use arith::{
    check_nagura_interval, check_nagura_interval_with, check_p_square_lemma, check_p_square_lemma_with,
    factorial_factorization, is_prime_power, largest_prime_with_square_below, legendre_valuation, multiplicative_order,
    prime_power_decomposition, torus_prime, zsigmondy_prime, ZsigmondyQuery,
};
pub use factorization::PrimeFactorization;
pub use primes::{
    factorize, is_prime, is_prime_u128, next_prime_after, prev_prime_at_most, sieve_primes, sieve_primes_bounded,
    PrimeSieve, PRIMALITY_BOUND, SIEVE_BOUND,
};

pub fn distinct_prime_count(f: &PrimeFactorization) -> usize {
    f.distinct_prime_count()
}
