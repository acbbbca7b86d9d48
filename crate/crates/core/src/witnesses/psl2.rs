//! Case split for `PSL_2(q)` by the shape of `q - 1`.

use alloc::format;
use alloc::string::String;

use crate::check::{CheckOutcome, EvidenceValue, Verdict};
use crate::error::{domain, Error, Result};
use crate::numtheory::{factorize, is_prime, prime_power_decomposition, PrimeFactorization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Psl2Case {
    /// `q - 1` has at least two distinct prime factors.
    Generic,
    /// `q = 2^l` with `2^l - 1` prime.
    Mersenne(u32),
    /// `q = 2^(2^l) + 1` prime.
    Fermat(u32),
    Nine,
}

impl Psl2Case {
    pub fn name(self) -> String {
        match self {
            Psl2Case::Generic => "generic".into(),
            Psl2Case::Mersenne(l) => format!("mersenne(l={l})"),
            Psl2Case::Fermat(l) => format!("fermat(l={l})"),
            Psl2Case::Nine => "nine".into(),
        }
    }
}

/// Groups the argument deliberately excludes. `PSL_2(5)` is isomorphic to
/// `SL_2(4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KnownException {
    Sl2Four,
    Sl2Eight,
}

impl KnownException {
    /// Field size of the `SL_2` form.
    pub fn canonical_q(self) -> u64 {
        match self {
            KnownException::Sl2Four => 4,
            KnownException::Sl2Eight => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            KnownException::Sl2Four => "SL2(4)",
            KnownException::Sl2Eight => "SL2(8)",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Psl2Classification {
    pub q: u64,
    pub case: Psl2Case,
    /// Order of the element whose class size is `class_size`.
    pub element_order: u64,
    pub class_size: PrimeFactorization,
    pub exception: Option<KnownException>,
}

impl Psl2Classification {
    pub fn distinct_primes(&self) -> usize {
        self.class_size.distinct_prime_count()
    }
}

/// Classify `q` and attach the class size used for that case.
pub fn psl2_classify(q: u64) -> Result<Psl2Classification> {
    let (p, e) = prime_power_decomposition(q).ok_or_else(|| domain!("{q} is not a prime power"))?;
    if q < 4 {
        return Err(domain!("PSL2({q}) is not simple; need q >= 4"));
    }
    let f = |n: u128| factorize(n);
    let q128 = q as u128;
    let (case, element_order, class_size) = if prime_power_decomposition(q - 1).is_none() {
        (Psl2Case::Generic, nonsplit_torus_order(q)?, f(q128)?.multiply(&f(q128 - 1)?))
    } else if p == 2 {
        if !is_prime(q - 1) {
            return Err(Error::Invariant(format!("q - 1 = {} is a proper prime power", q - 1)));
        }
        // Unipotent involution: |t^S| = q^2 - 1.
        (Psl2Case::Mersenne(e), 2, f(q128 - 1)?.multiply(&f(q128 + 1)?))
    } else if q == 9 {
        (Psl2Case::Nine, 4, PrimeFactorization::from_pairs([(2, 1), (3, 2), (5, 1)])?)
    } else if e == 1 && (q - 1).is_power_of_two() && (q - 1).trailing_zeros().is_power_of_two() {
        let l = (q - 1).trailing_zeros().trailing_zeros();
        if l == 2 {
            // PSL2(17): order 4 in the split torus of order 8; 2448 / 8.
            (Psl2Case::Fermat(l), 4, PrimeFactorization::from_pairs([(2, 1), (3, 2), (17, 1)])?)
        } else {
            let half = (q128 - 1) / 2;
            (Psl2Case::Fermat(l), q, f(half)?.multiply(&f(q128 + 1)?))
        }
    } else {
        return Err(Error::Invariant(format!("q = {q} fits no case")));
    };
    let exception = match q {
        4 | 5 => Some(KnownException::Sl2Four),
        8 => Some(KnownException::Sl2Eight),
        _ => None,
    };
    Ok(Psl2Classification { q, case, element_order, class_size, exception })
}

/// A prime-power order occurring in the non-split torus of order
/// `(q+1)/gcd(2,q-1)` whose centralizer is the whole torus.
fn nonsplit_torus_order(q: u64) -> Result<u64> {
    let torus = if q % 2 == 0 { q + 1 } else { q.div_ceil(2) };
    let f = factorize(torus as u128)?;
    let odd = f.primes().find(|&r| r != 2);
    Ok(odd.unwrap_or(4))
}

/// Report one classification as a check: pass with three primes, flagged
/// for a known exception when `allow_exceptions` holds, fail otherwise.
pub fn psl2_outcome(c: &Psl2Classification, allow_exceptions: bool) -> CheckOutcome {
    let enough = c.distinct_primes() >= 3;
    let verdict = match (enough, c.exception) {
        (true, _) => Verdict::Pass,
        (false, Some(_)) if allow_exceptions => Verdict::Flagged,
        (false, _) => Verdict::Fail,
    };
    let mut out = CheckOutcome::new(format!("PSL2({})", c.q), verdict)
        .with("q", EvidenceValue::Int(c.q as u128))
        .with("case", EvidenceValue::Text(c.case.name()))
        .with("element_order", EvidenceValue::Int(c.element_order as u128))
        .with("class_size", EvidenceValue::Factorization(c.class_size.clone()))
        .with("distinct_primes", EvidenceValue::Int(c.distinct_primes() as u128));
    if let Some(x) = c.exception {
        out = out.with("exception", EvidenceValue::Text(x.name().into()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        let c = psl2_classify(16).unwrap();
        assert_eq!(c.case, Psl2Case::Generic);
        assert_eq!(c.class_size.to_u128(), Some(240));
        assert_eq!(c.distinct_primes(), 3);

        let c = psl2_classify(32).unwrap();
        assert_eq!(c.case, Psl2Case::Mersenne(5));
        assert_eq!(c.class_size.prime_set(), [3, 11, 31]);

        let c = psl2_classify(17).unwrap();
        assert_eq!(c.case, Psl2Case::Fermat(2));
        assert_eq!(c.class_size.prime_set(), [2, 3, 17]);
        assert_eq!(c.element_order, 4);

        let c = psl2_classify(9).unwrap();
        assert_eq!((c.case, c.class_size.to_u128()), (Psl2Case::Nine, Some(90)));

        let c = psl2_classify(257).unwrap();
        assert_eq!(c.case, Psl2Case::Fermat(3));
        assert_eq!(c.class_size.prime_set(), [2, 3, 43]);
    }

    #[test]
    fn exceptions() {
        for (q, x, case) in [
            (4, KnownException::Sl2Four, Psl2Case::Mersenne(2)),
            (5, KnownException::Sl2Four, Psl2Case::Fermat(1)),
            (8, KnownException::Sl2Eight, Psl2Case::Mersenne(3)),
        ] {
            let c = psl2_classify(q).unwrap();
            assert_eq!((c.case, c.exception), (case, Some(x)));
            assert!(c.distinct_primes() < 3);
            assert_eq!(psl2_outcome(&c, true).verdict, Verdict::Flagged);
            assert_eq!(psl2_outcome(&c, false).verdict, Verdict::Fail);
        }
    }

    #[test]
    fn rejects_bad_q() {
        assert!(psl2_classify(6).is_err());
        assert!(psl2_classify(3).is_err());
        assert!(psl2_classify(2).is_err());
    }
}
