//! Divisors of class sizes of prime-power-order elements in simple groups
//! of Lie type.
//!
//! Each family carries a polynomial in `q` known to divide `|t^S|` for a
//! suitable `t`. The check evaluates it exactly, one cyclotomic factor at a
//! time, and passes when at least three distinct primes appear.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::check::{CheckOutcome, EvidenceValue, Verdict};
use crate::error::{domain, Error, Result};
use crate::numtheory::{factorize, prime_power_decomposition, torus_prime, PrimeFactorization, ZsigmondyQuery};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieFamily {
    Suzuki,
    Triality,
    G2NotOneModThree,
    G2NotTwoModThree,
    Ree,
    F4,
    Ree2F4,
    E6,
    TwistedE6,
    E7,
    E8,
    Tits,
    Psln,
    PsunEven,
    PsunOdd,
    Pspn,
    POmegaOdd,
    POmegaMinus,
    POmegaPlus,
    Psl3,
    Psu3,
    Psp4,
    Psl2Generic,
}

impl LieFamily {
    pub const ALL: [LieFamily; 23] = [
        LieFamily::Suzuki,
        LieFamily::Triality,
        LieFamily::G2NotOneModThree,
        LieFamily::G2NotTwoModThree,
        LieFamily::Ree,
        LieFamily::F4,
        LieFamily::Ree2F4,
        LieFamily::E6,
        LieFamily::TwistedE6,
        LieFamily::E7,
        LieFamily::E8,
        LieFamily::Tits,
        LieFamily::Psln,
        LieFamily::PsunEven,
        LieFamily::PsunOdd,
        LieFamily::Pspn,
        LieFamily::POmegaOdd,
        LieFamily::POmegaMinus,
        LieFamily::POmegaPlus,
        LieFamily::Psl3,
        LieFamily::Psu3,
        LieFamily::Psp4,
        LieFamily::Psl2Generic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LieFamily::Suzuki => "2B2",
            LieFamily::Triality => "3D4",
            LieFamily::G2NotOneModThree => "G2a",
            LieFamily::G2NotTwoModThree => "G2b",
            LieFamily::Ree => "2G2",
            LieFamily::F4 => "F4",
            LieFamily::Ree2F4 => "2F4",
            LieFamily::E6 => "E6",
            LieFamily::TwistedE6 => "2E6",
            LieFamily::E7 => "E7",
            LieFamily::E8 => "E8",
            LieFamily::Tits => "2F4(2)'",
            LieFamily::Psln => "PSLn",
            LieFamily::PsunEven => "PSUn_even",
            LieFamily::PsunOdd => "PSUn_odd",
            LieFamily::Pspn => "PSpn",
            LieFamily::POmegaOdd => "POmega_odd",
            LieFamily::POmegaMinus => "POmega_minus",
            LieFamily::POmegaPlus => "POmega_plus",
            LieFamily::Psl3 => "PSL3",
            LieFamily::Psu3 => "PSU3",
            LieFamily::Psp4 => "PSp4",
            LieFamily::Psl2Generic => "PSL2_generic",
        }
    }

    pub fn constraint(self) -> &'static str {
        match self {
            LieFamily::Suzuki | LieFamily::Ree2F4 => "q = 2^(2k+1) >= 8",
            LieFamily::Ree => "q = 3^(2k+1) >= 27",
            LieFamily::G2NotOneModThree => "q >= 3, q != 1 mod 3",
            LieFamily::G2NotTwoModThree => "q >= 3, q != 2 mod 3",
            LieFamily::Tits => "q = 2",
            LieFamily::POmegaOdd => "q odd",
            LieFamily::Psl3 | LieFamily::Psu3 | LieFamily::Psp4 => "q >= 4",
            LieFamily::Psl2Generic => "q - 1 has two distinct prime factors",
            _ => "q a prime power",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            LieFamily::Suzuki => "q(q-1)(q-sqrt(2q)+1)",
            LieFamily::Triality | LieFamily::E6 | LieFamily::TwistedE6 | LieFamily::E7 => "q(q^6-1)",
            LieFamily::G2NotOneModThree => "q(q^2-1)(q^2-q+1)",
            LieFamily::G2NotTwoModThree => "q(q^2-1)(q^2+q+1)",
            LieFamily::Ree => "q(q^2-1)",
            LieFamily::F4 | LieFamily::E8 => "q(q^8-1)",
            LieFamily::Tits => "30",
            LieFamily::Psln => "q(q^2-1)(q^3-1)",
            LieFamily::Ree2F4
            | LieFamily::PsunEven
            | LieFamily::PsunOdd
            | LieFamily::Pspn
            | LieFamily::POmegaOdd
            | LieFamily::POmegaMinus
            | LieFamily::POmegaPlus => "q(q^4-1)",
            LieFamily::Psl3 | LieFamily::Psu3 => "q^3(q^2-1)",
            LieFamily::Psp4 => "q^4(q^2-1)",
            LieFamily::Psl2Generic => "q(q-1)",
        }
    }

    /// Field size and degree whose Zsigmondy prime gives the order of the
    /// semisimple witness, for classical families in their smallest rank.
    pub fn torus(self, q: u64) -> Option<(u64, u32)> {
        let m = match self {
            LieFamily::Psln | LieFamily::Psp4 => 4,
            LieFamily::PsunEven | LieFamily::Pspn | LieFamily::POmegaOdd | LieFamily::POmegaPlus | LieFamily::Psu3 => 6,
            LieFamily::PsunOdd => 10,
            LieFamily::POmegaMinus => 8,
            LieFamily::Psl3 => 3,
            _ => return None,
        };
        Some((q, m))
    }

    pub fn is_admissible(self, q: u64) -> bool {
        let Some((p, e)) = prime_power_decomposition(q) else { return false };
        match self {
            LieFamily::Suzuki | LieFamily::Ree2F4 => p == 2 && e % 2 == 1 && e >= 3,
            LieFamily::Ree => p == 3 && e % 2 == 1 && e >= 3,
            LieFamily::G2NotOneModThree => q >= 3 && q % 3 != 1,
            LieFamily::G2NotTwoModThree => q >= 3 && q % 3 != 2,
            LieFamily::Tits => q == 2,
            LieFamily::POmegaOdd => p != 2,
            LieFamily::Psl3 | LieFamily::Psu3 | LieFamily::Psp4 => q >= 4,
            LieFamily::Psl2Generic => q >= 4 && prime_power_decomposition(q - 1).is_none(),
            _ => true,
        }
    }

    /// Admissible prime powers up to `q_max`, ascending.
    pub fn admissible_up_to(self, q_max: u64) -> Vec<u64> {
        (2..=q_max).filter(|&q| self.is_admissible(q)).collect()
    }

    fn factors(self, q: u64) -> Result<Vec<u128>> {
        let q = q as u128;
        let (m, p) = (q - 1, q + 1);
        let sq = q * q;
        Ok(match self {
            LieFamily::Suzuki => {
                let root = exact_sqrt(2 * q).ok_or_else(|| domain!("2q is not a square for q = {q}"))?;
                vec![q, m, q - root + 1]
            }
            LieFamily::Triality | LieFamily::E6 | LieFamily::TwistedE6 | LieFamily::E7 => {
                vec![q, m, p, sq + q + 1, sq - q + 1]
            }
            LieFamily::G2NotOneModThree => vec![q, m, p, sq - q + 1],
            LieFamily::G2NotTwoModThree => vec![q, m, p, sq + q + 1],
            LieFamily::Ree => vec![q, m, p],
            LieFamily::F4 | LieFamily::E8 => vec![q, m, p, sq + 1, sq * sq + 1],
            LieFamily::Tits => vec![2, 3, 5],
            LieFamily::Psln => vec![q, m, p, m, sq + q + 1],
            LieFamily::Ree2F4
            | LieFamily::PsunEven
            | LieFamily::PsunOdd
            | LieFamily::Pspn
            | LieFamily::POmegaOdd
            | LieFamily::POmegaMinus
            | LieFamily::POmegaPlus => vec![q, m, p, sq + 1],
            LieFamily::Psl3 | LieFamily::Psu3 => vec![q, q, q, m, p],
            LieFamily::Psp4 => vec![q, q, q, q, m, p],
            LieFamily::Psl2Generic => vec![q, m],
        })
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LieFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LieFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Validation(format!("unknown Lie family {s:?}")))
    }
}

fn exact_sqrt(n: u128) -> Option<u128> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// Evaluate the family's divisor at `q` and require three distinct primes.
pub fn lie_divisor_check(family: LieFamily, q: u64) -> Result<CheckOutcome> {
    if !family.is_admissible(q) {
        return Err(domain!("q = {q} is not admissible for {family} ({})", family.constraint()));
    }
    let factors = family.factors(q)?;
    let mut value: u128 = 1;
    let mut factorization = PrimeFactorization::one();
    for f in factors {
        value = value.checked_mul(f).ok_or(Error::Overflow("divisor polynomial"))?;
        factorization = factorization.multiply(&factorize(f)?);
    }
    let count = factorization.distinct_prime_count();
    let verdict = if count >= 3 { Verdict::Pass } else { Verdict::Fail };
    let mut outcome = CheckOutcome::new(format!("{family}({q})"), verdict)
        .with("q", EvidenceValue::Int(q as u128))
        .with("formula", EvidenceValue::Text(family.formula().into()))
        .with("value", EvidenceValue::Int(value))
        .with("factorization", EvidenceValue::Factorization(factorization))
        .with("distinct_primes", EvidenceValue::Int(count as u128));
    if let Some((base, m)) = family.torus(q) {
        let prime = torus_prime(ZsigmondyQuery::new(base, m)?)?;
        outcome = outcome.with("torus_prime", EvidenceValue::Int(prime as u128));
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(family: LieFamily, q: u64) -> u128 {
        lie_divisor_check(family, q).unwrap().get_int("value").unwrap()
    }

    #[test]
    fn spot_evaluations() {
        let suzuki = lie_divisor_check(LieFamily::Suzuki, 8).unwrap();
        assert!(suzuki.passed());
        assert_eq!(suzuki.get_int("value"), Some(280));
        assert_eq!(suzuki.get_factorization("factorization").unwrap().pairs(), &[(2, 3), (5, 1), (7, 1)]);

        let tits = lie_divisor_check(LieFamily::Tits, 2).unwrap();
        assert_eq!(tits.get_int("value"), Some(30));
        assert!(tits.passed());

        assert_eq!(value(LieFamily::Psln, 2), 42);
        assert_eq!(value(LieFamily::Suzuki, 32), 32 * 31 * 25);
        assert_eq!(value(LieFamily::Ree, 27), 27 * 728);
        assert_eq!(value(LieFamily::Psp4, 4), 256 * 15);
    }

    #[test]
    fn factor_lists_multiply_to_the_formula() {
        for q in [2u128, 3, 4, 5, 7, 8, 9, 1024] {
            let poly = |f: LieFamily| -> u128 {
                match f {
                    LieFamily::Triality => q * (q.pow(6) - 1),
                    LieFamily::F4 => q * (q.pow(8) - 1),
                    LieFamily::Psln => q * (q * q - 1) * (q.pow(3) - 1),
                    LieFamily::Pspn => q * (q.pow(4) - 1),
                    _ => unreachable!(),
                }
            };
            for f in [LieFamily::Triality, LieFamily::F4, LieFamily::Psln, LieFamily::Pspn] {
                assert_eq!(value(f, q as u64), poly(f), "{f} at {q}");
            }
        }
    }

    #[test]
    fn admissibility() {
        assert_eq!(LieFamily::Suzuki.admissible_up_to(128), [8, 32, 128]);
        assert_eq!(LieFamily::Ree.admissible_up_to(1024), [27, 243]);
        assert_eq!(LieFamily::Tits.admissible_up_to(9), [2]);
        assert!(!LieFamily::G2NotOneModThree.is_admissible(4));
        assert!(LieFamily::G2NotTwoModThree.is_admissible(4));
        assert!(LieFamily::G2NotOneModThree.is_admissible(9) && LieFamily::G2NotTwoModThree.is_admissible(9));
        assert!(!LieFamily::POmegaOdd.is_admissible(8));
        assert!(!LieFamily::Psl3.is_admissible(3));
        assert!(LieFamily::Psl2Generic.is_admissible(7));
        assert!(!LieFamily::Psl2Generic.is_admissible(9));
        assert!(!LieFamily::Pspn.is_admissible(6));
        assert!(matches!(lie_divisor_check(LieFamily::Suzuki, 16), Err(Error::Domain(_))));
        assert!(matches!(lie_divisor_check(LieFamily::Tits, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn names_round_trip() {
        for f in LieFamily::ALL {
            assert_eq!(f.name().parse::<LieFamily>().unwrap(), f);
        }
        assert!("G3".parse::<LieFamily>().is_err());
    }

    #[test]
    fn torus_prime_is_recorded() {
        let out = lie_divisor_check(LieFamily::Psl3, 4).unwrap();
        // 4^3 - 1 = 63 = 3^2 * 7 and 7 is primitive.
        assert_eq!(out.get_int("torus_prime"), Some(7));
        assert!(lie_divisor_check(LieFamily::E8, 2).unwrap().get("torus_prime").is_none());
    }
}
