//! Prime-power-order witnesses in `A_n` and their vanishing certificates.
//!
//! For `n` in `{6, 7, 8}` the witness has cycle type `(4,2,1^{n-6})`. For
//! `n >= 9`, with `p` the largest prime such that `p^2 <= n` and
//! `n = k p^2 + r`, it is one `p^2`-cycle (`k = 1`) or two disjoint
//! `p^2`-cycles (`k = 2`). The certificate partition `sigma` names a
//! character that should vanish on the witness.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::characters::{CharacterValue, MnEvaluator};
use crate::check::Verdict;
use crate::classes::{
    closed_form_branch_of, closed_form_sizes, prime_set_of_alternating_order, ClosedFormBranch, CycleType,
};
use crate::error::{domain, Result};
use crate::numtheory::{largest_prime_with_square_below, PrimeFactorization};
use crate::partitions::Partition;

/// `n = k p^2 + r` with `0 <= r < p^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub p: u64,
    pub k: u64,
    pub r: u64,
}

impl Decomposition {
    pub fn of(n: u64) -> Result<Self> {
        let p = largest_prime_with_square_below(n)?;
        let square = p * p;
        Ok(Decomposition { p, k: n / square, r: n % square })
    }

    pub fn square(&self) -> u64 {
        self.p * self.p
    }
}

/// Row of the certificate table that produced `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateRow {
    /// `n = 7`: `sigma = (5,2)`
    DegreeSeven,
    /// `n = 8`: `sigma = (5,2,1)`
    DegreeEight,
    /// `n = p^2`: `sigma = (p^2-2, 2)`
    Square,
    /// `n = p^2 + r`, `1 <= r < p^2`: `sigma = (r+1, 1^{p^2-1})`
    SquarePlusRemainder,
    /// `n = 2p^2 + r`, `r <= p^2-3`: `sigma = (p^2-1, p^2-1, 1^{r+2})`
    TwoSquares,
    /// `n = 2p^2 + p^2 - 2`: `sigma = (p^2-2, p^2-2, p^2-2, 1^4)`
    TwoSquaresGapTwo,
    /// `n = 2p^2 + p^2 - 1`: `sigma = (p^2-2, p^2-2, 1^{p^2+3})`
    TwoSquaresGapOne,
}

impl CertificateRow {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateRow::DegreeSeven => "n=7",
            CertificateRow::DegreeEight => "n=8",
            CertificateRow::Square => "n=p^2",
            CertificateRow::SquarePlusRemainder => "n=p^2+r, 1<=r<p^2",
            CertificateRow::TwoSquares => "n=2p^2+r, 0<=r<=p^2-3",
            CertificateRow::TwoSquaresGapTwo => "n=2p^2+r, r=p^2-2",
            CertificateRow::TwoSquaresGapOne => "n=2p^2+r, r=p^2-1",
        }
    }
}

fn ones(count: u64) -> impl Iterator<Item = usize> {
    core::iter::repeat_n(1usize, count as usize)
}

/// Certificate partition for `n = k p^2 + r` (`n >= 9`). Runs of ones are
/// sized so that `sigma` partitions `n`.
pub fn certificate_partition(d: Decomposition) -> Result<(Partition, CertificateRow)> {
    let Decomposition { p, k, r } = d;
    let sq = d.square();
    if p < 3 || r >= sq {
        return Err(domain!("malformed decomposition {k}*{p}^2 + {r}"));
    }
    let s = sq as usize;
    let (parts, row): (Vec<usize>, _) = match (k, r) {
        (1, 0) => (vec![s - 2, 2], CertificateRow::Square),
        (1, r) => (core::iter::once(r as usize + 1).chain(ones(sq - 1)).collect(), CertificateRow::SquarePlusRemainder),
        (2, r) if r + 3 <= sq => ([s - 1, s - 1].into_iter().chain(ones(r + 2)).collect(), CertificateRow::TwoSquares),
        (2, r) if r + 2 == sq => {
            ([s - 2, s - 2, s - 2].into_iter().chain(ones(4)).collect(), CertificateRow::TwoSquaresGapTwo)
        }
        (2, _) => ([s - 2, s - 2].into_iter().chain(ones(sq + 3)).collect(), CertificateRow::TwoSquaresGapOne),
        _ => return Err(domain!("no certificate row for k = {k}")),
    };
    let sigma = Partition::new(parts)?;
    debug_assert_eq!(sigma.size() as u64, k * sq + r);
    Ok((sigma, row))
}

/// One claim checked for a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// (a) the element is even
    InAlternating,
    /// (b) its order is a prime power
    PrimePowerOrder,
    /// (c) every prime dividing `|A_n|` divides the class size
    DividesEveryPrime,
    /// (d) `sigma` partitions `n` and is not self-conjugate
    SigmaNotSelfConjugate,
    /// (e) `chi_sigma` vanishes on the witness
    CharacterVanishes,
    /// (f) the class size equals one of the two closed forms, halved iff split
    ClosedFormMatches,
}

impl Claim {
    pub const ALL: [Claim; 6] = [
        Claim::InAlternating,
        Claim::PrimePowerOrder,
        Claim::DividesEveryPrime,
        Claim::SigmaNotSelfConjugate,
        Claim::CharacterVanishes,
        Claim::ClosedFormMatches,
    ];

    pub fn code(self) -> char {
        match self {
            Claim::InAlternating => 'a',
            Claim::PrimePowerOrder => 'b',
            Claim::DividesEveryPrime => 'c',
            Claim::SigmaNotSelfConjugate => 'd',
            Claim::CharacterVanishes => 'e',
            Claim::ClosedFormMatches => 'f',
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Claim::InAlternating => "even",
            Claim::PrimePowerOrder => "prime-power-order",
            Claim::DividesEveryPrime => "divisible-by-all-primes",
            Claim::SigmaNotSelfConjugate => "sigma-not-self-conjugate",
            Claim::CharacterVanishes => "character-vanishes",
            Claim::ClosedFormMatches => "closed-form-class-size",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimVerdict {
    pub claim: Claim,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub n: u64,
    /// `None` for `n < 9`.
    pub decomposition: Option<Decomposition>,
    pub cycle_type: CycleType,
    pub element_order: PrimeFactorization,
    /// `|x^{A_n}|`
    pub class_size: PrimeFactorization,
    /// Primes dividing `|A_n|`.
    pub required_primes: Vec<u64>,
    pub sigma: Option<Partition>,
    pub certificate_row: Option<CertificateRow>,
    pub mn_value: Option<CharacterValue>,
    pub closed_form_branch: Option<ClosedFormBranch>,
    /// Empty until verified.
    pub verdicts: Vec<ClaimVerdict>,
    pub notes: Vec<String>,
}

impl WitnessReport {
    pub fn verdict(&self, claim: Claim) -> Option<Verdict> {
        self.verdicts.iter().find(|v| v.claim == claim).map(|v| v.verdict)
    }

    /// Most severe verdict over all claims.
    pub fn overall(&self) -> Verdict {
        self.verdicts.iter().fold(Verdict::Skipped, |acc, v| acc.and(v.verdict))
    }

    /// True when the prime set of the class size is exactly that of `|A_n|`.
    pub fn prime_sets_equal(&self) -> bool {
        self.class_size.prime_set() == self.required_primes
    }
}

/// Build the witness for `n >= 6` without checking any claim.
pub fn construct_alternating_witness(n: u64) -> Result<WitnessReport> {
    if n < 6 {
        return Err(domain!("witness construction needs n >= 6, got {n}"));
    }
    let mut notes = Vec::new();
    let (decomposition, cycle_type, sigma, row) = if n <= 8 {
        let ct = CycleType::from_parts([4, 2].into_iter().chain(ones(n - 6)))?;
        let certificate = match n {
            7 => Some((Partition::new([5, 2])?, CertificateRow::DegreeSeven)),
            8 => Some((Partition::new([5, 2, 1])?, CertificateRow::DegreeEight)),
            _ => None,
        };
        let (sigma, row) = certificate.unzip();
        (None, ct, sigma, row)
    } else {
        let d = Decomposition::of(n)?;
        let long = d.square() as usize;
        let ct = CycleType::from_parts(core::iter::repeat_n(long, d.k as usize).chain(ones(d.r)))?;
        let (sigma, row) = certificate_partition(d)?;
        if row == CertificateRow::TwoSquaresGapOne {
            notes.push(String::from(
                "table entry (p^2-2,p^2-2,,1,1,1) read with its run of ones extended so sigma partitions n",
            ));
        }
        (Some(d), ct, Some(sigma), Some(row))
    };
    let class_size = cycle_type.class_size_alt()?;
    Ok(WitnessReport {
        n,
        decomposition,
        element_order: cycle_type.element_order(),
        cycle_type,
        class_size,
        required_primes: prime_set_of_alternating_order(n)?,
        sigma,
        certificate_row: row,
        mn_value: None,
        closed_form_branch: None,
        verdicts: Vec::new(),
        notes,
    })
}

/// Build and check the witness for `n >= 6`. Failed claims are verdicts,
/// not errors.
pub fn verify_alternating_witness(n: u64) -> Result<WitnessReport> {
    verify_alternating_witness_with(n, &mut MnEvaluator::new())
}

pub fn verify_alternating_witness_with(n: u64, evaluator: &mut MnEvaluator) -> Result<WitnessReport> {
    let mut report = construct_alternating_witness(n)?;
    let mut push = |claim, verdict, detail: String| report_push(&mut report.verdicts, claim, verdict, detail);

    let even = report.cycle_type.is_even();
    push(Claim::InAlternating, pass_if(even), format!("cycle type {}", report.cycle_type));

    push(
        Claim::PrimePowerOrder,
        pass_if(report.element_order.is_prime_power()),
        format!("order {}", report.element_order),
    );

    let class_primes = report.class_size.prime_set();
    let missing: Vec<u64> = report.required_primes.iter().copied().filter(|p| !class_primes.contains(p)).collect();
    let detail = if missing.is_empty() {
        format!("class size {} covers {:?}", report.class_size, report.required_primes)
    } else {
        format!("primes {missing:?} do not divide {}", report.class_size)
    };
    push(Claim::DividesEveryPrime, pass_if(missing.is_empty()), detail);

    let self_conjugate_hook = matches!(
        (report.certificate_row, report.decomposition),
        (Some(CertificateRow::SquarePlusRemainder), Some(d)) if d.r + 1 == d.square()
    );
    match report.sigma.clone() {
        None => {
            push(Claim::SigmaNotSelfConjugate, Verdict::Skipped, "no certificate partition for n = 6".into());
            push(Claim::CharacterVanishes, Verdict::Skipped, "no certificate partition for n = 6".into());
        }
        Some(sigma) if sigma.size() as u64 != n => {
            push(Claim::SigmaNotSelfConjugate, Verdict::Fail, format!("{} does not partition {n}", sigma.compressed()));
            push(Claim::CharacterVanishes, Verdict::Skipped, "sigma invalid".into());
        }
        Some(sigma) if sigma.is_self_conjugate() => {
            let verdict = if self_conjugate_hook { Verdict::Flagged } else { Verdict::Fail };
            push(Claim::SigmaNotSelfConjugate, verdict, format!("{} is self-conjugate", sigma.compressed()));
            push(
                Claim::CharacterVanishes,
                Verdict::Skipped,
                "restriction to A_n is reducible; certificate not applicable".into(),
            );
            if self_conjugate_hook {
                report.notes.push(String::from(
                    "r = p^2-1 gives the self-conjugate hook (p^2,1^(p^2-1)); only claims (a)-(c) and (f) are certified",
                ));
            }
        }
        Some(sigma) => {
            push(Claim::SigmaNotSelfConjugate, Verdict::Pass, format!("{} is not self-conjugate", sigma.compressed()));
            let value = evaluator.evaluate(&sigma, report.cycle_type.partition())?;
            push(Claim::CharacterVanishes, pass_if(value.is_zero()), format!("chi = {value}"));
            report.mn_value = Some(value);
        }
    }

    match report.decomposition {
        None => push(Claim::ClosedFormMatches, Verdict::Skipped, "closed form applies for n >= 9".into()),
        Some(d) => {
            let reference = closed_form_sizes(n, d.p, d.k, d.r)?;
            let branch = closed_form_branch_of(&report.class_size, &reference);
            let splits = report.cycle_type.splits_in_alternating()?;
            let expected = if splits { ClosedFormBranch::Halved } else { ClosedFormBranch::Full };
            let detail = match branch {
                Some(b) => format!("matches {} branch; class splits: {splits}", b.as_str()),
                None => String::from("matches neither branch"),
            };
            push(Claim::ClosedFormMatches, pass_if(branch == Some(expected)), detail);
            report.closed_form_branch = branch;
        }
    }
    Ok(report)
}

fn report_push(verdicts: &mut Vec<ClaimVerdict>, claim: Claim, verdict: Verdict, detail: String) {
    verdicts.push(ClaimVerdict { claim, verdict, detail });
}

fn pass_if(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::mn_value;
    use alloc::string::ToString;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn construction_examples() {
        let seven = construct_alternating_witness(7).unwrap();
        assert_eq!(seven.cycle_type.partition(), &p(&[4, 2, 1]));
        assert_eq!(seven.sigma, Some(p(&[5, 2])));

        let nine = construct_alternating_witness(9).unwrap();
        assert_eq!(nine.cycle_type.partition(), &p(&[9]));
        assert_eq!(nine.sigma, Some(p(&[7, 2])));

        let fifty = construct_alternating_witness(50).unwrap();
        assert_eq!(fifty.decomposition, Some(Decomposition { p: 7, k: 1, r: 1 }));
        assert_eq!(fifty.cycle_type.partition(), &p(&[49, 1]));
        let mut hook = vec![2];
        hook.extend(core::iter::repeat_n(1, 48));
        assert_eq!(fifty.sigma, Some(p(&hook)));

        assert!(construct_alternating_witness(5).is_err());
    }

    #[test]
    fn verification_examples() {
        let six = verify_alternating_witness(6).unwrap();
        assert_eq!(six.class_size.to_u128(), Some(90));
        for c in [Claim::InAlternating, Claim::PrimePowerOrder, Claim::DividesEveryPrime] {
            assert_eq!(six.verdict(c), Some(Verdict::Pass));
        }

        let ten = verify_alternating_witness(10).unwrap();
        assert_eq!(ten.overall(), Verdict::Pass);
        assert_eq!(ten.decomposition.unwrap().p, 3);
        assert_eq!(ten.class_size.to_u128(), Some(201_600));
        assert_eq!(ten.class_size.prime_set(), [2, 3, 5, 7]);

        let twenty_six = verify_alternating_witness(26).unwrap();
        assert_eq!(twenty_six.decomposition, Some(Decomposition { p: 5, k: 1, r: 1 }));
        assert_eq!(twenty_six.sigma.as_ref().unwrap().compressed().to_string(), "(2,1^24)");
        assert_eq!(twenty_six.mn_value, Some(CharacterValue(0)));
        assert_eq!(twenty_six.overall(), Verdict::Pass);
    }

    #[test]
    fn self_conjugate_hook_is_flagged() {
        // 17 = 3^2 + 8 and no prime lies in (3, sqrt 17].
        let report = verify_alternating_witness(17).unwrap();
        assert_eq!(report.verdict(Claim::SigmaNotSelfConjugate), Some(Verdict::Flagged));
        assert_eq!(report.verdict(Claim::CharacterVanishes), Some(Verdict::Skipped));
        assert_eq!(report.verdict(Claim::DividesEveryPrime), Some(Verdict::Pass));
        assert_eq!(report.overall(), Verdict::Flagged);
        assert!(!report.notes.is_empty());
    }

    #[test]
    fn every_table_row_vanishes() {
        // Includes the two gap rows, which no n <= 300 reaches.
        for p_ in [3u64, 5, 7] {
            let sq = p_ * p_;
            let mut cases = vec![(1, 0)];
            cases.extend((1..sq - 1).map(|r| (1, r)));
            cases.extend((0..=sq - 3).map(|r| (2, r)));
            cases.extend([(2, sq - 2), (2, sq - 1)]);
            for (k, r) in cases {
                let d = Decomposition { p: p_, k, r };
                let (sigma, row) = certificate_partition(d).unwrap();
                assert_eq!(sigma.size() as u64, k * sq + r, "{row:?}");
                assert!(!sigma.is_self_conjugate(), "{row:?} p={p_} r={r}");
                let lambda = Partition::new(
                    core::iter::repeat_n(sq as usize, k as usize).chain(core::iter::repeat_n(1, r as usize)),
                )
                .unwrap();
                assert_eq!(mn_value(&sigma, &lambda).unwrap(), CharacterValue(0), "{row:?} p={p_} r={r}");
            }
        }
    }

    #[test]
    fn gap_rows_use_stated_shapes() {
        let (sigma, row) = certificate_partition(Decomposition { p: 3, k: 2, r: 7 }).unwrap();
        assert_eq!(row, CertificateRow::TwoSquaresGapTwo);
        assert_eq!(sigma, p(&[7, 7, 7, 1, 1, 1, 1]));
        let (sigma, row) = certificate_partition(Decomposition { p: 3, k: 2, r: 8 }).unwrap();
        assert_eq!(row, CertificateRow::TwoSquaresGapOne);
        assert_eq!(sigma.compressed().to_string(), "(7,7,1^12)");
    }
}
