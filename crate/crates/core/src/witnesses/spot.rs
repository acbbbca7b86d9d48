//! Class sizes quoted for small groups where the general construction
//! does not apply.

use alloc::format;
use alloc::vec::Vec;

use crate::check::{CheckOutcome, EvidenceValue, Verdict};
use crate::error::Result;
use crate::numtheory::{factorize, PrimeFactorization};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpotValue {
    pub group: &'static str,
    pub element_order: u64,
    pub class_size: PrimeFactorization,
}

type SpotRow = (&'static str, u64, &'static [(u64, u32)]);

pub fn builtin_spot_values() -> Vec<SpotValue> {
    let table: [SpotRow; 4] = [
        ("A6", 4, &[(2, 1), (3, 2), (5, 1)]),
        ("PSL3(3)", 4, &[(2, 1), (3, 3), (13, 1)]),
        ("PSU3(3)", 4, &[(2, 1), (3, 3), (7, 1)]),
        ("PSp4(3)", 2, &[(2, 1), (3, 3), (5, 1)]),
    ];
    table
        .into_iter()
        .map(|(group, element_order, pairs)| SpotValue {
            group,
            element_order,
            class_size: PrimeFactorization::from_pairs(pairs.iter().copied()).expect("table entries are prime"),
        })
        .collect()
}

/// Prime-power order and at least three primes in the class size.
pub fn check_spot_value(spot: &SpotValue) -> Result<CheckOutcome> {
    let order = factorize(spot.element_order as u128)?;
    let ok = order.is_prime_power() && spot.class_size.distinct_prime_count() >= 3;
    let mut out = CheckOutcome::new(
        format!("{} order {}", spot.group, spot.element_order),
        if ok { Verdict::Pass } else { Verdict::Fail },
    )
    .with("element_order", EvidenceValue::Int(spot.element_order as u128))
    .with("class_size", EvidenceValue::Factorization(spot.class_size.clone()));
    if let Some(v) = spot.class_size.to_u128() {
        out = out.with("value", EvidenceValue::Int(v));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values_reproduce() {
        let spots = builtin_spot_values();
        let values: Vec<_> =
            spots.iter().map(|s| (s.group, s.element_order, s.class_size.to_u128().unwrap())).collect();
        assert_eq!(values, [("A6", 4, 90), ("PSL3(3)", 4, 702), ("PSU3(3)", 4, 378), ("PSp4(3)", 2, 270)]);
        for s in &spots {
            assert!(check_spot_value(s).unwrap().passed(), "{}", s.group);
        }
    }

    #[test]
    fn composite_order_fails() {
        let bad = SpotValue { group: "X", element_order: 6, class_size: factorize(360).unwrap() };
        assert!(!check_spot_value(&bad).unwrap().passed());
    }
}
