//! Exact, allocation-only arithmetic for auditing prime-power vanishing
//! elements in finite simple groups.
//!
//! Everything here is pure: no IO, no global state, no floating point.
//! Group orders and class sizes never leave [`PrimeFactorization`] form
//! unless they fit in a `u128`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod characters;
pub mod check;
pub mod classes;
mod error;
pub mod numtheory;
pub mod oracle;
pub mod partitions;
pub mod witnesses;

pub use check::{CheckOutcome, Evidence, EvidenceValue, Verdict};
pub use error::{Error, Result};
pub use numtheory::PrimeFactorization;
pub use partitions::Partition;
