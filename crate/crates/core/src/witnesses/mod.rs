//! Witness elements and the divisibility claims made about them.

pub mod alternating;
pub mod lie;
pub mod psl2;
pub mod spot;

pub use alternating::{
    certificate_partition, construct_alternating_witness, verify_alternating_witness, verify_alternating_witness_with,
    CertificateRow, Claim, ClaimVerdict, Decomposition, WitnessReport,
};
pub use lie::{lie_divisor_check, LieFamily};
pub use psl2::{psl2_classify, psl2_outcome, KnownException, Psl2Case, Psl2Classification};
pub use spot::{builtin_spot_values, check_spot_value, SpotValue};
