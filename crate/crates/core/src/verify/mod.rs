//! Independent oracles and the claims engine.

pub mod claims;
pub mod hp;
pub mod oracles;
pub mod report;

pub use claims::{claim_ids, run_claim, run_claims_report};
pub use oracles::{finite_difference, heron_area, law_of_cosines_residual};
pub use report::{ClaimRecord, ClaimStatus, ClaimsReport, Expectations, Witness};
