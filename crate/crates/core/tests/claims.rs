use std::collections::HashSet;
use std::sync::OnceLock;

use ndegree::verify::{claim_ids, run_claim, Expectations};
use ndegree::{run_claims_report, ClaimStatus, ClaimsReport};

fn report() -> &'static ClaimsReport {
    static REPORT: OnceLock<ClaimsReport> = OnceLock::new();
    REPORT.get_or_init(run_claims_report)
}

#[test]
fn every_claim_appears_once_in_registration_order() {
    let ids: Vec<_> = report().claims.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, claim_ids());
    let unique: HashSet<_> = ids.iter().collect();
    assert_eq!(unique.len(), ids.len());
}

#[test]
fn two_runs_serialize_identically() {
    assert_eq!(run_claims_report().to_json(), report().to_json());
}

#[test]
fn statuses_match_the_shipped_expectations() {
    let mismatches = report().mismatches(&Expectations::bundled());
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn oracles_are_named_and_distinct_from_the_claim() {
    for c in &report().claims {
        assert!(!c.oracle.is_empty(), "{}", c.id);
        assert!(!c.paper_ref.is_empty(), "{} has no citation", c.id);
        assert!(c.tolerance >= 0.0, "{}", c.id);
    }
}

#[test]
fn refutations_carry_confirmed_witnesses() {
    for c in report()
        .claims
        .iter()
        .filter(|c| c.status == ClaimStatus::Refuted)
    {
        assert!(c.worst_residual > 100.0 * c.tolerance, "{}", c.id);
        let hp = c
            .high_precision_residual
            .expect("high-precision confirmation");
        assert!(hp > 100.0 * c.tolerance, "{}", c.id);
        assert!(
            c.witness.gamma.is_some() && c.witness.n.is_some(),
            "{}",
            c.id
        );
    }
}

#[test]
fn isosceles_limit_is_the_equilateral_area() {
    let c = report().get("C-EQ22").unwrap();
    assert_eq!(c.status, ClaimStatus::Refuted);
    assert_eq!((c.witness.gamma, c.witness.a), (Some(1.0), Some(1.0)));
    let heron = c.evaluations["heron"];
    assert!((heron - 3f64.sqrt() / 4.0).abs() < 1e-6);
    assert!((c.evaluations["claimed"] - 6f64.sqrt()).abs() < 1e-15);

    let c = report().get("C-EQ21").unwrap();
    assert_eq!(c.status, ClaimStatus::Refuted);
    assert!((c.evaluations["derived_at_n2"] - 0.5).abs() < 1e-15);
    assert!((c.evaluations["printed_at_n2"] - 2f64.sqrt()).abs() < 1e-15);
}

#[test]
fn headline_claims_hold() {
    for id in [
        "C-EQ26", "C-GAMMA2", "C-N2ONLY", "C-SQRT2", "C-EQ30EQ", "C-EQ20",
    ] {
        assert_eq!(
            report().get(id).unwrap().status,
            ClaimStatus::Verified,
            "{id}"
        );
    }
}

#[test]
fn single_claims_match_the_full_report() {
    for id in ["C-EQ2", "C-EQANGLE", "C-NCRIT0"] {
        let alone = run_claim(id).unwrap();
        assert_eq!(&alone, report().get(id).unwrap());
    }
    assert!(run_claim("C-NOPE").is_none());
}

#[test]
fn expectations_round_trip_through_json() {
    let text = include_str!("../data/claims_expected.json");
    let parsed = Expectations::from_json(text).unwrap();
    assert_eq!(parsed.statuses.len(), claim_ids().len());
    assert!(Expectations::from_json("{\"version\": 1}").is_err());
}
