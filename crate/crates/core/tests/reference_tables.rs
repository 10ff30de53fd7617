use bredon_core::homology::{verify_basis_expressions, Verdict};
use bredon_core::reference::{
    builtin_reports, check_homology_types, check_induced_characters, check_invariant_factors, check_reference_bases,
    CheckOutcome,
};

fn failures(outcomes: &[CheckOutcome]) -> Vec<&CheckOutcome> {
    outcomes.iter().filter(|o| !o.pass).collect()
}

#[test]
fn induced_character_table() {
    let rows = check_induced_characters().unwrap();
    assert_eq!(rows.len(), 17);
    assert!(failures(&rows).is_empty(), "{:#?}", failures(&rows));
}

#[test]
fn homology_types() {
    let rows = check_homology_types(&builtin_reports().unwrap());
    assert_eq!(rows.len(), 17);
    assert!(failures(&rows).is_empty(), "{:#?}", failures(&rows));
}

#[test]
fn invariant_factor_spot_checks() {
    let rows = check_invariant_factors(&builtin_reports().unwrap());
    assert!(failures(&rows).is_empty(), "{:#?}", failures(&rows));
}

#[test]
fn reference_bases_accepted_except_cm_h1() {
    let rows = check_reference_bases(&builtin_reports().unwrap()).unwrap();
    // 17 nonzero H_0 columns and 8 nonzero H_1 columns
    assert_eq!(rows.len(), 25);
    let failed: Vec<&str> = failures(&rows).iter().map(|o| o.item.as_str()).collect();
    assert_eq!(failed, ["cm H1 (beta_1^1, beta_1^2)"]);
}

// C_1 of cm is Z^3 on (beta_0, beta_1^1, beta_1^2) and the only boundary is
// (2, 1, 1). The lattice spanned by beta_1^1, beta_1^2 and (2, 1, 1) has
// determinant
//   | 0 0 2 |
//   | 1 0 1 | = 2,
//   | 0 1 1 |
// so [beta_1^1], [beta_1^2] span an index-2 subgroup of H_1 and miss [beta_0].
#[test]
fn cm_reference_basis_misses_beta_0() {
    let reports = builtin_reports().unwrap();
    let cm = reports.iter().find(|r| r.group_name == "cm").unwrap();
    let boundary: Vec<i64> = cm.phi2.column(0).iter().map(|x| i64::try_from(x).unwrap()).collect();
    assert_eq!(boundary, [2, 1, 1]);
    let printed = verify_basis_expressions(cm, 1, &["beta_1^1", "beta_1^2"]).unwrap();
    assert!(matches!(printed, Verdict::Reject(_)));
    for fixed in [["beta_0", "beta_1^1"], ["beta_0", "beta_1^2"]] {
        assert_eq!(verify_basis_expressions(cm, 1, &fixed).unwrap(), Verdict::Accept);
    }
}
