//! The acceptance suite: one test per claim, each running the shared suite
//! runner and printing its pass/fail line. Every threshold is pinned in the
//! runners themselves.
//!
//! c07b is the one documented-red check: the literal sub-claim that some
//! element of PE(2, gf(3)) attains length exactly 2 is refuted by the
//! exhaustive certified search (the maximum over a field is 3/2); see the
//! project notes. It is kept as stated rather than weakened.

use cli::suite::*;

fn check(outcome: CriterionOutcome) {
    println!(
        "[{}] {} {} ({} ms): {}",
        outcome.id,
        if outcome.pass { "PASS" } else { "FAIL" },
        outcome.title,
        outcome.millis,
        outcome.detail
    );
    assert!(outcome.pass, "[{}] {}: {}", outcome.id, outcome.title, outcome.detail);
}

#[test]
fn c01_identity_suite_symbolic_and_random() {
    check(c01_identity_suite());
}

#[test]
fn c02_fibonacci_structure_counts_and_word_model() {
    check(c02_fibonacci_structure());
}

#[test]
fn c03_invertibility_transfer_exhaustive() {
    check(c03_invertibility_transfer());
}

#[test]
fn c04_zero_transfer_exhaustive() {
    check(c04_zero_transfer());
}

#[test]
fn c05_determinant_equality_random() {
    check(c05_det_equality());
}

#[test]
fn c06_pe2_calculus_fixture_relations_normalize() {
    check(c06_pe2_calculus());
}

#[test]
fn c07a_ord_and_stable_range() {
    check(c07a_ord_stable_range());
}

#[test]
fn c07b_gf3_ord_two_spec_literal_known_defect() {
    // Documented spec defect, kept as stated: expected to fail. The analysis
    // lives in the decisions notes; the zmod(4) attainment is recorded under
    // c07a.
    check(c07b_gf3_ord_two_as_stated());
}

#[test]
fn c08_group_structure_small_fields() {
    check(c08_group_structure());
}

#[test]
fn c09_positive_translate_cases_exhaustive() {
    check(c09_positive_cases());
}

#[test]
fn c10_negative_translate_cases_exhaustive() {
    check(c10_negative_cases());
}

#[test]
fn c11_appendix_three_translate_cases() {
    check(c11_appendix_cases());
}

#[test]
fn c12_density_and_kernel_bounds() {
    check(c12_bounds());
}

#[test]
fn c13_closure_and_composition_laws() {
    check(c13_closure_laws());
}
