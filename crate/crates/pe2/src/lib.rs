//! The projective elementary group PE(2,R) of a finite ring: generators and
//! relations, word reduction to normal form, the half-integer length lattice
//! with exact minimal lengths computed by exhausting each level, stable-range
//! equivalences, and perfectness/simplicity checks for small rings.

mod commutators;
mod ctx;
mod group;
mod multiplier;
mod ordbfs;
mod ordval;
mod stable;
mod word;

pub use commutators::{
    commutator_identities_check, diagonal_commutator_identity, lambda_swap_displays, lower_half_order,
    multiplier_over_commutators_check, multiplier_over_commutators_word,
    q_qop_ratio_in_gl2_derived, rbs_solvability_report, swap_in_commutator_subgroup,
    unit_with_unit_shift, CommutatorReport, RbsReport, SwapCommutatorReport,
};
pub use ctx::{Pe2Class, Pe2Ctx};
pub use group::{
    derived_subgroup, enumerate_pe, normal_closure, pe1_members, pe2_members,
    subgroup_closure, subgroup_lattice_checks, GroupsReport, PeGroup, GROUP_SIZE_LIMIT,
    LATTICE_SIZE_LIMIT,
};
pub use multiplier::{
    complete_to_multiplier, multiplier_word_fixture_all_units, multiplier_word_fixture_holds,
    multiplier_word_for_unit, MultiplierCompletion,
};
pub use ordbfs::{ord_table, OrdTable};
pub use ordval::OrdValue;
pub use stable::{
    q3_witnesses, qsr_condition, stable_range_one, stable_range_report, StableRangeReport,
};
pub use word::{normalize, normalize_checked, ord_of_word, Generator, GroupWord, NormalForm};
