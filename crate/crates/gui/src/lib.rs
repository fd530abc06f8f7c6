//! Verifiers, witness constructors and failure certifiers for the
//! unit-translate intersection properties over finite rings: for k-1 given
//! elements s(i), find (or exhaustively rule out) a unit u with every
//! u + s(i) a unit. Includes the bit-packed engines for matrices over gf(2),
//! the Peirce corner constructions, the explicit failure families, density
//! and kernel bounds, and replayable certificates.

pub mod bone;
pub mod dense;
pub mod families;
pub mod fixtures;
pub mod instance;
pub mod peirce;
pub mod search;

pub use bone::{bone2_fails, bone3_exhaustive, bone4_exhaustive, bone5_shard, bone5_smoke, BoneOutcome};
pub use families::{
    additivity_check, artinian_classifier, conjecture_probe, density_bounds,
    failure_family_row, failure_family_scalar_rows, find_row_family_scalar,
    m4f2_four_translates_probe, measure_toy_exhaustive, normalization_stability,
    product_law_check, property_one_experimental, radical_law_check, subfield_kernel_bound,
    unit_difference_set, ArtinianReport, DensityReport, FailureCertificate, KernelBoundReport,
    ProbeReport, RowFamilyOutcome,
};
pub use instance::{
    is_witness, verify_certificate, InstanceDesc, NormalizationDesc, Provenance, Stats,
    VerdictDesc, WitnessCertificate, CERT_SCHEMA,
};
pub use peirce::{corner_composition, lemma_corner_lift, relative_inverse, triangular_witness};
pub use search::{
    aggregate_certificate, check_gui, check_gui_sharded, check_instance, find_witness, witness_pool,
    AggregateCertificate, AggregateOutcome, Strategy,
};
