//! Wedderburn continuants over arbitrary coefficient rings: the P/Q sequences
//! and their right-handed opposites, the 2x2 transfer matrices, and the
//! identity, invertibility-transfer, zero-transfer and determinant checks
//! that the verification suite runs both symbolically and over finite rings.

mod identities;
mod quad;
mod solve;
mod transfer;
mod words;

pub use identities::{
    check_identities, random_identity_report, symbolic_identity_report, IdentityCheck,
    IdentityReport, RandomIdentityReport,
};
pub use quad::{build_quad, build_quad_in, free_tuple, random_tuple, ContinuantQuad};
pub use solve::{solve_prefix_equations, splitting_identity};
pub use transfer::{
    det_equality, factor_product, invert_transfer, op_transfer_invertibility, transfer_matrix,
    zero_transfer, OpTransferOutcome, ZeroTransferOutcome,
};
pub use words::{fibonacci, word_model, word_model_matches_free_quad};
