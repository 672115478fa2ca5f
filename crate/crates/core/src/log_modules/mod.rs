//! Logarithmic derivation and form modules of multiarrangements, freeness tests,
//! Euler multiplicities and the degree certificates attached to a hyperplane.

mod certificates;
mod duality;
pub mod exterior;
mod freeness;
mod generalized;
mod logmod;
mod rank2;

pub use certificates::{lemma_tlemma_check, prop_b_check, LemmaReport, PropBReport};
pub use duality::{
    derivations_to_forms, duality_between, duality_check, duality_iso, forms_to_derivations, DualityReport,
};
pub use freeness::{
    exponents, freeness, is_free, module_freeness, saito_check, saito_for, FreenessVerdict, SaitoResult,
};
pub use generalized::{generalized_log_module, log_contains};
pub use logmod::{
    brute_force_degree, brute_force_form_degree, dense_piece, derivation_conditions, derivation_module,
    form_conditions, form_module, module_from_conditions, Congruence, DensePiece, LogKind, LogModule,
};
pub use rank2::{euler_multiplicity, euler_restriction, rank2_basis_adapted, EulerRestriction, Rank2Data};
