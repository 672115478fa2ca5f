//! Euler restriction maps and what they say about freeness: exactness and
//! surjectivity, SPOG classification of deletions, the addition criterion,
//! nonfree loci and exceptional sets, and the long exact sequences.

mod addition;
mod numbering;
mod les;
mod loci;
mod sequence;
mod spog;
mod triple;

pub use addition::{addition_equiv_check, addition_predicate, AdditionFlat, AdditionPredicate, AdditionReport};
pub use les::{base_change_check, cokernel_series, ext_series, les_consistency, BaseChange, ExtPair, LesReport};
pub use loci::{
    codim_in_h, containment_check, exceptional_report, flats_in, FreeDeletion, local_triple, locus_descriptor, nd_set,
    nomega_agreement, nomega_set, nonfree_locus, ContainmentReport, ExceptionalReport, FlatRecord,
    NomegaAgreement,
};
pub use sequence::{
    checked_degrees, euler_image, euler_sequence, fst_verify, fst_verify_one, generalized_euler, is_surjective,
    EulerImage, FstReport, GeneralizedEulerReport, SequenceReport, Side,
};
pub use spog::{
    b2_identity_check, b2_multi, deletion_theorem_verify, spog_classify, B2Report, DeletionPart,
    DeletionTheoremReport, SpogClassification, Verdict,
};
pub use triple::{derivation_in_y, form_in_y, form_restrict, rho_restrict, EulerTriple};
