//! Mechanical verification of the magnified-translation theorems over
//! enumerated semigroups and sampled subjects.
//!
//! [`claims`] states each theorem on explicit inputs; [`run_suite`] sweeps
//! them over whole families and produces [`VerificationReport`]s whose
//! certificates replay through [`Certificate::replay`].

pub mod claims;
mod checks;
mod report;
mod sample;
mod suite;
mod theorem;

pub use checks::{
    check_archimedean_constant, check_characterization, check_group_constant, check_product_inclusions,
    check_regular_iff_product, check_semiprime_fixedpoint, check_semiprime_intersection,
    check_transform_equivalence,
};
pub use claims::{characterization_witness, crisp_product_witness, Context, Violation};
pub use report::{subject_text, Certificate, Outcome, VerificationReport, MACHINE_HEADER};
pub use sample::{random_subjects, sample_ifs, AlphaChoice, SampleSpec, SubjectStream};
pub use suite::{
    check_one, run_suite, run_suite_on, suite_semigroups, LabeledSemigroup, SuiteConfig, SuiteRun,
    SuiteSummary,
};
pub use theorem::{CharacterizationKind, ProductKind, TheoremId, UnknownTheorem};
