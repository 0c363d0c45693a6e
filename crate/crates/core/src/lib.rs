//! Intuitionistic fuzzy magnified translations over finite semigroups.
//!
//! The crate has three layers:
//!
//! * [`semigroup`]: Cayley tables, crisp subsets, crisp ideals, regularity
//!   classification and exhaustive enumeration of small semigroups;
//! * [`ifs`], [`transform`], [`predicate`], [`composition`]: exact-rational
//!   intuitionistic fuzzy subsets, their translations, the fuzzy ideal
//!   predicates and the sup-min product;
//! * [`harness`]: a checker that evaluates each characterization theorem over
//!   enumerated semigroups and sampled fuzzy subsets, reporting certificates
//!   for anything that fails.

pub mod composition;
pub mod error;
pub mod grade;
pub mod harness;
pub mod ifs;
pub mod io;
pub mod predicate;
pub mod semigroup;
pub mod transform;

pub use composition::{build_factorizations, if_product, FactorizationIndex};
pub use error::{Error, Result};
pub use grade::{parse_rational, Grade, Rational};
pub use ifs::{characteristic_pair, validate_ifs, IfSubset};
pub use predicate::{check, semiprime_inequalities, Counterexample, FuzzyStructureKind, Verdict};
pub use semigroup::{Classification, Element, ElementSubset, Semigroup};
pub use transform::{magnify, max_alpha, multiply, translate, TransformParams};
