//! Single-instance entry points over one semigroup.

use crate::error::{Error, Result};
use crate::ifs::IfSubset;
use crate::predicate::FuzzyStructureKind;
use crate::semigroup::Semigroup;
use crate::transform::TransformParams;

use super::claims::{self, Context, Violation};
use super::report::{Certificate, Outcome, VerificationReport};
use super::sample::SampleSpec;
use super::suite::check_one;
use super::theorem::{CharacterizationKind, ProductKind, TheoremId};

fn single(
    theorem: TheoremId,
    s: &Semigroup,
    subjects: &[&IfSubset],
    params: Option<TransformParams>,
    cases: usize,
    violation: Option<Violation>,
) -> VerificationReport {
    VerificationReport {
        theorem,
        semigroup: s.to_string(),
        semigroups_checked: 1,
        subjects_checked: subjects.len(),
        cases_checked: cases,
        outcome: if violation.is_some() {
            Outcome::Counterexample
        } else {
            Outcome::Verified
        },
        note: String::new(),
        certificate: violation.map(|violation| Certificate {
            theorem,
            semigroup: s.clone(),
            subjects: subjects.iter().map(|&a| a.clone()).collect(),
            params,
            violation,
        }),
    }
}

fn single_pass(theorem: TheoremId, s: &Semigroup, subjects: &[&IfSubset], params: TransformParams) -> Result<VerificationReport> {
    let ctx = Context::new(s);
    let v = claims::evaluate(theorem, &ctx, subjects, Some(params))?;
    Ok(single(theorem, s, subjects, Some(params), 1, v))
}

fn only(mut reports: Vec<VerificationReport>) -> VerificationReport {
    reports.pop().expect("one theorem requested")
}

/// `check(kind, S, A)` agrees with `check(kind, S, magnify(A, params))`.
pub fn check_transform_equivalence(
    kind: FuzzyStructureKind,
    s: &Semigroup,
    a: &IfSubset,
    params: TransformParams,
) -> Result<VerificationReport> {
    single_pass(TheoremId::Equivalence(kind), s, &[a], params)
}

/// In a group, `A` is a bi-ideal iff `magnify(A, params)` is constant.
pub fn check_group_constant(s: &Semigroup, a: &IfSubset, params: TransformParams) -> Result<VerificationReport> {
    single_pass(TheoremId::GroupConstant, s, &[a], params)
}

/// `A ∩ B` and, for every sampled parameter choice, the intersection of the
/// magnified translations are semiprime ideals.
pub fn check_semiprime_intersection(
    s: &Semigroup,
    a: &IfSubset,
    b: &IfSubset,
    spec: &SampleSpec,
) -> Result<VerificationReport> {
    let theorem = TheoremId::SemiprimeIntersection;
    let ctx = Context::new(s);
    let mut cases = 1;
    let mut found = claims::semiprime_intersection(&ctx, a, b, None)?.map(|v| (v, None));
    if found.is_none() {
        for p in spec.params_for(&[a, b])? {
            cases += 1;
            if let Some(v) = claims::semiprime_intersection(&ctx, a, b, Some(p))? {
                found = Some((v, Some(p)));
                break;
            }
        }
    }
    Ok(match found {
        None => single(theorem, s, &[a, b], None, cases, None),
        Some((v, p)) => single(theorem, s, &[a, b], p, cases, Some(v)),
    })
}

/// A semiprime ideal's magnified translation agrees at `x` and `x^2`.
pub fn check_semiprime_fixedpoint(s: &Semigroup, a: &IfSubset, params: TransformParams) -> Result<VerificationReport> {
    single_pass(TheoremId::FixedPoint, s, &[a], params)
}

/// Two-sided check of a regularity characterization on sampled subjects.
pub fn check_characterization(
    kind: CharacterizationKind,
    s: &Semigroup,
    spec: &SampleSpec,
) -> Result<VerificationReport> {
    Ok(only(check_one(&s.to_string(), s, &[TheoremId::Characterization(kind)], spec)?))
}

/// In an archimedean semigroup a semiprime ideal magnifies to a constant.
pub fn check_archimedean_constant(s: &Semigroup, a: &IfSubset, params: TransformParams) -> Result<VerificationReport> {
    single_pass(TheoremId::ArchimedeanConstant, s, &[a], params).map_err(|e| match e {
        Error::HypothesisNotMet(why) => Error::PreconditionNotMet(why),
        other => other,
    })
}

/// `A' ∘ B' ⊇ A' ∩ B'` (both orders of the product) for magnified
/// bi-ideals or (1,2)-ideals.
pub fn check_product_inclusions(
    s: &Semigroup,
    a: &IfSubset,
    b: &IfSubset,
    params: TransformParams,
    kind: ProductKind,
) -> Result<VerificationReport> {
    let theorem = match kind {
        ProductKind::BiIdealPair => TheoremId::ProductBiIdeal,
        ProductKind::OneTwoPair => TheoremId::ProductOneTwo,
    };
    single_pass(theorem, s, &[a, b], params)
}

/// Regularity agrees with `RL = R ∩ L` on crisp ideals and with
/// `A ∘ B = A ∩ B` on sampled fuzzy ideals, magnified when requested.
pub fn check_regular_iff_product(s: &Semigroup, spec: &SampleSpec, magnified: bool) -> Result<VerificationReport> {
    let theorem = if magnified {
        TheoremId::RegularProductMagnified
    } else {
        TheoremId::RegularProduct
    };
    Ok(only(check_one(&s.to_string(), s, &[theorem], spec)?))
}
