//! Translation, multiplication and magnified translation of an
//! intuitionistic fuzzy subset.
//!
//! The magnified translation with parameters `(beta, alpha)` maps
//! `mu ↦ beta·mu + alpha` and `nu ↦ beta·nu − alpha`. `alpha` may not exceed
//! `min_x beta·nu(x)` over the whole carrier, which keeps every transformed
//! non-membership grade non-negative.

use std::fmt;

use crate::error::{Error, Result};
use crate::grade::{self, Grade, Rational};
use crate::ifs::IfSubset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TransformParams {
    pub beta: Grade,
    pub alpha: Grade,
}

impl TransformParams {
    pub fn new(beta: Grade, alpha: Grade) -> TransformParams {
        TransformParams { beta, alpha }
    }

    /// Range-checks raw rationals; the subject-dependent alpha bound is
    /// checked when the transform is applied.
    pub fn from_rationals(beta: Rational, alpha: Rational) -> Result<TransformParams> {
        let beta_grade = Grade::new(beta).filter(|b| !b.is_zero()).ok_or(Error::BetaOutOfRange { beta })?;
        let alpha_grade = Grade::new(alpha).ok_or(Error::AlphaOutOfRange {
            alpha,
            max: Grade::ONE.value(),
        })?;
        Ok(TransformParams::new(beta_grade, alpha_grade))
    }
}

impl fmt::Display for TransformParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "beta={} alpha={}", self.beta, self.alpha)
    }
}

/// `min_x beta·nu(x)`, the largest admissible alpha.
pub fn max_alpha(a: &IfSubset, beta: Grade) -> Result<Grade> {
    let least_nu = a.nu_values().iter().min().copied().unwrap_or(Grade::ZERO);
    let bound = grade::mul(beta.value(), least_nu.value())?;
    Ok(Grade::new(bound).expect("product of grades is a grade"))
}

fn rebuild(a: &IfSubset, f_mu: impl Fn(Rational) -> Result<Rational>, f_nu: impl Fn(Rational) -> Result<Rational>) -> Result<IfSubset> {
    let map = |values: &[Grade], f: &dyn Fn(Rational) -> Result<Rational>| -> Result<Vec<Grade>> {
        values
            .iter()
            .enumerate()
            .map(|(element, g)| {
                let value = f(g.value())?;
                Grade::new(value).ok_or(Error::GradeOutOfRange { element, value })
            })
            .collect()
    };
    IfSubset::new(map(a.mu_values(), &f_mu)?, map(a.nu_values(), &f_nu)?)
}

/// `(mu + alpha, nu − alpha)` for `alpha ∈ [0, min nu]`.
pub fn translate(a: &IfSubset, alpha: Grade) -> Result<IfSubset> {
    let max = max_alpha(a, Grade::ONE)?;
    if alpha > max {
        return Err(Error::AlphaOutOfRange {
            alpha: alpha.value(),
            max: max.value(),
        });
    }
    let shift = alpha.value();
    rebuild(a, |m| grade::add(m, shift), |v| grade::sub(v, shift))
}

/// `(beta·mu, beta·nu)` for `beta ∈ [0, 1]`.
pub fn multiply(a: &IfSubset, beta: Grade) -> Result<IfSubset> {
    let scale = beta.value();
    rebuild(a, |m| grade::mul(scale, m), |v| grade::mul(scale, v))
}

/// `(beta·mu + alpha, beta·nu − alpha)` for `beta ∈ (0, 1]` and
/// `alpha ∈ [0, max_alpha(a, beta)]`.
pub fn magnify(a: &IfSubset, params: TransformParams) -> Result<IfSubset> {
    let TransformParams { beta, alpha } = params;
    if beta.is_zero() {
        return Err(Error::BetaOutOfRange { beta: beta.value() });
    }
    let max = max_alpha(a, beta)?;
    if alpha > max {
        return Err(Error::AlphaOutOfRange {
            alpha: alpha.value(),
            max: max.value(),
        });
    }
    let (scale, shift) = (beta.value(), alpha.value());
    rebuild(
        a,
        |m| grade::add(grade::mul(scale, m)?, shift),
        |v| grade::sub(grade::mul(scale, v)?, shift),
    )
}
