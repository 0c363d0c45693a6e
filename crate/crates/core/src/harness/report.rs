use std::fmt::Write as _;

use crate::error::Result;
use crate::ifs::IfSubset;
use crate::semigroup::{Element, Semigroup};
use crate::transform::TransformParams;

use super::claims::{evaluate, Context, Violation};
use super::theorem::TheoremId;

/// First line of machine-readable output.
pub const MACHINE_HEADER: &str = "# ifmagnify-report v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Verified,
    Counterexample,
    /// The semigroup lacks the theorem's hypothesis; nothing was checked.
    HypothesisNotMet,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Verified => "verified",
            Outcome::Counterexample => "counterexample",
            Outcome::HypothesisNotMet => "hypothesis-not-met",
        }
    }
}

/// Everything needed to reproduce a refutation from scratch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub theorem: TheoremId,
    pub semigroup: Semigroup,
    pub subjects: Vec<IfSubset>,
    pub params: Option<TransformParams>,
    pub violation: Violation,
}

impl Certificate {
    /// Re-evaluates the claim and reports whether the identical violation
    /// comes back.
    pub fn replay(&self) -> Result<bool> {
        let ctx = Context::new(&self.semigroup);
        let subjects: Vec<&IfSubset> = self.subjects.iter().collect();
        Ok(evaluate(self.theorem, &ctx, &subjects, self.params)?.as_ref() == Some(&self.violation))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub semigroup: String,
    pub semigroups_checked: usize,
    pub subjects_checked: usize,
    pub cases_checked: usize,
    pub outcome: Outcome,
    pub note: String,
    pub certificate: Option<Certificate>,
}

fn tuple_text(tuple: &[Element]) -> String {
    tuple.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// `mu|nu` per element, comma separated.
pub fn subject_text(a: &IfSubset) -> String {
    (0..a.carrier_order())
        .map(|x| format!("{}|{}", a.mu(x), a.nu(x)))
        .collect::<Vec<_>>()
        .join(",")
}

fn one_line(text: &str) -> String {
    text.replace(['\t', '\n', '\r'], " ")
}

impl VerificationReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{} on {}: {} ({} subjects, {} cases)",
            self.theorem,
            self.semigroup,
            self.outcome.name(),
            self.subjects_checked,
            self.cases_checked
        );
        if !self.note.is_empty() {
            let _ = write!(out, "; {}", self.note);
        }
        if let Some(c) = &self.certificate {
            let _ = write!(out, "\n  violation: {}", c.violation.description);
            let _ = write!(out, "\n  at: ({})", tuple_text(&c.violation.tuple));
            for (i, a) in c.subjects.iter().enumerate() {
                let _ = write!(out, "\n  subject {i}: {}", subject_text(a));
            }
            if let Some(p) = c.params {
                let _ = write!(out, "\n  params: {p}");
            }
        }
        out
    }

    /// One tab-separated `key=value` record.
    pub fn render_machine(&self) -> String {
        let mut fields = vec![
            format!("theorem={}", self.theorem),
            format!("semigroup={}", one_line(&self.semigroup)),
            format!("semigroups={}", self.semigroups_checked),
            format!("subjects={}", self.subjects_checked),
            format!("cases={}", self.cases_checked),
            format!("outcome={}", self.outcome.name()),
            format!("note={}", one_line(&self.note)),
        ];
        if let Some(c) = &self.certificate {
            let subjects: Vec<String> = c.subjects.iter().map(subject_text).collect();
            fields.push(format!("cert.table={}", c.semigroup));
            fields.push(format!("cert.subjects={}", subjects.join(";")));
            if let Some(p) = c.params {
                fields.push(format!("cert.beta={}", p.beta));
                fields.push(format!("cert.alpha={}", p.alpha));
            }
            fields.push(format!("cert.tuple={}", tuple_text(&c.violation.tuple)));
            fields.push(format!("cert.violation={}", one_line(&c.violation.description)));
        }
        fields.join("\t")
    }
}
