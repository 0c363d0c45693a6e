use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::grade::Grade;
use crate::ifs::{characteristic_pair, IfSubset};
use crate::predicate::{holding_conditions, Condition, FuzzyStructureKind};
use crate::semigroup::{builtin_library, enumerate_semigroups, nonempty_subsets, Semigroup};
use crate::transform::{magnify, max_alpha, TransformParams};

use super::claims::{self, Context, Violation};
use super::report::{Certificate, Outcome, VerificationReport};
use super::sample::{sample_ifs, SampleSpec};
use super::theorem::{CharacterizationKind, ProductKind, TheoremId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Orders to enumerate exhaustively, each at most 3.
    pub orders: Vec<usize>,
    /// Also run over the built-in library.
    pub include_library: bool,
    pub theorems: Vec<TheoremId>,
    pub spec: SampleSpec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            orders: vec![1, 2, 3],
            include_library: false,
            theorems: TheoremId::ALL.to_vec(),
            spec: SampleSpec::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSemigroup {
    pub label: String,
    pub semigroup: Semigroup,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    pub semigroups: usize,
    pub reports: usize,
    pub verified: usize,
    pub counterexamples: usize,
    pub hypothesis_not_met: usize,
    pub cases: usize,
}

impl SuiteSummary {
    pub fn render_machine(&self) -> String {
        format!(
            "summary\tsemigroups={}\treports={}\tverified={}\tcounterexamples={}\thypothesis-not-met={}\tcases={}",
            self.semigroups,
            self.reports,
            self.verified,
            self.counterexamples,
            self.hypothesis_not_met,
            self.cases
        )
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} semigroups, {} counterexamples ({} reports: {} verified, {} hypothesis not met; {} cases)",
            self.semigroups,
            self.counterexamples,
            self.reports,
            self.verified,
            self.hypothesis_not_met,
            self.cases
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteRun {
    pub reports: Vec<VerificationReport>,
    pub summary: SuiteSummary,
}

/// Enumerated semigroups of the given orders, then optionally the library.
pub fn suite_semigroups(orders: &[usize], include_library: bool) -> Result<Vec<LabeledSemigroup>> {
    let mut out = Vec::new();
    for &n in orders {
        for (i, s) in enumerate_semigroups(n)?.enumerate() {
            out.push(LabeledSemigroup {
                label: format!("order{n}#{i} {s}"),
                semigroup: s,
            });
        }
    }
    if include_library {
        out.extend(builtin_library().into_iter().map(|entry| LabeledSemigroup {
            label: entry.name,
            semigroup: entry.semigroup,
        }));
    }
    Ok(out)
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteRun> {
    let semigroups = suite_semigroups(&config.orders, config.include_library)?;
    run_suite_on(&semigroups, &config.theorems, &config.spec)
}

/// Checks every selected theorem on every semigroup. Reports are ordered by
/// semigroup position, then theorem.
pub fn run_suite_on(
    semigroups: &[LabeledSemigroup],
    theorems: &[TheoremId],
    spec: &SampleSpec,
) -> Result<SuiteRun> {
    spec.validate()?;
    let mut selected = theorems.to_vec();
    selected.sort_by_key(|t| t.ordinal());
    selected.dedup();

    let mut pools: BTreeMap<usize, Vec<IfSubset>> = BTreeMap::new();
    for entry in semigroups {
        let n = entry.semigroup.order();
        if let std::collections::btree_map::Entry::Vacant(slot) = pools.entry(n) {
            slot.insert(sample_ifs(n, spec)?.collect());
        }
    }

    let per_semigroup: Vec<Vec<VerificationReport>> = semigroups
        .par_iter()
        .enumerate()
        .map(|(position, entry)| {
            let pool = &pools[&entry.semigroup.order()];
            check_semigroup(position, entry, pool, &selected, spec)
        })
        .collect::<Result<_>>()?;

    let reports: Vec<VerificationReport> = per_semigroup.into_iter().flatten().collect();
    let mut summary = SuiteSummary {
        semigroups: semigroups.len(),
        reports: reports.len(),
        ..SuiteSummary::default()
    };
    for r in &reports {
        summary.cases += r.cases_checked;
        match r.outcome {
            Outcome::Verified => summary.verified += 1,
            Outcome::Counterexample => summary.counterexamples += 1,
            Outcome::HypothesisNotMet => summary.hypothesis_not_met += 1,
        }
    }
    Ok(SuiteRun { reports, summary })
}

/// Conditions holding on a subject, one bit per [`Condition::ALL`] entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Flags(u8);

impl Flags {
    fn compute(s: &Semigroup, a: &IfSubset) -> Result<Flags> {
        let holding = holding_conditions(s, a, &Condition::ALL)?;
        Ok(Flags(
            holding
                .iter()
                .enumerate()
                .fold(0, |acc, (i, &h)| if h { acc | 1 << i } else { acc }),
        ))
    }

    fn has(self, kind: FuzzyStructureKind) -> bool {
        kind.conditions().iter().all(|c| {
            let i = Condition::ALL.iter().position(|d| d == c).expect("listed");
            self.0 & (1 << i) != 0
        })
    }
}

struct Tally<'a> {
    theorem: TheoremId,
    semigroup: &'a Semigroup,
    subjects: usize,
    cases: usize,
    certificate: Option<Certificate>,
}

impl<'a> Tally<'a> {
    fn new(theorem: TheoremId, semigroup: &'a Semigroup) -> Tally<'a> {
        Tally {
            theorem,
            semigroup,
            subjects: 0,
            cases: 0,
            certificate: None,
        }
    }

    fn failed(&self) -> bool {
        self.certificate.is_some()
    }

    fn record(&mut self, subjects: &[&IfSubset], params: Option<TransformParams>, result: Option<Violation>) {
        self.cases += 1;
        if let (Some(violation), None) = (result, &self.certificate) {
            self.certificate = Some(Certificate {
                theorem: self.theorem,
                semigroup: self.semigroup.clone(),
                subjects: subjects.iter().map(|&a| a.clone()).collect(),
                params,
                violation,
            });
        }
    }

    fn finish(self, label: &str, note: String) -> VerificationReport {
        VerificationReport {
            theorem: self.theorem,
            semigroup: label.to_string(),
            semigroups_checked: 1,
            subjects_checked: self.subjects,
            cases_checked: self.cases,
            outcome: if self.certificate.is_some() {
                Outcome::Counterexample
            } else {
                Outcome::Verified
            },
            note,
            certificate: self.certificate,
        }
    }
}

fn skipped(theorem: TheoremId, label: &str, note: String) -> VerificationReport {
    VerificationReport {
        theorem,
        semigroup: label.to_string(),
        semigroups_checked: 1,
        subjects_checked: 0,
        cases_checked: 0,
        outcome: Outcome::HypothesisNotMet,
        note,
        certificate: None,
    }
}

struct Workspace<'a> {
    position: usize,
    label: &'a str,
    ctx: Context<'a>,
    pool: &'a [IfSubset],
    spec: &'a SampleSpec,
    flags: OnceCell<Vec<Flags>>,
}

impl<'a> Workspace<'a> {
    fn flags(&self) -> Result<&[Flags]> {
        if self.flags.get().is_none() {
            let computed = self
                .pool
                .iter()
                .map(|a| Flags::compute(self.ctx.semigroup, a))
                .collect::<Result<Vec<_>>>()?;
            let _ = self.flags.set(computed);
        }
        Ok(self.flags.get().expect("initialized"))
    }

    /// Pool subjects with the given structure.
    fn with_kind(&self, kind: FuzzyStructureKind) -> Result<Vec<&'a IfSubset>> {
        let flags = self.flags()?;
        Ok(self
            .pool
            .iter()
            .zip(flags)
            .filter(|(_, f)| f.has(kind))
            .map(|(a, _)| a)
            .collect())
    }

    fn salt(&self, theorem: TheoremId) -> u64 {
        ((self.position as u64) << 8) | theorem.ordinal() as u64
    }

    fn pairs<'b>(
        &self,
        theorem: TheoremId,
        left: &[&'b IfSubset],
        right: &[&'b IfSubset],
    ) -> Vec<(&'b IfSubset, &'b IfSubset)> {
        self.spec
            .pair_indices(left.len(), right.len(), self.salt(theorem))
            .into_iter()
            .map(|(i, j)| (left[i], right[j]))
            .collect()
    }
}

fn check_semigroup(
    position: usize,
    entry: &LabeledSemigroup,
    pool: &[IfSubset],
    theorems: &[TheoremId],
    spec: &SampleSpec,
) -> Result<Vec<VerificationReport>> {
    let ws = Workspace {
        position,
        label: &entry.label,
        ctx: Context::new(&entry.semigroup),
        pool,
        spec,
        flags: OnceCell::new(),
    };
    let kinds: Vec<FuzzyStructureKind> = theorems
        .iter()
        .filter_map(|t| match t {
            TheoremId::Equivalence(k) => Some(*k),
            _ => None,
        })
        .collect();
    let mut equivalence = if kinds.is_empty() {
        Vec::new()
    } else {
        sweep_equivalence(&ws, &kinds)?
    }
    .into_iter();

    let mut out = Vec::with_capacity(theorems.len());
    for &theorem in theorems {
        let report = match theorem {
            TheoremId::Equivalence(_) => equivalence.next().expect("one report per kind"),
            TheoremId::GroupConstant => sweep_group_constant(&ws)?,
            TheoremId::SemiprimeIntersection => sweep_semiprime_intersection(&ws)?,
            TheoremId::FixedPoint => sweep_fixed_point(&ws)?,
            TheoremId::Characteristic => sweep_characteristic(&ws)?,
            TheoremId::Characterization(kind) => sweep_characterization(&ws, kind)?,
            TheoremId::ArchimedeanConstant => sweep_archimedean(&ws)?,
            TheoremId::ProductBiIdeal => sweep_product_inclusion(&ws, theorem, ProductKind::BiIdealPair)?,
            TheoremId::ProductOneTwo => sweep_product_inclusion(&ws, theorem, ProductKind::OneTwoPair)?,
            TheoremId::ProductWithinIntersection => sweep_product_within(&ws)?,
            TheoremId::RegularProduct => sweep_regular_product(&ws, false)?,
            TheoremId::RegularProductMagnified => sweep_regular_product(&ws, true)?,
            TheoremId::Degeneration => sweep_degeneration(&ws)?,
        };
        out.push(report);
    }
    Ok(out)
}

/// All selected equivalence kinds in one pass, sharing each magnified
/// subject and its condition flags.
fn sweep_equivalence(ws: &Workspace, kinds: &[FuzzyStructureKind]) -> Result<Vec<VerificationReport>> {
    let s = ws.ctx.semigroup;
    let flags = ws.flags()?;
    let mut tallies: Vec<Tally> = kinds
        .iter()
        .map(|&k| Tally::new(TheoremId::Equivalence(k), s))
        .collect();
    let mut holding = vec![0usize; kinds.len()];
    for (a, fa) in ws.pool.iter().zip(flags) {
        for (i, &kind) in kinds.iter().enumerate() {
            tallies[i].subjects += 1;
            holding[i] += usize::from(fa.has(kind));
        }
        for p in ws.spec.params_for(&[a])? {
            let fm = Flags::compute(s, &magnify(a, p)?)?;
            for (tally, &kind) in tallies.iter_mut().zip(kinds) {
                if tally.failed() {
                    continue;
                }
                let result = if fa.has(kind) == fm.has(kind) {
                    None
                } else {
                    claims::equivalence(&ws.ctx, kind, a, p)?
                };
                tally.record(&[a], Some(p), result);
            }
        }
    }
    Ok(tallies
        .into_iter()
        .zip(kinds)
        .zip(holding)
        .map(|((tally, kind), h)| {
            let note = format!("{} holds on {h} of {} subjects", kind.name(), tally.subjects);
            tally.finish(ws.label, note)
        })
        .collect())
}

fn sweep_group_constant(ws: &Workspace) -> Result<VerificationReport> {
    let theorem = TheoremId::GroupConstant;
    if !ws.ctx.class.is_group {
        return Ok(skipped(theorem, ws.label, "not a group".into()));
    }
    let mut tally = Tally::new(theorem, ws.ctx.semigroup);
    for a in ws.pool {
        tally.subjects += 1;
        for p in ws.spec.params_for(&[a])? {
            let r = claims::group_constant(&ws.ctx, a, p)?;
            tally.record(&[a], Some(p), r);
            if tally.failed() {
                return Ok(tally.finish(ws.label, String::new()));
            }
        }
    }
    let bi = ws.with_kind(FuzzyStructureKind::BiIdeal)?.len();
    Ok(tally.finish(ws.label, format!("{bi} bi-ideal subjects")))
}

fn sweep_semiprime_intersection(ws: &Workspace) -> Result<VerificationReport> {
    let theorem = TheoremId::SemiprimeIntersection;
    let semiprime = ws.with_kind(FuzzyStructureKind::Semiprime)?;
    let mut tally = Tally::new(theorem, ws.ctx.semigroup);
    tally.subjects = semiprime.len();
    let pairs = ws.pairs(theorem, &semiprime, &semiprime);
    let mut used = 0;
    'pairs: for (a, b) in pairs {
        if !a.intersect(b)?.is_nonempty() {
            continue;
        }
        used += 1;
        let r = claims::semiprime_intersection(&ws.ctx, a, b, None)?;
        tally.record(&[a, b], None, r);
        for p in ws.spec.params_for(&[a, b])? {
            if tally.failed() {
                break 'pairs;
            }
            let r = claims::semiprime_intersection(&ws.ctx, a, b, Some(p))?;
            tally.record(&[a, b], Some(p), r);
        }
        if tally.failed() {
            break;
        }
    }
    Ok(tally.finish(ws.label, format!("{used} pairs of semiprime ideals")))
}

fn sweep_fixed_point(ws: &Workspace) -> Result<VerificationReport> {
    let semiprime = ws.with_kind(FuzzyStructureKind::Semiprime)?;
    let mut tally = Tally::new(TheoremId::FixedPoint, ws.ctx.semigroup);
    tally.subjects = semiprime.len();
    'outer: for a in semiprime {
        for p in ws.spec.params_for(&[a])? {
            let r = claims::fixed_point(&ws.ctx, a, p)?;
            tally.record(&[a], Some(p), r);
            if tally.failed() {
                break 'outer;
            }
        }
    }
    Ok(tally.finish(ws.label, String::new()))
}

fn sweep_characteristic(ws: &Workspace) -> Result<VerificationReport> {
    let s = ws.ctx.semigroup;
    let mut tally = Tally::new(TheoremId::Characteristic, s);
    for subset in nonempty_subsets(s.order()) {
        tally.subjects += 1;
        let chi = characteristic_pair(s.order(), &subset)?;
        let r = claims::characteristic(&ws.ctx, &subset)?;
        tally.record(&[&chi], None, r);
        if tally.failed() {
            break;
        }
    }
    Ok(tally.finish(ws.label, String::new()))
}

fn sweep_characterization(ws: &Workspace, kind: CharacterizationKind) -> Result<VerificationReport> {
    let s = ws.ctx.semigroup;
    let theorem = TheoremId::Characterization(kind);
    let mut tally = Tally::new(theorem, s);
    if let Some((m, witness)) = claims::characterization_witness(s, kind)? {
        tally.subjects = 1;
        for p in ws.spec.params_for(&[&witness])? {
            let r = claims::characterization(&ws.ctx, kind, &witness, p)?;
            tally.record(&[&witness], Some(p), r);
        }
        let note = format!(
            "not {}: witness at m = {m} is χ of {}",
            kind.name(),
            kind.principal_ideal(s, s.square(m))?
        );
        return Ok(tally.finish(ws.label, note));
    }
    let principal: Vec<IfSubset> = s
        .elements()
        .map(|m| characteristic_pair(s.order(), &kind.principal_ideal(s, s.square(m))?))
        .collect::<Result<_>>()?;
    let mut subjects = ws.with_kind(kind.ideal_kind())?;
    subjects.extend(principal.iter());
    tally.subjects = subjects.len();
    'outer: for a in subjects {
        for p in ws.spec.params_for(&[a])? {
            let r = claims::characterization(&ws.ctx, kind, a, p)?;
            tally.record(&[a], Some(p), r);
            if tally.failed() {
                break 'outer;
            }
        }
    }
    Ok(tally.finish(ws.label, format!("{}: magnified ideals checked for semiprimeness", kind.name())))
}

fn sweep_archimedean(ws: &Workspace) -> Result<VerificationReport> {
    let theorem = TheoremId::ArchimedeanConstant;
    if !ws.ctx.class.archimedean {
        return Ok(skipped(theorem, ws.label, "not archimedean".into()));
    }
    let semiprime = ws.with_kind(FuzzyStructureKind::Semiprime)?;
    let mut tally = Tally::new(theorem, ws.ctx.semigroup);
    tally.subjects = semiprime.len();
    'outer: for a in semiprime {
        for p in ws.spec.params_for(&[a])? {
            let r = claims::archimedean_constant(&ws.ctx, a, p)?;
            tally.record(&[a], Some(p), r);
            if tally.failed() {
                break 'outer;
            }
        }
    }
    Ok(tally.finish(ws.label, String::new()))
}

fn sweep_product_inclusion(ws: &Workspace, theorem: TheoremId, kind: ProductKind) -> Result<VerificationReport> {
    let c = &ws.ctx.class;
    let hypothesis = match kind {
        ProductKind::BiIdealPair => c.regular && c.intra_regular,
        ProductKind::OneTwoPair => c.regular && c.intra_regular && c.left_regular,
    };
    if !hypothesis {
        return Ok(skipped(theorem, ws.label, "regularity hypotheses not met".into()));
    }
    let subjects = ws.with_kind(kind.ideal_kind())?;
    let mut tally = Tally::new(theorem, ws.ctx.semigroup);
    tally.subjects = subjects.len();
    'outer: for (a, b) in ws.pairs(theorem, &subjects, &subjects) {
        for p in ws.spec.params_for(&[a, b])? {
            let r = claims::product_inclusion(&ws.ctx, kind, a, b, p)?;
            tally.record(&[a, b], Some(p), r);
            if tally.failed() {
                break 'outer;
            }
        }
    }
    Ok(tally.finish(ws.label, String::new()))
}

fn sweep_product_within(ws: &Workspace) -> Result<VerificationReport> {
    let theorem = TheoremId::ProductWithinIntersection;
    let rights = ws.with_kind(FuzzyStructureKind::RightIdeal)?;
    let lefts = ws.with_kind(FuzzyStructureKind::LeftIdeal)?;
    let mut tally = Tally::new(theorem, ws.ctx.semigroup);
    tally.subjects = rights.len() + lefts.len();
    for (a, b) in ws.pairs(theorem, &rights, &lefts) {
        let r = claims::product_within_intersection(&ws.ctx, a, b)?;
        tally.record(&[a, b], None, r);
        if tally.failed() {
            break;
        }
    }
    Ok(tally.finish(ws.label, String::new()))
}

fn sweep_regular_product(ws: &Workspace, magnified: bool) -> Result<VerificationReport> {
    let theorem = if magnified {
        TheoremId::RegularProductMagnified
    } else {
        TheoremId::RegularProduct
    };
    let s = ws.ctx.semigroup;
    let mut tally = Tally::new(theorem, s);
    tally.record(&[], None, claims::regular_product_crisp(&ws.ctx)?);
    if tally.failed() {
        return Ok(tally.finish(ws.label, "crisp level".into()));
    }
    let levels = |a: &IfSubset, b: &IfSubset, tally: &mut Tally| -> Result<()> {
        tally.record(&[a, b], None, claims::regular_product(&ws.ctx, a, b, None)?);
        if magnified {
            for p in ws.spec.params_for(&[a, b])? {
                if tally.failed() {
                    break;
                }
                tally.record(&[a, b], Some(p), claims::regular_product(&ws.ctx, a, b, Some(p))?);
            }
        }
        Ok(())
    };
    if ws.ctx.class.regular {
        let rights = ws.with_kind(FuzzyStructureKind::RightIdeal)?;
        let lefts = ws.with_kind(FuzzyStructureKind::LeftIdeal)?;
        tally.subjects = rights.len() + lefts.len();
        for (a, b) in ws.pairs(theorem, &rights, &lefts) {
            levels(a, b, &mut tally)?;
            if tally.failed() {
                break;
            }
        }
        return Ok(tally.finish(ws.label, "regular".into()));
    }
    let (r, l) = claims::crisp_product_witness(s)?.expect("not regular");
    let (chi_r, chi_l) = (characteristic_pair(s.order(), &r)?, characteristic_pair(s.order(), &l)?);
    tally.subjects = 2;
    levels(&chi_r, &chi_l, &mut tally)?;
    Ok(tally.finish(ws.label, format!("not regular: witness R = {r}, L = {l}")))
}

fn sweep_degeneration(ws: &Workspace) -> Result<VerificationReport> {
    let mut tally = Tally::new(TheoremId::Degeneration, ws.ctx.semigroup);
    'outer: for a in ws.pool {
        tally.subjects += 1;
        let bound = max_alpha(a, Grade::ONE)?;
        for &beta in &ws.spec.beta_grid {
            for alpha in ws.spec.alphas(bound) {
                let p = TransformParams::new(beta, alpha);
                tally.record(&[a], Some(p), claims::degeneration(a, p)?);
                if tally.failed() {
                    break 'outer;
                }
            }
        }
    }
    Ok(tally.finish(ws.label, String::new()))
}

/// Runs the given theorems on one semigroup with a freshly sampled pool.
pub fn check_one(label: &str, s: &Semigroup, theorems: &[TheoremId], spec: &SampleSpec) -> Result<Vec<VerificationReport>> {
    spec.validate()?;
    let pool: Vec<IfSubset> = sample_ifs(s.order(), spec)?.collect();
    let entry = LabeledSemigroup {
        label: label.to_string(),
        semigroup: s.clone(),
    };
    check_semigroup(0, &entry, &pool, theorems, spec)
}
