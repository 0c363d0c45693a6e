//! Each theorem as a claim about explicit subjects and parameters.
//!
//! A claim returns `Ok(None)` when it holds, `Ok(Some(violation))` when it is
//! refuted, and an error when its hypotheses or preconditions are not met.
//! Certificates replay through [`evaluate`].

use crate::composition::FactorizationIndex;
use crate::error::{Error, Result};
use crate::ifs::{characteristic_pair, IfSubset};
use crate::predicate::{check, semiprime_inequalities, FuzzyStructureKind, Verdict};
use crate::semigroup::{
    classify, first_irregular, is_crisp_structure, multiply_subsets, nonempty_subsets, Classification,
    CrispStructure, Element, ElementSubset, RegularityKind, Semigroup,
};
use crate::transform::{magnify, multiply, translate, TransformParams};

use super::theorem::{CharacterizationKind, ProductKind, TheoremId};

/// A semigroup with the data every claim needs, computed once.
#[derive(Clone, Debug)]
pub struct Context<'a> {
    pub semigroup: &'a Semigroup,
    pub index: FactorizationIndex,
    pub class: Classification,
}

impl<'a> Context<'a> {
    pub fn new(semigroup: &'a Semigroup) -> Context<'a> {
        Context {
            semigroup,
            index: FactorizationIndex::build(semigroup),
            class: classify(semigroup),
        }
    }

    fn holds(&self, kind: FuzzyStructureKind, a: &IfSubset) -> Result<bool> {
        Ok(check(kind, self.semigroup, a)?.holds())
    }

    fn require(&self, kind: FuzzyStructureKind, a: &IfSubset, role: &str) -> Result<()> {
        if self.holds(kind, a)? {
            Ok(())
        } else {
            Err(Error::PreconditionNotMet(format!("{role} is not a fuzzy {}", kind.name())))
        }
    }
}

/// What failed, and where.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub description: String,
    pub tuple: Vec<Element>,
}

impl Violation {
    fn new(description: impl Into<String>, tuple: Vec<Element>) -> Violation {
        Violation {
            description: description.into(),
            tuple,
        }
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Holds => "holds".into(),
        Verdict::Fails(c) => format!("fails ({c})"),
    }
}

fn verdict_tuple(a: &Verdict, b: &Verdict) -> Vec<Element> {
    a.counterexample()
        .or(b.counterexample())
        .map(|c| c.tuple.clone())
        .unwrap_or_default()
}

/// First element whose grades differ from element 0's.
fn non_constant_point(a: &IfSubset) -> Option<Element> {
    (1..a.carrier_order()).find(|&x| a.mu(x) != a.mu(0) || a.nu(x) != a.nu(0))
}

/// First element at which `a ⊆ b` fails.
fn first_not_below(a: &IfSubset, b: &IfSubset) -> Option<Element> {
    (0..a.carrier_order()).find(|&x| a.mu(x) > b.mu(x) || a.nu(x) < b.nu(x))
}

fn first_difference(a: &IfSubset, b: &IfSubset) -> Option<Element> {
    (0..a.carrier_order()).find(|&x| a.mu(x) != b.mu(x) || a.nu(x) != b.nu(x))
}

/// `A` has the structure iff `magnify(A, p)` has it.
pub fn equivalence(
    ctx: &Context,
    kind: FuzzyStructureKind,
    a: &IfSubset,
    p: TransformParams,
) -> Result<Option<Violation>> {
    let before = check(kind, ctx.semigroup, a)?;
    let after = check(kind, ctx.semigroup, &magnify(a, p)?)?;
    if before.holds() == after.holds() {
        return Ok(None);
    }
    Ok(Some(Violation::new(
        format!(
            "{} on A {}, on the magnified subject {}",
            kind.name(),
            verdict_text(&before),
            verdict_text(&after)
        ),
        verdict_tuple(&before, &after),
    )))
}

/// In a group, `A` is a bi-ideal iff `magnify(A, p)` is constant.
pub fn group_constant(ctx: &Context, a: &IfSubset, p: TransformParams) -> Result<Option<Violation>> {
    if !ctx.class.is_group {
        return Err(Error::NotAGroup);
    }
    let bi = check(FuzzyStructureKind::BiIdeal, ctx.semigroup, a)?;
    let m = magnify(a, p)?;
    if bi.holds() == m.is_constant() {
        return Ok(None);
    }
    let tuple = match non_constant_point(&m) {
        Some(x) => vec![0, x],
        None => verdict_tuple(&bi, &Verdict::Holds),
    };
    Ok(Some(Violation::new(
        format!(
            "bi-ideal {}, magnified subject constant: {}",
            verdict_text(&bi),
            m.is_constant()
        ),
        tuple,
    )))
}

/// `A ∩ B` is semiprime; with parameters, so is `magnify(A) ∩ magnify(B)`.
pub fn semiprime_intersection(
    ctx: &Context,
    a: &IfSubset,
    b: &IfSubset,
    p: Option<TransformParams>,
) -> Result<Option<Violation>> {
    ctx.require(FuzzyStructureKind::Semiprime, a, "A")?;
    ctx.require(FuzzyStructureKind::Semiprime, b, "B")?;
    if !a.intersect(b)?.is_nonempty() {
        return Err(Error::PreconditionNotMet("A ∩ B is empty".into()));
    }
    let c = match p {
        None => a.intersect(b)?,
        Some(p) => magnify(a, p)?.intersect(&magnify(b, p)?)?,
    };
    let v = check(FuzzyStructureKind::Semiprime, ctx.semigroup, &c)?;
    Ok(v.counterexample().map(|cx| {
        Violation::new(format!("intersection is not semiprime: {cx}"), cx.tuple.clone())
    }))
}

/// A semiprime ideal magnifies to a subject agreeing at `x` and `x^2`.
pub fn fixed_point(ctx: &Context, a: &IfSubset, p: TransformParams) -> Result<Option<Violation>> {
    ctx.require(FuzzyStructureKind::Semiprime, a, "A")?;
    let m = magnify(a, p)?;
    let s = ctx.semigroup;
    Ok(s.elements()
        .find(|&x| m.mu(x) != m.mu(s.square(x)) || m.nu(x) != m.nu(s.square(x)))
        .map(|x| {
            Violation::new(
                format!(
                    "magnified grades at x = {x}: ({}, {}), at x^2 = {}: ({}, {})",
                    m.mu(x),
                    m.nu(x),
                    s.square(x),
                    m.mu(s.square(x)),
                    m.nu(s.square(x))
                ),
                vec![x],
            )
        }))
}

const CRISP_TO_FUZZY: [(CrispStructure, FuzzyStructureKind); 6] = [
    (CrispStructure::Subsemigroup, FuzzyStructureKind::Subsemigroup),
    (CrispStructure::LeftIdeal, FuzzyStructureKind::LeftIdeal),
    (CrispStructure::RightIdeal, FuzzyStructureKind::RightIdeal),
    (CrispStructure::Ideal, FuzzyStructureKind::Ideal),
    (CrispStructure::BiIdeal, FuzzyStructureKind::BiIdeal),
    (CrispStructure::OneTwoIdeal, FuzzyStructureKind::OneTwoIdeal),
];

/// A crisp subset has each structure iff its characteristic pair does.
pub fn characteristic(ctx: &Context, subset: &ElementSubset) -> Result<Option<Violation>> {
    let chi = characteristic_pair(ctx.semigroup.order(), subset)?;
    for (crisp, fuzzy) in CRISP_TO_FUZZY {
        let c = is_crisp_structure(crisp, ctx.semigroup, subset)?;
        let f = check(fuzzy, ctx.semigroup, &chi)?;
        if c != f.holds() {
            return Ok(Some(Violation::new(
                format!(
                    "{subset}: crisp {} is {c}, characteristic pair {}",
                    fuzzy.name(),
                    verdict_text(&f)
                ),
                subset.iter().collect(),
            )));
        }
    }
    Ok(None)
}

/// The crisp subset a characteristic pair describes, if it is one.
pub fn crisp_support(a: &IfSubset) -> Option<ElementSubset> {
    let mut members = Vec::new();
    for x in 0..a.carrier_order() {
        match (a.mu(x).is_zero(), a.nu(x).is_zero()) {
            (false, true) if a.mu(x) == crate::grade::Grade::ONE => members.push(x),
            (true, false) if a.nu(x) == crate::grade::Grade::ONE => {}
            _ => return None,
        }
    }
    ElementSubset::new(a.carrier_order(), members).ok()
}

/// The converse witness for a regularity kind: the element `m` where
/// regularity fails and `χ` of the principal ideal of matching side
/// generated by `m^2`. `None` when the semigroup has the property.
pub fn characterization_witness(
    s: &Semigroup,
    kind: CharacterizationKind,
) -> Result<Option<(Element, IfSubset)>> {
    let Some(m) = first_irregular(s, kind.regularity()) else {
        return Ok(None);
    };
    let ideal = kind.principal_ideal(s, s.square(m))?;
    Ok(Some((m, characteristic_pair(s.order(), &ideal)?)))
}

/// Regularity of the kind holds iff magnified ideals of matching side are
/// semiprime. With the flag set, `a` is any ideal and must magnify to a
/// semiprime subject; without it, `a` must be the converse witness and its
/// magnified translation must violate a semiprime inequality at `m`.
pub fn characterization(
    ctx: &Context,
    kind: CharacterizationKind,
    a: &IfSubset,
    p: TransformParams,
) -> Result<Option<Violation>> {
    ctx.require(kind.ideal_kind(), a, "A")?;
    let s = ctx.semigroup;
    let m_subject = magnify(a, p)?;
    if ctx.class.flag(kind.regularity()) {
        let v = semiprime_inequalities(s, &m_subject)?;
        return Ok(v.counterexample().map(|cx| {
            Violation::new(
                format!("{} semigroup, magnified ideal not semiprime: {cx}", kind.name()),
                cx.tuple.clone(),
            )
        }));
    }
    let (m, witness) = characterization_witness(s, kind)?.expect("flag is false");
    if *a != witness {
        return Err(Error::PreconditionNotMet(format!(
            "semigroup is not {}; only the converse witness is checked",
            kind.name()
        )));
    }
    let m2 = s.square(m);
    let violated = m_subject.mu(m) < m_subject.mu(m2) || m_subject.nu(m) > m_subject.nu(m2);
    if violated {
        return Ok(None);
    }
    Ok(Some(Violation::new(
        format!(
            "converse witness satisfies the semiprime inequalities at m = {m}: ({}, {}) vs ({}, {})",
            m_subject.mu(m),
            m_subject.nu(m),
            m_subject.mu(m2),
            m_subject.nu(m2)
        ),
        vec![m],
    )))
}

/// In an archimedean semigroup a semiprime ideal magnifies to a constant.
pub fn archimedean_constant(ctx: &Context, a: &IfSubset, p: TransformParams) -> Result<Option<Violation>> {
    if !ctx.class.archimedean {
        return Err(Error::HypothesisNotMet("semigroup is not archimedean".into()));
    }
    ctx.require(FuzzyStructureKind::Semiprime, a, "A")?;
    let m = magnify(a, p)?;
    Ok(non_constant_point(&m).map(|x| {
        Violation::new(
            format!(
                "magnified subject not constant: ({}, {}) at 0, ({}, {}) at {x}",
                m.mu(0),
                m.nu(0),
                m.mu(x),
                m.nu(x)
            ),
            vec![0, x],
        )
    }))
}

fn product_hypothesis(class: &Classification, kind: ProductKind) -> Result<()> {
    let ok = match kind {
        ProductKind::BiIdealPair => class.regular && class.intra_regular,
        ProductKind::OneTwoPair => class.regular && class.intra_regular && class.left_regular,
    };
    if ok {
        Ok(())
    } else {
        let need = match kind {
            ProductKind::BiIdealPair => "regular and intra-regular",
            ProductKind::OneTwoPair => "regular, intra-regular and left regular",
        };
        Err(Error::HypothesisNotMet(format!("semigroup is not {need}")))
    }
}

/// `A' ∘ B' ⊇ A' ∩ B'` and `B' ∘ A' ⊇ A' ∩ B'` for magnified structures.
pub fn product_inclusion(
    ctx: &Context,
    kind: ProductKind,
    a: &IfSubset,
    b: &IfSubset,
    p: TransformParams,
) -> Result<Option<Violation>> {
    product_hypothesis(&ctx.class, kind)?;
    ctx.require(kind.ideal_kind(), a, "A")?;
    ctx.require(kind.ideal_kind(), b, "B")?;
    let (x, y) = (magnify(a, p)?, magnify(b, p)?);
    let meet = x.intersect(&y)?;
    for (label, prod) in [("A'∘B'", ctx.index.product(&x, &y)?), ("B'∘A'", ctx.index.product(&y, &x)?)] {
        if let Some(pt) = first_not_below(&meet, &prod) {
            return Ok(Some(Violation::new(
                format!(
                    "A'∩B' = ({}, {}) not below {label} = ({}, {}) at {pt}",
                    meet.mu(pt),
                    meet.nu(pt),
                    prod.mu(pt),
                    prod.nu(pt)
                ),
                vec![pt],
            )));
        }
    }
    Ok(None)
}

/// `A ∘ B ⊆ A ∩ B` for a right ideal `A` and a left ideal `B`.
pub fn product_within_intersection(ctx: &Context, a: &IfSubset, b: &IfSubset) -> Result<Option<Violation>> {
    ctx.require(FuzzyStructureKind::RightIdeal, a, "A")?;
    ctx.require(FuzzyStructureKind::LeftIdeal, b, "B")?;
    let prod = ctx.index.product(a, b)?;
    let meet = a.intersect(b)?;
    Ok(first_not_below(&prod, &meet).map(|pt| {
        Violation::new(
            format!(
                "A∘B = ({}, {}) not below A∩B = ({}, {}) at {pt}",
                prod.mu(pt),
                prod.nu(pt),
                meet.mu(pt),
                meet.nu(pt)
            ),
            vec![pt],
        )
    }))
}

/// The first crisp right ideal `R` and left ideal `L` with `RL ≠ R ∩ L`.
pub fn crisp_product_witness(s: &Semigroup) -> Result<Option<(ElementSubset, ElementSubset)>> {
    let rights: Vec<ElementSubset> = nonempty_subsets(s.order())
        .filter(|r| is_crisp_structure(CrispStructure::RightIdeal, s, r).unwrap_or(false))
        .collect();
    let lefts: Vec<ElementSubset> = nonempty_subsets(s.order())
        .filter(|l| is_crisp_structure(CrispStructure::LeftIdeal, s, l).unwrap_or(false))
        .collect();
    for r in &rights {
        for l in &lefts {
            if multiply_subsets(s, r, l)? != r.intersection(l) {
                return Ok(Some((r.clone(), l.clone())));
            }
        }
    }
    Ok(None)
}

/// Crisp level: regular iff `RL = R ∩ L` for every right ideal `R` and left
/// ideal `L`.
pub fn regular_product_crisp(ctx: &Context) -> Result<Option<Violation>> {
    let s = ctx.semigroup;
    let witness = crisp_product_witness(s)?;
    Ok(match (ctx.class.regular, witness) {
        (true, Some((r, l))) => {
            let rl = multiply_subsets(s, &r, &l)?;
            Some(Violation::new(
                format!("regular, yet R = {r}, L = {l} give RL = {rl} ≠ R∩L = {}", r.intersection(&l)),
                r.iter().collect(),
            ))
        }
        (false, None) => {
            let m = first_irregular(s, RegularityKind::Regular).expect("not regular");
            Some(Violation::new(
                format!("not regular at {m}, yet RL = R∩L for every crisp pair"),
                vec![m],
            ))
        }
        _ => None,
    })
}

/// Fuzzy and magnified levels: in a regular semigroup `A ∘ B = A ∩ B` for a
/// right ideal `A` and left ideal `B`; otherwise `A`, `B` must be the
/// characteristic pairs of a crisp witness and equality must fail.
pub fn regular_product(
    ctx: &Context,
    a: &IfSubset,
    b: &IfSubset,
    p: Option<TransformParams>,
) -> Result<Option<Violation>> {
    ctx.require(FuzzyStructureKind::RightIdeal, a, "A")?;
    ctx.require(FuzzyStructureKind::LeftIdeal, b, "B")?;
    if !ctx.class.regular {
        let (r, l) = crisp_product_witness(ctx.semigroup)?.expect("not regular");
        let order = ctx.semigroup.order();
        if *a != characteristic_pair(order, &r)? || *b != characteristic_pair(order, &l)? {
            return Err(Error::PreconditionNotMet(
                "semigroup is not regular; only the crisp witness is checked".into(),
            ));
        }
    }
    let (x, y) = match p {
        None => (a.clone(), b.clone()),
        Some(p) => (magnify(a, p)?, magnify(b, p)?),
    };
    let prod = ctx.index.product(&x, &y)?;
    let meet = x.intersect(&y)?;
    let diff = first_difference(&prod, &meet);
    Ok(match (ctx.class.regular, diff) {
        (true, Some(pt)) => Some(Violation::new(
            format!(
                "regular, yet A∘B = ({}, {}) ≠ A∩B = ({}, {}) at {pt}",
                prod.mu(pt),
                prod.nu(pt),
                meet.mu(pt),
                meet.nu(pt)
            ),
            vec![pt],
        )),
        (false, None) => Some(Violation::new("not regular, yet the witness has A∘B = A∩B", vec![])),
        _ => None,
    })
}

/// `magnify(A, (β, 0)) = multiply(A, β)` and `magnify(A, (1, α)) = translate(A, α)`.
pub fn degeneration(a: &IfSubset, p: TransformParams) -> Result<Option<Violation>> {
    let scaled = magnify(a, TransformParams::new(p.beta, crate::grade::Grade::ZERO))?;
    let multiplied = multiply(a, p.beta)?;
    if let Some(x) = first_difference(&scaled, &multiplied) {
        return Ok(Some(Violation::new(
            format!("alpha = 0 differs from multiplication by {} at {x}", p.beta),
            vec![x],
        )));
    }
    let shifted = magnify(a, TransformParams::new(crate::grade::Grade::ONE, p.alpha))?;
    let translated = translate(a, p.alpha)?;
    Ok(first_difference(&shifted, &translated).map(|x| {
        Violation::new(format!("beta = 1 differs from translation by {} at {x}", p.alpha), vec![x])
    }))
}

fn arity(theorem: TheoremId, subjects: &[&IfSubset], allowed: &[usize]) -> Result<()> {
    if allowed.contains(&subjects.len()) {
        Ok(())
    } else {
        Err(Error::PreconditionNotMet(format!(
            "{theorem} takes {allowed:?} subjects, got {}",
            subjects.len()
        )))
    }
}

fn need(theorem: TheoremId, p: Option<TransformParams>) -> Result<TransformParams> {
    p.ok_or_else(|| Error::PreconditionNotMet(format!("{theorem} needs transform parameters")))
}

/// Evaluates a theorem on explicit subjects and optional parameters.
pub fn evaluate(
    theorem: TheoremId,
    ctx: &Context,
    subjects: &[&IfSubset],
    params: Option<TransformParams>,
) -> Result<Option<Violation>> {
    match theorem {
        TheoremId::RegularProduct | TheoremId::RegularProductMagnified => arity(theorem, subjects, &[0, 2])?,
        TheoremId::SemiprimeIntersection
        | TheoremId::ProductBiIdeal
        | TheoremId::ProductOneTwo
        | TheoremId::ProductWithinIntersection => arity(theorem, subjects, &[2])?,
        _ => arity(theorem, subjects, &[1])?,
    }
    match theorem {
        TheoremId::Equivalence(kind) => equivalence(ctx, kind, subjects[0], need(theorem, params)?),
        TheoremId::GroupConstant => group_constant(ctx, subjects[0], need(theorem, params)?),
        TheoremId::SemiprimeIntersection => semiprime_intersection(ctx, subjects[0], subjects[1], params),
        TheoremId::FixedPoint => fixed_point(ctx, subjects[0], need(theorem, params)?),
        TheoremId::Characteristic => {
            let subset = crisp_support(subjects[0]).ok_or_else(|| {
                Error::PreconditionNotMet("subject is not a characteristic pair".into())
            })?;
            characteristic(ctx, &subset)
        }
        TheoremId::Characterization(kind) => {
            characterization(ctx, kind, subjects[0], need(theorem, params)?)
        }
        TheoremId::ArchimedeanConstant => archimedean_constant(ctx, subjects[0], need(theorem, params)?),
        TheoremId::ProductBiIdeal => product_inclusion(
            ctx,
            ProductKind::BiIdealPair,
            subjects[0],
            subjects[1],
            need(theorem, params)?,
        ),
        TheoremId::ProductOneTwo => product_inclusion(
            ctx,
            ProductKind::OneTwoPair,
            subjects[0],
            subjects[1],
            need(theorem, params)?,
        ),
        TheoremId::ProductWithinIntersection => product_within_intersection(ctx, subjects[0], subjects[1]),
        TheoremId::RegularProduct | TheoremId::RegularProductMagnified => {
            if subjects.is_empty() {
                regular_product_crisp(ctx)
            } else {
                regular_product(ctx, subjects[0], subjects[1], params)
            }
        }
        TheoremId::Degeneration => degeneration(subjects[0], need(theorem, params)?),
    }
}
