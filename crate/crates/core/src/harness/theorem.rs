use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::predicate::FuzzyStructureKind;
use crate::semigroup::{
    principal_left_ideal, principal_right_ideal, principal_two_sided_ideal, Element, ElementSubset,
    RegularityKind, Semigroup,
};

/// The regularity notions characterized through semiprime magnified ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharacterizationKind {
    IntraRegular,
    LeftRegular,
    RightRegular,
}

impl CharacterizationKind {
    pub const ALL: [CharacterizationKind; 3] = [
        CharacterizationKind::IntraRegular,
        CharacterizationKind::LeftRegular,
        CharacterizationKind::RightRegular,
    ];

    pub fn regularity(self) -> RegularityKind {
        match self {
            CharacterizationKind::IntraRegular => RegularityKind::IntraRegular,
            CharacterizationKind::LeftRegular => RegularityKind::LeftRegular,
            CharacterizationKind::RightRegular => RegularityKind::RightRegular,
        }
    }

    /// The ideal predicate the subjects must satisfy.
    pub fn ideal_kind(self) -> FuzzyStructureKind {
        match self {
            CharacterizationKind::IntraRegular => FuzzyStructureKind::Ideal,
            CharacterizationKind::LeftRegular => FuzzyStructureKind::LeftIdeal,
            CharacterizationKind::RightRegular => FuzzyStructureKind::RightIdeal,
        }
    }

    /// The principal ideal of matching side generated by `g`.
    pub fn principal_ideal(self, s: &Semigroup, g: Element) -> Result<ElementSubset> {
        match self {
            CharacterizationKind::IntraRegular => principal_two_sided_ideal(s, g),
            CharacterizationKind::LeftRegular => principal_left_ideal(s, g),
            CharacterizationKind::RightRegular => principal_right_ideal(s, g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CharacterizationKind::IntraRegular => "intra-regular",
            CharacterizationKind::LeftRegular => "left-regular",
            CharacterizationKind::RightRegular => "right-regular",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    /// Bi-ideals of a regular, intra-regular semigroup.
    BiIdealPair,
    /// (1,2)-ideals of a regular, intra-regular, left regular semigroup.
    OneTwoPair,
}

impl ProductKind {
    pub fn ideal_kind(self) -> FuzzyStructureKind {
        match self {
            ProductKind::BiIdealPair => FuzzyStructureKind::BiIdeal,
            ProductKind::OneTwoPair => FuzzyStructureKind::OneTwoIdeal,
        }
    }
}

/// Every statement the harness can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `A` has the structure iff its magnified translation does.
    Equivalence(FuzzyStructureKind),
    /// In a group, `A` is a bi-ideal iff its magnified translation is constant.
    GroupConstant,
    /// Intersections of semiprime ideals, plain and magnified, are semiprime.
    SemiprimeIntersection,
    /// A semiprime ideal's magnified translation agrees at `x` and `x^2`.
    FixedPoint,
    /// A crisp subset is a left (right) ideal iff its characteristic pair is.
    Characteristic,
    /// Regularity of a kind iff magnified ideals of matching side are semiprime.
    Characterization(CharacterizationKind),
    /// Semiprime ideals of an archimedean semigroup magnify to constants.
    ArchimedeanConstant,
    /// `A' ∘ B' ⊇ A' ∩ B'` for bi-ideals.
    ProductBiIdeal,
    /// `A' ∘ B' ⊇ A' ∩ B'` for (1,2)-ideals.
    ProductOneTwo,
    /// `A ∘ B ⊆ A ∩ B` for a right ideal `A` and left ideal `B`.
    ProductWithinIntersection,
    /// Regular iff `R ∩ L = RL` iff `A ∘ B = A ∩ B`.
    RegularProduct,
    /// As [`TheoremId::RegularProduct`], also for magnified translations.
    RegularProductMagnified,
    /// `beta = 1` gives translation, `alpha = 0` gives multiplication.
    Degeneration,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::Equivalence(FuzzyStructureKind::Subsemigroup),
        TheoremId::Equivalence(FuzzyStructureKind::BiIdeal),
        TheoremId::Equivalence(FuzzyStructureKind::OneTwoIdeal),
        TheoremId::Equivalence(FuzzyStructureKind::LeftIdeal),
        TheoremId::Equivalence(FuzzyStructureKind::RightIdeal),
        TheoremId::Equivalence(FuzzyStructureKind::Ideal),
        TheoremId::Equivalence(FuzzyStructureKind::Semiprime),
        TheoremId::GroupConstant,
        TheoremId::SemiprimeIntersection,
        TheoremId::FixedPoint,
        TheoremId::Characteristic,
        TheoremId::Characterization(CharacterizationKind::IntraRegular),
        TheoremId::Characterization(CharacterizationKind::LeftRegular),
        TheoremId::Characterization(CharacterizationKind::RightRegular),
        TheoremId::ArchimedeanConstant,
        TheoremId::ProductBiIdeal,
        TheoremId::ProductOneTwo,
        TheoremId::ProductWithinIntersection,
        TheoremId::RegularProduct,
        TheoremId::RegularProductMagnified,
        TheoremId::Degeneration,
    ];

    /// Position in [`TheoremId::ALL`], used for ordering reports.
    pub fn ordinal(self) -> usize {
        TheoremId::ALL
            .iter()
            .position(|&t| t == self)
            .expect("every theorem is listed")
    }

    pub fn name(self) -> String {
        match self {
            TheoremId::Equivalence(kind) => format!("equiv-{}", kind.name()),
            TheoremId::GroupConstant => "group-constant".into(),
            TheoremId::SemiprimeIntersection => "semiprime-intersection".into(),
            TheoremId::FixedPoint => "fixedpoint".into(),
            TheoremId::Characteristic => "characteristic".into(),
            TheoremId::Characterization(kind) => kind.name().into(),
            TheoremId::ArchimedeanConstant => "archimedean-constant".into(),
            TheoremId::ProductBiIdeal => "product-bi-ideal".into(),
            TheoremId::ProductOneTwo => "product-one-two".into(),
            TheoremId::ProductWithinIntersection => "product-within-intersection".into(),
            TheoremId::RegularProduct => "regular-product".into(),
            TheoremId::RegularProductMagnified => "regular-product-magnified".into(),
            TheoremId::Degeneration => "degeneration".into(),
        }
    }

    pub fn all_names() -> Vec<String> {
        TheoremId::ALL.iter().map(|t| t.name()).collect()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownTheorem(pub String);

impl fmt::Display for UnknownTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown theorem {:?}; valid ids: {}",
            self.0,
            TheoremId::all_names().join(", ")
        )
    }
}

impl std::error::Error for UnknownTheorem {}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> std::result::Result<TheoremId, UnknownTheorem> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        let names = TheoremId::all_names();
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len());
        let err = "nosuch".parse::<TheoremId>().unwrap_err();
        assert!(err.to_string().contains("fixedpoint"));
    }
}
