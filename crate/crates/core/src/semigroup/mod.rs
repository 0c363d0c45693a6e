//! Finite semigroups given by Cayley tables, crisp subsets and the crisp
//! structural predicates built from subset multiplication.

mod classify;
mod enumerate;
mod library;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub use classify::{
    classify, first_irregular, is_archimedean, regularity_witness, Classification,
    RegularityKind,
};
pub use enumerate::{enumerate_semigroups, SemigroupEnumerator, MAX_ENUMERATION_ORDER};
pub use library::{builtin_library, lookup, NamedSemigroup};

/// Index of a carrier element, always in `0..order`.
pub type Element = usize;

/// A finite semigroup on `{0, .., n-1}` with a validated, associative table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semigroup {
    order: usize,
    table: Vec<Element>,
}

impl Semigroup {
    /// Builds a semigroup from rows of element indices.
    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Semigroup> {
        let raw: Vec<Vec<i64>> = rows
            .iter()
            .map(|row| row.iter().map(|&e| e as i64).collect())
            .collect();
        validate_cayley(rows.len(), &raw)
    }

    /// Skips validation; callers must guarantee range and associativity.
    pub(crate) fn from_table_unchecked(order: usize, table: Vec<Element>) -> Semigroup {
        debug_assert_eq!(table.len(), order * order);
        Semigroup { order, table }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.table[x * self.order + y]
    }

    #[inline]
    pub fn square(&self, x: Element) -> Element {
        self.mul(x, x)
    }

    /// `x^k` for `k >= 1`.
    pub fn power(&self, x: Element, k: usize) -> Element {
        assert!(k >= 1, "powers start at 1");
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.table.chunks(self.order)
    }

    pub fn full_subset(&self) -> ElementSubset {
        ElementSubset::full(self.order)
    }

    pub fn check_element(&self, element: Element) -> Result<()> {
        if element < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element,
                order: self.order,
            })
        }
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Validates a raw `order x order` table: every entry must be a carrier
/// element and every triple must associate. The first failing cell or triple
/// in lexicographic order is reported.
pub fn validate_cayley(order: usize, raw: &[Vec<i64>]) -> Result<Semigroup> {
    if order == 0 {
        return Err(Error::EmptyCarrier);
    }
    if raw.len() != order {
        return Err(Error::RowCount {
            found: raw.len(),
            expected: order,
        });
    }
    let mut table = Vec::with_capacity(order * order);
    for (x, row) in raw.iter().enumerate() {
        if row.len() != order {
            return Err(Error::RaggedRow {
                row: x,
                found: row.len(),
                expected: order,
            });
        }
        for (y, &value) in row.iter().enumerate() {
            if value < 0 || value as u64 >= order as u64 {
                return Err(Error::OutOfRangeEntry { x, y, value });
            }
            table.push(value as Element);
        }
    }
    let s = Semigroup { order, table };
    for x in s.elements() {
        for y in s.elements() {
            let xy = s.mul(x, y);
            for z in s.elements() {
                if s.mul(xy, z) != s.mul(x, s.mul(y, z)) {
                    return Err(Error::AssociativityViolation { x, y, z });
                }
            }
        }
    }
    Ok(s)
}

/// A crisp subset of a carrier `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSubset {
    carrier_order: usize,
    members: BTreeSet<Element>,
}

impl ElementSubset {
    pub fn new(carrier_order: usize, members: impl IntoIterator<Item = Element>) -> Result<Self> {
        let members: BTreeSet<Element> = members.into_iter().collect();
        if let Some(&element) = members.iter().find(|&&m| m >= carrier_order) {
            return Err(Error::ElementOutOfRange {
                element,
                order: carrier_order,
            });
        }
        Ok(ElementSubset {
            carrier_order,
            members,
        })
    }

    pub fn full(carrier_order: usize) -> Self {
        ElementSubset {
            carrier_order,
            members: (0..carrier_order).collect(),
        }
    }

    /// Subset whose members are the set bits of `mask`.
    pub fn from_mask(carrier_order: usize, mask: u64) -> Self {
        ElementSubset {
            carrier_order,
            members: (0..carrier_order.min(64))
                .filter(|i| mask >> i & 1 == 1)
                .collect(),
        }
    }

    pub fn carrier_order(&self) -> usize {
        self.carrier_order
    }

    pub fn contains(&self, element: Element) -> bool {
        self.members.contains(&element)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &ElementSubset) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset {
            carrier_order: self.carrier_order,
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    fn same_carrier(&self, s: &Semigroup) -> Result<()> {
        if self.carrier_order == s.order() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                expected: s.order(),
                found: self.carrier_order,
            })
        }
    }
}

impl fmt::Display for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// `AB = {ab : a in A, b in B}`.
pub fn multiply_subsets(s: &Semigroup, a: &ElementSubset, b: &ElementSubset) -> Result<ElementSubset> {
    a.same_carrier(s)?;
    b.same_carrier(s)?;
    let members = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| s.mul(x, y)))
        .collect();
    Ok(ElementSubset {
        carrier_order: s.order(),
        members,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrispStructure {
    Subsemigroup,
    LeftIdeal,
    RightIdeal,
    Ideal,
    BiIdeal,
    OneTwoIdeal,
}

impl CrispStructure {
    pub const ALL: [CrispStructure; 6] = [
        CrispStructure::Subsemigroup,
        CrispStructure::LeftIdeal,
        CrispStructure::RightIdeal,
        CrispStructure::Ideal,
        CrispStructure::BiIdeal,
        CrispStructure::OneTwoIdeal,
    ];
}

/// Decides a crisp structure by subset containment:
/// `AA ⊆ A`, `SA ⊆ A`, `AS ⊆ A`, both, `AA ⊆ A ∧ ASA ⊆ A`, `AA ⊆ A ∧ ASAA ⊆ A`.
pub fn is_crisp_structure(kind: CrispStructure, s: &Semigroup, a: &ElementSubset) -> Result<bool> {
    a.same_carrier(s)?;
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let full = s.full_subset();
    let prod = |x: &ElementSubset, y: &ElementSubset| multiply_subsets(s, x, y);
    let closed = || -> Result<bool> { Ok(prod(a, a)?.is_subset(a)) };
    let left = || -> Result<bool> { Ok(prod(&full, a)?.is_subset(a)) };
    let right = || -> Result<bool> { Ok(prod(a, &full)?.is_subset(a)) };
    Ok(match kind {
        CrispStructure::Subsemigroup => closed()?,
        CrispStructure::LeftIdeal => left()?,
        CrispStructure::RightIdeal => right()?,
        CrispStructure::Ideal => left()? && right()?,
        CrispStructure::BiIdeal => closed()? && prod(&prod(a, &full)?, a)?.is_subset(a),
        CrispStructure::OneTwoIdeal => {
            closed()? && prod(&prod(&prod(a, &full)?, a)?, a)?.is_subset(a)
        }
    })
}

/// `{g} ∪ Sg ∪ gS ∪ SgS`, the smallest two-sided ideal containing `g`.
pub fn principal_two_sided_ideal(s: &Semigroup, g: Element) -> Result<ElementSubset> {
    s.check_element(g)?;
    let mut members = BTreeSet::from([g]);
    for x in s.elements() {
        members.insert(s.mul(x, g));
        members.insert(s.mul(g, x));
        for y in s.elements() {
            members.insert(s.mul(s.mul(x, g), y));
        }
    }
    Ok(ElementSubset {
        carrier_order: s.order(),
        members,
    })
}

/// `{g} ∪ Sg`.
pub fn principal_left_ideal(s: &Semigroup, g: Element) -> Result<ElementSubset> {
    s.check_element(g)?;
    let mut members = BTreeSet::from([g]);
    members.extend(s.elements().map(|x| s.mul(x, g)));
    Ok(ElementSubset {
        carrier_order: s.order(),
        members,
    })
}

/// `{g} ∪ gS`.
pub fn principal_right_ideal(s: &Semigroup, g: Element) -> Result<ElementSubset> {
    s.check_element(g)?;
    let mut members = BTreeSet::from([g]);
    members.extend(s.elements().map(|x| s.mul(g, x)));
    Ok(ElementSubset {
        carrier_order: s.order(),
        members,
    })
}

/// Every non-empty subset of the carrier, in increasing bitmask order.
pub fn nonempty_subsets(order: usize) -> impl Iterator<Item = ElementSubset> {
    assert!(order < 64, "subset enumeration needs order < 64");
    (1u64..(1u64 << order)).map(move |mask| ElementSubset::from_mask(order, mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(rows: &[&[Element]]) -> Semigroup {
        Semigroup::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn set(order: usize, m: &[Element]) -> ElementSubset {
        ElementSubset::new(order, m.iter().copied()).unwrap()
    }

    fn left_zero() -> Semigroup {
        sg(&[&[0, 0], &[1, 1]])
    }
    fn null2() -> Semigroup {
        sg(&[&[0, 0], &[0, 0]])
    }
    fn z2() -> Semigroup {
        sg(&[&[0, 1], &[1, 0]])
    }
    fn min2() -> Semigroup {
        sg(&[&[0, 0], &[0, 1]])
    }

    #[test]
    fn validates_tables() {
        assert!(validate_cayley(2, &[vec![0, 0], vec![1, 1]]).is_ok());
        assert!(validate_cayley(2, &[vec![0, 1], vec![1, 0]]).is_ok());
        assert_eq!(
            validate_cayley(2, &[vec![1, 1], vec![0, 0]]),
            Err(Error::AssociativityViolation { x: 0, y: 0, z: 0 })
        );
        assert_eq!(
            validate_cayley(2, &[vec![0, 2], vec![1, 0]]),
            Err(Error::OutOfRangeEntry { x: 0, y: 1, value: 2 })
        );
        assert_eq!(
            validate_cayley(2, &[vec![0, -1], vec![1, 0]]),
            Err(Error::OutOfRangeEntry { x: 0, y: 1, value: -1 })
        );
        assert_eq!(validate_cayley(0, &[]), Err(Error::EmptyCarrier));
        assert!(matches!(
            validate_cayley(2, &[vec![0, 0], vec![1]]),
            Err(Error::RaggedRow { row: 1, .. })
        ));
    }

    #[test]
    fn subset_products() {
        assert_eq!(multiply_subsets(&null2(), &set(2, &[1]), &set(2, &[1])).unwrap(), set(2, &[0]));
        assert_eq!(
            multiply_subsets(&left_zero(), &set(2, &[0]), &set(2, &[0, 1])).unwrap(),
            set(2, &[0])
        );
        assert_eq!(multiply_subsets(&z2(), &set(2, &[1]), &set(2, &[1])).unwrap(), set(2, &[0]));
        assert!(matches!(
            multiply_subsets(&z2(), &set(3, &[1]), &set(2, &[1])),
            Err(Error::CarrierMismatch { .. })
        ));
    }

    #[test]
    fn crisp_structures() {
        assert!(is_crisp_structure(CrispStructure::LeftIdeal, &min2(), &set(2, &[0])).unwrap());
        assert!(!is_crisp_structure(CrispStructure::LeftIdeal, &z2(), &set(2, &[0])).unwrap());
        for s in [left_zero(), null2(), z2(), min2()] {
            for kind in CrispStructure::ALL {
                assert!(is_crisp_structure(kind, &s, &s.full_subset()).unwrap());
            }
        }
        assert_eq!(
            is_crisp_structure(CrispStructure::Ideal, &z2(), &set(2, &[])),
            Err(Error::EmptySubset)
        );
    }

    #[test]
    fn principal_ideals() {
        assert_eq!(principal_two_sided_ideal(&min2(), 1).unwrap(), set(2, &[0, 1]));
        assert_eq!(principal_two_sided_ideal(&min2(), 0).unwrap(), set(2, &[0]));
        let monogenic = sg(&[&[1, 1], &[1, 1]]);
        assert_eq!(principal_two_sided_ideal(&monogenic, 1).unwrap(), set(2, &[1]));
        assert_eq!(principal_left_ideal(&left_zero(), 0).unwrap(), set(2, &[0, 1]));
        assert_eq!(principal_left_ideal(&min2(), 0).unwrap(), set(2, &[0]));
        assert_eq!(principal_left_ideal(&z2(), 1).unwrap(), set(2, &[0, 1]));
        assert_eq!(principal_right_ideal(&left_zero(), 0).unwrap(), set(2, &[0]));
        assert!(principal_left_ideal(&z2(), 2).is_err());
    }

    #[test]
    fn powers() {
        let z3 = sg(&[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]);
        assert_eq!(z3.power(1, 1), 1);
        assert_eq!(z3.power(1, 2), 2);
        assert_eq!(z3.power(1, 3), 0);
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(z2().to_string(), "[[0,1],[1,0]]");
        assert_eq!(set(3, &[0, 2]).to_string(), "{0,2}");
    }
}
