//! Intuitionistic fuzzy subsets of a finite carrier.

use crate::error::{Error, Result};
use crate::grade::{self, Grade, Rational};
use crate::semigroup::{Element, ElementSubset};

/// A pair of grade maps `(mu, nu)` with `mu(x) + nu(x) <= 1` everywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IfSubset {
    mu: Vec<Grade>,
    nu: Vec<Grade>,
}

impl IfSubset {
    pub fn new(mu: Vec<Grade>, nu: Vec<Grade>) -> Result<IfSubset> {
        if mu.is_empty() && nu.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if mu.len() != nu.len() {
            return Err(Error::LengthMismatch {
                mu: mu.len(),
                nu: nu.len(),
                expected: mu.len().max(nu.len()),
            });
        }
        for (element, (m, v)) in mu.iter().zip(&nu).enumerate() {
            let sum = grade::add(m.value(), v.value())?;
            if sum > Grade::ONE.value() {
                return Err(Error::SumConstraintViolation { element, sum });
            }
        }
        Ok(IfSubset { mu, nu })
    }

    /// The subset with `mu ≡ mu_value` and `nu ≡ nu_value`.
    pub fn constant(carrier_order: usize, mu_value: Grade, nu_value: Grade) -> Result<IfSubset> {
        IfSubset::new(vec![mu_value; carrier_order], vec![nu_value; carrier_order])
    }

    /// `mu ≡ 1`, `nu ≡ 0`.
    pub fn full(carrier_order: usize) -> IfSubset {
        IfSubset {
            mu: vec![Grade::ONE; carrier_order],
            nu: vec![Grade::ZERO; carrier_order],
        }
    }

    pub fn carrier_order(&self) -> usize {
        self.mu.len()
    }

    #[inline]
    pub fn mu(&self, x: Element) -> Grade {
        self.mu[x]
    }

    #[inline]
    pub fn nu(&self, x: Element) -> Grade {
        self.nu[x]
    }

    pub fn mu_values(&self) -> &[Grade] {
        &self.mu
    }

    pub fn nu_values(&self) -> &[Grade] {
        &self.nu
    }

    pub(crate) fn same_carrier(&self, other: &IfSubset) -> Result<()> {
        if self.carrier_order() == other.carrier_order() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                expected: self.carrier_order(),
                found: other.carrier_order(),
            })
        }
    }

    pub(crate) fn expect_carrier(&self, order: usize) -> Result<()> {
        if self.carrier_order() == order {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                expected: order,
                found: self.carrier_order(),
            })
        }
    }

    /// `A ⊆ B` iff `mu_A <= mu_B` and `nu_A >= nu_B` pointwise.
    pub fn is_subset_of(&self, other: &IfSubset) -> Result<bool> {
        self.same_carrier(other)?;
        Ok((0..self.carrier_order()).all(|x| self.mu[x] <= other.mu[x] && self.nu[x] >= other.nu[x]))
    }

    /// Mutual inclusion, which on exact grades is pointwise equality.
    pub fn same_as(&self, other: &IfSubset) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    pub fn complement(&self) -> IfSubset {
        IfSubset {
            mu: self.nu.clone(),
            nu: self.mu.clone(),
        }
    }

    /// Pointwise `(min mu, max nu)`.
    pub fn intersect(&self, other: &IfSubset) -> Result<IfSubset> {
        self.same_carrier(other)?;
        Ok(IfSubset {
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| *a.min(b)).collect(),
            nu: self.nu.iter().zip(&other.nu).map(|(a, b)| *a.max(b)).collect(),
        })
    }

    /// Pointwise `(max mu, min nu)`.
    pub fn union(&self, other: &IfSubset) -> Result<IfSubset> {
        self.same_carrier(other)?;
        Ok(IfSubset {
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| *a.max(b)).collect(),
            nu: self.nu.iter().zip(&other.nu).map(|(a, b)| *a.min(b)).collect(),
        })
    }

    /// Some point has positive membership.
    pub fn is_nonempty(&self) -> bool {
        self.mu.iter().any(|m| !m.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.mu.windows(2).all(|w| w[0] == w[1]) && self.nu.windows(2).all(|w| w[0] == w[1])
    }

    /// Replaces the grades at one point.
    pub fn with_point(&self, x: Element, mu: Grade, nu: Grade) -> Result<IfSubset> {
        let mut m = self.mu.clone();
        let mut v = self.nu.clone();
        m[x] = mu;
        v[x] = nu;
        IfSubset::new(m, v)
    }
}

/// Builds an `IfSubset` from raw rationals, checking ranges and the sum
/// constraint pointwise.
pub fn validate_ifs(carrier_order: usize, mu: &[Rational], nu: &[Rational]) -> Result<IfSubset> {
    if carrier_order == 0 {
        return Err(Error::EmptyCarrier);
    }
    if mu.len() != carrier_order || nu.len() != carrier_order {
        return Err(Error::LengthMismatch {
            mu: mu.len(),
            nu: nu.len(),
            expected: carrier_order,
        });
    }
    let to_grades = |values: &[Rational]| -> Result<Vec<Grade>> {
        values
            .iter()
            .enumerate()
            .map(|(element, &value)| Grade::new(value).ok_or(Error::GradeOutOfRange { element, value }))
            .collect()
    };
    IfSubset::new(to_grades(mu)?, to_grades(nu)?)
}

/// `(χ_A, 1 − χ_A)` for a non-empty crisp subset.
pub fn characteristic_pair(carrier_order: usize, a: &ElementSubset) -> Result<IfSubset> {
    if a.carrier_order() != carrier_order {
        return Err(Error::CarrierMismatch {
            expected: carrier_order,
            found: a.carrier_order(),
        });
    }
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let chi = |x: Element| if a.contains(x) { Grade::ONE } else { Grade::ZERO };
    let co_chi = |x: Element| if a.contains(x) { Grade::ZERO } else { Grade::ONE };
    Ok(IfSubset {
        mu: (0..carrier_order).map(chi).collect(),
        nu: (0..carrier_order).map(co_chi).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn g(n: i64, d: i64) -> Grade {
        Grade::from_fraction(n, d).unwrap()
    }

    fn example() -> IfSubset {
        validate_ifs(3, &[r(3, 10), r(1, 10), r(1, 2)], &[r(2, 5), r(1, 4), r(3, 10)]).unwrap()
    }

    #[test]
    fn validation() {
        example();
        validate_ifs(2, &[r(1, 1), r(1, 1)], &[r(0, 1), r(0, 1)]).unwrap();
        assert_eq!(
            validate_ifs(2, &[r(7, 10), r(0, 1)], &[r(1, 2), r(0, 1)]),
            Err(Error::SumConstraintViolation { element: 0, sum: r(6, 5) })
        );
        assert_eq!(
            validate_ifs(1, &[r(-1, 2)], &[r(0, 1)]),
            Err(Error::GradeOutOfRange { element: 0, value: r(-1, 2) })
        );
        assert!(matches!(validate_ifs(2, &[r(0, 1)], &[r(0, 1)]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn inclusion() {
        let a = IfSubset::new(vec![g(1, 5)], vec![g(1, 2)]).unwrap();
        let b = IfSubset::new(vec![g(2, 5)], vec![g(3, 10)]).unwrap();
        assert!(a.is_subset_of(&a).unwrap());
        assert!(a.is_subset_of(&b).unwrap());
        assert!(!b.is_subset_of(&a).unwrap());
        assert!(matches!(a.is_subset_of(&example()), Err(Error::CarrierMismatch { .. })));
    }

    #[test]
    fn lattice_operations() {
        let a = example();
        assert!(a.same_as(&a.complement().complement()).unwrap());
        assert_eq!(a.intersect(&IfSubset::full(3)).unwrap(), a);
        assert_eq!(a.union(&a).unwrap(), a);
        let p = IfSubset::new(vec![g(3, 10)], vec![g(2, 5)]).unwrap();
        let q = IfSubset::new(vec![g(1, 10)], vec![g(1, 4)]).unwrap();
        let i = p.intersect(&q).unwrap();
        assert_eq!((i.mu(0), i.nu(0)), (g(1, 10), g(2, 5)));
        let c = p.complement();
        assert_eq!((c.mu(0), c.nu(0)), (g(2, 5), g(3, 10)));
    }

    #[test]
    fn characteristic_pairs() {
        let a = ElementSubset::new(2, [0]).unwrap();
        let chi = characteristic_pair(2, &a).unwrap();
        assert_eq!(chi.mu_values(), &[Grade::ONE, Grade::ZERO]);
        assert_eq!(chi.nu_values(), &[Grade::ZERO, Grade::ONE]);
        assert_eq!(characteristic_pair(3, &ElementSubset::full(3)).unwrap(), IfSubset::full(3));
        assert_eq!(
            characteristic_pair(2, &ElementSubset::new(2, []).unwrap()),
            Err(Error::EmptySubset)
        );
        let crisp = characteristic_pair(1, &ElementSubset::full(1)).unwrap().complement();
        assert_eq!((crisp.mu(0), crisp.nu(0)), (Grade::ZERO, Grade::ONE));
    }

    #[test]
    fn emptiness_and_constancy() {
        assert!(!IfSubset::constant(3, Grade::ZERO, Grade::ONE).unwrap().is_nonempty());
        assert!(IfSubset::constant(3, g(1, 2), g(1, 5)).unwrap().is_constant());
        assert!(!example().is_constant());
        assert!(example().is_nonempty());
    }

    fn arb_ifs(n: usize) -> impl Strategy<Value = IfSubset> {
        proptest::collection::vec((0i64..=12, 0i64..=12), n).prop_map(|pts| {
            let (mu, nu): (Vec<Grade>, Vec<Grade>) = pts
                .into_iter()
                .map(|(a, b)| {
                    let b = b.min(12 - a);
                    (Grade::from_fraction(a, 12).unwrap(), Grade::from_fraction(b, 12).unwrap())
                })
                .unzip();
            IfSubset::new(mu, nu).unwrap()
        })
    }

    fn sums_ok(a: &IfSubset) -> bool {
        (0..a.carrier_order()).all(|x| a.mu(x).value() + a.nu(x).value() <= Rational::from(1))
    }

    proptest! {
        #[test]
        fn lattice_laws(a in arb_ifs(3), b in arb_ifs(3), c in arb_ifs(3)) {
            let ab = a.intersect(&b).unwrap();
            prop_assert!(sums_ok(&ab) && sums_ok(&a.union(&b).unwrap()));
            prop_assert_eq!(&ab, &b.intersect(&a).unwrap());
            prop_assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());
            prop_assert_eq!(
                ab.intersect(&c).unwrap(),
                a.intersect(&b.intersect(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.union(&b).unwrap().union(&c).unwrap(),
                a.union(&b.union(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
            prop_assert_eq!(ab.complement(), a.complement().union(&b.complement()).unwrap());
            prop_assert_eq!(a.complement().complement(), a.clone());
        }

        #[test]
        fn inclusion_is_a_partial_order(a in arb_ifs(2), b in arb_ifs(2), c in arb_ifs(2)) {
            prop_assert!(a.is_subset_of(&a).unwrap());
            if a.is_subset_of(&b).unwrap() && b.is_subset_of(&a).unwrap() {
                prop_assert_eq!(&a, &b);
                prop_assert!(a.same_as(&b).unwrap());
            }
            if a.is_subset_of(&b).unwrap() && b.is_subset_of(&c).unwrap() {
                prop_assert!(a.is_subset_of(&c).unwrap());
            }
            prop_assert!(a.intersect(&b).unwrap().is_subset_of(&a).unwrap());
            prop_assert!(a.is_subset_of(&a.union(&b).unwrap()).unwrap());
        }
    }
}
