//! The sup-min / inf-max product of intuitionistic fuzzy subsets.

use crate::error::Result;
use crate::grade::Grade;
use crate::ifs::IfSubset;
use crate::semigroup::{Element, Semigroup};

/// For each element `x`, every pair `(u, v)` with `uv = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationIndex {
    by_element: Vec<Vec<(Element, Element)>>,
}

impl FactorizationIndex {
    pub fn build(s: &Semigroup) -> FactorizationIndex {
        let mut by_element = vec![Vec::new(); s.order()];
        for u in s.elements() {
            for v in s.elements() {
                by_element[s.mul(u, v)].push((u, v));
            }
        }
        FactorizationIndex { by_element }
    }

    pub fn order(&self) -> usize {
        self.by_element.len()
    }

    pub fn factorizations(&self, x: Element) -> &[(Element, Element)] {
        &self.by_element[x]
    }

    /// `A ∘ B`: membership is the max over factorizations `x = uv` of
    /// `min(mu_A(u), mu_B(v))`, non-membership the min of
    /// `max(nu_A(u), nu_B(v))`; an element with no factorization gets `(0, 1)`.
    pub fn product(&self, a: &IfSubset, b: &IfSubset) -> Result<IfSubset> {
        a.expect_carrier(self.order())?;
        b.expect_carrier(self.order())?;
        let (mu, nu) = self
            .by_element
            .iter()
            .map(|pairs| {
                let mu = pairs
                    .iter()
                    .map(|&(u, v)| a.mu(u).min(b.mu(v)))
                    .max()
                    .unwrap_or(Grade::ZERO);
                let nu = pairs
                    .iter()
                    .map(|&(u, v)| a.nu(u).max(b.nu(v)))
                    .min()
                    .unwrap_or(Grade::ONE);
                (mu, nu)
            })
            .unzip();
        Ok(IfSubset::new(mu, nu).expect("a product of valid subsets satisfies mu + nu <= 1"))
    }
}

pub fn build_factorizations(s: &Semigroup) -> FactorizationIndex {
    FactorizationIndex::build(s)
}

/// One-shot product; build a [`FactorizationIndex`] when multiplying often.
pub fn if_product(s: &Semigroup, a: &IfSubset, b: &IfSubset) -> Result<IfSubset> {
    FactorizationIndex::build(s).product(a, b)
}
