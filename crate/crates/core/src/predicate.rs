//! Intuitionistic fuzzy structure predicates over a finite semigroup.
//!
//! Every predicate is a conjunction of [`Condition`]s. A condition pairs a
//! point of the carrier with a list of bound points and demands
//! `mu(point) >= min mu(bounds)` and `nu(point) <= max nu(bounds)` for every
//! tuple. Tuples are scanned in lexicographic order so the first violation
//! reported is deterministic.

use std::fmt;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::ifs::IfSubset;
use crate::semigroup::{Element, Semigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FuzzyStructureKind {
    Subsemigroup,
    BiIdeal,
    OneTwoIdeal,
    LeftIdeal,
    RightIdeal,
    Ideal,
    Semiprime,
}

impl FuzzyStructureKind {
    pub const ALL: [FuzzyStructureKind; 7] = [
        FuzzyStructureKind::Subsemigroup,
        FuzzyStructureKind::BiIdeal,
        FuzzyStructureKind::OneTwoIdeal,
        FuzzyStructureKind::LeftIdeal,
        FuzzyStructureKind::RightIdeal,
        FuzzyStructureKind::Ideal,
        FuzzyStructureKind::Semiprime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FuzzyStructureKind::Subsemigroup => "subsemigroup",
            FuzzyStructureKind::BiIdeal => "bi-ideal",
            FuzzyStructureKind::OneTwoIdeal => "one-two-ideal",
            FuzzyStructureKind::LeftIdeal => "left-ideal",
            FuzzyStructureKind::RightIdeal => "right-ideal",
            FuzzyStructureKind::Ideal => "ideal",
            FuzzyStructureKind::Semiprime => "semiprime",
        }
    }

    pub fn conditions(self) -> &'static [Condition] {
        use Condition::*;
        match self {
            FuzzyStructureKind::Subsemigroup => &[Closure],
            FuzzyStructureKind::BiIdeal => &[Closure, BiIdeal],
            FuzzyStructureKind::OneTwoIdeal => &[Closure, OneTwoIdeal],
            FuzzyStructureKind::LeftIdeal => &[LeftIdeal],
            FuzzyStructureKind::RightIdeal => &[RightIdeal],
            FuzzyStructureKind::Ideal => &[LeftIdeal, RightIdeal],
            FuzzyStructureKind::Semiprime => &[LeftIdeal, RightIdeal, Semiprime],
        }
    }
}

impl fmt::Display for FuzzyStructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One family of pointwise inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `(x, y)`: point `xy`, bounds `x, y`.
    Closure,
    /// `(x, y, z)`: point `xyz`, bounds `x, z`.
    BiIdeal,
    /// `(x, w, y, z)`: point `xw(yz)`, bounds `x, y, z`.
    OneTwoIdeal,
    /// `(x, y)`: point `xy`, bound `y`.
    LeftIdeal,
    /// `(x, y)`: point `xy`, bound `x`.
    RightIdeal,
    /// `(x)`: point `x`, bound `x^2`.
    Semiprime,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::Closure,
        Condition::BiIdeal,
        Condition::OneTwoIdeal,
        Condition::LeftIdeal,
        Condition::RightIdeal,
        Condition::Semiprime,
    ];

    pub fn arity(self) -> usize {
        match self {
            Condition::Semiprime => 1,
            Condition::Closure | Condition::LeftIdeal | Condition::RightIdeal => 2,
            Condition::BiIdeal => 3,
            Condition::OneTwoIdeal => 4,
        }
    }

    /// The constrained point and its bound points for a tuple.
    pub fn instantiate(self, s: &Semigroup, tuple: &[Element]) -> (Element, Vec<Element>) {
        assert_eq!(tuple.len(), self.arity(), "tuple arity");
        let m = |a, b| s.mul(a, b);
        match self {
            Condition::Closure => (m(tuple[0], tuple[1]), vec![tuple[0], tuple[1]]),
            Condition::BiIdeal => (m(m(tuple[0], tuple[1]), tuple[2]), vec![tuple[0], tuple[2]]),
            Condition::OneTwoIdeal => (
                m(m(tuple[0], tuple[1]), m(tuple[2], tuple[3])),
                vec![tuple[0], tuple[2], tuple[3]],
            ),
            Condition::LeftIdeal => (m(tuple[0], tuple[1]), vec![tuple[1]]),
            Condition::RightIdeal => (m(tuple[0], tuple[1]), vec![tuple[0]]),
            Condition::Semiprime => (tuple[0], vec![s.square(tuple[0])]),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Condition::Closure => "closure",
            Condition::BiIdeal => "bi-ideal",
            Condition::OneTwoIdeal => "(1,2)-ideal",
            Condition::LeftIdeal => "left-ideal",
            Condition::RightIdeal => "right-ideal",
            Condition::Semiprime => "semiprime",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    /// `mu(point) >= min mu(bounds)`
    Membership,
    /// `nu(point) <= max nu(bounds)`
    NonMembership,
}

/// A tuple at which one inequality fails, with both sides of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Counterexample {
    pub condition: Condition,
    pub component: Component,
    pub tuple: Vec<Element>,
    /// Grade at the constrained point.
    pub lhs: Grade,
    /// The min (membership) or max (non-membership) over the bounds.
    pub rhs: Grade,
}

impl Counterexample {
    /// Recomputes both sides from the tuple and confirms the inequality fails
    /// with exactly the recorded values.
    pub fn replay(&self, s: &Semigroup, a: &IfSubset) -> bool {
        if self.tuple.len() != self.condition.arity() || self.tuple.iter().any(|&x| x >= s.order()) {
            return false;
        }
        let (point, bounds) = self.condition.instantiate(s, &self.tuple);
        let (lhs, rhs, violated) = match self.component {
            Component::Membership => {
                let rhs = bounds.iter().map(|&b| a.mu(b)).min().expect("bounds");
                (a.mu(point), rhs, a.mu(point) < rhs)
            }
            Component::NonMembership => {
                let rhs = bounds.iter().map(|&b| a.nu(b)).max().expect("bounds");
                (a.nu(point), rhs, a.nu(point) > rhs)
            }
        };
        violated && lhs == self.lhs && rhs == self.rhs
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuple: Vec<String> = self.tuple.iter().map(|x| x.to_string()).collect();
        let (name, op) = match self.component {
            Component::Membership => ("mu", ">="),
            Component::NonMembership => ("nu", "<="),
        };
        write!(
            f,
            "{} {name} at ({}): {} {op} {} fails",
            self.condition.name(),
            tuple.join(","),
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Counterexample),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(c) => Some(c),
        }
    }
}

/// Order-preserving integer codes of a grade map. The conditions only compare
/// grades and take min/max, so they can be decided on the codes.
fn ranks(values: &[Grade]) -> Vec<u32> {
    let mut distinct = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    values
        .iter()
        .map(|v| distinct.binary_search(v).expect("value is present") as u32)
        .collect()
}

struct Ranked {
    mu: Vec<u32>,
    nu: Vec<u32>,
}

impl Ranked {
    fn new(a: &IfSubset) -> Ranked {
        Ranked {
            mu: ranks(a.mu_values()),
            nu: ranks(a.nu_values()),
        }
    }

    #[inline]
    fn test(&self, point: Element, bounds: &[Element]) -> Option<Component> {
        let low = bounds.iter().map(|&b| self.mu[b]).min().expect("bounds");
        if self.mu[point] < low {
            return Some(Component::Membership);
        }
        let high = bounds.iter().map(|&b| self.nu[b]).max().expect("bounds");
        if self.nu[point] > high {
            return Some(Component::NonMembership);
        }
        None
    }

    fn first_violation(&self, s: &Semigroup, condition: Condition) -> Option<(Vec<Element>, Component)> {
        let n = s.order();
        match condition {
            Condition::Semiprime => {
                for x in 0..n {
                    if let Some(c) = self.test(x, &[s.square(x)]) {
                        return Some((vec![x], c));
                    }
                }
            }
            Condition::Closure | Condition::LeftIdeal | Condition::RightIdeal => {
                for x in 0..n {
                    for y in 0..n {
                        let xy = s.mul(x, y);
                        let hit = match condition {
                            Condition::Closure => self.test(xy, &[x, y]),
                            Condition::LeftIdeal => self.test(xy, &[y]),
                            _ => self.test(xy, &[x]),
                        };
                        if let Some(c) = hit {
                            return Some((vec![x, y], c));
                        }
                    }
                }
            }
            Condition::BiIdeal => {
                for x in 0..n {
                    for y in 0..n {
                        let xy = s.mul(x, y);
                        for z in 0..n {
                            if let Some(c) = self.test(s.mul(xy, z), &[x, z]) {
                                return Some((vec![x, y, z], c));
                            }
                        }
                    }
                }
            }
            Condition::OneTwoIdeal => {
                for x in 0..n {
                    for w in 0..n {
                        let xw = s.mul(x, w);
                        for y in 0..n {
                            for z in 0..n {
                                let point = s.mul(xw, s.mul(y, z));
                                if let Some(c) = self.test(point, &[x, y, z]) {
                                    return Some((vec![x, w, y, z], c));
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

fn counterexample(s: &Semigroup, a: &IfSubset, condition: Condition, tuple: Vec<Element>, component: Component) -> Counterexample {
    let (point, bounds) = condition.instantiate(s, &tuple);
    let (lhs, rhs) = match component {
        Component::Membership => (a.mu(point), bounds.iter().map(|&b| a.mu(b)).min().expect("bounds")),
        Component::NonMembership => (a.nu(point), bounds.iter().map(|&b| a.nu(b)).max().expect("bounds")),
    };
    Counterexample {
        condition,
        component,
        tuple,
        lhs,
        rhs,
    }
}

/// Evaluates a list of conditions in order; no non-emptiness requirement.
pub fn check_conditions(s: &Semigroup, a: &IfSubset, conditions: &[Condition]) -> Result<Verdict> {
    a.expect_carrier(s.order())?;
    let ranked = Ranked::new(a);
    for &condition in conditions {
        if let Some((tuple, component)) = ranked.first_violation(s, condition) {
            return Ok(Verdict::Fails(counterexample(s, a, condition, tuple, component)));
        }
    }
    Ok(Verdict::Holds)
}

/// For each condition, whether it holds on `a`.
pub fn holding_conditions(s: &Semigroup, a: &IfSubset, conditions: &[Condition]) -> Result<Vec<bool>> {
    a.expect_carrier(s.order())?;
    let ranked = Ranked::new(a);
    Ok(conditions
        .iter()
        .map(|&c| ranked.first_violation(s, c).is_none())
        .collect())
}

/// Decides whether `a` is an intuitionistic fuzzy structure of the given
/// kind. `a` must be non-empty.
pub fn check(kind: FuzzyStructureKind, s: &Semigroup, a: &IfSubset) -> Result<Verdict> {
    a.expect_carrier(s.order())?;
    if !a.is_nonempty() {
        return Err(Error::EmptyFuzzySubset);
    }
    check_conditions(s, a, kind.conditions())
}

/// Only `mu(x) >= mu(x^2)` and `nu(x) <= nu(x^2)`, without the ideal
/// requirement that [`FuzzyStructureKind::Semiprime`] carries.
pub fn semiprime_inequalities(s: &Semigroup, a: &IfSubset) -> Result<Verdict> {
    check_conditions(s, a, &[Condition::Semiprime])
}
