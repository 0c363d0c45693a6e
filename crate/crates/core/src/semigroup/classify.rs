use super::{Element, Semigroup};

/// The regularity notions decided by witness search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegularityKind {
    /// `a = axa`
    Regular,
    /// `a = x a^2 y`
    IntraRegular,
    /// `a = x a^2`
    LeftRegular,
    /// `a = a^2 x`
    RightRegular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub regular: bool,
    pub intra_regular: bool,
    pub left_regular: bool,
    pub right_regular: bool,
    pub archimedean: bool,
    pub is_group: bool,
    /// Two-sided identity, if the semigroup is a monoid.
    pub identity: Option<Element>,
}

impl Classification {
    pub fn flag(&self, kind: RegularityKind) -> bool {
        match kind {
            RegularityKind::Regular => self.regular,
            RegularityKind::IntraRegular => self.intra_regular,
            RegularityKind::LeftRegular => self.left_regular,
            RegularityKind::RightRegular => self.right_regular,
        }
    }
}

/// The elements `x` (and `y`) that exhibit `a` as regular of the given kind,
/// or `None` if no witness exists.
pub fn regularity_witness(s: &Semigroup, kind: RegularityKind, a: Element) -> Option<Vec<Element>> {
    let a2 = s.square(a);
    match kind {
        RegularityKind::Regular => s.elements().find(|&x| s.mul(s.mul(a, x), a) == a).map(|x| vec![x]),
        RegularityKind::LeftRegular => s.elements().find(|&x| s.mul(x, a2) == a).map(|x| vec![x]),
        RegularityKind::RightRegular => s.elements().find(|&x| s.mul(a2, x) == a).map(|x| vec![x]),
        RegularityKind::IntraRegular => s.elements().find_map(|x| {
            let xa2 = s.mul(x, a2);
            s.elements().find(|&y| s.mul(xa2, y) == a).map(|y| vec![x, y])
        }),
    }
}

/// The least element with no regularity witness of the given kind.
pub fn first_irregular(s: &Semigroup, kind: RegularityKind) -> Option<Element> {
    s.elements().find(|&a| regularity_witness(s, kind, a).is_none())
}

/// For all `a, b` some power `a^k` lies in `SbS`. Powers of `a` repeat after
/// at most `|S|` steps, so `k` ranges over `1..=|S|`.
pub fn is_archimedean(s: &Semigroup) -> bool {
    let n = s.order();
    s.elements().all(|b| {
        let mut sbs = vec![false; n];
        for x in s.elements() {
            let xb = s.mul(x, b);
            for y in s.elements() {
                sbs[s.mul(xb, y)] = true;
            }
        }
        s.elements().all(|a| {
            let mut p = a;
            for _ in 0..n {
                if sbs[p] {
                    return true;
                }
                p = s.mul(p, a);
            }
            false
        })
    })
}

fn identity(s: &Semigroup) -> Option<Element> {
    s.elements()
        .find(|&e| s.elements().all(|x| s.mul(e, x) == x && s.mul(x, e) == x))
}

pub fn classify(s: &Semigroup) -> Classification {
    let all = |kind| first_irregular(s, kind).is_none();
    let identity = identity(s);
    let is_group = identity.is_some_and(|e| {
        s.elements()
            .all(|a| s.elements().any(|b| s.mul(a, b) == e && s.mul(b, a) == e))
    });
    Classification {
        regular: all(RegularityKind::Regular),
        intra_regular: all(RegularityKind::IntraRegular),
        left_regular: all(RegularityKind::LeftRegular),
        right_regular: all(RegularityKind::RightRegular),
        archimedean: is_archimedean(s),
        is_group,
        identity,
    }
}
