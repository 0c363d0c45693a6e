//! A small catalog of named semigroups with their expected classifications.

use super::{classify, Classification, Element, Semigroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSemigroup {
    pub name: String,
    pub semigroup: Semigroup,
    pub expected: Classification,
}

const fn flags(regular: bool, archimedean: bool, is_group: bool, identity: Option<Element>) -> Classification {
    Classification {
        regular,
        intra_regular: regular,
        left_regular: regular,
        right_regular: regular,
        archimedean,
        is_group,
        identity,
    }
}

fn table(order: usize, op: impl Fn(Element, Element) -> Element) -> Semigroup {
    let cells = (0..order)
        .flat_map(|x| (0..order).map(move |y| (x, y)))
        .map(|(x, y)| op(x, y))
        .collect();
    Semigroup::from_table_unchecked(order, cells)
}

/// Multiplication table of a set of transformations closed under composition,
/// where `fg` applies `f` first.
fn transformations(maps: &[&[usize]]) -> Semigroup {
    let index = |m: &[usize]| {
        maps.iter()
            .position(|&candidate| candidate == m)
            .expect("transformation set is closed under composition")
    };
    table(maps.len(), |f, g| {
        let composed: Vec<usize> = maps[f].iter().map(|&i| maps[g][i]).collect();
        index(&composed)
    })
}

/// The curated catalog. Each entry's expected flags are checked against
/// [`classify`] on construction.
pub fn builtin_library() -> Vec<NamedSemigroup> {
    let mut out = Vec::new();
    let mut push = |name: String, semigroup: Semigroup, expected: Classification| {
        let rows: Vec<Vec<Element>> = semigroup.rows().map(|r| r.to_vec()).collect();
        Semigroup::from_rows(&rows).expect("library tables are associative");
        assert_eq!(classify(&semigroup), expected, "library entry {name}");
        out.push(NamedSemigroup {
            name,
            semigroup,
            expected,
        });
    };
    for n in 2..=3 {
        push(format!("leftzero{n}"), table(n, |x, _| x), flags(true, true, false, None));
        push(format!("rightzero{n}"), table(n, |_, y| y), flags(true, true, false, None));
        push(format!("null{n}"), table(n, |_, _| 0), flags(false, true, false, None));
    }
    for n in 2..=4 {
        push(format!("cyclic{n}"), table(n, |x, y| (x + y) % n), flags(true, true, true, Some(0)));
    }
    for n in 2..=3 {
        push(
            format!("semilattice{n}"),
            table(n, |x, y| x.min(y)),
            flags(true, false, false, Some(n - 1)),
        );
    }
    // a = 0, a^2 = 1, a^3 = a^2
    push("monogenic2".into(), table(2, |_, _| 1), flags(false, true, false, None));
    // a = 0, a^2 = 1, a^3 = 2, a^4 = a^2
    push(
        "monogenic3".into(),
        table(3, |x, y| {
            let k = (x + 1) + (y + 1);
            if k % 2 == 0 {
                1
            } else {
                2
            }
        }),
        flags(false, true, false, None),
    );
    // Powers t, t^2, t^3, t^4 of the nilpotent map 0->1->2->3->4->4.
    push(
        "nilpotent4".into(),
        transformations(&[&[1, 2, 3, 4, 4], &[2, 3, 4, 4, 4], &[3, 4, 4, 4, 4], &[4, 4, 4, 4, 4]]),
        flags(false, true, false, None),
    );
    // All self-maps of a two-point set: identity, swap, the two constants.
    push(
        "transform2".into(),
        transformations(&[&[0, 1], &[1, 0], &[0, 0], &[1, 1]]),
        flags(true, false, false, Some(0)),
    );
    out
}

pub fn lookup(name: &str) -> Option<NamedSemigroup> {
    builtin_library().into_iter().find(|entry| entry.name == name)
}
