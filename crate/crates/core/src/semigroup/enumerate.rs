use super::{Element, Semigroup};
use crate::error::{Error, Result};

/// Order 4 already has 4^16 raw tables.
pub const MAX_ENUMERATION_ORDER: usize = 3;

/// Streams every labeled associative table of the given order, in
/// lexicographic (row-major) table order.
pub fn enumerate_semigroups(order: usize) -> Result<SemigroupEnumerator> {
    if order == 0 {
        return Err(Error::EmptyCarrier);
    }
    if order > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge(order));
    }
    Ok(SemigroupEnumerator {
        order,
        cells: vec![0; order * order],
        pos: 0,
        done: false,
    })
}

/// Depth-first search over row-major cells. Cells after `pos` hold 0; the
/// value at `pos` is the next candidate to try.
#[derive(Clone, Debug)]
pub struct SemigroupEnumerator {
    order: usize,
    cells: Vec<Element>,
    pos: usize,
    done: bool,
}

impl SemigroupEnumerator {
    /// Checks every triple whose four products are already assigned.
    fn consistent(&self) -> bool {
        let n = self.order;
        let assigned = |cell: usize| cell <= self.pos;
        for x in 0..n {
            for y in 0..n {
                if !assigned(x * n + y) {
                    continue;
                }
                let xy = self.cells[x * n + y];
                for z in 0..n {
                    if !assigned(xy * n + z) || !assigned(y * n + z) {
                        continue;
                    }
                    let yz = self.cells[y * n + z];
                    if !assigned(x * n + yz) {
                        continue;
                    }
                    if self.cells[xy * n + z] != self.cells[x * n + yz] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Iterator for SemigroupEnumerator {
    type Item = Semigroup;

    fn next(&mut self) -> Option<Semigroup> {
        let n = self.order;
        let last = n * n - 1;
        while !self.done {
            if self.cells[self.pos] == n {
                self.cells[self.pos] = 0;
                if self.pos == 0 {
                    self.done = true;
                    break;
                }
                self.pos -= 1;
                self.cells[self.pos] += 1;
                continue;
            }
            if !self.consistent() {
                self.cells[self.pos] += 1;
            } else if self.pos == last {
                let found = Semigroup::from_table_unchecked(n, self.cells.clone());
                self.cells[self.pos] += 1;
                return Some(found);
            } else {
                self.pos += 1;
            }
        }
        None
    }
}
