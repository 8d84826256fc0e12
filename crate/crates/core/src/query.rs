//! Comparison accounting.
//!
//! A query asks for the order of two endpoint values. The truthful answer is
//! always one of `<`, `=`, `>`; weaker answer forms (`<=`, `>=`, `!=`) only
//! enter the base-6 bound arithmetic in [`crate::bounds`].

use std::cmp::Ordering;

/// Tally of comparison queries made during one solver run.
///
/// A counter belongs to a single run and is never shared; create a fresh one
/// per call.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QueryCounter {
    less: u64,
    equal: u64,
    greater: u64,
}

impl QueryCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Compares `x` with `y`, recording exactly one query.
    pub fn compare<T: Ord + ?Sized>(&mut self, x: &T, y: &T) -> Ordering {
        self.record(x.cmp(y))
    }

    /// Records an outcome that was computed elsewhere (e.g. by a custom key
    /// comparator) and passes it through.
    pub fn record(&mut self, outcome: Ordering) -> Ordering {
        match outcome {
            Ordering::Less => self.less += 1,
            Ordering::Equal => self.equal += 1,
            Ordering::Greater => self.greater += 1,
        }
        outcome
    }

    pub fn less_than<T: Ord + ?Sized>(&mut self, x: &T, y: &T) -> bool {
        self.compare(x, y) == Ordering::Less
    }

    pub fn at_most<T: Ord + ?Sized>(&mut self, x: &T, y: &T) -> bool {
        self.compare(x, y) != Ordering::Greater
    }

    pub fn min<T: Ord + Copy>(&mut self, x: T, y: T) -> T {
        if self.at_most(&x, &y) {
            x
        } else {
            y
        }
    }

    pub fn max<T: Ord + Copy>(&mut self, x: T, y: T) -> T {
        if self.at_most(&x, &y) {
            y
        } else {
            x
        }
    }

    /// Total number of queries.
    pub fn comparisons(&self) -> u64 {
        self.less + self.equal + self.greater
    }

    /// Outcome histogram as `(less, equal, greater)`.
    pub fn histogram(&self) -> (u64, u64, u64) {
        (self.less, self.equal, self.greater)
    }
}

/// Free-function form of [`QueryCounter::compare`].
pub fn counted_compare<T: Ord + ?Sized>(counter: &mut QueryCounter, x: &T, y: &T) -> Ordering {
    counter.compare(x, y)
}
