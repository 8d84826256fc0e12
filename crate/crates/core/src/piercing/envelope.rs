//! Staircase envelopes of same-kind corner boxes.
//!
//! The union of the NW boxes of all crosses is the region strictly above a
//! nondecreasing staircase; the NE union lies above a nonincreasing one, and
//! the SW / SE unions lie below a nonincreasing / nondecreasing staircase.
//! At an x-rank the four staircases are
//!
//! ```text
//! f_nw(x) = min { d_i : a_i > x }     f_ne(x) = min { d_i : b_i < x }
//! g_sw(x) = max { c_i : a_i > x }     g_se(x) = max { c_i : b_i < x }
//! ```
//!
//! with an empty set meaning "no constraint". They are built from one sort
//! by `a` and one sort by `b` followed by running minima / maxima.

use std::cmp::Ordering;

use crate::instance::{PiercingInstance, Rank};
use crate::query::QueryCounter;
use crate::sorting::merge_sort_counted_by;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    NonDecreasing,
    NonIncreasing,
}

/// Piecewise-constant function on integer x.
///
/// Piece `0` covers `x < breakpoints[0]`, piece `j` covers
/// `breakpoints[j-1] <= x < breakpoints[j]`, and the last piece extends to
/// the right. `None` is the "no constraint" sentinel (+inf for an upper
/// envelope, -inf for a lower one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepFunction {
    trend: Trend,
    breakpoints: Vec<Rank>,
    values: Vec<Option<Rank>>,
}

impl StepFunction {
    fn unconstrained(trend: Trend) -> Self {
        Self { trend, breakpoints: Vec::new(), values: vec![None] }
    }

    pub fn trend(&self) -> Trend {
        self.trend
    }

    pub fn breakpoints(&self) -> &[Rank] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Option<Rank>] {
        &self.values
    }

    pub fn piece_count(&self) -> usize {
        self.values.len()
    }

    pub fn eval(&self, x: Rank) -> Option<Rank> {
        self.values[self.breakpoints.partition_point(|&b| b <= x)]
    }

    /// Checks the declared trend, treating `None` as the sentinel of the
    /// function's role (`upper`: +inf, otherwise -inf).
    pub fn is_monotone(&self, upper: bool) -> bool {
        let lift = |v: Option<Rank>| match (v, upper) {
            (Some(r), _) => r as i128,
            (None, true) => i128::MAX,
            (None, false) => i128::MIN,
        };
        self.values.windows(2).all(|w| match self.trend {
            Trend::NonDecreasing => lift(w[0]) <= lift(w[1]),
            Trend::NonIncreasing => lift(w[0]) >= lift(w[1]),
        })
    }
}

/// The four staircases of a piercing instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelopes {
    pub f_nw: StepFunction,
    pub f_ne: StepFunction,
    pub g_sw: StepFunction,
    pub g_se: StepFunction,
}

pub fn build_envelopes(instance: &PiercingInstance) -> Envelopes {
    build_envelopes_counted(instance, &mut QueryCounter::new())
}

pub fn build_envelopes_counted(instance: &PiercingInstance, counter: &mut QueryCounter) -> Envelopes {
    let crosses = &instance.crosses;
    if crosses.is_empty() {
        return Envelopes {
            f_nw: StepFunction::unconstrained(Trend::NonDecreasing),
            f_ne: StepFunction::unconstrained(Trend::NonIncreasing),
            g_sw: StepFunction::unconstrained(Trend::NonIncreasing),
            g_se: StepFunction::unconstrained(Trend::NonDecreasing),
        };
    }

    let by_a = merge_sort_counted_by(crosses, counter, |p, q| p.h.lo().cmp(&q.h.lo())).order;
    let a_keys: Vec<Rank> = by_a.iter().map(|&i| crosses[i].h.lo()).collect();
    let a_ends = group_ends(&a_keys, counter);
    let d_by_a: Vec<Rank> = by_a.iter().map(|&i| crosses[i].v.hi()).collect();
    let c_by_a: Vec<Rank> = by_a.iter().map(|&i| crosses[i].v.lo()).collect();
    let d_suffix = running(d_by_a.iter().rev().copied(), Ordering::Less, counter);
    let c_suffix = running(c_by_a.iter().rev().copied(), Ordering::Greater, counter);

    let by_b = merge_sort_counted_by(crosses, counter, |p, q| p.h.hi().cmp(&q.h.hi())).order;
    let b_keys: Vec<Rank> = by_b.iter().map(|&i| crosses[i].h.hi()).collect();
    let b_ends = group_ends(&b_keys, counter);
    let d_by_b: Vec<Rank> = by_b.iter().map(|&i| crosses[i].v.hi()).collect();
    let c_by_b: Vec<Rank> = by_b.iter().map(|&i| crosses[i].v.lo()).collect();
    let d_prefix = running(d_by_b.iter().copied(), Ordering::Less, counter);
    let c_prefix = running(c_by_b.iter().copied(), Ordering::Greater, counter);

    let n = crosses.len();
    // suffix[k] (as built, reversed) aggregates positions n-1-k..; position p
    // onward is index n-1-p.
    let from = |suffix: &[Rank], p: usize| (p < n).then(|| suffix[n - 1 - p]);
    let west = |suffix: &[Rank], trend| StepFunction {
        trend,
        breakpoints: a_ends.iter().map(|&e| a_keys[e - 1]).collect(),
        values: std::iter::once(from(suffix, 0)).chain(a_ends.iter().map(|&e| from(suffix, e))).collect(),
    };
    let east = |prefix: &[Rank], trend| StepFunction {
        trend,
        breakpoints: b_ends.iter().map(|&e| b_keys[e - 1] + 1).collect(),
        values: std::iter::once(None).chain(b_ends.iter().map(|&e| Some(prefix[e - 1]))).collect(),
    };

    Envelopes {
        f_nw: west(&d_suffix, Trend::NonDecreasing),
        g_sw: west(&c_suffix, Trend::NonIncreasing),
        f_ne: east(&d_prefix, Trend::NonIncreasing),
        g_se: east(&c_prefix, Trend::NonDecreasing),
    }
}

/// Exclusive end positions of the runs of equal keys in a sorted list.
fn group_ends(sorted: &[Rank], counter: &mut QueryCounter) -> Vec<usize> {
    let mut ends = Vec::new();
    for p in 1..sorted.len() {
        if counter.compare(&sorted[p - 1], &sorted[p]) != Ordering::Equal {
            ends.push(p);
        }
    }
    ends.push(sorted.len());
    ends
}

/// Running minimum (`keep = Less`) or maximum (`keep = Greater`).
fn running(values: impl Iterator<Item = Rank>, keep: Ordering, counter: &mut QueryCounter) -> Vec<Rank> {
    let mut out: Vec<Rank> = Vec::new();
    for v in values {
        let next = match out.last() {
            Some(&best) if counter.compare(&v, &best) != keep => best,
            _ => v,
        };
        out.push(next);
    }
    out
}
