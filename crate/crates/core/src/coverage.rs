//! Coverage of a base interval by closed subintervals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{CoverageInstance, Interval, Permutation, Rank};
use crate::query::QueryCounter;
use crate::sorting::merge_sort_counted_by;

/// Open interval `(lo, hi)` of the domain that no member interval meets.
///
/// For a degenerate domain `[p, p]` the witness is the point itself and
/// `lo == hi == p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "[Rank; 2]", from = "[Rank; 2]")]
pub struct Gap {
    pub lo: Rank,
    pub hi: Rank,
}

impl From<Gap> for [Rank; 2] {
    fn from(g: Gap) -> Self {
        [g.lo, g.hi]
    }
}

impl From<[Rank; 2]> for Gap {
    fn from([lo, hi]: [Rank; 2]) -> Self {
        Gap { lo, hi }
    }
}

impl Gap {
    /// Whether the open gap shares a point with the closed interval `iv`.
    pub fn meets(&self, iv: &Interval) -> bool {
        if self.lo == self.hi {
            return iv.contains(self.lo);
        }
        iv.lo() < self.hi && iv.hi() > self.lo
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageVerdict {
    pub covered: bool,
    #[serde(rename = "gap", skip_serializing_if = "Option::is_none", default)]
    pub gap_witness: Option<Gap>,
    #[serde(rename = "queries")]
    pub queries_used: u64,
}

impl CoverageVerdict {
    fn covered(queries_used: u64) -> Self {
        Self { covered: true, gap_witness: None, queries_used }
    }

    fn gap(lo: Rank, hi: Rank, queries_used: u64) -> Self {
        Self { covered: false, gap_witness: Some(Gap { lo, hi }), queries_used }
    }

    /// Checks the witness directly: absent when covered, otherwise inside
    /// the domain and disjoint from every interval.
    pub fn witness_is_sound(&self, instance: &CoverageInstance) -> bool {
        match (self.covered, self.gap_witness) {
            (true, None) => true,
            (false, Some(g)) => {
                let d = instance.domain;
                let inside = d.lo() <= g.lo && g.hi <= d.hi() && (g.lo < g.hi || d.is_degenerate());
                inside && !instance.intervals.iter().any(|iv| g.meets(iv))
            }
            _ => false,
        }
    }
}

/// Decides coverage by sorting on left endpoints and extending the reach
/// greedily. Reports the leftmost maximal uncovered open interval.
pub fn solve_coverage(instance: &CoverageInstance, counter: &mut QueryCounter) -> CoverageVerdict {
    let start = counter.comparisons();
    let used = |c: &QueryCounter| c.comparisons() - start;
    let domain = instance.domain;
    let ivs = &instance.intervals;
    if ivs.is_empty() {
        return CoverageVerdict::gap(domain.lo(), domain.hi(), 0);
    }
    let sorted = merge_sort_counted_by(ivs, counter, |a, b| a.lo().cmp(&b.lo()));

    // `reach`: everything in [domain.lo, reach] is covered.
    let mut reach: Option<Rank> = None;
    for &i in &sorted.order {
        let iv = ivs[i];
        match reach {
            None => {
                if counter.less_than(&domain.lo(), &iv.lo()) {
                    return CoverageVerdict::gap(domain.lo(), iv.lo(), used(counter));
                }
                reach = Some(iv.hi());
            }
            Some(r) => {
                if counter.less_than(&r, &iv.lo()) {
                    return CoverageVerdict::gap(r, iv.lo(), used(counter));
                }
                reach = Some(counter.max(r, iv.hi()));
            }
        }
    }
    let r = reach.expect("non-empty family");
    if counter.less_than(&r, &domain.hi()) {
        CoverageVerdict::gap(r, domain.hi(), used(counter))
    } else {
        CoverageVerdict::covered(used(counter))
    }
}

/// Brute-force coverage check over elementary cells.
///
/// Every endpoint value and every open stretch between consecutive values is
/// a cell; each cell is tested against every interval. O(N^2).
pub fn oracle_coverage(instance: &CoverageInstance) -> CoverageVerdict {
    let domain = instance.domain;
    let mut values: Vec<Rank> = instance
        .intervals
        .iter()
        .flat_map(|iv| [iv.lo(), iv.hi()])
        .chain([domain.lo(), domain.hi()])
        .filter(|&v| domain.contains(v))
        .collect();
    values.sort_unstable();
    values.dedup();

    let point_covered = |p: Rank| instance.intervals.iter().any(|iv| iv.contains(p));
    let stretch_covered =
        |lo: Rank, hi: Rank| instance.intervals.iter().any(|iv| iv.lo() <= lo && hi <= iv.hi());

    if values.len() == 1 {
        let p = values[0];
        return if point_covered(p) {
            CoverageVerdict::covered(0)
        } else {
            CoverageVerdict::gap(p, p, 0)
        };
    }

    // An uncovered point always borders an uncovered stretch (intervals are
    // closed), so gaps are found by scanning stretches.
    let mut j = 0;
    while j + 1 < values.len() {
        if !stretch_covered(values[j], values[j + 1]) {
            let lo = values[j];
            let mut k = j + 1;
            while k + 1 < values.len() && !point_covered(values[k]) && !stretch_covered(values[k], values[k + 1]) {
                k += 1;
            }
            return CoverageVerdict::gap(lo, values[k], 0);
        }
        j += 1;
    }
    CoverageVerdict::covered(0)
}

/// Intersection of a non-empty interval list by keeping the running largest
/// left end and smallest right end: `2(N - 1)` queries, plus one final
/// emptiness test.
pub fn intersect_1d(intervals: &[Interval], counter: &mut QueryCounter) -> Result<Option<Interval>> {
    let (first, rest) = intervals.split_first().ok_or(Error::EmptyInput)?;
    let mut lo = first.lo();
    let mut hi = first.hi();
    for iv in rest {
        lo = counter.max(lo, iv.lo());
    }
    for iv in rest {
        hi = counter.min(hi, iv.hi());
    }
    Ok(counter.at_most(&lo, &hi).then(|| Interval::of(lo, hi)))
}

/// An overlapping chain of intervals laid out along a permutation:
///
/// `a_0 = a_{i1} < a_{i2} < b_{i1} < a_{i3} < b_{i2} < ... < a_{iN} < b_{i(N-1)} < b_{iN} = b_0`
///
/// realized on ranks `0..=2N-1`. The chain covers its domain and every
/// proper subfamily leaves a gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    permutation: Permutation,
    instance: CoverageInstance,
}

impl Chain {
    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    pub fn instance(&self) -> &CoverageInstance {
        &self.instance
    }

    pub fn into_instance(self) -> CoverageInstance {
        self.instance
    }

    /// Swaps the ranks of `a_{ik}` and `b_{i(k-1)}` so that links `k - 1` and
    /// `k` no longer overlap. The result leaves the open gap
    /// `(2k - 3, 2k - 2)` uncovered.
    pub fn flip_link(&self, k: usize) -> Result<CoverageInstance> {
        let n = self.permutation.len();
        if k < 2 || k > n {
            return Err(Error::LinkOutOfRange { k, n });
        }
        let mut out = self.instance.clone();
        let cur = self.permutation.at(k) - 1;
        let prev = self.permutation.at(k - 1) - 1;
        let (a, b) = (out.intervals[cur].lo(), out.intervals[prev].hi());
        out.intervals[cur] = Interval::of(b, out.intervals[cur].hi());
        out.intervals[prev] = Interval::of(out.intervals[prev].lo(), a);
        Ok(out)
    }
}

pub fn gen_chain(permutation: &Permutation) -> Result<Chain> {
    let n = permutation.len();
    if n < 2 {
        return Err(Error::InvalidSize { n, reason: "a chain needs at least 2 links" });
    }
    let n_rank = n as Rank;
    let mut intervals = vec![Interval::of(0, 0); n];
    for k in 1..=n {
        let kr = k as Rank;
        let lo = if k == 1 { 0 } else { 2 * kr - 3 };
        let hi = if k == n { 2 * n_rank - 1 } else { 2 * kr };
        intervals[permutation.at(k) - 1] = Interval::of(lo, hi);
    }
    Ok(Chain {
        permutation: permutation.clone(),
        instance: CoverageInstance::new(Interval::of(0, 2 * n_rank - 1), intervals),
    })
}

/// Distinctness of `values` (each in `0..N`) decided through coverage: the
/// unit intervals `[m_i, m_i + 1]` cover `[0, N]` iff the `m_i` are distinct.
pub fn check_equality_by_coverage(values: &[Rank], counter: &mut QueryCounter) -> Result<bool> {
    let n = values.len();
    if let Some(&value) = values.iter().find(|&&v| v < 0 || v >= n as Rank) {
        return Err(Error::ValueOutOfRange { value, n });
    }
    if n == 0 {
        return Ok(true);
    }
    let instance = CoverageInstance::new(
        Interval::of(0, n as Rank),
        values.iter().map(|&m| Interval::of(m, m + 1)).collect(),
    );
    Ok(solve_coverage(&instance, counter).covered)
}
