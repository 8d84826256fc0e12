//! Comparison-counted merge sort.
//!
//! Halves are sorted recursively (`ceil(N/2)` / `floor(N/2)` split) and then
//! merged by walking the second half from the last matched position: each
//! element `a` of the first half is compared with `B[k], B[k+1], ...` until
//! the first `b` with `a <= b`. A merge of `|A| + |B|` elements costs at most
//! `|A| + |B|` queries, so for `N = 2^n` the whole sort costs at most `nN`.

use std::cmp::Ordering;

use crate::query::QueryCounter;

/// Result of a counted sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedOrder {
    /// `order[j]` is the input position of the j-th smallest item.
    pub order: Vec<usize>,
    /// Queries spent by this sort alone.
    pub comparisons: u64,
}

impl SortedOrder {
    pub fn apply<T: Clone>(&self, items: &[T]) -> Vec<T> {
        self.order.iter().map(|&i| items[i].clone()).collect()
    }
}

/// Stable sort of `keys`, every comparison recorded in `counter`.
pub fn merge_sort_counted<K: Ord>(keys: &[K], counter: &mut QueryCounter) -> SortedOrder {
    merge_sort_counted_by(keys, counter, |a, b| a.cmp(b))
}

/// Stable sort with a caller-supplied comparator; each call to `cmp` is one
/// recorded query.
pub fn merge_sort_counted_by<T, F>(items: &[T], counter: &mut QueryCounter, mut cmp: F) -> SortedOrder
where
    F: FnMut(&T, &T) -> Ordering,
{
    let before = counter.comparisons();
    let mut order: Vec<usize> = (0..items.len()).collect();
    let mut scratch = Vec::with_capacity(items.len());
    let mut query = |a: usize, b: usize| counter.record(cmp(&items[a], &items[b]));
    sort_range(&mut order, &mut scratch, &mut query);
    SortedOrder { order, comparisons: counter.comparisons() - before }
}

fn sort_range<F>(order: &mut [usize], scratch: &mut Vec<usize>, query: &mut F)
where
    F: FnMut(usize, usize) -> Ordering,
{
    let n = order.len();
    if n < 2 {
        return;
    }
    let mid = n.div_ceil(2);
    sort_range(&mut order[..mid], scratch, query);
    sort_range(&mut order[mid..], scratch, query);
    merge(order, mid, scratch, query);
}

fn merge<F>(order: &mut [usize], mid: usize, scratch: &mut Vec<usize>, query: &mut F)
where
    F: FnMut(usize, usize) -> Ordering,
{
    scratch.clear();
    let (left, right) = order.split_at(mid);
    let mut k = 0;
    for &a in left {
        while k < right.len() && query(a, right[k]) == Ordering::Greater {
            scratch.push(right[k]);
            k += 1;
        }
        scratch.push(a);
    }
    scratch.extend_from_slice(&right[k..]);
    order.copy_from_slice(scratch);
}
