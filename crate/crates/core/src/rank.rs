//! Dense rank normalization of raw coordinates.

use crate::error::{Error, Result};
use crate::instance::Rank;
use crate::query::QueryCounter;
use crate::sorting::merge_sort_counted_by;

/// Dense ranking of a coordinate list: equal inputs share a rank and the
/// ranks used are exactly `0..=max_rank`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankMap {
    /// Rank of each input position.
    pub ranks: Vec<Rank>,
    /// Distinct input values in ascending order; `values[r]` has rank `r`.
    pub values: Vec<f64>,
}

impl RankMap {
    pub fn max_rank(&self) -> Option<Rank> {
        (self.values.len() as Rank).checked_sub(1).filter(|&k| k >= 0)
    }

    pub fn rank_of(&self, value: f64) -> Option<Rank> {
        self.values
            .binary_search_by(|v| v.partial_cmp(&value).expect("finite"))
            .ok()
            .map(|r| r as Rank)
    }
}

pub fn normalize_ranks(coords: &[f64]) -> Result<RankMap> {
    normalize_ranks_counted(coords, &mut QueryCounter::new())
}

pub fn normalize_ranks_counted(coords: &[f64], counter: &mut QueryCounter) -> Result<RankMap> {
    if let Some(&bad) = coords.iter().find(|c| !c.is_finite()) {
        return Err(Error::NonFiniteCoordinate(bad));
    }
    let sorted = merge_sort_counted_by(coords, counter, |a, b| a.partial_cmp(b).expect("finite"));
    let mut ranks = vec![0; coords.len()];
    let mut values: Vec<f64> = Vec::new();
    for &pos in &sorted.order {
        let v = coords[pos];
        let is_new = match values.last() {
            None => true,
            Some(last) => counter.record(last.partial_cmp(&v).expect("finite")).is_ne(),
        };
        if is_new {
            values.push(v);
        }
        ranks[pos] = values.len() as Rank - 1;
    }
    Ok(RankMap { ranks, values })
}
