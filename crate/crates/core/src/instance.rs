//! Instance data model.
//!
//! All coordinates are integer ranks. Intervals are closed, so touching
//! intervals overlap in their shared endpoint.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer rank of an endpoint.
pub type Rank = i64;

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[Rank; 2]", into = "[Rank; 2]")]
pub struct Interval {
    lo: Rank,
    hi: Rank,
}

impl Interval {
    pub fn new(lo: Rank, hi: Rank) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvertedInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    /// # Panics
    /// If `lo > hi`.
    pub fn of(lo: Rank, hi: Rank) -> Self {
        Self::new(lo, hi).expect("interval with lo > hi")
    }

    pub fn lo(&self) -> Rank {
        self.lo
    }

    pub fn hi(&self) -> Rank {
        self.hi
    }

    pub fn contains(&self, x: Rank) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }
}

impl TryFrom<[Rank; 2]> for Interval {
    type Error = Error;

    fn try_from([lo, hi]: [Rank; 2]) -> Result<Self> {
        Self::new(lo, hi)
    }
}

impl From<Interval> for [Rank; 2] {
    fn from(iv: Interval) -> Self {
        [iv.lo, iv.hi]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// One interval per axis. As a point set it is
/// `{(x, y) : x in h or y in v}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cross {
    pub h: Interval,
    pub v: Interval,
}

impl Cross {
    pub fn new(h: Interval, v: Interval) -> Self {
        Self { h, v }
    }

    /// Shorthand for `Cross::new(Interval::of(a, b), Interval::of(c, d))`.
    pub fn of((a, b): (Rank, Rank), (c, d): (Rank, Rank)) -> Self {
        Self::new(Interval::of(a, b), Interval::of(c, d))
    }

    pub fn contains(&self, x: Rank, y: Rank) -> bool {
        self.h.contains(x) || self.v.contains(y)
    }
}

/// Setting I in one dimension: N intervals inside a base interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageInstance {
    pub domain: Interval,
    pub intervals: Vec<Interval>,
}

impl CoverageInstance {
    pub fn new(domain: Interval, intervals: Vec<Interval>) -> Self {
        Self { domain, intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Checks containment (and `lo < hi` for members when `strict`).
    pub fn validate(&self, strict: bool) -> Result<&Self> {
        if self.domain.lo >= self.domain.hi {
            return Err(Error::InvalidDomain { lo: self.domain.lo, hi: self.domain.hi });
        }
        check_members("interval", self.domain, self.intervals.iter().copied(), strict)?;
        Ok(self)
    }

    /// The same family with interval `index` removed.
    pub fn without(&self, index: usize) -> Self {
        let mut intervals = self.intervals.clone();
        intervals.remove(index);
        Self::new(self.domain, intervals)
    }
}

/// Setting II in two dimensions: N crosses inside `xdomain x ydomain`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiercingInstance {
    pub xdomain: Interval,
    pub ydomain: Interval,
    pub crosses: Vec<Cross>,
}

impl PiercingInstance {
    pub fn new(xdomain: Interval, ydomain: Interval, crosses: Vec<Cross>) -> Self {
        Self { xdomain, ydomain, crosses }
    }

    pub fn len(&self) -> usize {
        self.crosses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crosses.is_empty()
    }

    pub fn validate(&self, strict: bool) -> Result<&Self> {
        check_members("cross h-interval", self.xdomain, self.crosses.iter().map(|c| c.h), strict)?;
        check_members("cross v-interval", self.ydomain, self.crosses.iter().map(|c| c.v), strict)?;
        Ok(self)
    }

    /// Whether `(x, y)` lies in the domain rectangle and in every cross.
    pub fn is_piercing_point(&self, x: Rank, y: Rank) -> bool {
        self.xdomain.contains(x)
            && self.ydomain.contains(y)
            && self.crosses.iter().all(|c| c.contains(x, y))
    }

    pub fn without(&self, index: usize) -> Self {
        let mut crosses = self.crosses.clone();
        crosses.remove(index);
        Self::new(self.xdomain, self.ydomain, crosses)
    }
}

fn check_members(
    what: &'static str,
    domain: Interval,
    members: impl Iterator<Item = Interval>,
    strict: bool,
) -> Result<()> {
    for (index, iv) in members.enumerate() {
        if !domain.contains_interval(&iv) {
            return Err(Error::ContainmentViolation { what, index });
        }
        if strict && iv.is_degenerate() {
            return Err(Error::DegenerateInterval { what, index });
        }
    }
    Ok(())
}

/// Either problem, tagged by `"problem"` in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "problem", rename_all = "lowercase")]
pub enum Instance {
    Coverage(CoverageInstance),
    Piercing(PiercingInstance),
}

impl Instance {
    pub fn validate(&self, strict: bool) -> Result<&Self> {
        match self {
            Instance::Coverage(c) => c.validate(strict).map(|_| self),
            Instance::Piercing(p) => p.validate(strict).map(|_| self),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Instance::Coverage(c) => c.len(),
            Instance::Piercing(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl From<CoverageInstance> for Instance {
    fn from(c: CoverageInstance) -> Self {
        Instance::Coverage(c)
    }
}

impl From<PiercingInstance> for Instance {
    fn from(p: PiercingInstance) -> Self {
        Instance::Piercing(p)
    }
}

/// An ordering `(i_1, ..., i_N)` of `{1, ..., N}`, stored one-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &i in &order {
            if i == 0 || i > n {
                return Err(Error::InvalidPermutation(format!("entry {i} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidPermutation(format!("entry {i} repeated")));
            }
        }
        Ok(Self(order))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        use rand::seq::SliceRandom;
        let mut order: Vec<usize> = (1..=n).collect();
        order.shuffle(rng);
        Self(order)
    }

    /// Random permutation with `i_k` odd for odd `k` and even for even `k`.
    pub fn random_parity_preserving<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        use rand::seq::SliceRandom;
        let mut odds: Vec<usize> = (1..=n).step_by(2).collect();
        let mut evens: Vec<usize> = (2..=n).step_by(2).collect();
        odds.shuffle(rng);
        evens.shuffle(rng);
        let (mut o, mut e) = (odds.into_iter(), evens.into_iter());
        let order = (1..=n)
            .map(|k| if k % 2 == 1 { o.next() } else { e.next() }.unwrap())
            .collect();
        Self(order)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i_k` for one-based position `k`.
    pub fn at(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn preserves_parity(&self) -> bool {
        self.0.iter().enumerate().all(|(pos, &i)| (pos + 1) % 2 == i % 2)
    }
}
