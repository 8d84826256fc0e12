//! Seeded instance families.
//!
//! Randomness comes from ChaCha8 seeded through `SeedableRng::seed_from_u64`,
//! so a `(family, n, seed)` triple yields the same instance on every
//! platform.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coverage::gen_chain;
use crate::error::{Error, Result};
use crate::instance::{CoverageInstance, Cross, Instance, Interval, Permutation, PiercingInstance, Rank};
use crate::piercing::{gen_staircase_literal, gen_staircase_minimal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Overlapping chain along a random permutation (coverage, always covered).
    Chain,
    /// Minimal non-pierceable ladder (piercing).
    Staircase,
    /// Literal 8/9-cross staircase with a random parity-preserving permutation.
    StaircaseLiteral,
    /// Point-like crosses `([i, i], [i, i])` on the diagonal (piercing).
    Disjoint,
    RandomCoverage,
    RandomPiercing,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Chain,
        Family::Staircase,
        Family::StaircaseLiteral,
        Family::Disjoint,
        Family::RandomCoverage,
        Family::RandomPiercing,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Chain => "chain",
            Family::Staircase => "staircase",
            Family::StaircaseLiteral => "staircase-literal",
            Family::Disjoint => "disjoint",
            Family::RandomCoverage => "random-coverage",
            Family::RandomPiercing => "random-piercing",
        }
    }

    pub fn is_coverage(self) -> bool {
        matches!(self, Family::Chain | Family::RandomCoverage)
    }

    fn tag(self) -> u64 {
        Family::ALL.iter().position(|&f| f == self).unwrap() as u64
    }

    /// Seed for one `(n, trial)` cell of a sweep. Mixes the inputs with the
    /// SplitMix64 finalizer.
    pub fn cell_seed(self, seed: u64, n: usize, trial: usize) -> u64 {
        let mut z = seed
            ^ self.tag().wrapping_mul(0x9E37_79B9_7F4A_7C15)
            ^ (n as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9)
            ^ (trial as u64).wrapping_mul(0x94D0_49BB_1331_11EB);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `random` is accepted as shorthand for `random-piercing`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "random" {
            return Ok(Family::RandomPiercing);
        }
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

pub fn generate(family: Family, n: usize, seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match family {
        Family::Chain => gen_chain(&Permutation::random(n, &mut rng))?.into_instance().into(),
        Family::Staircase => gen_staircase_minimal(n)?.into(),
        Family::StaircaseLiteral => {
            gen_staircase_literal(n, &Permutation::random_parity_preserving(n, &mut rng))?.into()
        }
        Family::Disjoint => disjoint(n)?.into(),
        Family::RandomCoverage => random_coverage(n, &mut rng).into(),
        Family::RandomPiercing => random_piercing(n, &mut rng).into(),
    })
}

fn disjoint(n: usize) -> Result<PiercingInstance> {
    if n == 0 {
        return Err(Error::InvalidSize { n, reason: "the diagonal family needs at least 1 cross" });
    }
    let top = n as Rank - 1;
    Ok(PiercingInstance::new(
        Interval::of(0, top),
        Interval::of(0, top),
        (0..=top).map(|i| Cross::of((i, i), (i, i))).collect(),
    ))
}

/// Short intervals (length 1 to 3) at uniform positions in `[0, 2n]`.
pub fn random_coverage<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CoverageInstance {
    let top = 2 * n.max(1) as Rank;
    let intervals = (0..n)
        .map(|_| {
            let lo = rng.gen_range(0..top);
            Interval::of(lo, (lo + rng.gen_range(1..=3)).min(top))
        })
        .collect();
    CoverageInstance::new(Interval::of(0, top), intervals)
}

/// Crosses with both arms drawn uniformly from `[0, 2n]`.
pub fn random_piercing<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PiercingInstance {
    let top = 2 * n.max(1) as Rank;
    let arm = |rng: &mut R| {
        let (p, q) = (rng.gen_range(0..=top), rng.gen_range(0..=top));
        Interval::of(p.min(q), p.max(q))
    };
    let crosses = (0..n).map(|_| Cross::new(arm(rng), arm(rng))).collect();
    PiercingInstance::new(Interval::of(0, top), Interval::of(0, top), crosses)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert_eq!("random".parse::<Family>().unwrap(), Family::RandomPiercing);
        assert!(matches!("spiral".parse::<Family>(), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn generation_is_deterministic_and_valid() {
        for f in Family::ALL {
            let n = if f == Family::StaircaseLiteral { 9 } else { 12 };
            let a = generate(f, n, 42).unwrap();
            assert_eq!(a, generate(f, n, 42).unwrap());
            assert!(a.validate(false).is_ok(), "{f}");
            assert_eq!(a.len(), n);
        }
    }

    #[test]
    fn size_errors() {
        assert!(generate(Family::Staircase, 2, 0).is_err());
        assert!(generate(Family::Chain, 1, 0).is_err());
        assert!(generate(Family::StaircaseLiteral, 10, 0).is_err());
        assert!(generate(Family::Disjoint, 0, 0).is_err());
        assert!(generate(Family::RandomCoverage, 0, 0).is_ok());
    }

    #[test]
    fn cell_seeds_differ() {
        let f = Family::Chain;
        assert_ne!(f.cell_seed(1, 8, 0), f.cell_seed(1, 8, 1));
        assert_ne!(f.cell_seed(1, 8, 0), f.cell_seed(1, 9, 0));
        assert_ne!(f.cell_seed(1, 8, 0), Family::Staircase.cell_seed(1, 8, 0));
    }
}
