use serde::Serialize;

use crate::coverage::{oracle_coverage, solve_coverage, CoverageVerdict};
use crate::instance::Instance;
use crate::piercing::{oracle_piercing, solve_piercing, PiercingVerdict};
use crate::query::QueryCounter;

/// Verdict for either problem. Serializes as the bare coverage or piercing
/// verdict object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Verdict {
    Coverage(CoverageVerdict),
    Piercing(PiercingVerdict),
}

impl Verdict {
    /// Covered / pierceable.
    pub fn is_positive(&self) -> bool {
        match self {
            Verdict::Coverage(v) => v.covered,
            Verdict::Piercing(v) => v.pierceable,
        }
    }

    pub fn queries_used(&self) -> u64 {
        match self {
            Verdict::Coverage(v) => v.queries_used,
            Verdict::Piercing(v) => v.queries_used,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Coverage(v) if v.covered => "covered",
            Verdict::Coverage(_) => "uncovered",
            Verdict::Piercing(v) if v.pierceable => "pierceable",
            Verdict::Piercing(_) => "not-pierceable",
        }
    }

    pub fn witness_is_sound(&self, instance: &Instance) -> bool {
        match (self, instance) {
            (Verdict::Coverage(v), Instance::Coverage(i)) => v.witness_is_sound(i),
            (Verdict::Piercing(v), Instance::Piercing(i)) => v.witness_is_sound(i),
            _ => false,
        }
    }
}

/// Runs the fast decider matching the instance's problem.
pub fn solve(instance: &Instance, counter: &mut QueryCounter) -> Verdict {
    match instance {
        Instance::Coverage(c) => Verdict::Coverage(solve_coverage(c, counter)),
        Instance::Piercing(p) => Verdict::Piercing(solve_piercing(p, counter)),
    }
}

/// Runs the brute-force oracle matching the instance's problem.
pub fn oracle(instance: &Instance) -> Verdict {
    match instance {
        Instance::Coverage(c) => Verdict::Coverage(oracle_coverage(c)),
        Instance::Piercing(p) => Verdict::Piercing(oracle_piercing(p)),
    }
}
