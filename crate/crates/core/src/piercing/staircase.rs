//! Families of crosses with empty intersection arranged along a staircase.

use std::collections::HashMap;

use super::minimality::check_minimality;
use super::solver::oracle_piercing;
use crate::error::{Error, Result};
use crate::instance::{Cross, Interval, Permutation, PiercingInstance, Rank};

/// Largest family size verified with the grid oracle; larger families are
/// verified with the envelope solver.
const ORACLE_CHECK_LIMIT: usize = 14;

/// A cross as `((a, b), (c, d))`.
type Arms = ((Rank, Rank), (Rank, Rank));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Threshold {
    /// x: right end of the west gap of an SE-excluding ladder cross.
    SeStart(usize),
    /// x: left end of the east part of an NW-excluding ladder cross.
    NwEnd(usize),
    /// x: SW cap.
    SwCapX,
    /// x: NE cap.
    NeCapX,
    /// y: top of an NW-excluding ladder cross's vertical arm.
    NwFloor(usize),
    /// y: bottom of an SE-excluding ladder cross's vertical arm (0 = SW cap).
    SeCeiling(usize),
    /// y: NE cap.
    NeCapY,
}

/// A family of `n` crosses whose intersection is empty although every
/// proper subfamily has a common point.
///
/// For `n >= 5` the family is a ladder: crosses alternately excluding an NW
/// and an SE corner box, with hubs climbing a staircase, closed off by one
/// cross excluding an SW box and one excluding an NE box. With `K` NW steps,
/// thresholds interleave as
///
/// ```text
/// x: p_1 < f < s_1 < p_2 < s_2 < ... < e < p_K < s_K     (p_K absent for odd n)
/// y: w_1 < v_0 < w_2 < v_1 < ... < u < v_K               (odd n: ... < u < w_K < v_{K-1})
/// ```
///
/// on ranks `1..=n` inside the domain `[0, n + 2]^2`. Sizes 3 and 4 use the
/// compact families (diagonal points, 2x2 blocks). Every output is verified
/// before it is returned.
pub fn gen_staircase_minimal(n: usize) -> Result<PiercingInstance> {
    let inst = match n {
        0..=2 => return Err(Error::InvalidSize { n, reason: "a minimal non-pierceable family needs at least 3 crosses" }),
        3 => square(2, &[((0, 0), (0, 0)), ((1, 1), (1, 1)), ((2, 2), (2, 2))]),
        4 => square(3, &[((0, 1), (0, 1)), ((2, 3), (2, 3)), ((0, 1), (2, 3)), ((2, 3), (0, 1))]),
        _ => ladder(n),
    };
    self_check(&inst)?;
    Ok(inst)
}

fn square(span: Rank, crosses: &[Arms]) -> PiercingInstance {
    PiercingInstance::new(
        Interval::of(0, span),
        Interval::of(0, span),
        crosses.iter().map(|&(h, v)| Cross::of(h, v)).collect(),
    )
}

fn ladder(n: usize) -> PiercingInstance {
    use Threshold::*;
    let rungs = n - 2;
    let nw_steps = rungs.div_ceil(2);
    let se_steps = rungs / 2;
    let even = nw_steps == se_steps;
    let k = nw_steps;

    let mut xs = vec![SeStart(1), SwCapX, NwEnd(1)];
    for j in 2..k {
        xs.extend([SeStart(j), NwEnd(j)]);
    }
    xs.push(NeCapX);
    if even {
        xs.push(SeStart(k));
    }
    xs.push(NwEnd(k));

    let mut ys = vec![NwFloor(1), SeCeiling(0)];
    for j in 2..k {
        ys.extend([NwFloor(j), SeCeiling(j - 1)]);
    }
    if even {
        ys.extend([NwFloor(k), SeCeiling(k - 1), NeCapY, SeCeiling(k)]);
    } else {
        ys.extend([NeCapY, NwFloor(k), SeCeiling(k - 1)]);
    }
    debug_assert_eq!(xs.len(), n);
    debug_assert_eq!(ys.len(), n);

    let rank: HashMap<Threshold, Rank> =
        xs.iter().chain(&ys).enumerate().map(|(i, &t)| (t, (i % n) as Rank + 1)).collect();
    let top = n as Rank + 2;
    let r = |t: Threshold| rank[&t];

    let rung = |m: usize| {
        if m % 2 == 1 {
            let j = m.div_ceil(2);
            Cross::of((r(NwEnd(j)), top), (0, r(NwFloor(j))))
        } else {
            let j = m / 2;
            Cross::of((0, r(SeStart(j))), (r(SeCeiling(j)), top))
        }
    };
    let mut crosses = vec![Cross::of((r(SwCapX), top), (r(SeCeiling(0)), top))];
    crosses.extend((1..rungs).map(rung));
    crosses.push(Cross::of((0, r(NeCapX)), (0, r(NeCapY))));
    crosses.push(rung(rungs));
    PiercingInstance::new(Interval::of(0, top), Interval::of(0, top), crosses)
}

fn self_check(inst: &PiercingInstance) -> Result<()> {
    let n = inst.len();
    let ok = if n <= ORACLE_CHECK_LIMIT {
        !oracle_piercing(inst).pierceable && (0..n).all(|i| oracle_piercing(&inst.without(i)).pierceable)
    } else {
        let report = check_minimality(inst);
        !report.full_family_pierceable && report.each_deletion_pierceable.iter().all(|&b| b)
    };
    if ok {
        Ok(())
    } else {
        Err(Error::SelfCheck(format!("staircase family of size {n} is not minimal non-pierceable")))
    }
}

/// The staircase preorders for `n = 8` and `n = 9` transcribed rank for rank,
/// equalities included, with cross `i_k = permutation.at(k)` placed at
/// step `k`. Several intervals are degenerate.
pub fn gen_staircase_literal(n: usize, permutation: &Permutation) -> Result<PiercingInstance> {
    // per step k: ((a, b), (c, d))
    const EIGHT: [Arms; 8] = [
        ((0, 0), (1, 8)),
        ((2, 7), (0, 0)),
        ((0, 1), (3, 8)),
        ((4, 7), (0, 2)),
        ((0, 3), (5, 8)),
        ((6, 7), (0, 4)),
        ((0, 5), (7, 8)),
        ((7, 7), (0, 6)),
    ];
    const NINE: [Arms; 9] = [
        ((0, 0), (1, 8)),
        ((2, 9), (0, 0)),
        ((0, 1), (3, 8)),
        ((4, 9), (0, 2)),
        ((0, 3), (5, 8)),
        ((6, 9), (0, 4)),
        ((0, 5), (7, 8)),
        ((8, 9), (0, 6)),
        ((0, 7), (8, 8)),
    ];
    let (steps, x_top, y_top): (&[_], Rank, Rank) = match n {
        8 => (&EIGHT, 7, 8),
        9 => (&NINE, 9, 8),
        _ => return Err(Error::InvalidSize { n, reason: "the literal staircase exists for 8 and 9 crosses only" }),
    };
    if permutation.len() != n {
        return Err(Error::InvalidPermutation(format!("expected {n} entries, got {}", permutation.len())));
    }
    if !permutation.preserves_parity() {
        return Err(Error::InvalidPermutation("permutation must preserve index parity".into()));
    }
    let mut crosses = vec![Cross::of((0, 0), (0, 0)); n];
    for (k, &(h, v)) in steps.iter().enumerate() {
        crosses[permutation.at(k + 1) - 1] = Cross::of(h, v);
    }
    Ok(PiercingInstance::new(Interval::of(0, x_top), Interval::of(0, y_top), crosses))
}
