use serde::{Deserialize, Serialize};

use super::envelope::{build_envelopes_counted, StepFunction};
use crate::instance::{PiercingInstance, Rank};
use crate::query::QueryCounter;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiercingVerdict {
    pub pierceable: bool,
    /// A common point `(x, y)` of all crosses, present iff pierceable.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<(Rank, Rank)>,
    #[serde(rename = "queries")]
    pub queries_used: u64,
}

impl PiercingVerdict {
    pub fn witness_is_sound(&self, instance: &PiercingInstance) -> bool {
        match (self.pierceable, self.witness) {
            (true, Some((x, y))) => instance.is_piercing_point(x, y),
            (false, None) => true,
            _ => false,
        }
    }
}

/// Decides whether all crosses share a point.
///
/// Builds the four corner-box staircases, then walks the x-axis from
/// `a_0` to `b_0` one constant piece at a time, looking for the first
/// piece where `max(c_0, g_sw, g_se) <= min(d_0, f_nw, f_ne)`. The witness
/// is the smallest feasible x with the lowest feasible y there, and it is
/// re-checked against every cross before being returned.
pub fn solve_piercing(instance: &PiercingInstance, counter: &mut QueryCounter) -> PiercingVerdict {
    let start = counter.comparisons();
    let env = build_envelopes_counted(instance, counter);
    let (x_end, y_lo, y_hi) = (instance.xdomain.hi(), instance.ydomain.lo(), instance.ydomain.hi());

    let mut cursors = [
        Cursor::new(&env.f_nw),
        Cursor::new(&env.f_ne),
        Cursor::new(&env.g_sw),
        Cursor::new(&env.g_se),
    ];
    let mut x = instance.xdomain.lo();
    let mut found = None;
    loop {
        for c in cursors.iter_mut() {
            c.advance_to(x, counter);
        }
        let [nw, ne, sw, se] = cursors.each_ref().map(Cursor::value);
        let upper = [nw, ne].into_iter().flatten().fold(y_hi, |acc, v| counter.min(acc, v));
        let lower = [sw, se].into_iter().flatten().fold(y_lo, |acc, v| counter.max(acc, v));
        if counter.at_most(&lower, &upper) {
            found = Some((x, lower));
            break;
        }
        let next = cursors
            .iter()
            .filter_map(Cursor::next_breakpoint)
            .reduce(|p, q| counter.min(p, q));
        match next {
            Some(nx) if counter.at_most(&nx, &x_end) => x = nx,
            _ => break,
        }
    }

    if let Some((wx, wy)) = found {
        let sound = instance.crosses.iter().all(|c| {
            (counter.at_most(&c.h.lo(), &wx) && counter.at_most(&wx, &c.h.hi()))
                || (counter.at_most(&c.v.lo(), &wy) && counter.at_most(&wy, &c.v.hi()))
        });
        assert!(sound, "envelope sweep produced an unsound witness ({wx}, {wy})");
    }

    PiercingVerdict {
        pierceable: found.is_some(),
        witness: found,
        queries_used: counter.comparisons() - start,
    }
}

struct Cursor<'a> {
    f: &'a StepFunction,
    piece: usize,
}

impl<'a> Cursor<'a> {
    fn new(f: &'a StepFunction) -> Self {
        Self { f, piece: 0 }
    }

    fn advance_to(&mut self, x: Rank, counter: &mut QueryCounter) {
        let bps = self.f.breakpoints();
        while self.piece < bps.len() && counter.at_most(&bps[self.piece], &x) {
            self.piece += 1;
        }
    }

    fn value(&self) -> Option<Rank> {
        self.f.values()[self.piece]
    }

    fn next_breakpoint(&self) -> Option<Rank> {
        self.f.breakpoints().get(self.piece).copied()
    }
}

/// Grid points `(x, y)`, drawn from the endpoint values of each axis, that
/// lie in every cross, in lexicographic order. O(N^3).
///
/// The intersection of the crosses is a union of boxes with corners on this
/// grid, so it is non-empty iff this list is.
pub fn piercing_grid_points(instance: &PiercingInstance) -> Vec<(Rank, Rank)> {
    let axis = |dom: crate::Interval, ends: &mut dyn Iterator<Item = (Rank, Rank)>| {
        let mut v: Vec<Rank> = ends.flat_map(|(l, h)| [l, h]).chain([dom.lo(), dom.hi()]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let xs = axis(instance.xdomain, &mut instance.crosses.iter().map(|c| (c.h.lo(), c.h.hi())));
    let ys = axis(instance.ydomain, &mut instance.crosses.iter().map(|c| (c.v.lo(), c.v.hi())));
    let mut out = Vec::new();
    for &x in &xs {
        for &y in &ys {
            if instance.crosses.iter().all(|c| c.contains(x, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Exhaustive grid search; the witness is the lexicographically first
/// piercing grid point.
pub fn oracle_piercing(instance: &PiercingInstance) -> PiercingVerdict {
    let witness = piercing_grid_points(instance).first().copied();
    PiercingVerdict { pierceable: witness.is_some(), witness, queries_used: 0 }
}
