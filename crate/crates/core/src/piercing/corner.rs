use serde::{Deserialize, Serialize};

use crate::instance::{Cross, Interval, Rank};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Corner {
    NW,
    NE,
    SW,
    SE,
}

/// One of the four boxes making up the complement of a cross in the domain
/// rectangle. The sides facing the cross are open:
///
/// * NW = `[a_0, a) x (d, d_0]`
/// * NE = `(b, b_0] x (d, d_0]`
/// * SW = `[a_0, a) x [c_0, c)`
/// * SE = `(b, b_0] x [c_0, c)`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerBox {
    pub kind: Corner,
    /// `(start, end)` on the x-axis; which end is open follows from `kind`.
    pub x_range: (Rank, Rank),
    pub y_range: (Rank, Rank),
}

impl CornerBox {
    fn west(&self) -> bool {
        matches!(self.kind, Corner::NW | Corner::SW)
    }

    fn south(&self) -> bool {
        matches!(self.kind, Corner::SW | Corner::SE)
    }

    pub fn contains(&self, x: Rank, y: Rank) -> bool {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        let in_x = if self.west() { x0 <= x && x < x1 } else { x0 < x && x <= x1 };
        let in_y = if self.south() { y0 <= y && y < y1 } else { y0 < y && y <= y1 };
        in_x && in_y
    }
}

/// The non-empty corner boxes of `cross` inside `xdomain x ydomain`.
pub fn corner_boxes(cross: &Cross, xdomain: Interval, ydomain: Interval) -> Vec<CornerBox> {
    let west = (xdomain.lo() < cross.h.lo()).then_some((xdomain.lo(), cross.h.lo()));
    let east = (cross.h.hi() < xdomain.hi()).then_some((cross.h.hi(), xdomain.hi()));
    let south = (ydomain.lo() < cross.v.lo()).then_some((ydomain.lo(), cross.v.lo()));
    let north = (cross.v.hi() < ydomain.hi()).then_some((cross.v.hi(), ydomain.hi()));
    [
        (Corner::NW, west, north),
        (Corner::NE, east, north),
        (Corner::SW, west, south),
        (Corner::SE, east, south),
    ]
    .into_iter()
    .filter_map(|(kind, x, y)| Some(CornerBox { kind, x_range: x?, y_range: y? }))
    .collect()
}
