//! Digital segment generation from order assignments.
//!
//! First-quadrant segments walk up/right from the base point, moving up
//! exactly on the antidiagonals whose sums rank among the greatest of
//! the interval `I(p, q) = [p.x+p.y, q.x+q.y-1]` under the base point's
//! order. Negative-slope segments are generated in mirrored coordinates
//! with the base point's second-quadrant order and mirrored back;
//! third- and fourth-quadrant segments reuse the symmetric segment
//! reversed, so no third- or fourth-quadrant orders are ever stored.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::{classify_quadrant, DigitalSegment, Point, QuadrantRel};
use crate::order::{OrderSpec, Window};

/// Assigns a first-quadrant and a second-quadrant order to every grid
/// point. The second-quadrant order is read as the first-quadrant order
/// of the mirrored point in mirrored coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderAssignment {
    /// The same pair of orders at every point.
    Uniform { spec1: OrderSpec, spec2: OrderSpec },
    /// Natural orders on and above the x-axis; below it, the first-
    /// quadrant order is the below-axis family anchored at the point's
    /// x-coordinate. Second-quadrant orders are natural everywhere.
    Waterline,
    /// Explicit per-point overrides on top of a default pair.
    Table {
        entries: BTreeMap<Point, (OrderSpec, OrderSpec)>,
        default: (OrderSpec, OrderSpec),
    },
}

impl OrderAssignment {
    pub fn uniform_natural() -> Self {
        OrderAssignment::Uniform {
            spec1: OrderSpec::Natural,
            spec2: OrderSpec::Natural,
        }
    }

    /// The first-quadrant order at `p`.
    pub fn order1(&self, p: Point) -> OrderSpec {
        match self {
            OrderAssignment::Uniform { spec1, .. } => spec1.clone(),
            OrderAssignment::Waterline => {
                if p.y >= 0 {
                    OrderSpec::Natural
                } else {
                    OrderSpec::WaterlineBelow { anchor_x: p.x }
                }
            }
            OrderAssignment::Table { entries, default } => entries
                .get(&p)
                .map(|(s1, _)| s1.clone())
                .unwrap_or_else(|| default.0.clone()),
        }
    }

    /// The second-quadrant order at `p`.
    pub fn order2(&self, p: Point) -> OrderSpec {
        match self {
            OrderAssignment::Uniform { spec2, .. } => spec2.clone(),
            OrderAssignment::Waterline => OrderSpec::Natural,
            OrderAssignment::Table { entries, default } => entries
                .get(&p)
                .map(|(_, s2)| s2.clone())
                .unwrap_or_else(|| default.1.clone()),
        }
    }
}

/// The interval of antidiagonal sums whose partition drives the walk
/// from `p` to `q`, for `q` in the closed first quadrant of `p`, `q != p`.
fn move_interval(p: Point, q: Point) -> Result<Window> {
    let lo = p.checked_sum()?;
    let hi = q
        .checked_sum()?
        .checked_sub(1)
        .ok_or(Error::ArithmeticOverflow)?;
    Window::new(lo, hi)
}

/// Generates the digital segment from `p` to `q` for `q` in the closed
/// first quadrant of `p`, walking up on the `q.y - p.y` greatest sums
/// of `I(p, q)` under `spec` and right otherwise.
pub fn first_quadrant_segment(p: Point, q: Point, spec: &OrderSpec) -> Result<DigitalSegment> {
    if q.x < p.x || q.y < p.y {
        return Err(Error::NotFirstQuadrant { p, q });
    }
    let mut points = Vec::with_capacity((q.x - p.x + q.y - p.y + 1) as usize);
    points.push(p);
    if p == q {
        return Ok(DigitalSegment::from_walk(points));
    }
    let window = move_interval(p, q)?;
    let (_, vertical) = spec.partition_window(window, (q.y - p.y) as usize)?;
    let mut cur = p;
    for s in window.values() {
        if vertical.contains(&s) {
            cur.y += 1;
        } else {
            cur.x += 1;
        }
        points.push(cur);
    }
    debug_assert_eq!(cur, q);
    Ok(DigitalSegment::from_walk(points))
}

fn mirrored(seg: &DigitalSegment) -> DigitalSegment {
    DigitalSegment::from_walk(seg.points().iter().map(|p| p.mirror()).collect())
}

fn straight_segment(p: Point, q: Point) -> DigitalSegment {
    let mut points = Vec::new();
    let (dx, dy) = ((q.x - p.x).signum(), (q.y - p.y).signum());
    let mut cur = p;
    points.push(cur);
    while cur != q {
        cur.x += dx;
        cur.y += dy;
        points.push(cur);
    }
    DigitalSegment::from_walk(points)
}

/// The digital segment `R_p(q)` of the assignment, for any pair.
///
/// Dispatch: first-quadrant pairs walk directly; third-quadrant pairs
/// reverse the symmetric segment; second-quadrant pairs are generated
/// in mirrored coordinates with the base's second-quadrant order;
/// fourth-quadrant pairs reverse the mirrored case. Pairs sharing a
/// coordinate are forced straight. By construction
/// `segment(a, q, p) == segment(a, p, q)` reversed, exactly.
pub fn segment(assignment: &OrderAssignment, p: Point, q: Point) -> Result<DigitalSegment> {
    match classify_quadrant(p, q) {
        QuadrantRel::Equal | QuadrantRel::SameColumn | QuadrantRel::SameRow => {
            Ok(straight_segment(p, q))
        }
        QuadrantRel::Q1 => first_quadrant_segment(p, q, &assignment.order1(p)),
        QuadrantRel::Q3 => Ok(first_quadrant_segment(q, p, &assignment.order1(q))?.reversed()),
        QuadrantRel::Q2 => {
            let m = first_quadrant_segment(p.mirror(), q.mirror(), &assignment.order2(p))?;
            Ok(mirrored(&m))
        }
        QuadrantRel::Q4 => {
            let m = first_quadrant_segment(q.mirror(), p.mirror(), &assignment.order2(q))?;
            Ok(mirrored(&m).reversed())
        }
    }
}

/// Antidiagonal sums at which a nonnegative-slope segment steps right
/// (`horizontal`) and up (`vertical`). The two sets partition
/// `I(first, last)`.
pub fn movement_sums(seg: &DigitalSegment) -> Result<(BTreeSet<i64>, BTreeSet<i64>)> {
    let (first, last) = (seg.first(), seg.last());
    if last.x < first.x || last.y < first.y {
        return Err(Error::Orientation);
    }
    let mut horizontal = BTreeSet::new();
    let mut vertical = BTreeSet::new();
    for pair in seg.points().windows(2) {
        let s = pair[0].checked_sum()?;
        if pair[1].x > pair[0].x {
            horizontal.insert(s);
        } else {
            vertical.insert(s);
        }
    }
    Ok((horizontal, vertical))
}

/// Movement sums of the same path read as a third-quadrant segment:
/// both sets of [`movement_sums`] shifted up by one.
///
/// A first-quadrant step is keyed by the sum of its lower-left end, the
/// corresponding third-quadrant step by its upper-right end.
pub fn derived_third_quadrant_moves(
    seg: &DigitalSegment,
) -> Result<(BTreeSet<i64>, BTreeSet<i64>)> {
    let (h, v) = movement_sums(seg)?;
    let shift = |set: BTreeSet<i64>| -> Result<BTreeSet<i64>> {
        set.into_iter()
            .map(|s| s.checked_add(1).ok_or(Error::ArithmeticOverflow))
            .collect()
    };
    Ok((shift(h)?, shift(v)?))
}

/// True when every point of `inner` lies on `outer`.
fn contains_segment(outer: &DigitalSegment, inner: &DigitalSegment) -> bool {
    inner.points().iter().all(|&p| outer.contains(p))
}

/// Finds a point `r` adjacent to `q`, one unit further from `p`, whose
/// segment contains `R_p(q)`; this witnesses the prolongation property
/// for the pair. Both axis candidates are tried by explicit containment,
/// x-direction first; failure of both means the assignment is not a CDS
/// at this pair.
pub fn prolong(assignment: &OrderAssignment, p: Point, q: Point) -> Result<Point> {
    if p == q {
        return Err(Error::DegeneratePair { p });
    }
    let base = segment(assignment, p, q)?;
    let dx = (q.x - p.x).signum();
    let dy = (q.y - p.y).signum();
    let mut candidates: Vec<Point> = Vec::with_capacity(2);
    if dx != 0 {
        candidates.push(Point::new(q.x + dx, q.y));
    }
    if dy != 0 {
        candidates.push(Point::new(q.x, q.y + dy));
    }
    for r in candidates {
        let extended = segment(assignment, p, r)?;
        if contains_segment(&extended, &base) {
            return Ok(r);
        }
    }
    Err(Error::ProlongationFailure { p, q })
}
