//! Grid primitives: points, quadrant classification, mirroring, digital
//! segments and path validation.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, PathDefect, PathDefectKind, Result};

/// A point of the unit grid `Z^2`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Coordinate sum `x + y`; identifies the antidiagonal through the point.
    pub const fn sum(self) -> i64 {
        self.x + self.y
    }

    /// Coordinate sum with an explicit overflow error instead of wrapping.
    pub fn checked_sum(self) -> Result<i64> {
        self.x.checked_add(self.y).ok_or(Error::ArithmeticOverflow)
    }

    /// Reflection across the y-axis: `(x, y) -> (-x, y)`.
    pub const fn mirror(self) -> Self {
        Point {
            x: -self.x,
            y: self.y,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Reflection across the y-axis.
pub fn mirror(p: Point) -> Point {
    p.mirror()
}

/// Position of a point `q` relative to a base point `p`.
///
/// The quadrants are open here: pairs sharing a coordinate are classified
/// as `SameColumn`/`SameRow` so exactly one segment-generation rule
/// applies to every pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadrantRel {
    /// `q.x > p.x` and `q.y > p.y`.
    Q1,
    /// `q.x < p.x` and `q.y > p.y`.
    Q2,
    /// `q.x < p.x` and `q.y < p.y`.
    Q3,
    /// `q.x > p.x` and `q.y < p.y`.
    Q4,
    /// `q.x = p.x`, `q != p`.
    SameColumn,
    /// `q.y = p.y`, `q != p`.
    SameRow,
    Equal,
}

/// Classifies `q` relative to `p`.
pub fn classify_quadrant(p: Point, q: Point) -> QuadrantRel {
    use core::cmp::Ordering::*;
    match (q.x.cmp(&p.x), q.y.cmp(&p.y)) {
        (Equal, Equal) => QuadrantRel::Equal,
        (Equal, _) => QuadrantRel::SameColumn,
        (_, Equal) => QuadrantRel::SameRow,
        (Greater, Greater) => QuadrantRel::Q1,
        (Less, Greater) => QuadrantRel::Q2,
        (Less, Less) => QuadrantRel::Q3,
        (Greater, Less) => QuadrantRel::Q4,
    }
}

/// Slope class of a segment, with `p.x <= q.x`: nonnegative when
/// `p.y <= q.y`, negative otherwise. Axis-aligned segments count as
/// nonnegative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeClass {
    NonNegative,
    Negative,
}

/// Validates the digital-segment shape of a point sequence: unit grid
/// steps, and both coordinate sequences monotone (in either direction).
///
/// Returns the first violated invariant together with the index at which
/// it is detected.
pub fn validate_path(points: &[Point]) -> core::result::Result<(), PathDefect> {
    if points.is_empty() {
        return Err(PathDefect {
            index: 0,
            kind: PathDefectKind::Empty,
        });
    }
    let mut x_dir = 0i64;
    let mut y_dir = 0i64;
    for (i, pair) in points.windows(2).enumerate() {
        let index = i + 1;
        let dx = pair[1].x - pair[0].x;
        let dy = pair[1].y - pair[0].y;
        if dx.abs() + dy.abs() != 1 {
            return Err(PathDefect {
                index,
                kind: PathDefectKind::NonUnitStep,
            });
        }
        if dx != 0 {
            if x_dir == 0 {
                x_dir = dx;
            } else if dx != x_dir {
                return Err(PathDefect {
                    index,
                    kind: PathDefectKind::XNotMonotone,
                });
            }
        } else {
            if y_dir == 0 {
                y_dir = dy;
            } else if dy != y_dir {
                return Err(PathDefect {
                    index,
                    kind: PathDefectKind::YNotMonotone,
                });
            }
        }
    }
    Ok(())
}

/// An ordered sequence of grid points forming a monotone unit-step path.
///
/// Invariants (enforced by [`DigitalSegment::new`]):
/// * consecutive points differ by one unit in exactly one coordinate,
/// * the x and y coordinate sequences are monotone (non-strictly),
/// * hence the length is `|dx| + |dy| + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DigitalSegment {
    points: Vec<Point>,
}

impl DigitalSegment {
    /// Builds a segment after validating the path invariants.
    pub fn new(points: Vec<Point>) -> core::result::Result<Self, PathDefect> {
        validate_path(&points)?;
        Ok(DigitalSegment { points })
    }

    /// Builds a segment from a walk known to be valid by construction.
    pub(crate) fn from_walk(points: Vec<Point>) -> Self {
        debug_assert!(validate_path(&points).is_ok());
        DigitalSegment { points }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid segment has at least one point
    }

    pub fn first(&self) -> Point {
        self.points[0]
    }

    pub fn last(&self) -> Point {
        *self.points.last().expect("segment is non-empty")
    }

    /// The same path walked from the other endpoint.
    pub fn reversed(&self) -> Self {
        let mut points = self.points.clone();
        points.reverse();
        DigitalSegment { points }
    }

    /// Index of `p` on the path, if present.
    ///
    /// Monotone unit-step paths put the point with L1-distance `k` from
    /// the first point exactly at index `k`, so this is a single probe.
    pub fn position_of(&self, p: Point) -> Option<usize> {
        let first = self.points[0];
        let d = (p.x as i128 - first.x as i128).unsigned_abs()
            + (p.y as i128 - first.y as i128).unsigned_abs();
        if d >= self.points.len() as u128 {
            return None;
        }
        let idx = d as usize;
        (self.points[idx] == p).then_some(idx)
    }

    pub fn contains(&self, p: Point) -> bool {
        self.position_of(p).is_some()
    }

    /// Slope class under the canonical orientation (`x` non-decreasing;
    /// for vertical segments, `y` non-decreasing). Axis-aligned segments
    /// are nonnegative.
    pub fn slope_class(&self) -> SlopeClass {
        let (a, b) = (self.first(), self.last());
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if hi.y >= lo.y {
            SlopeClass::NonNegative
        } else {
            SlopeClass::Negative
        }
    }

    /// The point on a nonnegative-slope segment lying on antidiagonal
    /// `sum`, if the segment crosses it.
    pub fn point_at_sum(&self, sum: i64) -> Option<Point> {
        let (a, b) = (self.first(), self.last());
        let (lo, hi) = if a.sum() <= b.sum() { (a, b) } else { (b, a) };
        if sum < lo.sum() || sum > hi.sum() {
            return None;
        }
        // Walk order and sum order agree up to reversal.
        let offset = (sum - lo.sum()) as usize;
        let idx = if a.sum() <= b.sum() {
            offset
        } else {
            self.points.len() - 1 - offset
        };
        let r = self.points[idx];
        (r.sum() == sum).then_some(r)
    }
}

/// A closed axis-aligned rectangle of grid points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Region {
    pub x0: i64,
    pub x1: i64,
    pub y0: i64,
    pub y1: i64,
}

impl Region {
    pub fn new(x0: i64, x1: i64, y0: i64, y1: i64) -> Result<Self> {
        if x0 > x1 || y0 > y1 {
            return Err(Error::EmptyRegion { x0, x1, y0, y1 });
        }
        Ok(Region { x0, x1, y0, y1 })
    }

    /// Number of columns, saturating for degenerate huge bounds so the
    /// cap checks stay meaningful.
    pub fn width(&self) -> i64 {
        (self.x1 as i128 - self.x0 as i128 + 1).min(i64::MAX as i128) as i64
    }

    /// Number of rows, saturating like [`Region::width`].
    pub fn height(&self) -> i64 {
        (self.y1 as i128 - self.y0 as i128 + 1).min(i64::MAX as i128) as i64
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.x0 && p.x <= self.x1 && p.y >= self.y0 && p.y <= self.y1
    }

    /// Grid points in lexicographic `(x, y)` order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (self.x0..=self.x1).flat_map(move |x| (self.y0..=self.y1).map(move |y| Point::new(x, y)))
    }

    /// The region grown by `margin` on the left, right and top.
    ///
    /// Far endpoints of first- and second-quadrant segments only ever
    /// extend upward and sideways from their base, so the bottom edge
    /// stays put.
    pub fn expand_up(&self, margin: i64) -> Region {
        Region {
            x0: self.x0.saturating_sub(margin),
            x1: self.x1.saturating_add(margin),
            y0: self.y0,
            y1: self.y1.saturating_add(margin),
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]x[{}..{}]", self.x0, self.x1, self.y0, self.y1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_quadrant(pt(0, 0), pt(3, 5)), QuadrantRel::Q1);
        assert_eq!(classify_quadrant(pt(0, 0), pt(-2, 4)), QuadrantRel::Q2);
        assert_eq!(
            classify_quadrant(pt(1, 1), pt(1, -5)),
            QuadrantRel::SameColumn
        );
        assert_eq!(classify_quadrant(pt(0, 0), pt(-1, -1)), QuadrantRel::Q3);
        assert_eq!(classify_quadrant(pt(0, 0), pt(2, -7)), QuadrantRel::Q4);
        assert_eq!(classify_quadrant(pt(2, 3), pt(5, 3)), QuadrantRel::SameRow);
        assert_eq!(classify_quadrant(pt(2, 3), pt(2, 3)), QuadrantRel::Equal);
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(mirror(pt(3, 5)), pt(-3, 5));
        assert_eq!(mirror(pt(0, 2)), pt(0, 2));
        assert_eq!(mirror(mirror(pt(-7, 4))), pt(-7, 4));
    }

    #[test]
    fn validate_path_examples() {
        assert!(validate_path(&[pt(0, 0), pt(1, 0), pt(1, 1)]).is_ok());

        let err = validate_path(&[pt(0, 0), pt(1, 1)]).unwrap_err();
        assert_eq!(
            err,
            PathDefect {
                index: 1,
                kind: PathDefectKind::NonUnitStep
            }
        );
        assert_eq!(alloc::format!("{err}"), "non-unit step at index 1");

        let err = validate_path(&[pt(0, 0), pt(1, 0), pt(0, 0)]).unwrap_err();
        assert_eq!(
            err,
            PathDefect {
                index: 2,
                kind: PathDefectKind::XNotMonotone
            }
        );
        assert_eq!(alloc::format!("{err}"), "x not monotone at index 2");

        let err = validate_path(&[]).unwrap_err();
        assert_eq!(alloc::format!("{err}"), "empty path");

        let err = validate_path(&[pt(0, 0), pt(0, 1), pt(0, 0)]).unwrap_err();
        assert_eq!(err.kind, PathDefectKind::YNotMonotone);
    }

    #[test]
    fn segment_position_lookup() {
        let seg = DigitalSegment::new(vec![pt(0, 0), pt(0, 1), pt(1, 1), pt(2, 1)]).unwrap();
        assert_eq!(seg.position_of(pt(1, 1)), Some(2));
        assert_eq!(seg.position_of(pt(1, 0)), None);
        assert_eq!(seg.position_of(pt(9, 9)), None);
        assert!(seg.contains(pt(2, 1)));
        assert_eq!(seg.point_at_sum(1), Some(pt(0, 1)));
        assert_eq!(seg.point_at_sum(2), Some(pt(1, 1)));
        assert_eq!(seg.point_at_sum(4), None);
    }

    #[test]
    fn slope_classes() {
        let up = DigitalSegment::new(vec![pt(0, 0), pt(1, 0), pt(1, 1)]).unwrap();
        assert_eq!(up.slope_class(), SlopeClass::NonNegative);
        assert_eq!(up.reversed().slope_class(), SlopeClass::NonNegative);

        let down = DigitalSegment::new(vec![pt(0, 1), pt(1, 1), pt(1, 0)]).unwrap();
        assert_eq!(down.slope_class(), SlopeClass::Negative);
        assert_eq!(down.reversed().slope_class(), SlopeClass::Negative);

        let row = DigitalSegment::new(vec![pt(0, 0), pt(1, 0)]).unwrap();
        assert_eq!(row.slope_class(), SlopeClass::NonNegative);
        let col = DigitalSegment::new(vec![pt(0, 0), pt(0, 1)]).unwrap();
        assert_eq!(col.slope_class(), SlopeClass::NonNegative);
        let single = DigitalSegment::new(vec![pt(3, 3)]).unwrap();
        assert_eq!(single.slope_class(), SlopeClass::NonNegative);
    }

    #[test]
    fn region_points_order() {
        let r = Region::new(0, 1, 0, 1).unwrap();
        let pts: Vec<Point> = r.points().collect();
        assert_eq!(pts, vec![pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1)]);
    }
}
