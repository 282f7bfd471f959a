//! Error and defect types shared across the crate.

use core::fmt;

use crate::grid::Point;

/// Why a point sequence fails to be a valid digital segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathDefectKind {
    /// The sequence is empty.
    Empty,
    /// Consecutive points do not differ by exactly one unit in exactly
    /// one coordinate.
    NonUnitStep,
    /// The x-coordinate sequence reverses direction.
    XNotMonotone,
    /// The y-coordinate sequence reverses direction.
    YNotMonotone,
}

/// First violated path invariant, with the index at which it occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathDefect {
    pub index: usize,
    pub kind: PathDefectKind,
}

impl fmt::Display for PathDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PathDefectKind::Empty => write!(f, "empty path"),
            PathDefectKind::NonUnitStep => write!(f, "non-unit step at index {}", self.index),
            PathDefectKind::XNotMonotone => write!(f, "x not monotone at index {}", self.index),
            PathDefectKind::YNotMonotone => write!(f, "y not monotone at index {}", self.index),
        }
    }
}

/// Errors surfaced by the library.
///
/// `OutsideWindow`, `NotPermutation`, `PartitionOverflow` and
/// `WindowTooLarge` are order-window errors; everything else is a
/// contract violation of the operation that raised it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A value was compared or sorted outside an explicit order window.
    OutsideWindow { value: i64, lo: i64, hi: i64 },
    /// The listed ascending sequence is not a permutation of `lo..=hi`.
    NotPermutation,
    /// More greatest elements requested than the window holds.
    PartitionOverflow { requested: usize, available: usize },
    /// The window does not fit in addressable memory.
    WindowTooLarge { lo: i64, hi: i64 },
    /// Endpoint is not in the closed first quadrant of the base point.
    NotFirstQuadrant { p: Point, q: Point },
    /// The segment is not oriented with non-decreasing coordinates.
    Orientation,
    /// The two segments do not share a slope class.
    SlopeClassesDiffer,
    /// Neither axis candidate extends the segment; the assignment
    /// violates the prolongation property at this pair.
    ProlongationFailure { p: Point, q: Point },
    /// Prolongation is undefined for a degenerate single-point pair.
    DegeneratePair { p: Point },
    /// Layout rows must run over a non-empty window.
    EmptyRow { end_sum: i64, base_sum: i64 },
    /// Layout bases must be given left point first.
    UnorderedBases { left_x: i64, right_x: i64 },
    /// The dividing line does not split both rows non-trivially.
    LinePosOutOfRange { line_pos: usize },
    /// The apex point is not strictly inside both first quadrants.
    NotInOpenCommonQuadrant { p3: Point },
    /// Bounded searches need the bound to reach both base sums.
    EndSumBelowBase { max_end_sum: i64, base_sum: i64 },
    /// Region is wider or taller than the configured cap.
    RegionCapExceeded { width: i64, height: i64, cap: i64 },
    /// Region bounds are inverted.
    EmptyRegion { x0: i64, x1: i64, y0: i64, y1: i64 },
    /// Segment endpoints disagree with the stated endpoints.
    EndpointMismatch { expected: Point, actual: Point },
    /// Sampling step must be strictly positive and finite.
    InvalidSamplingStep,
    /// Growth direction must be non-negative and non-zero.
    InvalidDirection { dx: i64, dy: i64 },
    /// Coordinate sums left the range of 64-bit arithmetic.
    ArithmeticOverflow,
    /// A point sequence is not a valid digital segment.
    Path(PathDefect),
}

impl From<PathDefect> for Error {
    fn from(defect: PathDefect) -> Self {
        Error::Path(defect)
    }
}

impl Error {
    /// True for errors caused by a finite order spec being asked about
    /// values it does not cover.
    pub fn is_order_window_error(&self) -> bool {
        matches!(
            self,
            Error::OutsideWindow { .. }
                | Error::NotPermutation
                | Error::PartitionOverflow { .. }
                | Error::WindowTooLarge { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutsideWindow { value, lo, hi } => {
                write!(f, "outside order window: {value} not in [{lo}, {hi}]")
            }
            Error::NotPermutation => {
                write!(f, "ascending sequence is not a permutation of its window")
            }
            Error::PartitionOverflow {
                requested,
                available,
            } => {
                write!(
                    f,
                    "partition overflow: {requested} of {available} elements requested"
                )
            }
            Error::WindowTooLarge { lo, hi } => write!(f, "window [{lo}, {hi}] too large"),
            Error::NotFirstQuadrant { p, q } => {
                write!(f, "not in closed first quadrant: {q} relative to {p}")
            }
            Error::Orientation => write!(f, "orientation: segment must not have negative slope"),
            Error::SlopeClassesDiffer => write!(f, "slope classes differ"),
            Error::ProlongationFailure { p, q } => {
                write!(f, "prolongation failure for segment {p} to {q}")
            }
            Error::DegeneratePair { p } => write!(f, "cannot prolong single point {p}"),
            Error::EmptyRow { end_sum, base_sum } => {
                write!(f, "empty row: end sum {end_sum} below base sum {base_sum}")
            }
            Error::UnorderedBases { left_x, right_x } => {
                write!(f, "layout bases out of order: {left_x} > {right_x}")
            }
            Error::LinePosOutOfRange { line_pos } => {
                write!(f, "dividing line position {line_pos} out of range")
            }
            Error::NotInOpenCommonQuadrant { p3 } => {
                write!(f, "{p3} not in open common quadrant")
            }
            Error::EndSumBelowBase {
                max_end_sum,
                base_sum,
            } => {
                write!(f, "max end sum {max_end_sum} below base sum {base_sum}")
            }
            Error::RegionCapExceeded { width, height, cap } => {
                write!(f, "region cap exceeded: {width}x{height} with cap {cap}")
            }
            Error::EmptyRegion { x0, x1, y0, y1 } => {
                write!(f, "empty region: [{x0}..{x1}]x[{y0}..{y1}]")
            }
            Error::EndpointMismatch { expected, actual } => {
                write!(
                    f,
                    "endpoint mismatch: expected {expected}, segment has {actual}"
                )
            }
            Error::InvalidSamplingStep => write!(f, "sampling step must be positive"),
            Error::InvalidDirection { dx, dy } => {
                write!(
                    f,
                    "direction ({dx}, {dy}) must be non-negative and non-zero"
                )
            }
            Error::ArithmeticOverflow => write!(f, "coordinate arithmetic overflow"),
            Error::Path(defect) => write!(f, "{defect}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
