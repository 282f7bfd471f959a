//! Hausdorff distance between a digital segment and its Euclidean
//! counterpart.
//!
//! The digital side is the connected path through the segment's grid
//! points. The grid-points-to-segment direction is computed exactly
//! (the distance to a convex set is convex along each unit edge, so its
//! maximum over the path sits on a grid point). The reverse direction
//! samples the Euclidean segment; the minimum distance along it is
//! 1-Lipschitz in arc length, so a sampling step of `h` bounds the
//! error by `h / 2`.

use alloc::vec::Vec;

use crate::engine::{segment, OrderAssignment};
use crate::error::{Error, Result};
use crate::grid::{DigitalSegment, Point};

/// A measured Hausdorff distance, in grid units under the Euclidean
/// metric, with the sampling resolution it was computed at.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HausdorffResult {
    pub value: f64,
    /// Grid point attaining the exact points-to-segment directed
    /// maximum.
    pub arg_point: Point,
    pub sampling_step: f64,
    /// Half the sampling step; bounds how far the sampled direction can
    /// be below its true supremum.
    pub error_bound: f64,
}

fn sqrt(v: f64) -> f64 {
    libm::sqrt(v)
}

/// Euclidean distance from `(px, py)` to the segment from `a` to `b`.
///
/// Axis-aligned segments take a componentwise clamp, which is exact for
/// points on the segment; the general case projects and clamps the
/// parameter.
fn dist_point_to_segment(px: f64, py: f64, ax: f64, ay: f64, bx: f64, by: f64) -> f64 {
    let (cx, cy) = if ax == bx || ay == by {
        (
            px.clamp(ax.min(bx), ax.max(bx)),
            py.clamp(ay.min(by), ay.max(by)),
        )
    } else {
        let dx = bx - ax;
        let dy = by - ay;
        let t = (((px - ax) * dx + (py - ay) * dy) / (dx * dx + dy * dy)).clamp(0.0, 1.0);
        (ax + t * dx, ay + t * dy)
    };
    sqrt((px - cx) * (px - cx) + (py - cy) * (py - cy))
}

/// Minimum distance from a sample point to the digital path: the unit
/// edges of the path are axis-aligned, so each edge distance is a
/// clamp.
fn dist_to_path(px: f64, py: f64, pts: &[Point]) -> f64 {
    if pts.len() == 1 {
        let (ax, ay) = (pts[0].x as f64, pts[0].y as f64);
        return sqrt((px - ax) * (px - ax) + (py - ay) * (py - ay));
    }
    let mut best = f64::INFINITY;
    for pair in pts.windows(2) {
        let d = dist_point_to_segment(
            px,
            py,
            pair[0].x as f64,
            pair[0].y as f64,
            pair[1].x as f64,
            pair[1].y as f64,
        );
        if d < best {
            best = d;
        }
    }
    best
}

/// Measures the Hausdorff distance between `seg` (as a connected grid
/// path) and the Euclidean segment from `p` to `q`.
///
/// `seg` must run between `p` and `q`. The result is exactly symmetric:
/// measuring the reversed segment from `q` to `p` performs the
/// identical arithmetic.
pub fn hausdorff(
    seg: &DigitalSegment,
    p: Point,
    q: Point,
    sampling_step: f64,
) -> Result<HausdorffResult> {
    if !sampling_step.is_finite() || sampling_step <= 0.0 {
        return Err(Error::InvalidSamplingStep);
    }
    if seg.first() != p {
        return Err(Error::EndpointMismatch {
            expected: p,
            actual: seg.first(),
        });
    }
    if seg.last() != q {
        return Err(Error::EndpointMismatch {
            expected: q,
            actual: seg.last(),
        });
    }

    // canonical orientation: both directions of the same pair compute
    // the same floating-point operations in the same order
    let flip = q < p;
    let (a, b) = if flip { (q, p) } else { (p, q) };
    let pts: Vec<Point> = if flip {
        seg.points().iter().rev().copied().collect()
    } else {
        seg.points().to_vec()
    };

    let (ax, ay) = (a.x as f64, a.y as f64);
    let (bx, by) = (b.x as f64, b.y as f64);

    // exact direction: grid points to the Euclidean segment
    let mut exact_max = f64::NEG_INFINITY;
    let mut arg_point = pts[0];
    for &r in &pts {
        let d = dist_point_to_segment(r.x as f64, r.y as f64, ax, ay, bx, by);
        if d > exact_max {
            exact_max = d;
            arg_point = r;
        }
    }

    // sampled direction: Euclidean segment to the digital path
    let length = sqrt((bx - ax) * (bx - ax) + (by - ay) * (by - ay));
    let n = if length == 0.0 {
        1
    } else {
        libm::ceil(length / sampling_step) as u64
    };
    let mut sampled_max: f64 = 0.0;
    for i in 0..=n {
        let t = i as f64 / n as f64;
        let sx = ax + t * (bx - ax);
        let sy = ay + t * (by - ay);
        let d = dist_to_path(sx, sy, &pts);
        if d > sampled_max {
            sampled_max = d;
        }
    }

    Ok(HausdorffResult {
        value: if exact_max >= sampled_max {
            exact_max
        } else {
            sampled_max
        },
        arg_point,
        sampling_step,
        error_bound: sampling_step / 2.0,
    })
}

/// Measures Hausdorff distance along a ray of endpoints `p + n * dir`
/// for each `n` in `n_values`, one independent row per entry.
pub fn hausdorff_growth(
    assignment: &OrderAssignment,
    p: Point,
    direction: (i64, i64),
    n_values: &[u64],
    sampling_step: f64,
) -> Result<Vec<(u64, HausdorffResult)>> {
    let (dx, dy) = direction;
    if dx < 0 || dy < 0 || (dx == 0 && dy == 0) {
        return Err(Error::InvalidDirection { dx, dy });
    }
    let mut rows = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let n_i64 = i64::try_from(n).map_err(|_| Error::ArithmeticOverflow)?;
        let qx = dx
            .checked_mul(n_i64)
            .and_then(|v| v.checked_add(p.x))
            .ok_or(Error::ArithmeticOverflow)?;
        let qy = dy
            .checked_mul(n_i64)
            .and_then(|v| v.checked_add(p.y))
            .ok_or(Error::ArithmeticOverflow)?;
        let q = Point::new(qx, qy);
        let seg = segment(assignment, p, q)?;
        rows.push((n, hausdorff(&seg, p, q, sampling_step)?));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::first_quadrant_segment;
    use crate::order::OrderSpec;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    const SQRT_2: f64 = core::f64::consts::SQRT_2;

    #[test]
    fn axis_aligned_distance_is_exactly_zero() {
        let a = OrderAssignment::uniform_natural();
        let seg = segment(&a, pt(0, 0), pt(5, 0)).unwrap();
        let r = hausdorff(&seg, pt(0, 0), pt(5, 0), 0.001).unwrap();
        assert_eq!(r.value, 0.0);

        let seg = segment(&a, pt(2, -1), pt(2, 6)).unwrap();
        let r = hausdorff(&seg, pt(2, -1), pt(2, 6), 0.001).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn natural_staircase_peaks_at_the_corner() {
        let seg = first_quadrant_segment(pt(0, 0), pt(4, 4), &OrderSpec::Natural).unwrap();
        let r = hausdorff(&seg, pt(0, 0), pt(4, 4), 0.001).unwrap();
        assert!((r.value - 4.0 / SQRT_2).abs() <= r.error_bound);
        assert_eq!(r.arg_point, pt(4, 0));
        assert_eq!(r.error_bound, 0.0005);
    }

    #[test]
    fn reverse_measurement_is_bit_identical() {
        let seg = first_quadrant_segment(pt(0, 0), pt(3, 5), &OrderSpec::Natural).unwrap();
        let fwd = hausdorff(&seg, pt(0, 0), pt(3, 5), 0.01).unwrap();
        let back = hausdorff(&seg.reversed(), pt(3, 5), pt(0, 0), 0.01).unwrap();
        assert_eq!(fwd.value, back.value);
        assert_eq!(fwd.arg_point, back.arg_point);
    }

    #[test]
    fn halving_the_step_moves_the_value_at_most_by_the_bound() {
        let spec = OrderSpec::explicit(0, 7, alloc::vec![3, 7, 5, 2, 1, 0, 4, 6]).unwrap();
        let seg = first_quadrant_segment(pt(0, 0), pt(3, 5), &spec).unwrap();
        let coarse = hausdorff(&seg, pt(0, 0), pt(3, 5), 0.02).unwrap();
        let fine = hausdorff(&seg, pt(0, 0), pt(3, 5), 0.01).unwrap();
        assert!((coarse.value - fine.value).abs() <= coarse.error_bound);
    }

    #[test]
    fn value_dominates_the_exact_direction() {
        let seg = first_quadrant_segment(pt(0, 0), pt(5, 2), &OrderSpec::Natural).unwrap();
        let r = hausdorff(&seg, pt(0, 0), pt(5, 2), 0.001).unwrap();
        for &g in seg.points() {
            let d = dist_point_to_segment(g.x as f64, g.y as f64, 0.0, 0.0, 5.0, 2.0);
            assert!(r.value >= d);
        }
    }

    #[test]
    fn endpoint_mismatch_is_rejected() {
        let seg = first_quadrant_segment(pt(0, 0), pt(2, 2), &OrderSpec::Natural).unwrap();
        assert!(matches!(
            hausdorff(&seg, pt(0, 0), pt(2, 3), 0.001),
            Err(Error::EndpointMismatch { .. })
        ));
        assert!(matches!(
            hausdorff(&seg, pt(0, 0), pt(2, 2), 0.0),
            Err(Error::InvalidSamplingStep)
        ));
    }

    #[test]
    fn growth_along_the_diagonal() {
        let rows = hausdorff_growth(
            &OrderAssignment::uniform_natural(),
            pt(0, 0),
            (1, 1),
            &[1, 2, 4],
            0.001,
        )
        .unwrap();
        let expect = [1.0, 2.0, 4.0].map(|n| n / SQRT_2);
        for ((n, r), e) in rows.iter().zip(expect) {
            assert!((r.value - e).abs() <= r.error_bound, "n={n}");
        }
    }

    #[test]
    fn growth_along_an_axis_is_zero() {
        let rows = hausdorff_growth(
            &OrderAssignment::uniform_natural(),
            pt(0, 0),
            (1, 0),
            &[1, 3, 9],
            0.001,
        )
        .unwrap();
        assert!(rows.iter().all(|(_, r)| r.value == 0.0));
    }

    #[test]
    fn growth_rejects_bad_directions() {
        let a = OrderAssignment::uniform_natural();
        assert!(matches!(
            hausdorff_growth(&a, pt(0, 0), (0, 0), &[1], 0.001),
            Err(Error::InvalidDirection { .. })
        ));
        assert!(matches!(
            hausdorff_growth(&a, pt(0, 0), (-1, 2), &[1], 0.001),
            Err(Error::InvalidDirection { .. })
        ));
    }

    #[test]
    fn waterline_growth_reference_values() {
        // frozen from the dense brute-force oracle in tests/properties.rs
        let rows = hausdorff_growth(
            &OrderAssignment::Waterline,
            pt(0, -2),
            (1, 1),
            &[1, 2, 3],
            0.001,
        )
        .unwrap();
        let expect = [1.0 / SQRT_2, SQRT_2, SQRT_2];
        for ((n, r), e) in rows.iter().zip(expect) {
            assert!((r.value - e).abs() <= 1e-6 + r.error_bound, "n={n}");
            assert!(r.value > 0.0);
        }
    }
}
