//! Antidiagonal distance profiles, smoothness of segment pairs and
//! regions, the order-agreement relation, and the check that bounded
//! agreement and bounded smoothness coincide.
//!
//! For two nonnegative-slope segments, the distance at a point `r` of
//! the first is `r.x - s.x` where `s` is the unique point of the second
//! on the same antidiagonal; the pair is smooth when this distance is
//! monotone over its common range. Negative-slope pairs are measured in
//! mirrored coordinates. A grid geometry built from per-point orders is
//! smooth exactly when all assigned orders agree pairwise.

use alloc::vec::Vec;

use crate::engine::{movement_sums, segment, OrderAssignment};
use crate::error::{Error, Result};
use crate::grid::{DigitalSegment, Point, Region, SlopeClass};
use crate::order::OrderSpec;

/// One antidiagonal of a distance profile: the point `r` on the first
/// segment, and the signed horizontal offset to the second.
///
/// For negative-slope pairs the profile is computed in mirrored
/// coordinates: `r` is reported mirrored back, and `sum` is the
/// mirrored-world coordinate sum `-r.x + r.y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProfileEntry {
    pub sum: i64,
    pub r: Point,
    pub dist: i64,
}

/// Signed distances between two same-class segments over their common
/// antidiagonal range, in increasing sum order. Empty when the ranges
/// are disjoint (the distance is undefined everywhere).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DistProfile {
    pub entries: Vec<ProfileEntry>,
}

impl DistProfile {
    pub fn dists(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().map(|e| e.dist)
    }
}

fn mirrored_segment(seg: &DigitalSegment) -> DigitalSegment {
    let pts: Vec<Point> = seg.points().iter().map(|p| p.mirror()).collect();
    DigitalSegment::new(pts).expect("mirroring preserves path validity")
}

fn nonnegative_profile(s1: &DigitalSegment, s2: &DigitalSegment, mirror_back: bool) -> DistProfile {
    let range = |s: &DigitalSegment| {
        let (a, b) = (s.first().sum(), s.last().sum());
        (a.min(b), a.max(b))
    };
    let (lo1, hi1) = range(s1);
    let (lo2, hi2) = range(s2);
    let (lo, hi) = (lo1.max(lo2), hi1.min(hi2));
    let mut entries = Vec::new();
    let mut sum = lo;
    while sum <= hi {
        let r = s1.point_at_sum(sum).expect("sum in range of segment 1");
        let s = s2.point_at_sum(sum).expect("sum in range of segment 2");
        let reported = if mirror_back { r.mirror() } else { r };
        entries.push(ProfileEntry {
            sum,
            r: reported,
            dist: r.x - s.x,
        });
        sum += 1;
    }
    DistProfile { entries }
}

/// Computes the distance profile of two segments of the same slope
/// class. Negative-slope pairs are mirrored, measured, and reported
/// with mirrored-back points.
pub fn dist_profile(s1: &DigitalSegment, s2: &DigitalSegment) -> Result<DistProfile> {
    match (s1.slope_class(), s2.slope_class()) {
        (SlopeClass::NonNegative, SlopeClass::NonNegative) => {
            Ok(nonnegative_profile(s1, s2, false))
        }
        (SlopeClass::Negative, SlopeClass::Negative) => Ok(nonnegative_profile(
            &mirrored_segment(s1),
            &mirrored_segment(s2),
            true,
        )),
        _ => Err(Error::SlopeClassesDiffer),
    }
}

/// Whether a segment pair is smooth, with a certifying triple when not.
///
/// The triple's distances rise then strictly fall, or fall then
/// strictly rise, within the profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothVerdict {
    pub smooth: bool,
    pub violating_triple: Option<[ProfileEntry; 3]>,
}

fn violating_triple(entries: &[ProfileEntry]) -> Option<[ProfileEntry; 3]> {
    let d: Vec<i64> = entries.iter().map(|e| e.dist).collect();
    let non_dec = d.windows(2).all(|w| w[0] <= w[1]);
    let non_inc = d.windows(2).all(|w| w[0] >= w[1]);
    if non_dec || non_inc {
        return None;
    }
    let n = d.len();
    // prefer the profile-spanning triple through the first extremum
    let (j_max, max) =
        d.iter().copied().enumerate().fold(
            (0, i64::MIN),
            |acc, (i, v)| {
                if v > acc.1 {
                    (i, v)
                } else {
                    acc
                }
            },
        );
    if d[0] < max && d[n - 1] < max {
        return Some([entries[0], entries[j_max], entries[n - 1]]);
    }
    let (j_min, min) =
        d.iter().copied().enumerate().fold(
            (0, i64::MAX),
            |acc, (i, v)| {
                if v < acc.1 {
                    (i, v)
                } else {
                    acc
                }
            },
        );
    if d[0] > min && d[n - 1] > min {
        return Some([entries[0], entries[j_min], entries[n - 1]]);
    }
    // an endpoint is the unique extremum; fall back to the first strict
    // local pattern in index order
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if (d[i] < d[j] && d[j] > d[k]) || (d[i] > d[j] && d[j] < d[k]) {
                    return Some([entries[i], entries[j], entries[k]]);
                }
            }
        }
    }
    unreachable!("non-monotone profiles contain a strict local pattern")
}

/// Decides smoothness of a same-class segment pair: smooth iff the
/// distance profile is entirely non-decreasing or entirely
/// non-increasing (plateaus allowed). Disjoint ranges are vacuously
/// smooth.
pub fn is_smooth_pair(s1: &DigitalSegment, s2: &DigitalSegment) -> Result<SmoothVerdict> {
    let profile = dist_profile(s1, s2)?;
    let triple = violating_triple(&profile.entries);
    Ok(SmoothVerdict {
        smooth: triple.is_none(),
        violating_triple: triple,
    })
}

/// Extracts a pair of sums on which the two base orders must disagree,
/// from a non-smooth same-class pair: the first sum where the first
/// segment moves horizontally while the second moves vertically and the
/// first later sum moving the other way around (or the reverse pattern,
/// normalized so the first order ranks the first component smaller).
///
/// Returns `None` when the pair's moves never cross, i.e. the profile
/// is monotone over the common move range.
pub fn order_disagreement(s1: &DigitalSegment, s2: &DigitalSegment) -> Result<Option<(i64, i64)>> {
    let (a, b) = match (s1.slope_class(), s2.slope_class()) {
        (SlopeClass::NonNegative, SlopeClass::NonNegative) => (s1.clone(), s2.clone()),
        (SlopeClass::Negative, SlopeClass::Negative) => {
            (mirrored_segment(s1), mirrored_segment(s2))
        }
        _ => return Err(Error::SlopeClassesDiffer),
    };
    let orient = |s: DigitalSegment| {
        if s.first().sum() <= s.last().sum() {
            s
        } else {
            s.reversed()
        }
    };
    let (a, b) = (orient(a), orient(b));
    let (h1, v1) = movement_sums(&a)?;
    let (h2, v2) = movement_sums(&b)?;
    let lo = a.first().sum().max(b.first().sum());
    let hi = (a.last().sum() - 1).min(b.last().sum() - 1);

    let mut first_rise = None; // segment 1 right, segment 2 up
    let mut first_fall = None; // segment 1 up, segment 2 right
    let mut s = lo;
    while s <= hi {
        if first_rise.is_none() && h1.contains(&s) && v2.contains(&s) {
            first_rise = Some(s);
        }
        if first_fall.is_none() && v1.contains(&s) && h2.contains(&s) {
            first_fall = Some(s);
        }
        s += 1;
    }
    // the first order moves horizontally on the rise sum and vertically
    // on the fall sum, so it ranks rise below fall; the second order
    // ranks them the other way around
    Ok(first_rise.zip(first_fall))
}

/// Verdict of the pairwise order-agreement test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AgreementVerdict {
    pub agree: bool,
    /// First pair (in lexicographic order) the two orders rank
    /// differently.
    pub counterexample: Option<(i64, i64)>,
}

/// Tests whether two orders rank every pair in a shared window
/// identically. The window starts at the larger of the two base sums —
/// the smallest antidiagonal both orders can act on — and extends
/// `window_length` values up.
pub fn in_agreement(
    p1: Point,
    spec1: &OrderSpec,
    p2: Point,
    spec2: &OrderSpec,
    window_length: u32,
) -> Result<AgreementVerdict> {
    let lo = p1.checked_sum()?.max(p2.checked_sum()?);
    let hi = lo
        .checked_add(window_length as i64)
        .ok_or(Error::ArithmeticOverflow)?;
    for a in lo..=hi {
        for b in (a + 1)..=hi {
            if spec1.compare(a, b)? != spec2.compare(a, b)? {
                return Ok(AgreementVerdict {
                    agree: false,
                    counterexample: Some((a, b)),
                });
            }
        }
    }
    Ok(AgreementVerdict {
        agree: true,
        counterexample: None,
    })
}

/// A non-smooth pair found by a region scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothExhibit {
    pub endpoints1: (Point, Point),
    pub endpoints2: (Point, Point),
    pub seg1: DigitalSegment,
    pub seg2: DigitalSegment,
    pub triple: [ProfileEntry; 3],
}

/// Outcome of a region smoothness scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothRegionReport {
    pub smooth: bool,
    pub pairs_checked: u64,
    pub exhibit: Option<SmoothExhibit>,
}

type SegRecord = (Point, Point, DigitalSegment);

/// Segments grouped by slope class: bases range over `bases`, far
/// endpoints over `endpoints`, each unordered pair generated once from
/// the endpoint whose order determines it.
fn class_segments(
    assignment: &OrderAssignment,
    bases: &Region,
    endpoints: &Region,
) -> Result<(Vec<SegRecord>, Vec<SegRecord>)> {
    let mut nonneg = Vec::new();
    let mut negative = Vec::new();
    for p in bases.points() {
        for q in endpoints.points() {
            if q.x >= p.x && q.y >= p.y && q != p {
                nonneg.push((p, q, segment(assignment, p, q)?));
            } else if q.x < p.x && q.y > p.y {
                negative.push((p, q, segment(assignment, p, q)?));
            }
        }
    }
    Ok((nonneg, negative))
}

fn scan_pairs(groups: &[&[SegRecord]]) -> (bool, u64, Option<SmoothExhibit>) {
    let mut pairs_checked = 0;
    for group in groups {
        for (i, (p1, q1, s1)) in group.iter().enumerate() {
            for (p2, q2, s2) in &group[i + 1..] {
                pairs_checked += 1;
                let verdict = is_smooth_pair(s1, s2).expect("same slope class by grouping");
                if let Some(triple) = verdict.violating_triple {
                    return (
                        false,
                        pairs_checked,
                        Some(SmoothExhibit {
                            endpoints1: (*p1, *q1),
                            endpoints2: (*p2, *q2),
                            seg1: s1.clone(),
                            seg2: s2.clone(),
                            triple,
                        }),
                    );
                }
            }
        }
    }
    (true, pairs_checked, None)
}

/// Checks smoothness of every same-slope-class pair of segments with
/// both endpoints in `region`. Stops at the first non-smooth pair.
pub fn is_smooth_region(
    assignment: &OrderAssignment,
    region: Region,
) -> Result<SmoothRegionReport> {
    is_smooth_region_with_cap(assignment, region, crate::consistency::DEFAULT_REGION_CAP)
}

pub fn is_smooth_region_with_cap(
    assignment: &OrderAssignment,
    region: Region,
    cap: i64,
) -> Result<SmoothRegionReport> {
    if region.width() > cap || region.height() > cap {
        return Err(Error::RegionCapExceeded {
            width: region.width(),
            height: region.height(),
            cap,
        });
    }
    let (nonneg, negative) = class_segments(assignment, &region, &region)?;
    let (smooth, pairs_checked, exhibit) = scan_pairs(&[&nonneg, &negative]);
    Ok(SmoothRegionReport {
        smooth,
        pairs_checked,
        exhibit,
    })
}

/// An order-agreement counterexample between two assigned points.
/// `quadrant` is 1 when the first-quadrant orders disagree and 2 when
/// the second-quadrant orders do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderDisagreement {
    pub p1: Point,
    pub p2: Point,
    pub a: i64,
    pub b: i64,
    pub quadrant: u8,
}

/// Joint outcome of the bounded agreement and smoothness scans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgreementSmoothnessReport {
    pub agreement_all: bool,
    pub smooth_all: bool,
    /// True when the two bounded scans land on the same side.
    pub consistent: bool,
    pub disagreement: Option<OrderDisagreement>,
    pub exhibit: Option<SmoothExhibit>,
}

/// Runs the agreement scan over all point pairs of `region` (both
/// first- and second-quadrant orders) against a smoothness scan whose
/// segments start in `region` but may end up to `margin` beyond it,
/// with `margin` defaulting to `window_length`.
///
/// The margin exists because a disagreement between two orders only
/// forces a non-smooth pair of segments whose far endpoints may lie
/// outside any fixed box around the bases.
pub fn agreement_smoothness_check(
    assignment: &OrderAssignment,
    region: Region,
    window_length: u32,
) -> Result<AgreementSmoothnessReport> {
    agreement_smoothness_check_with_margin(assignment, region, window_length, window_length)
}

pub fn agreement_smoothness_check_with_margin(
    assignment: &OrderAssignment,
    region: Region,
    window_length: u32,
    margin: u32,
) -> Result<AgreementSmoothnessReport> {
    let cap = crate::consistency::DEFAULT_REGION_CAP;
    if region.width() > cap || region.height() > cap {
        return Err(Error::RegionCapExceeded {
            width: region.width(),
            height: region.height(),
            cap,
        });
    }

    let pts: Vec<Point> = region.points().collect();
    let mut agreement_all = true;
    let mut disagreement = None;
    'pairs: for (i, &p1) in pts.iter().enumerate() {
        for &p2 in &pts[i + 1..] {
            let v1 = in_agreement(
                p1,
                &assignment.order1(p1),
                p2,
                &assignment.order1(p2),
                window_length,
            )?;
            if let Some((a, b)) = v1.counterexample {
                agreement_all = false;
                disagreement = Some(OrderDisagreement {
                    p1,
                    p2,
                    a,
                    b,
                    quadrant: 1,
                });
                break 'pairs;
            }
            // second-quadrant orders act on the mirrored world
            let v2 = in_agreement(
                p1.mirror(),
                &assignment.order2(p1),
                p2.mirror(),
                &assignment.order2(p2),
                window_length,
            )?;
            if let Some((a, b)) = v2.counterexample {
                agreement_all = false;
                disagreement = Some(OrderDisagreement {
                    p1,
                    p2,
                    a,
                    b,
                    quadrant: 2,
                });
                break 'pairs;
            }
        }
    }

    let endpoints = region.expand_up(margin as i64);
    let (nonneg, negative) = class_segments(assignment, &region, &endpoints)?;
    let (smooth_all, _, exhibit) = scan_pairs(&[&nonneg, &negative]);

    Ok(AgreementSmoothnessReport {
        agreement_all,
        smooth_all,
        consistent: agreement_all == smooth_all,
        disagreement,
        exhibit,
    })
}
