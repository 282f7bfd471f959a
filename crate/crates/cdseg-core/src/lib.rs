//! Consistent digital line segments on the integer grid.
//!
//! A digital line segment system assigns to every pair of grid points a
//! monotone unit-step path, subject to five axioms: grid path (S1),
//! symmetry (S2), subsegment (S3), prolongation (S4) and monotonicity
//! (S5). A system satisfying all five is a *consistent digital line
//! segment system* (CDS).
//!
//! This crate constructs such segments from per-point total orders
//! ([`engine`]), decides exactly — at desk scale — whether an order
//! assignment yields a CDS via the bad-pair characterization
//! ([`consistency`]), analyzes smoothness and order agreement
//! ([`smoothness`]), and measures Hausdorff distance between digital
//! segments and their Euclidean counterparts ([`metrics`]).
//!
//! Everything is `no_std` (with `alloc`); IO, serialization and the CLI
//! live in the companion `cdseg` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod consistency;
pub mod engine;
pub mod error;
pub mod grid;
pub mod metrics;
pub mod order;
pub mod smoothness;

pub use consistency::{
    bad_pair_at_line, conflicting_priorities, equivalence_check, find_bad_pair, find_witness,
    layout_view, verify_region, verify_region_with_cap, BadPairFinding, Certificate,
    ConflictFinding, EquivalenceReport, LayoutView, Property, PropertyReport, Violation, Witness,
    WitnessFinding, DEFAULT_REGION_CAP,
};
pub use engine::{
    derived_third_quadrant_moves, first_quadrant_segment, movement_sums, prolong, segment,
    OrderAssignment,
};
pub use error::{Error, PathDefect, PathDefectKind, Result};
pub use grid::{
    classify_quadrant, mirror, validate_path, DigitalSegment, Point, QuadrantRel, Region,
    SlopeClass,
};
pub use metrics::{hausdorff, hausdorff_growth, HausdorffResult};
pub use order::{OrderSpec, Window};
pub use smoothness::{
    agreement_smoothness_check, agreement_smoothness_check_with_margin, dist_profile, in_agreement,
    is_smooth_pair, is_smooth_region, is_smooth_region_with_cap, order_disagreement,
    AgreementSmoothnessReport, AgreementVerdict, DistProfile, OrderDisagreement, ProfileEntry,
    SmoothExhibit, SmoothRegionReport, SmoothVerdict,
};
