//! IO companion to `cdseg-core`: JSON wire formats, CSV output, and
//! SVG/ASCII rendering. The `cdseg` binary in this crate exposes the
//! whole toolkit on the command line.

pub mod json;
pub mod render;

pub use render::{RenderFormat, RenderStyle};
