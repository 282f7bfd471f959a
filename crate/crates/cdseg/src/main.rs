//! Command-line front end for digital segment generation, verification,
//! characterization checks, smoothness analysis, and rendering.
//!
//! Exit codes: 0 success or clean result, 1 a property violation or
//! certificate was found (a result, not a failure), 2 usage error,
//! 3 order-window error.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use cdseg::json::{
    agreement_smoothness_to_json, assignment_from_json, bad_pair_to_json, equivalence_to_json,
    hausdorff_csv_row, order_spec_from_json, pair_verdict_to_json, report_to_json, segment_to_json,
    segments_from_json, smooth_region_to_json, FormatError,
};
use cdseg::render::{render, RenderFormat, RenderStyle};
use cdseg_core::{
    agreement_smoothness_check_with_margin, dist_profile, equivalence_check, find_bad_pair,
    hausdorff, hausdorff_growth, is_smooth_pair, is_smooth_region_with_cap, segment,
    verify_region_with_cap, OrderAssignment, OrderSpec, Point, Property, Region,
    DEFAULT_REGION_CAP,
};

#[derive(Parser)]
#[command(
    name = "cdseg",
    version,
    about = "Digital line segments from total orders: generation, consistency checks, \
             smoothness analysis, Hausdorff measurement, rendering"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AssignmentArg {
    /// Order assignment: inline JSON or a path to a JSON file
    #[arg(long)]
    assignment: String,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the digital segment between two points
    Gen {
        #[command(flatten)]
        assignment: AssignmentArg,
        /// Start point as x,y
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        /// End point as x,y
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        /// Also render the segment (svg or ascii); requires --out
        #[arg(long, value_parser = parse_render_format)]
        render: Option<RenderFormat>,
        /// File the rendering is written to
        #[arg(long)]
        out: Option<PathBuf>,
        /// SVG pixels per grid cell
        #[arg(long, default_value_t = 24)]
        cell_size: u32,
        /// Label path points with their coordinate sums
        #[arg(long)]
        annotate_sums: bool,
    },
    /// Verify the segment axioms exhaustively over a region
    Verify {
        #[command(flatten)]
        assignment: AssignmentArg,
        /// Region as x0:x1,y0:y1 (inclusive)
        #[arg(long, allow_hyphen_values = true)]
        region: String,
        /// Comma-separated subset of S1,S2,S3,S4,S5 (default: all)
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
        /// Override the region side-length cap
        #[arg(long)]
        max_region: Option<i64>,
    },
    /// Search two anchored orders for a bad pair
    Badpair {
        /// First base point as x,y
        #[arg(long, allow_hyphen_values = true)]
        p1: String,
        /// First order spec (inline JSON or file path)
        #[arg(long)]
        spec1: String,
        /// Second base point as x,y
        #[arg(long, allow_hyphen_values = true)]
        p2: String,
        /// Second order spec (inline JSON or file path)
        #[arg(long)]
        spec2: String,
        /// Largest end sum the bounded searches scan
        #[arg(long)]
        max_end_sum: i64,
        /// Also run the conflicting-priority and witness scans and
        /// report whether the three certificates agree
        #[arg(long)]
        equivalence: bool,
        /// Run this many extra seeded random equivalence trials
        #[arg(long, default_value_t = 0)]
        trials: u64,
        /// Seed for the random trials
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Smoothness analysis of a segment pair or a whole region
    Smooth {
        #[command(flatten)]
        assignment: AssignmentArg,
        /// Region as x0:x1,y0:y1
        #[arg(long, conflicts_with = "pair", allow_hyphen_values = true)]
        region: Option<String>,
        /// Two segments as fromA,toA,fromB,toB (eight integers)
        #[arg(long, allow_hyphen_values = true)]
        pair: Option<String>,
        /// With --region: also test pairwise order agreement over this
        /// window length and report both sides
        #[arg(long)]
        agreement_window: Option<u32>,
        /// Smoothness search margin beyond the region (defaults to the
        /// agreement window)
        #[arg(long)]
        margin: Option<u32>,
        /// Override the region side-length cap
        #[arg(long)]
        max_region: Option<i64>,
    },
    /// Hausdorff distance between digital segments and their Euclidean
    /// counterparts, as CSV
    Hausdorff {
        #[command(flatten)]
        assignment: AssignmentArg,
        /// Start point as x,y
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        /// End point as x,y (single measurement)
        #[arg(long, conflicts_with_all = ["direction", "n_values"], allow_hyphen_values = true)]
        to: Option<String>,
        /// Growth direction as dx,dy (non-negative, not both zero)
        #[arg(long, requires = "n_values")]
        direction: Option<String>,
        /// Comma-separated multipliers for the growth table
        #[arg(long, value_delimiter = ',')]
        n_values: Vec<u64>,
        /// Sampling step along the Euclidean segment, in grid units
        #[arg(long, default_value_t = 0.001)]
        step: f64,
    },
    /// Render segment JSON from standard input
    Render {
        #[arg(long, default_value = "svg", value_parser = parse_render_format)]
        format: RenderFormat,
        #[arg(long, default_value_t = 24)]
        cell_size: u32,
        #[arg(long)]
        annotate_sums: bool,
        /// Output file (default: standard output)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_render_format(s: &str) -> Result<RenderFormat, String> {
    s.parse()
}

/// A failure with its process exit code; results (exit 1) do not pass
/// through here.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<cdseg_core::Error> for Failure {
    fn from(err: cdseg_core::Error) -> Self {
        let code = if err.is_order_window_error() { 3 } else { 2 };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(err: FormatError) -> Self {
        match err {
            FormatError::Parse(e) => Failure::usage(format!("malformed JSON: {e}")),
            FormatError::Invalid(e) => e.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure {
            code: 2,
            message: err.to_string(),
        }
    }
}

fn parse_point(s: &str) -> Result<Point, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::usage(format!("expected x,y but got '{s}'")));
    }
    let x = parts[0]
        .trim()
        .parse::<i64>()
        .map_err(|e| Failure::usage(format!("bad x in '{s}': {e}")))?;
    let y = parts[1]
        .trim()
        .parse::<i64>()
        .map_err(|e| Failure::usage(format!("bad y in '{s}': {e}")))?;
    Ok(Point::new(x, y))
}

fn parse_region(s: &str) -> Result<Region, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::usage(format!(
            "expected x0:x1,y0:y1 but got '{s}'"
        )));
    }
    let axis = |part: &str| -> Result<(i64, i64), Failure> {
        let ends: Vec<&str> = part.split(':').collect();
        if ends.len() != 2 {
            return Err(Failure::usage(format!("expected lo:hi but got '{part}'")));
        }
        let lo = ends[0]
            .trim()
            .parse::<i64>()
            .map_err(|e| Failure::usage(e.to_string()))?;
        let hi = ends[1]
            .trim()
            .parse::<i64>()
            .map_err(|e| Failure::usage(e.to_string()))?;
        Ok((lo, hi))
    };
    let (x0, x1) = axis(parts[0])?;
    let (y0, y1) = axis(parts[1])?;
    Ok(Region::new(x0, x1, y0, y1)?)
}

/// Inline JSON when the argument starts with '{', otherwise a file path.
fn load_json_arg(arg: &str) -> Result<String, Failure> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        Ok(fs::read_to_string(arg)?)
    }
}

fn load_assignment(arg: &AssignmentArg) -> Result<OrderAssignment, Failure> {
    Ok(assignment_from_json(&load_json_arg(&arg.assignment)?)?)
}

fn load_spec(arg: &str) -> Result<OrderSpec, Failure> {
    Ok(order_spec_from_json(&load_json_arg(arg)?)?)
}

fn region_cap(flag: Option<i64>) -> i64 {
    flag.or_else(|| {
        std::env::var("CDS_MAX_REGION")
            .ok()
            .and_then(|v| v.parse::<i64>().ok())
    })
    .unwrap_or(DEFAULT_REGION_CAP)
}

fn parse_properties(names: &[String]) -> Result<Vec<Property>, Failure> {
    if names.is_empty() {
        return Ok(Property::ALL.to_vec());
    }
    names
        .iter()
        .map(|name| {
            name.parse::<Property>()
                .map_err(|_| Failure::usage(format!("unknown property '{name}'")))
        })
        .collect()
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gen {
            assignment,
            from,
            to,
            render: render_format,
            out,
            cell_size,
            annotate_sums,
        } => {
            let a = load_assignment(&assignment)?;
            let p = parse_point(&from)?;
            let q = parse_point(&to)?;
            let seg = segment(&a, p, q)?;
            println!("{}", segment_to_json(&seg));
            if let Some(format) = render_format {
                let Some(out) = out else {
                    return Err(Failure::usage("--render requires --out"));
                };
                let style = RenderStyle {
                    format,
                    cell_size,
                    annotate_sums,
                };
                write_or_print(&Some(out), &render(&[seg], &style))?;
            }
            Ok(0)
        }

        Command::Verify {
            assignment,
            region,
            properties,
            max_region,
        } => {
            let a = load_assignment(&assignment)?;
            let region = parse_region(&region)?;
            let props = parse_properties(&properties)?;
            let report = verify_region_with_cap(&a, region, &props, region_cap(max_region))?;
            println!("{}", report_to_json(&report));
            Ok(if report.is_clean() { 0 } else { 1 })
        }

        Command::Badpair {
            p1,
            spec1,
            p2,
            spec2,
            max_end_sum,
            equivalence,
            trials,
            seed,
        } => {
            let p1 = parse_point(&p1)?;
            let p2 = parse_point(&p2)?;
            let spec1 = load_spec(&spec1)?;
            let spec2 = load_spec(&spec2)?;
            let found;
            if equivalence || trials > 0 {
                let report = equivalence_check(p1, &spec1, p2, &spec2, max_end_sum)?;
                found = report.bad_pair.is_some();
                let mut payload = json!({ "pair": equivalence_to_json(&report) });
                if trials > 0 {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let mut consistent = 0u64;
                    for _ in 0..trials {
                        let t1 = Point::new(rng.gen_range(0..=2), rng.gen_range(0..=2));
                        let t2 = Point::new(rng.gen_range(0..=2), rng.gen_range(0..=2));
                        let hi = rng.gen_range(8..=12).max(t1.sum().max(t2.sum()) + 2);
                        let mk = |rng: &mut ChaCha8Rng, lo: i64| {
                            let mut asc: Vec<i64> = (lo..=hi).collect();
                            asc.shuffle(rng);
                            OrderSpec::explicit(lo, hi, asc).expect("shuffled window")
                        };
                        let s1 = mk(&mut rng, t1.sum());
                        let s2 = mk(&mut rng, t2.sum());
                        if equivalence_check(t1, &s1, t2, &s2, hi)?.consistent {
                            consistent += 1;
                        }
                    }
                    payload["random_trials"] = json!({
                        "count": trials,
                        "seed": seed,
                        "consistent": consistent,
                        "all_consistent": consistent == trials,
                    });
                }
                println!("{payload}");
            } else {
                match find_bad_pair(p1, &spec1, p2, &spec2, max_end_sum)? {
                    Some(finding) => {
                        found = true;
                        println!("{}", bad_pair_to_json(&finding));
                    }
                    None => {
                        found = false;
                        println!("none");
                    }
                }
            }
            Ok(if found { 1 } else { 0 })
        }

        Command::Smooth {
            assignment,
            region,
            pair,
            agreement_window,
            margin,
            max_region,
        } => {
            let a = load_assignment(&assignment)?;
            if let Some(pair) = pair {
                let ints: Vec<&str> = pair.split(',').collect();
                if ints.len() != 8 {
                    return Err(Failure::usage(
                        "--pair expects fromA,toA,fromB,toB as eight integers",
                    ));
                }
                let mut coords = [0i64; 8];
                for (slot, text) in coords.iter_mut().zip(&ints) {
                    *slot = text
                        .trim()
                        .parse::<i64>()
                        .map_err(|e| Failure::usage(format!("bad coordinate '{text}': {e}")))?;
                }
                let s1 = segment(
                    &a,
                    Point::new(coords[0], coords[1]),
                    Point::new(coords[2], coords[3]),
                )?;
                let s2 = segment(
                    &a,
                    Point::new(coords[4], coords[5]),
                    Point::new(coords[6], coords[7]),
                )?;
                let profile = dist_profile(&s1, &s2)?;
                let verdict = is_smooth_pair(&s1, &s2)?;
                println!("{}", pair_verdict_to_json(&verdict, &profile.entries));
                return Ok(if verdict.smooth { 0 } else { 1 });
            }
            let Some(region) = region else {
                return Err(Failure::usage("smooth requires --region or --pair"));
            };
            let region = parse_region(&region)?;
            if let Some(window) = agreement_window {
                let report = agreement_smoothness_check_with_margin(
                    &a,
                    region,
                    window,
                    margin.unwrap_or(window),
                )?;
                println!("{}", agreement_smoothness_to_json(&report));
                Ok(if report.smooth_all { 0 } else { 1 })
            } else {
                let report = is_smooth_region_with_cap(&a, region, region_cap(max_region))?;
                println!("{}", smooth_region_to_json(&report));
                Ok(if report.smooth { 0 } else { 1 })
            }
        }

        Command::Hausdorff {
            assignment,
            from,
            to,
            direction,
            n_values,
            step,
        } => {
            let a = load_assignment(&assignment)?;
            let p = parse_point(&from)?;
            println!("n,value,error_bound");
            if let Some(direction) = direction {
                let d = parse_point(&direction)?;
                let rows = hausdorff_growth(&a, p, (d.x, d.y), &n_values, step)?;
                for (n, result) in rows {
                    println!("{}", hausdorff_csv_row(n, &result));
                }
            } else {
                let Some(to) = to else {
                    return Err(Failure::usage(
                        "hausdorff requires --to, or --direction with --n-values",
                    ));
                };
                let q = parse_point(&to)?;
                let seg = segment(&a, p, q)?;
                let result = hausdorff(&seg, p, q, step)?;
                let n = (q.x - p.x).abs().max((q.y - p.y).abs()) as u64;
                println!("{}", hausdorff_csv_row(n, &result));
            }
            Ok(0)
        }

        Command::Render {
            format,
            cell_size,
            annotate_sums,
            out,
        } => {
            let mut input = String::new();
            std::io::stdin().read_to_string(&mut input)?;
            let segments = segments_from_json(&input)?;
            if segments.is_empty() {
                return Err(Failure::usage("no segments on standard input"));
            }
            let style = RenderStyle {
                format,
                cell_size,
                annotate_sums,
            };
            write_or_print(&out, &render(&segments, &style))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
