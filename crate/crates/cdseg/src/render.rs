//! ASCII and SVG rendering of digital segments.

use std::fmt::Write as _;

use cdseg_core::DigitalSegment;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

impl std::str::FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "svg" => Ok(RenderFormat::Svg),
            "ascii" => Ok(RenderFormat::Ascii),
            other => Err(format!(
                "unknown render format '{other}' (expected svg or ascii)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RenderStyle {
    pub format: RenderFormat,
    /// SVG pixels per grid unit, at least 1.
    pub cell_size: u32,
    /// Label each path point with its coordinate sum.
    pub annotate_sums: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            format: RenderFormat::Svg,
            cell_size: 24,
            annotate_sums: false,
        }
    }
}

struct Bounds {
    min_x: i64,
    max_x: i64,
    min_y: i64,
    max_y: i64,
}

fn bounds(segments: &[DigitalSegment]) -> Bounds {
    let mut b = Bounds {
        min_x: i64::MAX,
        max_x: i64::MIN,
        min_y: i64::MAX,
        max_y: i64::MIN,
    };
    for seg in segments {
        for p in seg.points() {
            b.min_x = b.min_x.min(p.x);
            b.max_x = b.max_x.max(p.x);
            b.min_y = b.min_y.min(p.y);
            b.max_y = b.max_y.max(p.y);
        }
    }
    b
}

pub fn render(segments: &[DigitalSegment], style: &RenderStyle) -> String {
    match style.format {
        RenderFormat::Ascii => render_ascii(segments, style),
        RenderFormat::Svg => render_svg(segments, style),
    }
}

const ASCII_GLYPHS: [char; 4] = ['#', 'o', 'x', '*'];

/// Character grid with rows from the highest y down; '.' marks empty
/// cells, '+' cells covered by more than one segment. With
/// `annotate_sums` each path cell shows its coordinate sum modulo 10.
pub fn render_ascii(segments: &[DigitalSegment], style: &RenderStyle) -> String {
    if segments.is_empty() {
        return String::new();
    }
    let b = bounds(segments);
    let width = (b.max_x - b.min_x + 1) as usize;
    let height = (b.max_y - b.min_y + 1) as usize;
    let mut grid = vec![vec!['.'; width]; height];
    let mut owner = vec![vec![usize::MAX; width]; height];
    for (idx, seg) in segments.iter().enumerate() {
        for p in seg.points() {
            let col = (p.x - b.min_x) as usize;
            let row = (b.max_y - p.y) as usize;
            let glyph = if style.annotate_sums {
                char::from_digit((p.sum().rem_euclid(10)) as u32, 10).expect("mod 10 digit")
            } else {
                ASCII_GLYPHS[idx % ASCII_GLYPHS.len()]
            };
            if owner[row][col] == usize::MAX || owner[row][col] == idx {
                grid[row][col] = glyph;
                owner[row][col] = idx;
            } else if !style.annotate_sums {
                grid[row][col] = '+';
            }
        }
    }
    let mut out = String::new();
    for row in grid {
        out.extend(row);
        out.push('\n');
    }
    out
}

const SVG_COLORS: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

/// SVG 1.1 document: a light unit grid with axis labels and one
/// polyline per segment through the cell centers.
pub fn render_svg(segments: &[DigitalSegment], style: &RenderStyle) -> String {
    let cell = style.cell_size.max(1) as f64;
    let b = if segments.is_empty() {
        Bounds {
            min_x: 0,
            max_x: 1,
            min_y: 0,
            max_y: 1,
        }
    } else {
        bounds(segments)
    };
    let margin = 34.0;
    let grid_w = (b.max_x - b.min_x + 1) as f64 * cell;
    let grid_h = (b.max_y - b.min_y + 1) as f64 * cell;
    let width = grid_w + 2.0 * margin;
    let height = grid_h + 2.0 * margin;
    let px = |x: i64| margin + (x - b.min_x) as f64 * cell + cell / 2.0;
    let py = |y: i64| margin + (b.max_y - y) as f64 * cell + cell / 2.0;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"  <rect width="{width}" height="{height}" fill="white"/>"#
    );

    // unit grid
    for x in b.min_x..=b.max_x {
        let gx = px(x);
        let _ = writeln!(
            out,
            r##"  <line x1="{gx}" y1="{}" x2="{gx}" y2="{}" stroke="#dddddd" stroke-width="1"/>"##,
            py(b.max_y) - cell / 2.0,
            py(b.min_y) + cell / 2.0
        );
    }
    for y in b.min_y..=b.max_y {
        let gy = py(y);
        let _ = writeln!(
            out,
            r##"  <line x1="{}" y1="{gy}" x2="{}" y2="{gy}" stroke="#dddddd" stroke-width="1"/>"##,
            px(b.min_x) - cell / 2.0,
            px(b.max_x) + cell / 2.0
        );
    }

    // axis labels at the corners
    let label_y = height - 8.0;
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{label_y}" font-size="12" text-anchor="middle">x={}</text>"#,
        px(b.min_x),
        b.min_x
    );
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{label_y}" font-size="12" text-anchor="middle">x={}</text>"#,
        px(b.max_x),
        b.max_x
    );
    let _ = writeln!(
        out,
        r#"  <text x="6" y="{}" font-size="12" dominant-baseline="middle">y={}</text>"#,
        py(b.min_y),
        b.min_y
    );
    let _ = writeln!(
        out,
        r#"  <text x="6" y="{}" font-size="12" dominant-baseline="middle">y={}</text>"#,
        py(b.max_y),
        b.max_y
    );

    for (idx, seg) in segments.iter().enumerate() {
        let color = SVG_COLORS[idx % SVG_COLORS.len()];
        let pts: Vec<String> = seg
            .points()
            .iter()
            .map(|p| format!("{},{}", px(p.x), py(p.y)))
            .collect();
        let _ = writeln!(
            out,
            r#"  <polyline points="{}" fill="none" stroke="{color}" stroke-width="3" stroke-linecap="round" stroke-linejoin="round"/>"#,
            pts.join(" ")
        );
        for p in seg.points() {
            let _ = writeln!(
                out,
                r#"  <circle cx="{}" cy="{}" r="3" fill="{color}"/>"#,
                px(p.x),
                py(p.y)
            );
        }
        if style.annotate_sums {
            for p in seg.points() {
                let _ = writeln!(
                    out,
                    r##"  <text x="{}" y="{}" font-size="10" fill="#444444">{}</text>"##,
                    px(p.x) + 5.0,
                    py(p.y) - 5.0,
                    p.sum()
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
