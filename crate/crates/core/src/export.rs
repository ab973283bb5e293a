//! DOT, SVG and CSV renderings of a drawing.
//!
//! The DOT output pins each layer to its own rank and chains the vertices of
//! a layer with invisible edges so that left-to-right order is kept. The SVG
//! puts `u_1..u_p` on the upper row and `v_1..v_q` on the lower row with
//! unit spacing and straight segments.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::crossing::crossing_profile;
use crate::drawing::{Drawing, Edge};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Svg,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "svg" => Ok(ExportFormat::Svg),
            "csv" => Ok(ExportFormat::Csv),
            other => Err(format!("unknown export format `{other}` (expected dot, svg or csv)")),
        }
    }
}

pub fn export(d: &Drawing, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(d),
        ExportFormat::Svg => to_svg(d),
        ExportFormat::Csv => to_csv(d),
    }
}

pub fn to_dot(d: &Drawing) -> String {
    let mut out = String::new();
    writeln!(out, "graph drawing {{").unwrap();
    writeln!(out, "  graph [comment=\"p={} q={}\", rankdir=TB, ordering=out, splines=line];", d.p(), d.q()).unwrap();
    writeln!(out, "  node [shape=circle, fixedsize=true, width=0.4];").unwrap();
    for (prefix, len) in [("u", d.p()), ("v", d.q())] {
        let names: Vec<String> = (1..=len).map(|i| format!("{prefix}{i}")).collect();
        writeln!(out, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
        for w in names.windows(2) {
            writeln!(out, "  {} -- {} [style=invis];", w[0], w[1]).unwrap();
        }
    }
    for e in d.edges() {
        writeln!(out, "  u{} -- v{};", e.top, e.bottom).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

/// Reads back the output of [`to_dot`].
pub fn parse_dot(text: &str) -> Result<Drawing, String> {
    let mut dims: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for line in text.lines().map(str::trim) {
        if let Some(rest) = line.strip_prefix("graph [comment=\"") {
            let spec = rest.split('"').next().unwrap_or("");
            let mut p = None;
            let mut q = None;
            for part in spec.split_whitespace() {
                match part.split_once('=') {
                    Some(("p", v)) => p = v.parse().ok(),
                    Some(("q", v)) => q = v.parse().ok(),
                    _ => {}
                }
            }
            dims = p.zip(q);
            continue;
        }
        if line.contains("style=invis") || !line.contains("--") {
            continue;
        }
        let body = line.trim_end_matches(';');
        let (a, b) = body.split_once("--").ok_or_else(|| format!("bad edge line `{line}`"))?;
        let (a, b) = (a.trim(), b.trim());
        let top = a.strip_prefix('u').and_then(|s| s.parse().ok());
        let bottom = b.strip_prefix('v').and_then(|s| s.parse().ok());
        match (top, bottom) {
            (Some(t), Some(v)) => edges.push(Edge::new(t, v)),
            _ => return Err(format!("bad edge line `{line}`")),
        }
    }
    let (p, q) = dims.ok_or("missing `graph [comment=\"p=.. q=..\"]` line")?;
    Drawing::new(p, q, edges).map_err(|e| e.to_string())
}

const UNIT: f64 = 40.0;
const MARGIN: f64 = 30.0;

pub fn to_svg(d: &Drawing) -> String {
    let profile = crossing_profile(d);
    let cols = d.p().max(d.q()) as f64;
    let width = 2.0 * MARGIN + (cols - 1.0) * UNIT;
    let (top_y, bottom_y) = (MARGIN + 10.0, MARGIN + 10.0 + 2.5 * UNIT);
    let height = bottom_y + MARGIN + 20.0;
    let x = |i: usize| MARGIN + (i - 1) as f64 * UNIT;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"  <g stroke="black" stroke-width="1.5">"#).unwrap();
    for e in d.edges() {
        writeln!(
            out,
            r#"    <line x1="{}" y1="{top_y}" x2="{}" y2="{bottom_y}" data-edge="{},{}"/>"#,
            x(e.top),
            x(e.bottom),
            e.top,
            e.bottom
        )
        .unwrap();
    }
    writeln!(out, "  </g>").unwrap();
    for (prefix, len, y, dy) in [("u", d.p(), top_y, -10.0), ("v", d.q(), bottom_y, 20.0)] {
        for i in 1..=len {
            writeln!(out, r#"  <circle cx="{}" cy="{y}" r="5" fill="white" stroke="black"/>"#, x(i)).unwrap();
            writeln!(
                out,
                r#"  <text x="{}" y="{}" font-size="11" text-anchor="middle">{prefix}{i}</text>"#,
                x(i),
                y + dy
            )
            .unwrap();
        }
    }
    writeln!(
        out,
        r#"  <text x="{MARGIN}" y="{}" font-size="11" class="crossings">crossings: {} (max per edge {})</text>"#,
        height - 6.0,
        profile.total,
        profile.max_per_edge
    )
    .unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

pub fn to_csv(d: &Drawing) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["u", "v"]).unwrap();
    for e in d.edges() {
        w.write_record([e.top.to_string(), e.bottom.to_string()]).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn dot_round_trip() {
        let d = families::planar5_family(3).unwrap();
        assert_eq!(parse_dot(&to_dot(&d)).unwrap(), d);
        assert!(parse_dot("graph x {\n u1 -- v1;\n}").is_err());
    }

    #[test]
    fn svg_annotates_crossings() {
        let svg = to_svg(&families::opt2planar(1).unwrap());
        assert!(svg.contains("crossings: 3 (max per edge 2)"));
        assert_eq!(svg.matches("<line").count(), 6);
    }

    #[test]
    fn csv_rows() {
        let csv = to_csv(&families::planar4_family(2).unwrap());
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("u,v"));
        assert_eq!(lines.count(), 17);
        assert!("png".parse::<ExportFormat>().is_err());
    }
}
