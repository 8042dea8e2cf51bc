//! SVG rendering of a numerical range, its polygon enclosure and the
//! classical/Kittaneh bound circles.

use std::fmt::Write as _;

use crate::enclosure::{EnclosureRegion, Point};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 30.0;

pub struct PlotData {
    /// Convex hull of the boundary sweep.
    pub range_hull: Vec<Point>,
    pub region: EnclosureRegion,
    pub classical: f64,
    pub kittaneh_power: f64,
    pub kittaneh_mean: f64,
}

struct Frame {
    scale: f64,
}

impl Frame {
    fn map(&self, (x, y): Point) -> (f64, f64) {
        (SIZE / 2.0 + x * self.scale, SIZE / 2.0 - y * self.scale)
    }
}

fn points_attr(frame: &Frame, pts: &[Point]) -> String {
    pts.iter()
        .map(|&p| {
            let (x, y) = frame.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders the plot. Output is a pure function of the input.
pub fn render(data: &PlotData) -> String {
    let extent = data.classical.max(data.region.max_modulus()).max(f64::MIN_POSITIVE);
    let frame = Frame {
        scale: (SIZE / 2.0 - MARGIN) / extent,
    };
    let c = SIZE / 2.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"  <rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r##"  <g stroke="#999999" stroke-width="0.75"><line x1="0" y1="{c}" x2="{SIZE}" y2="{c}"/><line x1="{c}" y1="0" x2="{c}" y2="{SIZE}"/></g>"##
    );

    if data.range_hull.len() >= 3 {
        let _ = writeln!(
            s,
            r##"  <polygon class="numerical-range" points="{}" fill="#b0b0b0" stroke="none"/>"##,
            points_attr(&frame, &data.range_hull)
        );
    } else if data.range_hull.len() == 2 {
        let (x1, y1) = frame.map(data.range_hull[0]);
        let (x2, y2) = frame.map(data.range_hull[1]);
        let _ = writeln!(
            s,
            r##"  <line class="numerical-range" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#b0b0b0" stroke-width="4"/>"##
        );
    }

    match &data.region {
        EnclosureRegion::Polygon { vertices, .. } => {
            let _ = writeln!(
                s,
                r#"  <polygon class="enclosure" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
                points_attr(&frame, vertices)
            );
        }
        EnclosureRegion::Segment { endpoint } => {
            let (x1, y1) = frame.map((endpoint.re, endpoint.im));
            let (x2, y2) = frame.map((-endpoint.re, -endpoint.im));
            let _ = writeln!(
                s,
                r#"  <line class="enclosure" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="1.5"/>"#
            );
        }
    }

    for (class, r, dash) in [
        ("bound-classical", data.classical, ""),
        ("bound-kittaneh-mean", data.kittaneh_mean, ""),
        (
            "bound-kittaneh-power",
            data.kittaneh_power,
            r#" stroke-dasharray="6,4""#,
        ),
    ] {
        let _ = writeln!(
            s,
            r#"  <circle class="{class}" cx="{c}" cy="{c}" r="{:.3}" fill="none" stroke="black" stroke-width="1"{dash}/>"#,
            r * frame.scale
        );
    }
    s.push_str("</svg>\n");
    s
}
