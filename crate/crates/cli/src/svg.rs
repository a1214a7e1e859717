//! Minimal static SVG scatter plots: fixed 800x800 canvas, data bounding box
//! with 5% padding, radius-2 markers, re/im axis labels.

use std::fmt::Write as _;

const SIZE: f64 = 800.0;
const PAD_FRACTION: f64 = 0.05;

/// Colors assigned to series in insertion order.
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#7f7f7f",
];

pub struct Scatter {
    series: Vec<(String, Vec<(f64, f64)>)>,
}

impl Scatter {
    pub fn new() -> Scatter {
        Scatter { series: Vec::new() }
    }

    pub fn points(&mut self, label: &str, pts: &[(f64, f64)]) {
        self.series.push((label.to_string(), pts.to_vec()));
    }

    pub fn render(&self) -> String {
        let all: Vec<(f64, f64)> = self
            .series
            .iter()
            .flat_map(|(_, pts)| pts.iter().copied())
            .collect();
        let (mut x0, mut x1, mut y0, mut y1) = (-1.0f64, 1.0f64, -1.0f64, 1.0f64);
        if !all.is_empty() {
            x0 = all.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
            x1 = all.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
            y0 = all.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
            y1 = all.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        }
        // keep degenerate boxes drawable
        if x1 - x0 < 1e-12 {
            x0 -= 1.0;
            x1 += 1.0;
        }
        if y1 - y0 < 1e-12 {
            y0 -= 1.0;
            y1 += 1.0;
        }
        let pad_x = (x1 - x0) * PAD_FRACTION;
        let pad_y = (y1 - y0) * PAD_FRACTION;
        let (x0, x1) = (x0 - pad_x, x1 + pad_x);
        let (y0, y1) = (y0 - pad_y, y1 + pad_y);
        let sx = SIZE / (x1 - x0);
        let sy = SIZE / (y1 - y0);
        let px = |x: f64| (x - x0) * sx;
        let py = |y: f64| SIZE - (y - y0) * sy; // SVG y grows downward

        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        )
        .unwrap();
        writeln!(
            out,
            r##"<rect width="{SIZE}" height="{SIZE}" fill="#ffffff"/>"##
        )
        .unwrap();
        // axes through zero when visible
        if x0 < 0.0 && x1 > 0.0 {
            writeln!(
                out,
                r##"<line x1="{:.2}" y1="0" x2="{:.2}" y2="{SIZE}" stroke="#cccccc"/>"##,
                px(0.0),
                px(0.0)
            )
            .unwrap();
        }
        if y0 < 0.0 && y1 > 0.0 {
            writeln!(
                out,
                r##"<line x1="0" y1="{:.2}" x2="{SIZE}" y2="{:.2}" stroke="#cccccc"/>"##,
                py(0.0),
                py(0.0)
            )
            .unwrap();
        }
        for (i, (label, pts)) in self.series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            writeln!(out, r#"<g fill="{color}" data-series="{label}">"#).unwrap();
            for (x, y) in pts {
                writeln!(
                    out,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="2"/>"#,
                    px(*x),
                    py(*y)
                )
                .unwrap();
            }
            writeln!(out, "</g>").unwrap();
        }
        writeln!(
            out,
            r##"<text x="{:.0}" y="{:.0}" font-family="sans-serif" font-size="14" fill="#333333">re</text>"##,
            SIZE - 30.0,
            SIZE - 10.0
        )
        .unwrap();
        writeln!(
            out,
            r##"<text x="10" y="20" font-family="sans-serif" font-size="14" fill="#333333">im</text>"##
        )
        .unwrap();
        out.push_str("</svg>\n");
        out
    }
}
