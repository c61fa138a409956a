//! Deterministic text and SVG renderings: Maya diagrams, hook tables, RPP
//! fillings, single lozenge tilings and superimposed pairs with their
//! coupled lozenges highlighted.
//!
//! Geometry: slice line `k` is the vertical line `X = k·√3/2`; unit segment
//! `j` on it spans heights `[j + k/2, j + k/2 + 1]`. Inside strip `k`, a
//! rising lozenge joins segment `j` of line `k − 1` to segment `j` of line
//! `k`, a falling lozenge joins segment `j + 1` of line `k − 1` to segment `j`
//! of line `k`, and flat lozenges straddle a line at its particles.

use std::fmt::Write as _;

use crate::coupling::{coupled_pairs, pair_columns, tiling_of, CoupledPair, PairRPP, Tiling};
use crate::error::Result;
use crate::partitions::{hook_table, maya, Partition};
use crate::rpp_core::RPP;

const SCALE: f64 = 24.0;
const DX: f64 = 0.866_025_403_784_438_6;
const FLAT: &str = "#9acd32";
const FALLING: &str = "#da70d6";
const RISING: &str = "#c0642d";

/// The Maya diagram of `λ` on `2·half_width` sites, `|` marking the centre.
pub fn maya_ascii(lambda: &Partition, half_width: usize) -> Result<String> {
    Ok(maya(lambda, half_width)?.to_ascii())
}

/// Hook lengths, top row first, right-aligned columns.
pub fn hook_table_text(lambda: &Partition) -> String {
    let rows = hook_table(lambda);
    let width = rows.iter().flatten().map(|h| h.to_string().len()).max().unwrap_or(1);
    rows.iter()
        .rev()
        .map(|r| r.iter().map(|h| format!("{h:>width$}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

/// The filling, top row first.
pub fn rpp_text(rpp: &RPP) -> String {
    let width = rpp.rows().iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    rpp.rows()
        .iter()
        .rev()
        .map(|r| r.iter().map(|v| format!("{v:>width$}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

struct Canvas {
    body: String,
    width: f64,
    top: f64,
}

impl Canvas {
    fn new(lines: usize, ncols: usize) -> Self {
        let top = ncols as f64 + lines as f64 / 2.0 + 1.0;
        Canvas { body: String::new(), width: (lines as f64 - 1.0).max(0.0) * DX, top }
    }

    fn pt(&self, x: f64, y: f64) -> String {
        format!("{:.2},{:.2}", (x + 0.5) * SCALE, (self.top - y + 0.5) * SCALE)
    }

    fn polygon(&mut self, pts: &[(f64, f64)], attrs: &str) {
        let p: Vec<String> = pts.iter().map(|&(x, y)| self.pt(x, y)).collect();
        let _ = writeln!(self.body, "  <polygon points=\"{}\" {attrs}/>", p.join(" "));
    }

    fn finish(self, title: &str) -> String {
        let w = (self.width + 1.0) * SCALE;
        let h = (self.top + 1.0) * SCALE;
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"0 0 {w:.2} {h:.2}\">\n  <title>{title}</title>\n{}</svg>\n",
            self.body
        )
    }
}

fn seg(k: usize, j: usize) -> f64 {
    j as f64 + k as f64 / 2.0
}

fn rising(k: usize, j: usize) -> [(f64, f64); 4] {
    let (xl, xr) = ((k - 1) as f64 * DX, k as f64 * DX);
    let (yl, yr) = (seg(k - 1, j), seg(k, j));
    [(xl, yl), (xl, yl + 1.0), (xr, yr + 1.0), (xr, yr)]
}

fn falling(k: usize, j: usize) -> [(f64, f64); 4] {
    let (xl, xr) = ((k - 1) as f64 * DX, k as f64 * DX);
    let (yl, yr) = (seg(k - 1, j + 1), seg(k, j));
    [(xl, yl), (xl, yl + 1.0), (xr, yr + 1.0), (xr, yr)]
}

/// Half of the flat lozenge at particle `j` of line `k`, inside strip `k`
/// (left half) or strip `k + 1` (right half).
fn flat_half(k: usize, j: usize, left: bool) -> [(f64, f64); 3] {
    let x = k as f64 * DX;
    let y = seg(k, j);
    let apex = if left { x - DX } else { x + DX };
    [(x, y), (x, y + 1.0), (apex, y + 0.5)]
}

fn draw_tiling(c: &mut Canvas, t: &Tiling, style: &str) {
    for (idx, s) in t.strips.iter().enumerate() {
        let k = idx + 1;
        for &j in &s.rising {
            c.polygon(&rising(k, j), &format!("fill=\"{RISING}\" {style}"));
        }
        for &j in &s.falling {
            c.polygon(&falling(k, j), &format!("fill=\"{FALLING}\" {style}"));
        }
        for &j in &s.left_flat {
            c.polygon(&flat_half(k - 1, j, false), &format!("fill=\"{FLAT}\" {style}"));
        }
        for &j in &s.right_flat {
            c.polygon(&flat_half(k, j, true), &format!("fill=\"{FLAT}\" {style}"));
        }
    }
}

/// SVG of the lozenge tiling of an RPP. A zero filling gives the tiling of
/// the bare back wall.
pub fn tiling_svg(rpp: &RPP) -> Result<String> {
    let ncols = rpp.shape().len() + rpp.max_entry() as usize + 2;
    let t = tiling_of(rpp, ncols)?;
    let mut c = Canvas::new(t.strips.len() + 1, ncols);
    draw_tiling(&mut c, &t, "stroke=\"#000000\" stroke-width=\"1\"");
    Ok(c.finish(&format!("lozenge tiling, shape {}, volume {}", rpp.shape(), rpp.volume())))
}

fn pair_outline(k: usize, p: &CoupledPair) -> Vec<Vec<(f64, f64)>> {
    let j = p.column;
    match p.kind {
        1 => vec![falling(k, j).to_vec(), flat_half(k, j, true).to_vec()],
        2 => vec![falling(k, j).to_vec()],
        3 => vec![rising(k, j).to_vec()],
        _ => vec![rising(k, j).to_vec(), flat_half(k, j, true).to_vec()],
    }
}

/// SVG of two superimposed tilings (blue outlines, red outlines) with every
/// coupled pair drawn as a thick black outline in a `class="coupled"` group.
pub fn pair_svg(p: &PairRPP) -> Result<String> {
    let ncols = pair_columns(p);
    let tb = tiling_of(p.blue(), ncols)?;
    let tr = tiling_of(p.red(), ncols)?;
    let pairs = coupled_pairs(&tb, &tr);
    let mut c = Canvas::new(tb.strips.len() + 1, ncols);
    c.body.push_str("  <g id=\"blue\" fill-opacity=\"0.45\">\n");
    draw_tiling(&mut c, &tb, "stroke=\"#1f3fbf\" stroke-width=\"1.5\"");
    c.body.push_str("  </g>\n  <g id=\"red\" fill-opacity=\"0.45\">\n");
    draw_tiling(&mut c, &tr, "stroke=\"#c01f1f\" stroke-width=\"1\" stroke-dasharray=\"3,2\"");
    c.body.push_str("  </g>\n");
    for cp in &pairs {
        let _ = writeln!(
            c.body,
            "  <g class=\"coupled\" data-strip=\"{}\" data-column=\"{}\" data-type=\"{}\">",
            cp.strip, cp.column, cp.kind
        );
        for poly in pair_outline(cp.strip, cp) {
            c.polygon(&poly, "fill=\"none\" stroke=\"#000000\" stroke-width=\"3\"");
        }
        c.body.push_str("  </g>\n");
    }
    Ok(c.finish(&format!("pair of shape {}, {} coupled pairs", p.shape(), pairs.len())))
}
