//! SVG rendering of rank-3 windows in planar chamber coordinates.
//!
//! The fundamental weights map to unit vectors at 60 degrees, giving the
//! hexagonal triangulation of the apartment plane. The output is a static
//! SVG whose element ids encode the drawn vertex and edge sets exactly, so
//! structural fidelity can be checked by parsing the file back.

use crate::complex::{enumerate_window, ComplexWindow};
use crate::error::{Error, Result};
use crate::point::Vertex;

/// Stroke style of one overlay.
#[derive(Clone, Debug)]
pub struct StrokeStyle {
    pub color: String,
    /// SVG `stroke-dasharray`, `None` for a solid line.
    pub dash: Option<String>,
}

/// Planar embedding of the rank-3 apartment: `n_1 -> (1, 0)`,
/// `n_2 -> (1/2, sqrt(3)/2)`, extended linearly, with unit edge length
/// scaled by `unit` pixels.
#[derive(Clone, Debug)]
pub struct ChamberLayout {
    pub unit: f64,
    pub styles: Vec<StrokeStyle>,
}

impl Default for ChamberLayout {
    fn default() -> Self {
        let solid = |color: &str, dash: Option<&str>| StrokeStyle {
            color: color.to_string(),
            dash: dash.map(str::to_string),
        };
        ChamberLayout {
            unit: 40.0,
            styles: vec![
                solid("#000000", None),
                solid("#000000", Some("7 4")),
                solid("#000000", Some("2 4")),
                solid("#555555", Some("10 3 2 3")),
            ],
        }
    }
}

impl ChamberLayout {
    /// Pixel position of a vertex `(n_1, n_2, 0)` before the y-flip.
    fn position(&self, v: &Vertex) -> (f64, f64) {
        let n1 = *v.coord(1) as f64;
        let n2 = *v.coord(2) as f64;
        (
            (n1 - n2 / 2.0) * self.unit,
            n2 * (3.0f64.sqrt() / 2.0) * self.unit,
        )
    }

    fn style(&self, i: usize) -> &StrokeStyle {
        &self.styles[i % self.styles.len()]
    }
}

fn fmt2(x: f64) -> String {
    format!("{x:.2}")
}

fn id_of(v: &Vertex) -> String {
    v.coords()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join("_")
}

/// Renders one or more rank-3 windows into a single SVG, overlaying each
/// window with its own stroke style. All windows must share the rank-3
/// layout, kind and bound.
pub fn render_svg(windows: &[&ComplexWindow], layout: &ChamberLayout) -> Result<Vec<u8>> {
    let Some(first) = windows.first() else {
        return Err(Error::InvalidArgument("nothing to render".into()));
    };
    for cw in windows {
        if cw.r != 3 {
            return Err(Error::UnsupportedRank(cw.r));
        }
        if cw.kind != first.kind || cw.bound != first.bound {
            return Err(Error::InvalidArgument(
                "overlaid windows must share kind and bound".into(),
            ));
        }
    }

    // Background: the full triangulation of the window region.
    let region = enumerate_window(3, first.bound, first.kind)?;
    let region_set: std::collections::BTreeSet<&Vertex> = region.iter().collect();
    let mut background_edges = Vec::new();
    for v in &region {
        for mask in 1u32..4 {
            let coords = v
                .coords()
                .iter()
                .enumerate()
                .map(|(i, &c)| c + ((mask >> i) & 1) as i64)
                .collect();
            let u = Vertex::normalize(coords).expect("rank 3");
            if region_set.contains(&u) {
                background_edges.push((v.clone(), u));
            }
        }
    }

    let positions: Vec<(f64, f64)> = region.iter().map(|v| layout.position(v)).collect();
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &positions {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    if positions.is_empty() {
        (min_x, max_x, min_y, max_y) = (0.0, 1.0, 0.0, 1.0);
    }
    let pad = layout.unit * 0.6;
    let width = max_x - min_x + 2.0 * pad;
    let height = max_y - min_y + 2.0 * pad;
    let tx = |x: f64| x - min_x + pad;
    let ty = |y: f64| max_y - y + pad; // flip so the chamber opens upward

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        fmt2(width),
        fmt2(height),
        fmt2(width),
        fmt2(height)
    ));
    svg.push_str("  <g id=\"background\" stroke=\"#cccccc\" stroke-width=\"1\">\n");
    for (a, b) in &background_edges {
        let (x1, y1) = layout.position(a);
        let (x2, y2) = layout.position(b);
        svg.push_str(&format!(
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            fmt2(tx(x1)),
            fmt2(ty(y1)),
            fmt2(tx(x2)),
            fmt2(ty(y2))
        ));
    }
    svg.push_str("  </g>\n");

    for (ci, cw) in windows.iter().enumerate() {
        let style = layout.style(ci);
        let dash = style
            .dash
            .as_ref()
            .map(|d| format!(" stroke-dasharray=\"{d}\""))
            .unwrap_or_default();
        svg.push_str(&format!(
            "  <g id=\"c{ci}\" stroke=\"{}\" stroke-width=\"3\" fill=\"{}\"{dash}>\n",
            style.color, style.color
        ));
        for (a, b) in cw.edges() {
            let va = &cw.vertices()[a];
            let vb = &cw.vertices()[b];
            let (x1, y1) = layout.position(va);
            let (x2, y2) = layout.position(vb);
            svg.push_str(&format!(
                "    <line id=\"c{ci}-e-{}--{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                id_of(va),
                id_of(vb),
                fmt2(tx(x1)),
                fmt2(ty(y1)),
                fmt2(tx(x2)),
                fmt2(ty(y2))
            ));
        }
        for v in cw.vertices() {
            let (x, y) = layout.position(v);
            svg.push_str(&format!(
                "    <circle id=\"c{ci}-v-{}\" cx=\"{}\" cy=\"{}\" r=\"4\" stroke=\"none\"/>\n",
                id_of(v),
                fmt2(tx(x)),
                fmt2(ty(y))
            ));
        }
        svg.push_str("  </g>\n");
    }
    svg.push_str("</svg>\n");
    Ok(svg.into_bytes())
}

/// The vertex and edge id sets drawn for overlay `ci`, recovered by
/// scanning an SVG produced by [`render_svg`]. Used to check structural
/// fidelity without an image diff.
pub fn parse_svg_overlay(svg: &[u8], ci: usize) -> (Vec<String>, Vec<(String, String)>) {
    let text = String::from_utf8_lossy(svg);
    let vprefix = format!("c{ci}-v-");
    let eprefix = format!("c{ci}-e-");
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for chunk in text.split("id=\"").skip(1) {
        let id: String = chunk.chars().take_while(|&c| c != '"').collect();
        if let Some(rest) = id.strip_prefix(&vprefix) {
            vertices.push(rest.to_string());
        } else if let Some(rest) = id.strip_prefix(&eprefix) {
            if let Some((a, b)) = rest.split_once("--") {
                edges.push((a.to_string(), b.to_string()));
            }
        }
    }
    vertices.sort();
    edges.sort();
    (vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_complex, Kind};
    use crate::seq::Horizon;

    #[test]
    fn svg_structure_matches_window() {
        let cw = build_complex(3, Horizon::Finite(2), 2, 4, Kind::Weyl, 1).unwrap();
        let svg = render_svg(&[&cw], &ChamberLayout::default()).unwrap();
        let (vs, es) = parse_svg_overlay(&svg, 0);
        let want_vs: Vec<String> = cw.vertices().iter().map(id_of).collect();
        assert_eq!(vs, want_vs);
        let want_es: Vec<(String, String)> = cw
            .edges()
            .iter()
            .map(|&(a, b)| (id_of(&cw.vertices()[a]), id_of(&cw.vertices()[b])))
            .collect();
        assert_eq!(es, want_es);
    }

    #[test]
    fn rank_guard() {
        let cw = build_complex(4, Horizon::Finite(2), 2, 2, Kind::Weyl, 1).unwrap();
        assert!(matches!(
            render_svg(&[&cw], &ChamberLayout::default()),
            Err(Error::UnsupportedRank(4))
        ));
    }

    #[test]
    fn deterministic_bytes() {
        let cw = build_complex(3, Horizon::Finite(4), 6, 5, Kind::Weyl, 1).unwrap();
        let a = render_svg(&[&cw], &ChamberLayout::default()).unwrap();
        let b = render_svg(&[&cw], &ChamberLayout::default()).unwrap();
        assert_eq!(a, b);
    }
}
