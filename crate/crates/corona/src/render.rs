//! SVG output for regions and individual coronas.
//!
//! One polygon per lozenge, filled by orientation, with the region outline
//! drawn last. Output is plain SVG 1.1 text and is byte-deterministic for
//! identical inputs: coordinates are printed with six decimal places and
//! lozenges are emitted in canonical order.

use std::fmt::Write;

use thiserror::Error;

use crate::bruteforce::{is_valid_corona, Corona, CoronaViolation};
use crate::lattice::{LatticePoint, Orientation, Region};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("invalid corona: {0}")]
    InvalidCorona(#[from] CoronaViolation),
}

/// Visual parameters. The defaults use one fill color per lozenge
/// orientation, the usual three-coloring of lozenge pictures.
#[derive(Debug, Clone)]
pub struct StyleConfig {
    /// Pixels per lattice unit.
    pub scale: f64,
    /// Stroke width in user units.
    pub stroke_width: f64,
    /// Blank border around the drawing, in pixels.
    pub margin: f64,
    pub stroke_color: String,
    pub fill_left_tilted: String,
    pub fill_right_tilted: String,
    pub fill_vertical: String,
}

impl Default for StyleConfig {
    fn default() -> Self {
        StyleConfig {
            scale: 40.0,
            stroke_width: 1.0,
            margin: 20.0,
            stroke_color: "#333333".to_string(),
            fill_left_tilted: "#66c2a5".to_string(),
            fill_right_tilted: "#fc8d62".to_string(),
            fill_vertical: "#8da0cb".to_string(),
        }
    }
}

impl StyleConfig {
    fn fill_for(&self, orientation: Orientation) -> &str {
        match orientation {
            Orientation::LeftTilted => &self.fill_left_tilted,
            Orientation::RightTilted => &self.fill_right_tilted,
            Orientation::Vertical => &self.fill_vertical,
        }
    }
}

/// Renders one corona around its region as a standalone SVG document.
///
/// The corona is validated first; the polygon count of the output is always
/// `corona.size() + 1` (the region outline is the extra polygon).
pub fn render_corona(
    region: &Region,
    corona: &Corona,
    style: &StyleConfig,
) -> Result<String, RenderError> {
    is_valid_corona(region, corona.lozenges())?;

    let outline: Vec<LatticePoint> = region.boundary_vertices().to_vec();
    let mut plane_points: Vec<(f64, f64)> = outline.iter().map(|v| v.to_plane()).collect();
    for loz in corona.lozenges() {
        plane_points.extend(loz.vertices().into_iter().map(LatticePoint::to_plane));
    }

    let min_x = plane_points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = plane_points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = plane_points.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = plane_points.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);

    let width = (max_x - min_x) * style.scale + 2.0 * style.margin;
    let height = (max_y - min_y) * style.scale + 2.0 * style.margin;

    // Screen coordinates flip the y axis.
    let project = |v: LatticePoint| -> (f64, f64) {
        let (px, py) = v.to_plane();
        (
            (px - min_x) * style.scale + style.margin,
            (max_y - py) * style.scale + style.margin,
        )
    };
    let points_attr = |vertices: &[LatticePoint]| -> String {
        let mut out = String::new();
        for (i, &v) in vertices.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let (sx, sy) = project(v);
            let _ = write!(out, "{sx:.6},{sy:.6}");
        }
        out
    };

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.6}" height="{height:.6}" viewBox="0 0 {width:.6} {height:.6}">"#
    );
    for loz in corona.lozenges() {
        let _ = writeln!(
            svg,
            r#"  <polygon points="{}" fill="{}" stroke="{}" stroke-width="{:.6}"/>"#,
            points_attr(&loz.vertices()),
            style.fill_for(loz.orientation()),
            style.stroke_color,
            style.stroke_width,
        );
    }
    let _ = writeln!(
        svg,
        r#"  <polygon points="{}" fill="none" stroke="{}" stroke-width="{:.6}"/>"#,
        points_attr(&outline),
        style.stroke_color,
        style.stroke_width * 2.0,
    );
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruteforce::enumerate_coronas;
    use crate::lattice::{build_region, Shape};

    fn first_corona(shape: Shape) -> (crate::lattice::Region, Corona) {
        let region = build_region(shape).unwrap();
        let mut first = None;
        enumerate_coronas(&region, |c| {
            if first.is_none() {
                first = Some(c.clone());
            }
        });
        (region, first.unwrap())
    }

    #[test]
    fn polygon_count_is_corona_size_plus_one() {
        let (region, corona) = first_corona(Shape::Diamond(1));
        let svg = render_corona(&region, &corona, &StyleConfig::default()).unwrap();
        assert_eq!(svg.matches("<polygon").count(), corona.size() + 1);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn rendering_is_byte_deterministic() {
        let (region, corona) = first_corona(Shape::Hexagon(1));
        let style = StyleConfig::default();
        let a = render_corona(&region, &corona, &style).unwrap();
        let b = render_corona(&region, &corona, &style).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_corona_is_rejected() {
        // A corona of the unit hexagon is not a corona of the unit diamond.
        let (_, corona) = first_corona(Shape::Hexagon(1));
        let other_region = build_region(Shape::Diamond(1)).unwrap();
        let err = render_corona(&other_region, &corona, &StyleConfig::default());
        assert!(matches!(err, Err(RenderError::InvalidCorona(_))));
    }

    #[test]
    fn fills_follow_orientation() {
        let (region, corona) = first_corona(Shape::Diamond(1));
        let style = StyleConfig::default();
        let svg = render_corona(&region, &corona, &style).unwrap();
        for loz in corona.lozenges() {
            assert!(svg.contains(style.fill_for(loz.orientation())));
        }
    }
}
