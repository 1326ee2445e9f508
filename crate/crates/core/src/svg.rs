//! SVG 1.1 rendering of drawings.

use std::cmp::Ordering;
use std::fmt::Write;

use crate::error::{arg_err, Result};
use crate::geometry::{orientation, GeometricDrawing, Orientation};
use crate::graph::Edge;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderStyle {
    scale: f64,
    vertex_radius: f64,
    stroke_width: f64,
    /// Extra edges drawn dashed, typically ones deleted by a construction.
    pub highlight: Vec<Edge>,
    /// Redraw a convex-position drawing on a regular polygon.
    pub circle_layout: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            scale: 40.0,
            vertex_radius: 4.0,
            stroke_width: 1.5,
            highlight: Vec::new(),
            circle_layout: false,
        }
    }
}

impl RenderStyle {
    /// `scale` is pixels per unit; radius and stroke width are in pixels.
    pub fn new(scale: f64, vertex_radius: f64, stroke_width: f64) -> Result<Self> {
        for (name, v) in [
            ("scale", scale),
            ("vertex radius", vertex_radius),
            ("stroke width", stroke_width),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return arg_err(format!("{name} must be positive, got {v}"));
            }
        }
        Ok(RenderStyle {
            scale,
            vertex_radius,
            stroke_width,
            ..RenderStyle::default()
        })
    }

    pub fn with_highlight(mut self, edges: Vec<Edge>) -> Self {
        self.highlight = edges;
        self
    }

    pub fn with_circle_layout(mut self, on: bool) -> Self {
        self.circle_layout = on;
        self
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn vertex_radius(&self) -> f64 {
        self.vertex_radius
    }

    pub fn stroke_width(&self) -> f64 {
        self.stroke_width
    }
}

/// Cyclic order of the points around their hull, or `None` if some point is
/// not a hull vertex.
pub fn convex_position_order(drawing: &GeometricDrawing) -> Option<Vec<usize>> {
    let pts = drawing.positions();
    let n = pts.len();
    if n < 3 {
        return None;
    }
    let pivot = (0..n)
        .min_by(|&a, &b| {
            pts[a]
                .y
                .cmp(&pts[b].y)
                .then_with(|| pts[a].x.cmp(&pts[b].x))
        })
        .expect("nonempty");
    let mut rest: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
    // everything lies above the pivot, so turning direction orders by angle
    rest.sort_by(|&a, &b| match orientation(&pts[pivot], &pts[a], &pts[b]) {
        Orientation::Left => Ordering::Less,
        Orientation::Right => Ordering::Greater,
        Orientation::Collinear => Ordering::Equal,
    });
    let mut order = vec![pivot];
    order.extend(rest);
    let convex = (0..n).all(|i| {
        orientation(
            &pts[order[i]],
            &pts[order[(i + 1) % n]],
            &pts[order[(i + 2) % n]],
        ) == Orientation::Left
    });
    convex.then_some(order)
}

/// Renders `drawing`. With `circle_layout` set the drawing must be in convex
/// position; its hull order is then placed on a regular polygon.
pub fn render_svg(drawing: &GeometricDrawing, style: &RenderStyle) -> Result<String> {
    let n = drawing.graph().n();
    let coords: Vec<(f64, f64)> = if style.circle_layout {
        let Some(order) = convex_position_order(drawing) else {
            return arg_err("circle layout needs a drawing in convex position");
        };
        let mut c = vec![(0.0, 0.0); n];
        for (slot, &v) in order.iter().enumerate() {
            let a = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * slot as f64 / n as f64;
            c[v] = (5.0 * a.cos(), 5.0 * a.sin());
        }
        c
    } else {
        drawing.positions().iter().map(|p| p.to_f64()).collect()
    };

    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &coords {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let extent = (x1 - x0).max(y1 - y0).max(1.0);
    let margin = 0.05 * extent;
    let s = style.scale;
    let width = (x1 - x0 + 2.0 * margin) * s;
    let height = (y1 - y0 + 2.0 * margin) * s;
    let px = |(x, y): (f64, f64)| ((x - x0 + margin) * s, (y1 - y + margin) * s);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.2}\" height=\"{height:.2}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    );
    let _ = writeln!(
        out,
        "<g stroke=\"black\" stroke-width=\"{:.2}\">",
        style.stroke_width
    );
    for &(u, v) in drawing.graph().edges() {
        let (ax, ay) = px(coords[u]);
        let (bx, by) = px(coords[v]);
        let _ = writeln!(
            out,
            "<line x1=\"{ax:.2}\" y1=\"{ay:.2}\" x2=\"{bx:.2}\" y2=\"{by:.2}\"/>"
        );
    }
    out.push_str("</g>\n");
    let dashed: Vec<Edge> = style
        .highlight
        .iter()
        .copied()
        .filter(|&(u, v)| u < n && v < n)
        .collect();
    if !dashed.is_empty() {
        let _ = writeln!(
            out,
            "<g stroke=\"gray\" stroke-width=\"{:.2}\" stroke-dasharray=\"6 4\">",
            style.stroke_width
        );
        for (u, v) in dashed {
            let (ax, ay) = px(coords[u]);
            let (bx, by) = px(coords[v]);
            let _ = writeln!(
                out,
                "<line x1=\"{ax:.2}\" y1=\"{ay:.2}\" x2=\"{bx:.2}\" y2=\"{by:.2}\"/>"
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("<g fill=\"black\">\n");
    for &c in &coords {
        let (cx, cy) = px(c);
        let _ = writeln!(
            out,
            "<circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{:.2}\"/>",
            style.vertex_radius
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
