//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export has a plain Rust twin returning `Result<_, String>` so the
//! logic can be tested off the browser.

use regcross::constructions::{generalized_star, star_like_construction};
use regcross::formulas::best_known;
use regcross::geometry::count_crossings_geometric;
use regcross::search::perturbation_probe;
use regcross::svg::{render_svg, RenderStyle};
use wasm_bindgen::prelude::*;

/// SVG of the extremal construction for `(n, d)`: the generalized star when
/// `n + d` is odd, otherwise the star-like drawing with its removed edges dashed.
pub fn construction_svg_text(n: usize, d: usize) -> Result<String, String> {
    let style = RenderStyle::new(30.0, 4.0, 1.2)
        .map_err(|e| e.to_string())?
        .with_circle_layout(true);
    if (n + d) % 2 == 1 {
        let drawing = generalized_star(n, d).map_err(|e| e.to_string())?;
        render_svg(&drawing, &style).map_err(|e| e.to_string())
    } else {
        let s = star_like_construction(n, d).map_err(|e| e.to_string())?;
        render_svg(&s.drawing, &style.with_highlight(s.removed)).map_err(|e| e.to_string())
    }
}

/// Bounds, the construction's crossing count and where the numbers come from.
pub fn bounds_text(n: usize, d: usize) -> Result<String, String> {
    let b = best_known(n, d).map_err(|e| e.to_string())?;
    let drawing = if (n + d) % 2 == 1 {
        generalized_star(n, d)
    } else {
        star_like_construction(n, d).map(|s| s.drawing)
    };
    let mut out = format!(
        "n = {n}, d = {d}\nlower bound {}\nupper bound {}\n",
        b.lower, b.upper
    );
    out.push_str(if b.exact {
        "value is exact\n"
    } else {
        "value is conjectured\n"
    });
    if let Ok(drawing) = drawing {
        let c = count_crossings_geometric(&drawing).map_err(|e| e.to_string())?;
        out.push_str(&format!("construction has {} crossings\n", c.total));
    }
    let tags: Vec<String> = b.provenance.iter().map(|p| p.to_string()).collect();
    out.push_str(&format!("sources: {}\n", tags.join(", ")));
    Ok(out)
}

/// Best of `trials` random drawings: its crossing count and picture.
pub fn probe_text(n: usize, d: usize, trials: u32, seed: u32) -> Result<(u64, String), String> {
    let r = perturbation_probe(n, d, trials as u64, seed as u64).map_err(|e| e.to_string())?;
    let drawing = r.witness_drawing.ok_or("probe returned no drawing")?;
    let style = RenderStyle::new(0.6, 3.0, 0.8).map_err(|e| e.to_string())?;
    let svg = render_svg(&drawing, &style).map_err(|e| e.to_string())?;
    Ok((r.max_crossings, svg))
}

#[wasm_bindgen]
pub fn construction_svg(n: usize, d: usize) -> Result<String, JsError> {
    construction_svg_text(n, d).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn bounds_report(n: usize, d: usize) -> Result<String, JsError> {
    bounds_text(n, d).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub struct Probe {
    max_crossings: u64,
    svg: String,
}

#[wasm_bindgen]
impl Probe {
    #[wasm_bindgen(getter)]
    pub fn max_crossings(&self) -> u64 {
        self.max_crossings
    }

    #[wasm_bindgen(getter)]
    pub fn svg(&self) -> String {
        self.svg.clone()
    }
}

#[wasm_bindgen]
pub fn probe(n: usize, d: usize, trials: u32, seed: u32) -> Result<Probe, JsError> {
    let (max_crossings, svg) = probe_text(n, d, trials, seed).map_err(|e| JsError::new(&e))?;
    Ok(Probe { max_crossings, svg })
}
