//! Browser bindings: weight diagrams, branching tables and resolutions for a
//! regular subalgebra given as simple-root coefficients.
//!
//! `a_roots` uses the CLI syntax (`"1,2"`, roots separated by `;`); an empty
//! string means no subalgebra where that is allowed.

use wasm_bindgen::prelude::*;
use wv_core::branching::{branch, default_depth};
use wv_core::embedding::{build_embedding, EmbeddingSpec};
use wv_core::resolution::{bgg_resolution, verify_euler};
use wv_core::rootspace::{build_root_datum, RootDatum};
use wv_core::svg;
use wv_core::verma::DEFAULT_DEPTH;
use wv_core::weight::Weight;

/// Largest Weyl dimension the page will lay out.
pub const MAX_DIMENSION: u64 = 5000;

fn ints(s: &str) -> Result<Vec<i64>, String> {
    s.split(',').map(|t| t.trim().parse().map_err(|_| format!("not an integer list: `{s}`"))).collect()
}

fn algebra(name: &str) -> Result<RootDatum, String> {
    let id = name.trim().parse().map_err(|e: wv_core::Error| e.to_string())?;
    build_root_datum(id).map_err(|e| e.to_string())
}

fn embedding(d: &RootDatum, a_roots: &str) -> Result<Option<EmbeddingSpec>, String> {
    if a_roots.trim().is_empty() {
        return Ok(None);
    }
    let roots = a_roots.split(';').map(ints).collect::<Result<Vec<_>, _>>()?;
    build_embedding(d, &roots).map(Some).map_err(|e| e.to_string())
}

fn highest_weight(d: &RootDatum, hw: &str) -> Result<Weight, String> {
    let labels = ints(hw)?;
    if labels.len() != d.rank() {
        return Err(format!("{} needs {} Dynkin labels", d.id, d.rank()));
    }
    let mu = d.from_dynkin_labels(&labels).map_err(|e| e.to_string())?;
    let dim = wv_core::oracle::weyl_dimension(d, &mu).map_err(|e| e.to_string())?;
    if dim > MAX_DIMENSION {
        return Err(format!("dimension {dim} exceeds the demo limit {MAX_DIMENSION}"));
    }
    Ok(mu)
}

fn required(spec: Option<EmbeddingSpec>) -> Result<EmbeddingSpec, String> {
    spec.ok_or_else(|| "enter the simple roots of the subalgebra".to_string())
}

pub fn diagram(algebra_name: &str, a_roots: &str, hw: &str) -> Result<String, String> {
    let d = algebra(algebra_name)?;
    let mu = highest_weight(&d, hw)?;
    let spec = embedding(&d, a_roots)?;
    svg::draw(&d, &mu, spec.as_ref(), DEFAULT_DEPTH).map_err(|e| e.to_string())
}

pub fn branching_json(algebra_name: &str, a_roots: &str, hw: &str) -> Result<String, String> {
    let d = algebra(algebra_name)?;
    let mu = highest_weight(&d, hw)?;
    let spec = required(embedding(&d, a_roots)?)?;
    let depth = default_depth(&spec, &mu).map_err(|e| e.to_string())?;
    let rows = branch(&spec, &mu, depth).and_then(|r| r.rows(&spec)).map_err(|e| e.to_string())?;
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

pub fn resolution_json(algebra_name: &str, a_roots: &str, hw: &str) -> Result<String, String> {
    let d = algebra(algebra_name)?;
    let mu = highest_weight(&d, hw)?;
    let spec = required(embedding(&d, a_roots)?)?;
    let seq = bgg_resolution(&spec, &mu).map_err(|e| e.to_string())?;
    let euler = verify_euler(&seq, &spec, DEFAULT_DEPTH).map_err(|e| e.to_string())?;
    serde_json::to_string(&serde_json::json!({ "sequence": seq, "euler_check": euler })).map_err(|e| e.to_string())
}

/// SVG weight diagram of `L^hw` for a rank-2 algebra.
#[wasm_bindgen]
pub fn render_svg(algebra_name: &str, a_roots: &str, hw: &str) -> Result<String, JsError> {
    diagram(algebra_name, a_roots, hw).map_err(|e| JsError::new(&e))
}

/// Branching rows as JSON: labels, h_perp charge, multiplicity, dimension.
#[wasm_bindgen]
pub fn branching_table(algebra_name: &str, a_roots: &str, hw: &str) -> Result<String, JsError> {
    branching_json(algebra_name, a_roots, hw).map_err(|e| JsError::new(&e))
}

/// Resolution graded by length, with its Euler check, as JSON.
#[wasm_bindgen]
pub fn resolution(algebra_name: &str, a_roots: &str, hw: &str) -> Result<String, JsError> {
    resolution_json(algebra_name, a_roots, hw).map_err(|e| JsError::new(&e))
}
