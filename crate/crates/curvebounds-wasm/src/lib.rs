//! Browser bindings: bound reports, sign grids as RGBA pixels, and
//! h-vector enumeration, all serialized for a static page.
//!
//! The plain functions carry the logic and compile natively, so the whole
//! surface is testable without a wasm toolchain; the `#[wasm_bindgen]`
//! wrappers only translate errors for JavaScript.

use curvebounds::audit::{conjecture_status, degenerate_report, make_grid, Reference};
use curvebounds::bounds::DegreePair;
use curvebounds::hvectors::{enumerate_admissible, genus_of_hvector};

/// Full bound report for one degree pair, as a JSON string.
pub fn bound_report_json(d1: i64, d2: i64) -> Result<String, String> {
    let pair = DegreePair::new(d1, d2).map_err(|e| e.to_string())?;
    let report = if pair.min() >= 4 {
        conjecture_status(pair)
    } else {
        degenerate_report(pair)
    }
    .map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

fn parse_reference(name: &str) -> Result<Reference, String> {
    match name {
        "bdg" => Ok(Reference::BDg),
        "b" => Ok(Reference::B),
        other => Err(format!("unknown reference {other:?}, expected bdg or b")),
    }
}

/// Sign grid as row-major RGBA bytes, one pixel per degree pair.
///
/// Negative cells are blue, zero cells black; positive cells are red
/// against the unconditional bound and yellow against the sharp bound.
/// Channel intensity scales linearly with the magnitude, normalized by the
/// grid maximum.
pub fn grid_rgba_bytes(reference: &str, d_min: i64, d_max: i64) -> Result<Vec<u8>, String> {
    let reference = parse_reference(reference)?;
    if d_max > 2000 {
        return Err(format!("d_max {d_max} exceeds the ceiling of 2000"));
    }
    let grid = make_grid(reference, d_min, d_max).map_err(|e| e.to_string())?;
    let max = grid.max_magnitude();
    let mut bytes = Vec::with_capacity(grid.cells().len() * 4);
    for cell in grid.cells() {
        let intensity = if max == 0 || cell.sign == 0 {
            0
        } else {
            (63 + cell.magnitude * 192 / max) as u8
        };
        let (r, g, b) = match (cell.sign, reference) {
            (-1, _) => (0, 0, intensity),
            (1, Reference::BDg) => (intensity, 0, 0),
            (1, Reference::B) => (intensity, intensity, 0),
            _ => (0, 0, 0),
        };
        bytes.extend_from_slice(&[r, g, b, 255]);
    }
    Ok(bytes)
}

/// Admissible h-vectors of one degree with genera, as a JSON array of
/// `{"hvector": [...], "genus": n}` objects.
pub fn enumerate_json(d: i64) -> Result<String, String> {
    let vectors = enumerate_admissible(d).map_err(|e| e.to_string())?;
    let rows: Vec<serde_json::Value> = vectors
        .iter()
        .map(|h| {
            serde_json::json!({
                "hvector": h.entries(),
                "genus": genus_of_hvector(h),
            })
        })
        .collect();
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

#[cfg(target_arch = "wasm32")]
mod bindings {
    use wasm_bindgen::prelude::*;

    #[wasm_bindgen]
    pub fn bound_report(d1: i32, d2: i32) -> Result<String, JsValue> {
        super::bound_report_json(d1.into(), d2.into()).map_err(|e| JsValue::from_str(&e))
    }

    #[wasm_bindgen]
    pub fn grid_rgba(reference: &str, d_min: i32, d_max: i32) -> Result<Vec<u8>, JsValue> {
        super::grid_rgba_bytes(reference, d_min.into(), d_max.into())
            .map_err(|e| JsValue::from_str(&e))
    }

    #[wasm_bindgen]
    pub fn enumerate_hvectors(d: i32) -> Result<String, JsValue> {
        super::enumerate_json(d.into()).map_err(|e| JsValue::from_str(&e))
    }
}
