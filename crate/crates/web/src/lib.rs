//! Browser bindings for the demo page. Each export returns a JSON string;
//! the plain functions below the bindings are what the tests exercise.

use std::collections::BTreeMap;

use motzkin::bijections;
use motzkin::verify::{self, Stat};
use motzkin::word::{self, MotzkinWord};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest length the gallery will draw.
pub const GALLERY_MAX: usize = 9;
/// Largest length the histogram view will enumerate.
pub const HISTOGRAM_MAX: usize = 12;

#[wasm_bindgen]
pub fn gallery(n: usize) -> Result<String, JsError> {
    gallery_json(n)
        .map(|v| v.to_string())
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn histogram(n: usize, stat: &str) -> Result<String, JsError> {
    histogram_json(n, stat)
        .map(|v| v.to_string())
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn paths(word: &str) -> Result<String, JsError> {
    paths_json(word)
        .map(|v| v.to_string())
        .map_err(|e| JsError::new(&e))
}

/// Every word of length `n` with its letters and statistics.
pub fn gallery_json(n: usize) -> Result<Value, String> {
    if n == 0 || n > GALLERY_MAX {
        return Err(format!("length must be between 1 and {GALLERY_MAX}"));
    }
    let words = word::generate_all(n).map_err(|e| e.to_string())?;
    let items: Vec<Value> = words
        .iter()
        .map(|w| {
            let s = word::stats(w);
            json!({
                "word": w.to_string(),
                "letters": w.letters(),
                "area": s.area,
                "sper": s.sper,
                "inter": s.inter,
                "last": s.last,
            })
        })
        .collect();
    Ok(json!({ "n": n, "words": items }))
}

/// Distribution of a statistic by enumeration next to the generating
/// function coefficients, with a flag saying whether they agree.
pub fn histogram_json(n: usize, stat: &str) -> Result<Value, String> {
    if n == 0 || n > HISTOGRAM_MAX {
        return Err(format!("length must be between 1 and {HISTOGRAM_MAX}"));
    }
    let stat: Stat = stat.parse().map_err(|e: motzkin::Error| e.to_string())?;
    let counted = verify::histogram(n, stat).map_err(|e| e.to_string())?;
    let series = verify::series_histogram(n, stat).map_err(|e| e.to_string())?;
    let series: BTreeMap<u64, String> = series.into_iter().map(|(k, v)| (k, v.to_string())).collect();
    let agree = counted.len() == series.len()
        && counted
            .iter()
            .all(|(k, v)| series.get(k).is_some_and(|s| *s == v.to_string()));
    let rows: Vec<Value> = counted
        .iter()
        .map(|(k, v)| json!({ "value": k, "count": v, "series": series.get(k) }))
        .collect();
    Ok(json!({ "n": n, "stat": stat.name(), "rows": rows, "agree": agree }))
}

/// Heights of the word's Motzkin, Łukasiewicz and Dyck paths.
pub fn paths_json(input: &str) -> Result<Value, String> {
    let w: MotzkinWord = input.parse().map_err(|e: motzkin::Error| e.to_string())?;
    if w.is_empty() {
        return Err("enter a nonempty word".into());
    }
    let psi = bijections::psi(&w).map_err(|e| e.to_string())?;
    let luka = bijections::to_lukasiewicz(&w).map_err(|e| e.to_string())?;
    let dyck = bijections::to_dyck_udu(&w);
    let path = |p: &bijections::LatticePath| {
        let mut h = vec![0];
        h.extend(p.heights());
        json!({ "text": p.to_string(), "heights": h })
    };
    let s = word::stats(&w);
    Ok(json!({
        "word": w.to_string(),
        "letters": w.letters(),
        "sper": s.sper,
        "up_steps": bijections::up_steps(&psi),
        "motzkin": path(&psi),
        "lukasiewicz": path(&luka),
        "dyck": path(&dyck),
    }))
}
