//! wasm-bindgen exports for the static demo page in `www/`.

pub mod demo;

use wasm_bindgen::prelude::*;

fn js(e: String) -> JsError {
    JsError::new(&e)
}

/// Synthetic test image as RGBA (`step`, `corner`, `checker`, `noise`).
#[wasm_bindgen(js_name = patternRgba)]
pub fn pattern_rgba(name: &str, size: usize) -> Result<Vec<u8>, JsError> {
    demo::pattern_rgba(name, size).map_err(js)
}

/// Filters canvas RGBA pixels; see [`demo::process`] for the modes.
#[wasm_bindgen]
pub fn process(
    rgba: &[u8],
    width: usize,
    height: usize,
    mode: &str,
    iterations: usize,
    param: f64,
) -> Result<Vec<u8>, JsError> {
    demo::process(rgba, width, height, mode, iterations, param).map_err(js)
}

#[wasm_bindgen(js_name = spectrumRgba)]
pub fn spectrum_rgba(kernel: &str, n: usize) -> Result<Vec<u8>, JsError> {
    demo::spectrum_rgba(kernel, n).map_err(js)
}

#[wasm_bindgen(js_name = isotropyScore)]
pub fn isotropy_score(kernel: &str) -> Result<f64, JsError> {
    demo::isotropy(kernel).map_err(js)
}

#[wasm_bindgen(js_name = compareProfiles)]
pub fn compare_profiles(
    rgba: &[u8],
    width: usize,
    height: usize,
    row: usize,
    iterations: usize,
) -> Result<Vec<f32>, JsError> {
    demo::compare_profiles(rgba, width, height, row, iterations).map_err(js)
}
