//! wasm-bindgen exports for the static demo in `www/`.

pub mod api;

use wasm_bindgen::prelude::*;

#[wasm_bindgen]
pub fn analyze(source: &str) -> Result<String, JsValue> {
    api::analyze(source).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn jumping(source: &str, bound: &str) -> Result<String, JsValue> {
    api::jumping(source, bound).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn compare(m: &str) -> Result<String, JsValue> {
    api::compare(m).map_err(|e| JsValue::from_str(&e))
}
