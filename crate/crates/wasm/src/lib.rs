//! Browser bindings. Each exported function has a plain Rust twin that
//! returns `Result<String, String>` so it can be tested natively.

use rigged_core::characters::{fermionic_char, sl2_char, SL2_NAMES};
use rigged_core::json::EnumDoc;
use rigged_core::riggedsets::enumerate_total;
use rigged_core::Params;
use wasm_bindgen::prelude::*;

/// Largest level and cutoff sum the page will compute; beyond these a
/// request would stall the tab.
pub const MAX_K: usize = 4;
pub const MAX_CUTOFF_SUM: i64 = 6;

fn check_size(k: usize, big_m: i64, big_n: i64) -> Result<(), String> {
    if k > MAX_K || big_m + big_n > MAX_CUTOFF_SUM {
        return Err(format!(
            "the demo is limited to k <= {MAX_K} and M + N <= {MAX_CUTOFF_SUM}"
        ));
    }
    Ok(())
}

pub fn fermionic_text(k: usize, l1: i64, l2: i64, big_m: i64, big_n: i64) -> Result<String, String> {
    check_size(k, big_m, big_n)?;
    fermionic_char(k, l1, l2, big_m, big_n)
        .map(|p| p.to_string())
        .map_err(|e| e.to_string())
}

pub fn enumerate_json(k: usize, l1: i64, l2: i64, l3: i64, big_m: i64, big_n: i64) -> Result<String, String> {
    check_size(k, big_m, big_n)?;
    let p = Params::new(k, l1, l2, l3, big_m, big_n).map_err(|e| e.to_string())?;
    Ok(EnumDoc::from_total(&p, &enumerate_total(&p)).to_json())
}

pub fn sl2_text(k: usize, l: i64, big_m: i64, big_n: i64) -> Result<String, String> {
    check_size(k, big_m, big_n)?;
    sl2_char(k, l, big_m, big_n)
        .map(|p| p.to_text_with(SL2_NAMES))
        .map_err(|e| e.to_string())
}

/// Fermionic character as canonical polynomial text.
#[wasm_bindgen]
pub fn fermionic_character(k: usize, l1: i64, l2: i64, big_m: i64, big_n: i64) -> Result<String, JsValue> {
    fermionic_text(k, l1, l2, big_m, big_n).map_err(|e| JsValue::from_str(&e))
}

/// Every nonempty graded piece of the rigged set, as a JSON document.
#[wasm_bindgen]
pub fn enumerate(k: usize, l1: i64, l2: i64, l3: i64, big_m: i64, big_n: i64) -> Result<String, JsValue> {
    enumerate_json(k, l1, l2, l3, big_m, big_n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sl2_character(k: usize, l: i64, big_m: i64, big_n: i64) -> Result<String, JsValue> {
    sl2_text(k, l, big_m, big_n).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(fermionic_text(1, 1, 1, 1, 1).unwrap(), "1 + z1*z2*q");
        assert_eq!(sl2_text(1, 0, 0, 0).unwrap(), "1");
        let doc = EnumDoc::parse(&enumerate_json(1, 1, 1, 1, 1, 1).unwrap()).unwrap();
        assert_eq!(doc.pieces.len(), 2);
    }

    #[test]
    fn errors_are_messages() {
        assert!(enumerate_json(2, 3, 0, 0, 0, 0).unwrap_err().contains("l1"));
        assert!(fermionic_text(9, 1, 1, 1, 1).unwrap_err().contains("limited"));
        assert!(sl2_text(1, 0, 5, 5).is_err());
    }
}
