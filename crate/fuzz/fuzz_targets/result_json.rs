#![no_main]

use libfuzzer_sys::fuzz_target;
use plutus_core::io::{parse_result_json, result_to_json};

fuzz_target!(|data: &[u8]| {
    if let Ok(result) = parse_result_json(data) {
        let text = result_to_json(&result);
        assert_eq!(parse_result_json(text.as_bytes()).unwrap(), result);
    }
});
